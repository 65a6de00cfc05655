#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "chainlab/errors.hpp"
#include "chainlab/ring.hpp"
#include "chainlab/suite.hpp"
#include "helpers.hpp"

using namespace chainlab;
using namespace chainlab::testing;

namespace {

void check_ring_axioms(const ring_table& R) {
    const std::size_t s = R.size();
    REQUIRE(s <= 64);
    for (elem a = 0; a < s; ++a) {
        CHECK(R.add(a, 0) == a);
        CHECK(R.mul(a, R.one()) == a);
        CHECK(R.add(a, R.neg(a)) == 0);
        for (elem b = 0; b < s; ++b) {
            CHECK(R.add(a, b) == R.add(b, a));
            CHECK(R.mul(a, b) == R.mul(b, a));
            for (elem c = 0; c < s; ++c) {
                CHECK(R.add(R.add(a, b), c) == R.add(a, R.add(b, c)));
                CHECK(R.mul(R.mul(a, b), c) == R.mul(a, R.mul(b, c)));
                CHECK(R.mul(a, R.add(b, c)) == R.add(R.mul(a, b), R.mul(a, c)));
            }
        }
    }
}

bool ideals_totally_ordered(const ring_table& R) {
    auto ideals = all_ideals(R);
    for (std::size_t i = 0; i < ideals.size(); ++i)
        for (std::size_t j = i + 1; j < ideals.size(); ++j) {
            bool ij = std::includes(ideals[j].begin(), ideals[j].end(),
                                    ideals[i].begin(), ideals[i].end());
            bool ji = std::includes(ideals[i].begin(), ideals[i].end(),
                                    ideals[j].begin(), ideals[j].end());
            if (!ij && !ji) return false;
        }
    return true;
}

} // namespace

TEST_CASE("constructors") {
    ring_table z4 = build("Z/4");
    CHECK(z4.size() == 4);
    CHECK(z4.characteristic() == 4);

    ring_table f4 = build("GF(2,2)");
    CHECK(f4.size() == 4);
    for (elem a = 1; a < f4.size(); ++a) CHECK(f4.is_unit(a));

    ring_table ram = ramified();
    CHECK(ram.size() == 8);
    elem x = by_label(ram, "x");
    CHECK(ram.pow(x, 2) == ram.from_int(2));
    CHECK(ram.pow(x, 3) == 0);
    CHECK(ram.characteristic() == 4);

    // the pre-quotient ring and the kernel it collapses
    ring_table big = build("polyquot(Z/4,x,x^2-2)");
    CHECK(big.size() == 16);
    elem bx = by_label(big, "x");
    CHECK(ideal_closure(big, {big.mul(big.from_int(2), bx)}).size() == 2);
}

TEST_CASE("construction errors") {
    CHECK_THROWS_AS(build("polyquot(Z/4,x,2*x^2-1)"), non_monic_polynomial);
    CHECK_THROWS_AS(build("Z/5000"), size_cap_exceeded);
    CHECK_THROWS_AS(build("monext(Z/2,[t],[t^13])"), size_cap_exceeded);
    CHECK_THROWS_AS(build("Z/x"), malformed_spec);
    CHECK_THROWS_AS(build("prod(Z/2)"), malformed_spec);
    CHECK_THROWS_AS(basic_predicates(build("Z/1")), degenerate_ring);
}

TEST_CASE("equal specs give identical tables") {
    for (const auto& spec : pinned_suite_specs()) {
        ring_table a = build(spec);
        ring_table b = build(spec);
        CHECK(a.same_tables(b));
        CHECK(a.labels() == b.labels());
    }
}

TEST_CASE("divisibility") {
    ring_table z4 = build("Z/4");
    CHECK(divides(z4, 2, 2));
    CHECK_FALSE(divides(z4, 2, 1));

    ring_table R = F2xy();
    CHECK_FALSE(divides(R, by_label(R, "x"), by_label(R, "y")));
}

TEST_CASE("predicates") {
    auto p4 = basic_predicates(build("Z/4"));
    CHECK(p4.is_local);
    CHECK_FALSE(p4.is_domain);
    CHECK_FALSE(p4.is_field);
    CHECK_FALSE(p4.is_reduced);
    CHECK(p4.is_chain);

    auto pxy = basic_predicates(F2xy());
    CHECK(pxy.is_local);
    CHECK_FALSE(pxy.is_chain);

    auto pp = basic_predicates(build("prod(Z/2,Z/2)"));
    CHECK_FALSE(pp.is_local);
    CHECK_FALSE(pp.is_chain);
    CHECK(pp.is_reduced);
}

TEST_CASE("nilradical") {
    ring_table z4 = build("Z/4");
    CHECK(nilradical(z4) == std::set<elem>{0, 2});
    CHECK(nilradical(build("GF(2,2)")) == std::set<elem>{0});

    ring_table R = F2xy();
    std::set<elem> nil = nilradical(R);
    CHECK(nil.size() == 8);
    for (elem a : nil) {
        CHECK_FALSE(R.is_unit(a));
        CHECK(R.pow(a, 4) == 0);
    }
}

TEST_CASE("zero divisors and nonunits") {
    auto z4 = zero_divisors_and_max_ideal(build("Z/4"));
    CHECK(z4.zero_divisors == std::set<elem>{0, 2});
    CHECK(z4.zero_divisors == z4.nonunits);

    auto z6 = zero_divisors_and_max_ideal(build("Z/6"));
    CHECK(z6.zero_divisors == std::set<elem>{0, 2, 3, 4});
    CHECK(z6.zero_divisors == z6.nonunits); // same set, but Z/6 is not local

    auto f5 = zero_divisors_and_max_ideal(build("Z/5"));
    CHECK(f5.zero_divisors == std::set<elem>{0});
    CHECK(f5.nonunits == std::set<elem>{0});
}

TEST_CASE("ideal enumeration") {
    CHECK(all_ideals(build("Z/4")).size() == 3);
    CHECK(all_ideals(build("Z/3")).size() == 2);

    // 0, (x), (y), (x+y), (x,y), R: six ideals, with (x) and (y) incomparable
    ring_table R = F2xy_full();
    auto ideals = all_ideals(R);
    CHECK(ideals.size() == 6);
    CHECK_FALSE(ideals_totally_ordered(R));
}

TEST_CASE("prime ideals") {
    ring_table z4 = build("Z/4");
    CHECK(is_prime_ideal(z4, {0, 2}));
    CHECK_FALSE(is_prime_ideal(z4, {0}));
    CHECK_THROWS_AS(is_prime_ideal(z4, {0, 1}), not_an_ideal);

    ring_table p = build("prod(Z/2,Z/2)");
    CHECK_FALSE(is_prime_ideal(p, {0}));
}

TEST_CASE("element expressions") {
    ring_table ram = ramified();
    CHECK(eval_element(ram, int_poly::parse("x^2 - 2")) == 0);
    ring_table f3 = build("Z/3");
    CHECK(f3.mul(f3.from_int(3), f3.one()) == 0);
    CHECK_THROWS_AS(eval_element(build("Z/4"), int_poly::parse("nope")),
                    malformed_spec);
}

TEST_CASE("axioms hold on every suite ring") {
    for (const auto& R : build_suite()) check_ring_axioms(R);
}

TEST_CASE("chain ring facts across the suite") {
    for (const auto& R : build_suite()) {
        auto p = basic_predicates(R);
        if (R.size() <= 16)
            CHECK(p.is_chain == ideals_totally_ordered(R));
        if (!p.is_chain) {
            CHECK(incomparable_pair(R).has_value());
            CHECK_THROWS_AS(require_chain(R), not_a_chain_ring);
            continue;
        }
        CHECK_FALSE(incomparable_pair(R).has_value());
        CHECK(p.is_local);
        std::set<elem> nil = nilradical(R);
        CHECK(is_prime_ideal(R, nil));
        for (const auto& I : all_ideals(R))
            if (is_prime_ideal(R, I))
                CHECK(std::includes(I.begin(), I.end(), nil.begin(), nil.end()));
        auto zd = zero_divisors_and_max_ideal(R);
        CHECK(zd.zero_divisors == zd.nonunits);
        if (p.is_reduced) {
            CHECK(p.is_domain);
            CHECK(p.is_field);
        }
    }
}

TEST_CASE("prime characteristic gate") {
    CHECK(require_prime_char(build("Z/3")) == 3);
    CHECK_THROWS_AS(require_prime_char(build("Z/8")), not_prime_characteristic);
    CHECK_THROWS_AS(require_prime_char(build("Z/6")), not_prime_characteristic);
}
