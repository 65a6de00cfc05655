#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "chainlab/errors.hpp"
#include "chainlab/structure.hpp"
#include "chainlab/suite.hpp"
#include "helpers.hpp"

using namespace chainlab;
using namespace chainlab::testing;

namespace {

bool is_prime_num(unsigned n) {
    if (n < 2) return false;
    for (unsigned d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Subring closure of a starting set under both operations.
std::set<elem> subring_closure(const ring_table& R, std::set<elem> S) {
    S.insert(0);
    S.insert(R.one());
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<elem> cur(S.begin(), S.end());
        for (elem a : cur)
            for (elem b : cur) {
                if (S.insert(R.add(a, b)).second) changed = true;
                if (S.insert(R.mul(a, b)).second) changed = true;
            }
    }
    return S;
}

} // namespace

TEST_CASE("classification of the pinned rings") {
    chain_classification z9 = classify_chain(build("Z/9"));
    CHECK(z9.kase == chain_case::unramified_mixed);
    CHECK(z9.residue_char == 3);
    CHECK(z9.nilpotency_index == 2);
    CHECK(z9.residue_field_size == 3);
    CHECK(z9.maximal_ideal_is_p);

    chain_classification z8 = classify_chain(build("Z/8"));
    CHECK(z8.kase == chain_case::unramified_mixed);
    CHECK(z8.residue_char == 2);
    CHECK(z8.nilpotency_index == 3);

    chain_classification t3 = classify_chain(F2t(3));
    CHECK(t3.kase == chain_case::equal_char_truncated);
    CHECK(t3.residue_field_size == 2);
    CHECK(t3.nilpotency_index == 3);
    CHECK(t3.characteristic == 2);

    chain_classification f4 = classify_chain(build("GF(2,2)"));
    CHECK(f4.kase == chain_case::field);
    CHECK(f4.nilpotency_index == 1);
    CHECK(f4.residue_field_size == 4);

    chain_classification gr = classify_chain(build("polyquot(Z/4,u,u^2+u+1)"));
    CHECK(gr.kase == chain_case::unramified_mixed);
    CHECK(gr.residue_char == 2);
    CHECK(gr.nilpotency_index == 2);
    CHECK(gr.residue_field_size == 4);

    chain_classification ram = classify_chain(ramified());
    CHECK(ram.kase == chain_case::outside_listed_cases);
    CHECK(ram.characteristic == 4);
    CHECK(ram.residue_field_size == 2);
    CHECK(ram.nilpotency_index == 3);
    CHECK_FALSE(ram.maximal_ideal_is_p);

    CHECK_THROWS_AS(classify_chain(F2xy()), not_a_chain_ring);
}

TEST_CASE("truncated equal-characteristic rings contain their residue field") {
    for (auto R : {F2t(2), F2t(3), F2t(4), F3t(2)}) {
        chain_classification cl = classify_chain(R);
        REQUIRE(cl.kase == chain_case::equal_char_truncated);
        // elements fixed by a |-> a^q form the coefficient field
        std::set<elem> subfield;
        for (elem a = 0; a < R.size(); ++a)
            if (R.pow(a, cl.residue_field_size) == a) subfield.insert(a);
        CHECK(subfield.size() == cl.residue_field_size);
        std::set<elem> gen = subfield;
        gen.insert(cl.uniformizer);
        CHECK(subring_closure(R, gen).size() == R.size());
        CHECK(R.pow(cl.uniformizer, cl.nilpotency_index) == 0);
    }
}

TEST_CASE("colimit perfection") {
    ring_table p1 = perfection_colim(F2t(2));
    CHECK(p1.size() == 2);

    ring_table f4 = build("GF(2,2)");
    ring_table p2 = perfection_colim(f4);
    CHECK(p2.size() == 4);
    CHECK(p2.same_tables(f4));

    CHECK(perfection_colim(F2xy()).size() == 2);

    CHECK_THROWS_AS(perfection_colim(build("Z/4")), not_prime_characteristic);
}

TEST_CASE("perfection is reduced, idempotent, and a field for chain rings") {
    for (const auto& R : build_suite()) {
        if (!is_prime_num(R.characteristic())) continue;
        ring_table P = perfection_colim(R);
        CHECK(nilradical(P) == std::set<elem>{0});
        ring_table PP = perfection_colim(P);
        CHECK(PP.size() == P.size());
        CHECK(PP.same_tables(P));
        if (basic_predicates(R).is_chain) {
            auto q = basic_predicates(P);
            CHECK(q.is_chain);
            CHECK(q.is_field);
        }
    }
}

TEST_CASE("Frobenius chain levels") {
    ring_table R = F2t(4);
    elem t = by_label(R, "t");
    frob_chain c{4, t};
    CHECK(chain_level(R, c, 4) == t);
    CHECK(chain_level(R, c, 3) == R.pow(t, 2));
    CHECK(chain_level(R, c, 2) == 0);
    CHECK(chain_level(R, c, 1) == 0);
    CHECK_THROWS_AS(chain_level(R, c, 5), malformed_spec);
    CHECK_THROWS_AS(chain_level(R, c, 0), malformed_spec);
}

TEST_CASE("chain division") {
    ring_table R = F2t(4);
    elem t = by_label(R, "t");
    elem one = R.one();

    // dividing by the constant unit chain truncates the dividend
    chain_divide_result d1 = chain_divide(R, {4, t}, {4, one});
    CHECK(d1.verified);
    REQUIRE(d1.levels.size() == 2);
    CHECK(d1.levels[0] == chain_level(R, {4, t}, 1));
    CHECK(d1.levels[1] == chain_level(R, {4, t}, 2));

    // a unit multiple of the divisor yields a constant unit quotient
    elem tu = R.mul(t, R.add(one, t));
    chain_divide_result d2 = chain_divide(R, {4, tu}, {4, t});
    CHECK(d2.verified);
    CHECK(d2.levels == std::vector<elem>{one, one});

    CHECK_THROWS_AS(chain_divide(R, {4, one}, {4, t}), deepest_coordinate_zero);
    CHECK_THROWS_AS(chain_divide(R, {4, t}, {3, one}), malformed_spec);
    CHECK_THROWS_AS(chain_divide(R, {2, t}, {2, one}), malformed_spec);

    ring_table R9 = build("monext(Z/2,[t],[t^9])", 4096);
    elem t9 = by_label(R9, "t");
    CHECK_THROWS_AS(chain_divide(R9, {4, R9.one()}, {4, t9}),
                    not_divisible_at_level);
}

TEST_CASE("chain division postconditions hold exhaustively") {
    for (auto R : {F2t(4), F3t(3)}) {
        const unsigned p = require_prime_char(R);
        int divisible = 0;
        for (elem a = 0; a < R.size(); ++a)
            for (elem b = 0; b < R.size(); ++b) {
                chain_divide_result d;
                try {
                    d = chain_divide(R, {4, a}, {4, b});
                } catch (const error&) {
                    continue;
                }
                ++divisible;
                CHECK(d.verified);
                for (unsigned i = 1; i + 1 <= d.quotient.depth; ++i)
                    CHECK(R.pow(chain_level(R, d.quotient, i + 1), p) ==
                          chain_level(R, d.quotient, i));
            }
        CHECK(divisible > 0);
    }
}

TEST_CASE("division lemma for chain rings of prime characteristic") {
    CHECK(division_lemma_check(F2t(4)).ok);
    CHECK(division_lemma_check(F3t(2)).ok);
    CHECK_THROWS_AS(division_lemma_check(F2xy()), not_a_chain_ring);
    CHECK_THROWS_AS(division_lemma_check(build("Z/8")), not_prime_characteristic);

    for (const auto& R : build_suite()) {
        if (!basic_predicates(R).is_chain) continue;
        if (!is_prime_num(R.characteristic())) continue;
        CHECK(division_lemma_check(R).ok);
    }
}

TEST_CASE("domain consequences for the inverse-limit perfection") {
    CHECK(tilt_domain_check(F2t(4), 4).ok);
    CHECK(tilt_domain_check(F3t(2), 4).ok);
    CHECK(tilt_domain_check(build("Z/2"), 4).ok); // vacuous: no zero divisors
    CHECK_THROWS_AS(tilt_domain_check(build("Z/8"), 4),
                    not_prime_characteristic);
    CHECK_THROWS_AS(tilt_domain_check(F2xy(), 4), not_a_chain_ring);
}
