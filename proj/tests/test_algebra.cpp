#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "chainlab/algebra.hpp"
#include "chainlab/cover.hpp"
#include "chainlab/errors.hpp"
#include "chainlab/suite.hpp"
#include "helpers.hpp"

using namespace chainlab;
using namespace chainlab::testing;

namespace {

int_poly pp(const std::string& t) { return int_poly::parse(t); }

// Identity covering family over an algebra, for composition tests.
family identity_family(const fp_algebra& A) {
    auto base = std::make_shared<fp_algebra>(
        make_absolute(A.vars, A.relations));
    std::vector<int_poly> images;
    for (const auto& v : A.vars) images.push_back(int_poly::variable(v));
    std::vector<fp_algebra> members{
        make_over(base, A.vars, A.relations, images)};
    return make_family("", std::move(base), std::move(members));
}

std::size_t total_fiber_size(const fp_algebra& member, const ring_table& R) {
    std::size_t total = 0;
    for (const auto& bp : points(*member.base, R))
        total += fiber_points(member, R, bp).size();
    return total;
}

} // namespace

TEST_CASE("polynomial evaluation in a ring") {
    ring_table z4 = build("Z/4");
    CHECK(eval_poly(pp("x*y"), z4, {{"x", 2}, {"y", 2}}) == 0);

    ring_table ram = ramified();
    CHECK(eval_poly(pp("x^2 - 2"), ram, {{"x", by_label(ram, "x")}}) == 0);

    ring_table f3 = build("Z/3");
    CHECK(eval_poly(pp("3*x"), f3, {{"x", 1}}) == 0);

    CHECK_THROWS_AS(eval_poly(pp("x*y"), z4, {{"x", 1}}), missing_variable);
}

TEST_CASE("point enumeration") {
    fp_algebra sq = make_absolute({"x"}, {pp("x^2")});
    CHECK(points(sq, build("Z/4")) ==
          std::vector<tuple_t>{{0}, {2}});

    fp_algebra line = make_absolute({"x"}, {});
    CHECK(points(line, build("Z/3")).size() == 3);

    fp_algebra node = make_absolute({"x", "y"}, {pp("x*y")});
    CHECK(points(node, build("Z/2")) ==
          std::vector<tuple_t>{{0, 0}, {0, 1}, {1, 0}});
}

TEST_CASE("point caps") {
    fp_algebra big = make_absolute({"a", "b", "c", "d", "e", "f", "g"}, {});
    CHECK_THROWS_AS(points(big, build("Z/2")), size_cap_exceeded);
    fp_algebra wide = make_absolute({"a", "b", "c", "d", "e", "f"}, {});
    CHECK_THROWS_AS(points(wide, build("Z/64")), size_cap_exceeded);
}

TEST_CASE("fibers of family members") {
    ring_table z4 = build("Z/4");

    family nodal = named_family("rh-nodal");
    CHECK(fiber_points(nodal.members[0], z4, {2, 2}).empty());

    family ch = named_family("chain");
    CHECK(fiber_points(ch.members[0], z4, {2, 2}) ==
          std::vector<tuple_t>{{2, 1}, {2, 3}});

    family b2 = named_family("blowup-2");
    auto origin = fiber_points(b2.members[0], z4, {0, 0});
    CHECK(std::find(origin.begin(), origin.end(), tuple_t{0, 0}) !=
          origin.end());

    CHECK_THROWS_AS(fiber_points(nodal.members[0], z4, {1, 1}),
                    base_point_invalid);
    CHECK_THROWS_AS(fiber_points(nodal.members[0], z4, {1}),
                    base_point_invalid);
}

TEST_CASE("fibers partition the member points") {
    std::vector<ring_table> rings;
    rings.push_back(build("Z/4"));
    rings.push_back(F2t(2));
    rings.push_back(build("Z/9"));
    for (const auto& R : rings) {
        for (const auto& name : {"chain", "blowup-2", "rh-nodal", "zariski-a1"}) {
            family U = named_family(name);
            for (const auto& M : U.members) {
                // every member point lies over exactly one base point
                std::vector<int_poly> rels = M.relations;
                fp_algebra absolute = make_absolute(M.vars, rels);
                CHECK(total_fiber_size(M, R) == points(absolute, R).size());
            }
        }
    }
}

TEST_CASE("structure morphism validation") {
    auto base = std::make_shared<fp_algebra>(
        make_absolute({"x", "y"}, {pp("x*y")}));
    CHECK_THROWS_AS(make_over(base, {"x"}, {}, {pp("x")}), malformed_morphism);
    CHECK_THROWS_AS(make_over(base, {"x"}, {}, {pp("x"), pp("z")}),
                    malformed_morphism);
    // x*y maps to x*x, which does not expand to zero or a listed relation
    CHECK_THROWS_AS(make_over(base, {"x"}, {}, {pp("x"), pp("x")}),
                    undecided_syntactically);
}

TEST_CASE("morphism verification is syntactic") {
    fp_algebra node = make_absolute({"x", "y"}, {pp("x*y")});
    fp_algebra line = make_absolute({"x"}, {});
    CHECK(verify_morphism(node, line, {pp("x"), int_poly()}));

    fp_algebra plane = make_absolute({"x", "y"}, {});
    fp_algebra chart = make_absolute({"x", "t"}, {});
    CHECK(verify_morphism(plane, chart, {pp("x"), pp("x*t")}));

    fp_algebra dual = make_absolute({"x"}, {pp("x^2")});
    CHECK_FALSE(verify_morphism(dual, line, {pp("x")}));

    fp_algebra cubic = make_absolute({"t"}, {pp("t^3")});
    CHECK_THROWS_AS(verify_morphism(dual, cubic, {pp("t^2")}),
                    undecided_syntactically);
}

TEST_CASE("pullback along the axis inclusion") {
    family ch = named_family("chain");
    alg_morphism axis;
    axis.source = *ch.base;
    axis.target = make_absolute({"x"}, {});
    axis.images = {pp("x"), int_poly()};
    family pulled = pullback_family(ch, axis);
    CHECK(pulled.members.size() == 2);

    for (const char* spec : {"Z/4", "Z/2", "Z/9"}) {
        ring_table R = build(spec);
        for (const auto& y : points(*pulled.base, R)) {
            tuple_t fx = {y[0], 0}; // image of the axis point in the plane
            for (std::size_t i = 0; i < 2; ++i)
                CHECK(fiber_points(pulled.members[i], R, y).size() ==
                      fiber_points(ch.members[i], R, fx).size());
        }
    }
}

TEST_CASE("pullback along the identity preserves points") {
    family ch = named_family("chain");
    alg_morphism id;
    id.source = *ch.base;
    id.target = *ch.base;
    id.images = {pp("x"), pp("y")};
    family pulled = pullback_family(ch, id);

    ring_table R = build("Z/4");
    for (const auto& bp : points(*ch.base, R))
        for (std::size_t i = 0; i < 2; ++i)
            CHECK(fiber_points(pulled.members[i], R, bp).size() ==
                  fiber_points(ch.members[i], R, bp).size());
}

TEST_CASE("pullback of the nodal family to a point") {
    family nodal = named_family("rh-nodal");
    alg_morphism to_point;
    to_point.source = *nodal.base;
    to_point.target = make_absolute({}, {});
    to_point.images = {int_poly(), int_poly()};
    family pulled = pullback_family(nodal, to_point);

    ring_table R = build("Z/6");
    auto base_pts = points(*pulled.base, R);
    REQUIRE(base_pts.size() == 1); // the empty tuple
    bool some = false;
    for (const auto& M : pulled.members)
        some = some || fiber_nonempty(M, R, base_pts[0]);
    CHECK(some);
}

TEST_CASE("pullback rejects mismatched morphisms") {
    family ch = named_family("chain");
    alg_morphism bad;
    bad.source = make_absolute({"z"}, {});
    bad.target = make_absolute({"x"}, {});
    bad.images = {pp("x")};
    CHECK_THROWS_AS(pullback_family(ch, bad), malformed_morphism);
}

TEST_CASE("composition with identity families") {
    for (const auto& name : {"chain", "zariski-a1", "rh-nodal"}) {
        family U = named_family(name);
        std::vector<family> ids;
        for (const auto& M : U.members) ids.push_back(identity_family(M));
        family comp = compose_families(U, ids);
        CHECK(comp.members.size() == U.members.size());
        for (const auto& spec : {"Z/4", "Z/6", "Z/3"}) {
            ring_table R = build(spec);
            CHECK(covers(comp, R).covers == covers(U, R).covers);
        }
    }
}

TEST_CASE("composition flattens member counts") {
    family ch = named_family("chain");
    std::vector<family> inner;
    for (const auto& M : ch.members) {
        family f = identity_family(M);
        f.members.push_back(f.members[0]); // duplicate member
        inner.push_back(f);
    }
    family comp = compose_families(ch, inner);
    CHECK(comp.members.size() == 4);

    std::vector<family> wrong(1, identity_family(ch.members[0]));
    CHECK_THROWS_AS(compose_families(ch, wrong), base_mismatch);
}

TEST_CASE("point enumeration is deterministic") {
    fp_algebra node = make_absolute({"x", "y"}, {pp("x*y")});
    ring_table R = build("Z/9");
    CHECK(points(node, R) == points(node, R));
}
