#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "chainlab/cover.hpp"
#include "chainlab/errors.hpp"
#include "chainlab/suite.hpp"
#include "helpers.hpp"

using namespace chainlab;
using namespace chainlab::testing;

TEST_CASE("named family presentations") {
    family za = named_family("zariski-a1");
    CHECK(za.base->vars == std::vector<std::string>{"x"});
    REQUIRE(za.members.size() == 2);
    CHECK(za.members[0].relations ==
          std::vector<int_poly>{int_poly::parse("x*u - 1")});

    family b2 = named_family("blowup-2");
    CHECK(b2.members.size() == 3);
    CHECK(b2.members[0].relations.size() == 2); // the origin member
    CHECK(b2.members[1].vars == std::vector<std::string>{"x1", "t2"});
    CHECK(b2.members[2].vars == std::vector<std::string>{"x2", "t1"});

    CHECK(named_family("blowup-3").members.size() == 4);
    CHECK(named_family("nilred").members.size() == 1);
    CHECK_THROWS_AS(named_family("blowup-1"), unknown_family);
    CHECK_THROWS_AS(named_family("bogus"), unknown_family);
}

TEST_CASE("covering condition") {
    ring_table z4 = build("Z/4");
    family ch = named_family("chain");
    cover_report rep = covers(ch, z4);
    CHECK(rep.covers);
    CHECK(rep.lifts.size() == rep.base_points.size());
    for (std::size_t i = 0; i < rep.lifts.size(); ++i) {
        auto fiber = fiber_points(ch.members[rep.lifts[i].first], z4,
                                  rep.base_points[i]);
        CHECK(std::find(fiber.begin(), fiber.end(), rep.lifts[i].second) !=
              fiber.end());
    }

    ring_table Rxy = F2xy();
    cover_report bad = covers(ch, Rxy);
    CHECK_FALSE(bad.covers);
    REQUIRE(bad.failing_point.has_value());
    // first uncovered point in scan order is the incomparable pair (x, y)
    CHECK(Rxy.label((*bad.failing_point)[0]) == "x");
    CHECK(Rxy.label((*bad.failing_point)[1]) == "y");

    cover_report nil = covers(named_family("nilred"), z4);
    CHECK_FALSE(nil.covers);
    CHECK(nil.failing_point == tuple_t{2});
}

TEST_CASE("blowup warning outside local rings") {
    family b2 = named_family("blowup-2");
    CHECK(covers(b2, build("Z/6")).warning.has_value());
    CHECK_FALSE(covers(b2, build("Z/4")).warning.has_value());
}

TEST_CASE("chart factorization") {
    ring_table z4 = build("Z/4");
    blowup_lift l = factor_through_blowup(z4, {2, 2});
    CHECK_FALSE(l.origin_member);
    CHECK(l.chart == 1);
    CHECK(l.chart_point == tuple_t{2, 1});

    CHECK(factor_through_blowup(z4, {0, 0}).origin_member);

    ring_table Rxy = F2xy();
    CHECK_THROWS_AS(
        factor_through_blowup(Rxy, {by_label(Rxy, "x"), by_label(Rxy, "y")}),
        not_a_chain_ring);
}

TEST_CASE("chart factorization is sound on every chain suite ring") {
    family b2 = named_family("blowup-2");
    for (const auto& R : build_suite()) {
        if (!basic_predicates(R).is_chain) continue;
        for (elem a = 0; a < R.size(); ++a)
            for (elem b = 0; b < R.size(); ++b) {
                blowup_lift l = factor_through_blowup(R, {a, b});
                if (l.origin_member) {
                    CHECK(a == 0);
                    CHECK(b == 0);
                    continue;
                }
                auto fiber = fiber_points(b2.members[l.chart], R, {a, b});
                CHECK(std::find(fiber.begin(), fiber.end(), l.chart_point) !=
                      fiber.end());
            }
        CHECK(covers(b2, R).covers);
    }
}

TEST_CASE("blowup fails on local non-chain rings") {
    family b2 = named_family("blowup-2");
    for (auto R : {F2xy(), F2xy_full()}) {
        cover_report rep = covers(b2, R);
        CHECK_FALSE(rep.covers);
        CHECK(rep.failing_point.has_value());
    }
}

TEST_CASE("family comparisons on the suite") {
    auto S = build_suite();
    auto eq = covering_equivalent_on(named_family("blowup-2"),
                                     named_family("blowup-3"), S);
    CHECK_FALSE(eq.separating_ring.has_value());
    CHECK(eq.rows.size() == S.size());

    auto eq2 = covering_equivalent_on(named_family("chain"),
                                      named_family("rh-blowup"), S);
    CHECK_FALSE(eq2.separating_ring.has_value());

    auto sep = covering_equivalent_on(named_family("nilred"),
                                      named_family("chain"), S);
    REQUIRE(sep.separating_ring.has_value());
    CHECK(*sep.separating_ring == "Z/4");
}

TEST_CASE("locality and reducedness through covers") {
    for (const auto& R : build_suite()) {
        auto p = basic_predicates(R);
        CHECK(covers(named_family("zariski-a1"), R).covers == p.is_local);
        CHECK(covers(named_family("nilred"), R).covers == p.is_reduced);
    }
}

TEST_CASE("covering is stable under pullback and composition") {
    family ch = named_family("chain");

    alg_morphism axis;
    axis.source = *ch.base;
    axis.target = make_absolute({"x"}, {});
    axis.images = {int_poly::variable("x"), int_poly()};
    family pulled = pullback_family(ch, axis);

    std::vector<family> charts;
    for (const auto& M : ch.members) {
        alg_morphism to_chart;
        to_chart.source = *ch.base;
        to_chart.target = make_absolute(M.vars, M.relations);
        to_chart.images = M.base_images;
        charts.push_back(pullback_family(ch, to_chart));
    }
    family comp = compose_families(ch, charts);
    CHECK(comp.members.size() == 4);

    for (const auto& R : build_suite()) {
        if (!covers(ch, R).covers) continue;
        CHECK(covers(pulled, R).covers);
        CHECK(covers(comp, R).covers);
    }
}
