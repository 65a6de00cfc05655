#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "chainlab/algebra.hpp"
#include "chainlab/ring.hpp"

namespace chainlab {

// Result of the covering condition: does every R-point of the base lift to
// some member? lifts[i] is the first-found lift of base_points[i] and is
// only complete when covers is true.
struct cover_report {
    bool covers = false;
    std::optional<tuple_t> failing_point;
    std::vector<tuple_t> base_points;
    std::vector<std::pair<std::size_t, tuple_t>> lifts; // (member index, point)
    std::optional<std::string> warning;
};

cover_report covers(const family& U, const ring_table& R);

// Named generating families:
//   zariski-a1  two unit loci of the affine line
//   rh-nodal    the two branches of the node xy = 0
//   chain       the two blowup charts over the plane
//   rh-blowup   same charts with the alternate variable naming
//   blowup-n    origin plus the n charts of the blowup of affine n-space
//   nilred      the reduction point of the dual numbers
family named_family(const std::string& name);

// Lift of a point of R^d through the blowup family: either the origin
// member (all coordinates zero) or the least chart whose coordinate divides
// the others, with least division witnesses.
struct blowup_lift {
    bool origin_member = false;
    std::size_t chart = 0;    // 1-based chart index, 0 for the origin member
    tuple_t chart_point;      // chart coordinates (a_i, then the t_j)
};

blowup_lift factor_through_blowup(const ring_table& R, const tuple_t& a);

// Extensional comparison of two families on a list of rings.
struct equivalence_row {
    std::string ring_spec;
    bool first_covers = false;
    bool second_covers = false;
};

struct equivalence_report {
    std::vector<equivalence_row> rows;
    std::optional<std::string> separating_ring; // absent: same on this suite
};

equivalence_report covering_equivalent_on(const family& U, const family& V,
                                          const std::vector<ring_table>& rings);

} // namespace chainlab
