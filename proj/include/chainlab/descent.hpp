#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "chainlab/ring.hpp"

namespace chainlab {

// Point of the projective line over a local ring, normalized so that the
// first unit coordinate is 1 (u wins when both are units).
struct proj_point {
    elem u = 0;
    elem v = 0;

    bool operator==(const proj_point&) const = default;
};

// Point of the blowup of the plane at the origin, in the incidence model:
// base (a, b) with line (u : v) subject to a*v = b*u.
struct bl_point {
    elem a = 0;
    elem b = 0;
    proj_point line;

    bool operator==(const bl_point&) const = default;
};

// All normalized line classes: (1, v) for every v, then (u, 1) for every
// non-unit u, in element order. Requires a local ring.
std::vector<proj_point> proj_points(const ring_table& R);

// All incident pairs, base-major, lines in proj_points order.
std::vector<bl_point> blowup_points(const ring_table& R);

struct descent_report_t {
    std::string ring_spec;
    std::size_t size_a = 0; // the one-point origin corner
    std::size_t size_b = 0; // exceptional line
    std::size_t size_y = 0; // blowup
    std::size_t size_x = 0; // plane
    bool surjective = false;
    bool complement_injective = false;
    bool cocartesian = false;

    struct collision_t {
        std::array<elem, 2> base;
        proj_point line1, line2;
    };
    std::optional<collision_t> collision;
};

// Point-level descent check for the blowup square. The collision recorded
// is over the first base point, preferring bases with all coordinates
// nonzero, whose fiber has two or more lines.
descent_report_t descent_report(const ring_table& R);

// Least (x, y, y') in element order with x != 0, y != y' and x*y = x*y';
// exists iff R has a nonzero zero divisor.
std::optional<std::array<elem, 3>> collision_witness(const ring_table& R);

} // namespace chainlab
