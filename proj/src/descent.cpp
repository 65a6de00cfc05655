#include "chainlab/descent.hpp"

#include "chainlab/errors.hpp"

namespace chainlab {

namespace {

void require_local(const ring_table& R) {
    if (!basic_predicates(R).is_local)
        throw not_local(R.spec() + " is not a local ring");
}

} // namespace

std::vector<proj_point> proj_points(const ring_table& R) {
    require_local(R);
    std::vector<proj_point> out;
    for (elem v = 0; v < R.size(); ++v) out.push_back({R.one(), v});
    for (elem u = 0; u < R.size(); ++u)
        if (!R.is_unit(u)) out.push_back({u, R.one()});
    return out;
}

std::vector<bl_point> blowup_points(const ring_table& R) {
    std::vector<proj_point> lines = proj_points(R);
    std::vector<bl_point> out;
    for (elem a = 0; a < R.size(); ++a)
        for (elem b = 0; b < R.size(); ++b)
            for (const auto& l : lines)
                if (R.mul(a, l.v) == R.mul(b, l.u)) out.push_back({a, b, l});
    return out;
}

descent_report_t descent_report(const ring_table& R) {
    std::vector<proj_point> lines = proj_points(R);
    descent_report_t rep;
    rep.ring_spec = R.spec();
    rep.size_a = 1;
    rep.size_b = lines.size();
    rep.size_x = R.size() * R.size();
    rep.size_y = 0;

    rep.surjective = true;
    rep.complement_injective = true;
    std::optional<descent_report_t::collision_t> first_any;
    std::optional<descent_report_t::collision_t> first_nonzero;

    for (elem a = 0; a < R.size(); ++a) {
        for (elem b = 0; b < R.size(); ++b) {
            std::vector<proj_point> fiber;
            for (const auto& l : lines)
                if (R.mul(a, l.v) == R.mul(b, l.u)) fiber.push_back(l);
            rep.size_y += fiber.size();
            if (a == 0 && b == 0) continue; // origin handled by the A corner
            if (fiber.empty()) rep.surjective = false;
            if (fiber.size() > 1) {
                rep.complement_injective = false;
                descent_report_t::collision_t c{{a, b}, fiber[0], fiber[1]};
                if (!first_any) first_any = c;
                if (a != 0 && b != 0 && !first_nonzero) first_nonzero = c;
            }
        }
    }
    rep.collision = first_nonzero ? first_nonzero : first_any;
    rep.cocartesian = rep.surjective && rep.complement_injective;
    return rep;
}

std::optional<std::array<elem, 3>> collision_witness(const ring_table& R) {
    require_local(R);
    for (elem x = 1; x < R.size(); ++x)
        for (elem y = 0; y < R.size(); ++y)
            for (elem yp = y + 1; yp < R.size(); ++yp)
                if (R.mul(x, y) == R.mul(x, yp))
                    return std::array<elem, 3>{x, y, yp};
    return std::nullopt;
}

} // namespace chainlab
