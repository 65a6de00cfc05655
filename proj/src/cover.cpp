#include "chainlab/cover.hpp"

#include <algorithm>

#include "chainlab/errors.hpp"

namespace chainlab {

namespace {

int_poly pv(const std::string& v) { return int_poly::variable(v); }

} // namespace

cover_report covers(const family& U, const ring_table& R) {
    cover_report rep;
    rep.base_points = points(*U.base, R);
    if (U.name.rfind("blowup-", 0) == 0 && R.size() > 1 &&
        !basic_predicates(R).is_local)
        rep.warning = "the chart presentation of the blowup is only faithful "
                      "over local rings";
    rep.covers = true;
    for (const auto& bp : rep.base_points) {
        bool lifted = false;
        for (std::size_t i = 0; i < U.members.size(); ++i) {
            tuple_t w;
            if (fiber_nonempty(U.members[i], R, bp, &w)) {
                rep.lifts.emplace_back(i, std::move(w));
                lifted = true;
                break;
            }
        }
        if (!lifted) {
            rep.covers = false;
            rep.failing_point = bp;
            break;
        }
    }
    return rep;
}

namespace {

family make_blowup_family(std::size_t n) {
    std::vector<std::string> xs;
    for (std::size_t i = 1; i <= n; ++i) xs.push_back("x" + std::to_string(i));
    auto base = std::make_shared<fp_algebra>(make_absolute(xs, {}));

    std::vector<fp_algebra> members;
    std::vector<int_poly> id_images;
    std::vector<int_poly> origin_rels;
    for (const auto& x : xs) {
        id_images.push_back(pv(x));
        origin_rels.push_back(pv(x));
    }
    members.push_back(make_over(base, xs, origin_rels, id_images));

    for (std::size_t i = 1; i <= n; ++i) {
        std::vector<std::string> vars{"x" + std::to_string(i)};
        for (std::size_t j = 1; j <= n; ++j)
            if (j != i) vars.push_back("t" + std::to_string(j));
        std::vector<int_poly> images;
        for (std::size_t j = 1; j <= n; ++j)
            images.push_back(j == i
                                 ? pv("x" + std::to_string(i))
                                 : pv("x" + std::to_string(i)) *
                                       pv("t" + std::to_string(j)));
        members.push_back(make_over(base, std::move(vars), {}, std::move(images)));
    }
    return make_family("blowup-" + std::to_string(n), std::move(base),
                       std::move(members));
}

} // namespace

family named_family(const std::string& name) {
    if (name == "zariski-a1") {
        auto base = std::make_shared<fp_algebra>(
            make_absolute({"x"}, std::vector<int_poly>{}));
        std::vector<fp_algebra> members;
        members.push_back(make_over(base, {"x", "u"},
                                    {pv("x") * pv("u") - int_poly::constant(1)},
                                    {pv("x")}));
        members.push_back(make_over(
            base, {"x", "v"},
            {(int_poly::constant(1) - pv("x")) * pv("v") - int_poly::constant(1)},
            {pv("x")}));
        return make_family(name, std::move(base), std::move(members));
    }
    if (name == "rh-nodal") {
        auto base = std::make_shared<fp_algebra>(
            make_absolute({"x", "y"}, {pv("x") * pv("y")}));
        std::vector<fp_algebra> members;
        members.push_back(make_over(base, {"x"}, {}, {pv("x"), int_poly()}));
        members.push_back(make_over(base, {"y"}, {}, {int_poly(), pv("y")}));
        return make_family(name, std::move(base), std::move(members));
    }
    if (name == "chain") {
        auto base = std::make_shared<fp_algebra>(
            make_absolute({"x", "y"}, std::vector<int_poly>{}));
        std::vector<fp_algebra> members;
        members.push_back(
            make_over(base, {"x", "t"}, {}, {pv("x"), pv("x") * pv("t")}));
        members.push_back(
            make_over(base, {"s", "y"}, {}, {pv("s") * pv("y"), pv("y")}));
        return make_family(name, std::move(base), std::move(members));
    }
    if (name == "rh-blowup") {
        auto base = std::make_shared<fp_algebra>(
            make_absolute({"x", "y"}, std::vector<int_poly>{}));
        std::vector<fp_algebra> members;
        members.push_back(
            make_over(base, {"x", "u"}, {}, {pv("x"), pv("x") * pv("u")}));
        members.push_back(
            make_over(base, {"w", "y"}, {}, {pv("w") * pv("y"), pv("y")}));
        return make_family(name, std::move(base), std::move(members));
    }
    if (name == "nilred") {
        auto base = std::make_shared<fp_algebra>(
            make_absolute({"x"}, {pv("x") * pv("x")}));
        std::vector<fp_algebra> members;
        members.push_back(make_over(base, {}, {}, {int_poly()}));
        return make_family(name, std::move(base), std::move(members));
    }
    if (name.rfind("blowup-", 0) == 0) {
        const std::string num = name.substr(7);
        if (!num.empty() &&
            std::all_of(num.begin(), num.end(),
                        [](char c) { return c >= '0' && c <= '9'; })) {
            std::size_t n = std::stoul(num);
            if (n >= 2 && n <= max_point_vars) return make_blowup_family(n);
        }
    }
    throw unknown_family("no named family " + name);
}

blowup_lift factor_through_blowup(const ring_table& R, const tuple_t& a) {
    require_chain(R);
    blowup_lift out;
    if (std::all_of(a.begin(), a.end(), [](elem x) { return x == 0; })) {
        out.origin_member = true;
        return out;
    }
    for (std::size_t i = 0; i < a.size(); ++i) {
        bool all = true;
        for (std::size_t j = 0; j < a.size(); ++j)
            if (!divides(R, a[i], a[j])) {
                all = false;
                break;
            }
        if (!all) continue;
        out.chart = i + 1;
        out.chart_point.push_back(a[i]);
        for (std::size_t j = 0; j < a.size(); ++j) {
            if (j == i) continue;
            for (elem t = 0; t < R.size(); ++t) {
                if (R.mul(a[i], t) == a[j]) {
                    out.chart_point.push_back(t);
                    break;
                }
            }
        }
        return out;
    }
    // require_chain guarantees a dividing coordinate exists
    throw not_a_chain_ring("no coordinate divides the others");
}

equivalence_report covering_equivalent_on(const family& U, const family& V,
                                          const std::vector<ring_table>& rings) {
    equivalence_report rep;
    for (const auto& R : rings) {
        equivalence_row row;
        row.ring_spec = R.spec();
        row.first_covers = covers(U, R).covers;
        row.second_covers = covers(V, R).covers;
        if (row.first_covers != row.second_covers && !rep.separating_ring)
            rep.separating_ring = row.ring_spec;
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

} // namespace chainlab
