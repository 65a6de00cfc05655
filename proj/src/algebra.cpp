#include "chainlab/algebra.hpp"

#include <algorithm>

#include "chainlab/errors.hpp"
#include "eval_util.hpp"

namespace chainlab {

using detail::check_scan_cap;
using detail::compile;
using detail::cpoly;

namespace {

bool reduces_syntactically(const int_poly& p,
                           const std::vector<int_poly>& relations) {
    if (p.is_zero()) return true;
    for (const auto& r : relations)
        if (p == r || p == -r) return true;
    return false;
}

std::map<std::string, int_poly> image_map(const std::vector<std::string>& vars,
                                          const std::vector<int_poly>& images) {
    std::map<std::string, int_poly> m;
    for (std::size_t i = 0; i < vars.size(); ++i) m.emplace(vars[i], images[i]);
    return m;
}

} // namespace

bool same_presentation(const fp_algebra& a, const fp_algebra& b) {
    return a.vars == b.vars && a.relations == b.relations;
}

fp_algebra make_absolute(std::vector<std::string> vars,
                         std::vector<int_poly> relations) {
    fp_algebra A;
    A.vars = std::move(vars);
    A.relations = std::move(relations);
    return A;
}

fp_algebra make_over(std::shared_ptr<const fp_algebra> base,
                     std::vector<std::string> vars,
                     std::vector<int_poly> relations,
                     std::vector<int_poly> base_images) {
    if (!base) throw malformed_morphism("member algebra needs a base");
    if (base_images.size() != base->vars.size())
        throw malformed_morphism("need one base image per base generator");
    for (const auto& img : base_images)
        for (const auto& v : img.vars())
            if (std::find(vars.begin(), vars.end(), v) == vars.end())
                throw malformed_morphism("base image uses unknown variable " + v);
    auto images = image_map(base->vars, base_images);
    for (const auto& rel : base->relations) {
        int_poly r = rel.substitute(images);
        if (!reduces_syntactically(r, relations))
            throw undecided_syntactically(
                "base relation " + rel.str() +
                " does not syntactically vanish in the member (image " + r.str() +
                ")");
    }
    fp_algebra A;
    A.vars = std::move(vars);
    A.relations = std::move(relations);
    A.base = std::move(base);
    A.base_images = std::move(base_images);
    return A;
}

family make_family(std::string name, std::shared_ptr<const fp_algebra> base,
                   std::vector<fp_algebra> members) {
    if (members.empty()) throw base_mismatch("a family needs at least one member");
    for (const auto& m : members) {
        if (!m.base || !same_presentation(*m.base, *base))
            throw base_mismatch("family member is not presented over the base");
    }
    family F;
    F.name = std::move(name);
    F.base = std::move(base);
    F.members = std::move(members);
    return F;
}

elem eval_poly(const int_poly& p, const ring_table& R,
               const std::map<std::string, elem>& assignment) {
    std::vector<std::string> vars;
    tuple_t vals;
    for (const auto& [v, e] : assignment) {
        vars.push_back(v);
        vals.push_back(e);
    }
    return compile(p, vars, R).eval(R, vals);
}

std::vector<tuple_t> points(const fp_algebra& A, const ring_table& R) {
    if (!A.is_absolute())
        throw malformed_spec("points requires an absolute algebra");
    const std::size_t n = A.vars.size();
    check_scan_cap(R.size(), n);

    std::vector<cpoly> rels;
    rels.reserve(A.relations.size());
    for (const auto& r : A.relations) rels.push_back(compile(r, A.vars, R));

    std::vector<tuple_t> out;
    tuple_t t(n, 0);
    for (;;) {
        bool ok = true;
        for (const auto& r : rels)
            if (r.eval(R, t) != 0) {
                ok = false;
                break;
            }
        if (ok) out.push_back(t);

        std::size_t i = n;
        while (i-- > 0) {
            if (++t[i] < R.size()) break;
            t[i] = 0;
            if (i == 0) return out;
        }
        if (n == 0) return out; // single empty tuple already handled
    }
}

namespace {

// Shared fiber scan: pins member variables that appear as identity base
// images, scans the rest, and calls visit on each fiber point. visit
// returning false stops the scan.
template <typename Visit>
void scan_fiber(const fp_algebra& member, const ring_table& R,
                const tuple_t& base_point, Visit&& visit) {
    if (member.is_absolute())
        throw malformed_spec("fiber_points requires an algebra over a base");
    const fp_algebra& base = *member.base;
    if (base_point.size() != base.vars.size())
        throw base_point_invalid("base point has wrong arity");
    for (const auto& r : base.relations)
        if (compile(r, base.vars, R).eval(R, base_point) != 0)
            throw base_point_invalid("base point does not satisfy base relation " +
                                     r.str());

    const std::size_t n = member.vars.size();
    std::vector<bool> pinned(n, false);
    tuple_t t(n, 0);
    std::vector<std::pair<cpoly, elem>> residual; // image == base coordinate

    for (std::size_t k = 0; k < base.vars.size(); ++k) {
        const int_poly& img = member.base_images[k];
        if (auto v = img.as_single_variable()) {
            auto it = std::find(member.vars.begin(), member.vars.end(), *v);
            if (it != member.vars.end()) {
                auto idx = static_cast<std::size_t>(it - member.vars.begin());
                if (pinned[idx]) {
                    if (t[idx] != base_point[k]) return; // inconsistent pins
                } else {
                    pinned[idx] = true;
                    t[idx] = base_point[k];
                }
                continue;
            }
        }
        residual.emplace_back(compile(img, member.vars, R), base_point[k]);
    }

    std::vector<std::size_t> free;
    for (std::size_t i = 0; i < n; ++i)
        if (!pinned[i]) free.push_back(i);
    check_scan_cap(R.size(), free.size());

    std::vector<cpoly> rels;
    rels.reserve(member.relations.size());
    for (const auto& r : member.relations) rels.push_back(compile(r, member.vars, R));

    for (;;) {
        bool ok = true;
        for (const auto& [img, want] : residual)
            if (img.eval(R, t) != want) {
                ok = false;
                break;
            }
        if (ok)
            for (const auto& r : rels)
                if (r.eval(R, t) != 0) {
                    ok = false;
                    break;
                }
        if (ok && !visit(t)) return;

        std::size_t i = free.size();
        while (i-- > 0) {
            if (++t[free[i]] < R.size()) break;
            t[free[i]] = 0;
            if (i == 0) return;
        }
        if (free.empty()) return;
    }
}

} // namespace

std::vector<tuple_t> fiber_points(const fp_algebra& member, const ring_table& R,
                                  const tuple_t& base_point) {
    std::vector<tuple_t> out;
    scan_fiber(member, R, base_point, [&](const tuple_t& t) {
        out.push_back(t);
        return true;
    });
    return out;
}

bool fiber_nonempty(const fp_algebra& member, const ring_table& R,
                    const tuple_t& base_point, tuple_t* witness) {
    bool found = false;
    scan_fiber(member, R, base_point, [&](const tuple_t& t) {
        found = true;
        if (witness) *witness = t;
        return false;
    });
    return found;
}

bool verify_morphism(const fp_algebra& source, const fp_algebra& target,
                     const std::vector<int_poly>& images) {
    if (images.size() != source.vars.size())
        throw malformed_morphism("need one image per source generator");
    for (const auto& img : images)
        for (const auto& v : img.vars())
            if (std::find(target.vars.begin(), target.vars.end(), v) ==
                target.vars.end())
                throw malformed_morphism("image uses unknown variable " + v);
    auto m = image_map(source.vars, images);
    for (const auto& rel : source.relations) {
        int_poly r = rel.substitute(m);
        if (reduces_syntactically(r, target.relations)) continue;
        if (target.relations.empty()) return false;
        throw undecided_syntactically(
            "cannot decide ideal membership of " + r.str() +
            " syntactically; it is not accepted");
    }
    return true;
}

namespace {

std::string fresh_name(const std::string& want,
                       const std::vector<std::string>& taken) {
    std::string n = want;
    unsigned k = 0;
    while (std::find(taken.begin(), taken.end(), n) != taken.end())
        n = want + "_" + std::to_string(++k);
    return n;
}

} // namespace

family pullback_family(const family& U, const alg_morphism& f) {
    if (!same_presentation(f.source, *U.base))
        throw malformed_morphism("morphism source is not the family base");
    if (!verify_morphism(f.source, f.target, f.images))
        throw malformed_morphism("generator images do not respect the source relations");

    auto new_base =
        std::make_shared<fp_algebra>(make_absolute(f.target.vars, f.target.relations));

    std::vector<fp_algebra> members;
    for (const auto& M : U.members) {
        std::vector<std::string> vars = f.target.vars;
        std::map<std::string, std::string> ren;
        for (const auto& v : M.vars) {
            std::string nv = fresh_name(v, vars);
            ren[v] = nv;
            vars.push_back(nv);
        }
        std::vector<int_poly> rels = f.target.relations;
        for (const auto& r : M.relations) rels.push_back(r.rename(ren));
        for (std::size_t k = 0; k < U.base->vars.size(); ++k)
            rels.push_back(M.base_images[k].rename(ren) - f.images[k]);

        std::vector<int_poly> images;
        for (const auto& v : f.target.vars) images.push_back(int_poly::variable(v));
        members.push_back(make_over(new_base, std::move(vars), std::move(rels),
                                    std::move(images)));
    }
    std::string name = U.name.empty() ? "" : "pullback(" + U.name + ")";
    return make_family(std::move(name), std::move(new_base), std::move(members));
}

family compose_families(const family& U, const std::vector<family>& V) {
    if (V.size() != U.members.size())
        throw base_mismatch("need one family per member of the outer family");
    std::vector<fp_algebra> members;
    for (std::size_t i = 0; i < U.members.size(); ++i) {
        const fp_algebra& M = U.members[i];
        if (!same_presentation(*V[i].base, M))
            throw base_mismatch("inner family " + std::to_string(i) +
                                " is not based on the corresponding member");
        for (const auto& N : V[i].members) {
            auto through = image_map(M.vars, N.base_images);
            std::vector<int_poly> images;
            for (const auto& img : M.base_images)
                images.push_back(img.substitute(through));
            members.push_back(
                make_over(U.base, N.vars, N.relations, std::move(images)));
        }
    }
    std::string name = U.name.empty() ? "" : "compose(" + U.name + ")";
    return make_family(std::move(name), U.base, std::move(members));
}

} // namespace chainlab
