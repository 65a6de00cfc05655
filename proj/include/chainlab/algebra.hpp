#pragma once

#include <memory>
#include <string>
#include <vector>

#include "chainlab/poly.hpp"
#include "chainlab/ring.hpp"

namespace chainlab {

// Finitely presented Z-algebra, optionally with a structure morphism from a
// base algebra (one image polynomial per base generator).
struct fp_algebra {
    std::vector<std::string> vars;
    std::vector<int_poly> relations;
    std::shared_ptr<const fp_algebra> base; // null for absolute algebras
    std::vector<int_poly> base_images;      // one per base generator

    bool is_absolute() const { return base == nullptr; }
};

// Structural comparison of the presentation (vars + relations only).
bool same_presentation(const fp_algebra& a, const fp_algebra& b);

fp_algebra make_absolute(std::vector<std::string> vars,
                         std::vector<int_poly> relations);

// Validates the structure morphism: every base relation must, after
// substituting the images, expand to zero or to (+/-) a listed relation.
fp_algebra make_over(std::shared_ptr<const fp_algebra> base,
                     std::vector<std::string> vars,
                     std::vector<int_poly> relations,
                     std::vector<int_poly> base_images);

// Covering family {Spec R_i -> Spec R_0}: nonempty members over a shared base.
struct family {
    std::string name; // display name, may be empty
    std::shared_ptr<const fp_algebra> base;
    std::vector<fp_algebra> members;
};

family make_family(std::string name, std::shared_ptr<const fp_algebra> base,
                   std::vector<fp_algebra> members);

using tuple_t = std::vector<elem>;

// Point-search caps: generator count and total scan size per call.
constexpr std::size_t max_point_vars = 6;
constexpr std::size_t max_point_scan = 10'000'000;

elem eval_poly(const int_poly& p, const ring_table& R,
               const std::map<std::string, elem>& assignment);

// All tuples in R^n on which every relation vanishes, in canonical order
// (first variable most significant).
std::vector<tuple_t> points(const fp_algebra& A, const ring_table& R);

// Member points over a given base point (tuples are over the member's full
// generator list).
std::vector<tuple_t> fiber_points(const fp_algebra& member, const ring_table& R,
                                  const tuple_t& base_point);
bool fiber_nonempty(const fp_algebra& member, const ring_table& R,
                    const tuple_t& base_point, tuple_t* witness = nullptr);

// Algebra morphism source -> target (scheme map Spec(target) -> Spec(source)),
// given by one image polynomial per source generator.
struct alg_morphism {
    fp_algebra source;
    fp_algebra target;
    std::vector<int_poly> images;
};

// Syntactic check: every source relation, after substitution, expands to
// zero (or is a listed target relation). Returns false when the target has
// no relations and the expansion is nonzero; throws UndecidedSyntactically
// when ideal membership would have to be decided.
bool verify_morphism(const fp_algebra& source, const fp_algebra& target,
                     const std::vector<int_poly>& images);

// Base change of a family along f: the members become tensor products with
// disjoint-union variables and identification relations.
family pullback_family(const family& U, const alg_morphism& f);

// Flattens families V_i over the members of U into one family over U's base.
family compose_families(const family& U, const std::vector<family>& V);

} // namespace chainlab
