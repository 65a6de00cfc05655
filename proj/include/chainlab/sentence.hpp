#pragma once

#include <optional>
#include <string>
#include <vector>

#include "chainlab/algebra.hpp"
#include "chainlab/poly.hpp"
#include "chainlab/ring.hpp"

namespace chainlab {

// One existential disjunct: exists exvars such that every equation (stored
// as "poly = 0") holds. No exvars and no equations means "true".
struct sentence_disjunct {
    std::vector<std::string> exvars;
    std::vector<int_poly> eqs;

    bool operator==(const sentence_disjunct&) const = default;
};

// forall univars where antecedent = 0 : disjunct or disjunct or ...
struct coherent_sentence {
    std::vector<std::string> univars;
    std::vector<int_poly> antecedent;
    std::vector<sentence_disjunct> disjuncts;

    bool operator==(const coherent_sentence&) const = default;
};

// Grammar:
//   sentence := "forall" varlist ["where" eqlist] ":" disjunct ("or" disjunct)*
//   disjunct := ["exists" varlist ":"] eqlist | "true"
//   eqlist   := eq ("," eq)* ;  eq := poly "=" poly
// Equations are normalized to poly - poly = 0.
coherent_sentence parse_sentence(const std::string& text);

// Canonical text form; parse_sentence(render_sentence(s)) == s.
std::string render_sentence(const coherent_sentence& s);

struct holds_result {
    bool holds;
    std::optional<tuple_t> counterexample; // univar tuple, when holds is false
};

// Brute-force model check over R.
holds_result holds(const coherent_sentence& s, const ring_table& R);

// Built-in axioms: local, domain, chain, valuation (= domain + chain),
// char(n). valuation is the only multi-sentence builtin.
std::vector<coherent_sentence> builtin_sentences(const std::string& name);

// The covering family associated to a sentence: base presented by the
// antecedent, one member per disjunct, identity base images.
family sentence_to_family(const coherent_sentence& s);

// Inverse direction: base generators become univars, each member becomes a
// disjunct whose equations are the member relations plus the base-image
// bindings that are not identifications.
coherent_sentence family_to_sentence(const family& U);

} // namespace chainlab
