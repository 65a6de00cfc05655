#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "chainlab/ring.hpp"

namespace chainlab {

enum class chain_case {
    field,
    equal_char_truncated, // k[t]/(t^n) shape
    unramified_mixed,     // (Z/p^n)[u] shape, maximal ideal (p)
    outside_listed_cases
};

std::string to_string(chain_case c);

struct chain_classification {
    chain_case kase = chain_case::field;
    std::size_t residue_field_size = 0; // q
    unsigned nilpotency_index = 0;      // n, least with uniformizer^n = 0
    unsigned characteristic = 0;
    unsigned residue_char = 0; // p
    elem uniformizer = 0;      // least generator of the maximal ideal
    bool maximal_ideal_is_p = false;
};

chain_classification classify_chain(const ring_table& R);

// Stable image of Frobenius with the induced operations; for finite rings
// this realizes the direct limit along Frobenius.
ring_table perfection_colim(const ring_table& R);

// Frobenius-compatible sequence (a_1, ..., a_depth) with a_{i+1}^p = a_i,
// stored by its deepest coordinate: a_i = last^(p^(depth - i)).
struct frob_chain {
    unsigned depth = 1;
    elem last = 0;
};

elem chain_level(const ring_table& R, const frob_chain& c, unsigned i);

struct chain_divide_result {
    frob_chain quotient;         // depth = input depth - 2
    std::vector<elem> levels;    // quotient levels 1..depth-2
    bool verified = false;       // both postconditions checked exhaustively
    std::optional<unsigned> failed_level;
};

// Level-wise division a_i = b_i * c_i with least witnesses, then the
// stabilization c'_i = c_{i+2}^(p^2). Requires equal depths >= 3 and a
// nonzero shallowest divisor coordinate.
chain_divide_result chain_divide(const ring_table& R, const frob_chain& a,
                                 const frob_chain& b);

struct check_result {
    bool ok = true;
    std::optional<std::pair<elem, elem>> witness;
};

// For all x, y with x*y = 0 and y^p != 0: y divides x and x^p = 0.
check_result division_lemma_check(const ring_table& R);

// Two consequences of perfection being a domain, checked exhaustively:
// (i) x*y = 0 and x^p != 0 imply y^p = 0;
// (ii) y^p != 0 and y^p | x^p imply y | x.
check_result tilt_domain_check(const ring_table& R, unsigned depth);

} // namespace chainlab
