#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "chainlab/algebra.hpp"
#include "chainlab/errors.hpp"
#include "chainlab/poly.hpp"
#include "chainlab/ring.hpp"

namespace chainlab::detail {

// Polynomial compiled against a fixed variable order and ring, for fast
// repeated evaluation inside point scans.
struct cpoly {
    struct cterm {
        elem c;
        std::vector<std::pair<std::size_t, unsigned>> powers;
    };

    std::vector<cterm> terms;

    elem eval(const ring_table& R, const tuple_t& a) const {
        elem acc = 0;
        for (const auto& t : terms) {
            elem v = t.c;
            for (const auto& [i, e] : t.powers)
                for (unsigned k = 0; k < e; ++k) v = R.mul(v, a[i]);
            acc = R.add(acc, v);
        }
        return acc;
    }
};

inline cpoly compile(const int_poly& p, const std::vector<std::string>& vars,
                     const ring_table& R) {
    cpoly cp;
    for (const auto& [m, c] : p.terms()) {
        cpoly::cterm t;
        t.c = R.from_int(c);
        if (t.c == 0) continue;
        for (const auto& [v, e] : m) {
            auto it = std::find(vars.begin(), vars.end(), v);
            if (it == vars.end())
                throw missing_variable("no assignment for variable " + v);
            t.powers.emplace_back(static_cast<std::size_t>(it - vars.begin()), e);
        }
        cp.terms.push_back(std::move(t));
    }
    return cp;
}

inline void check_scan_cap(std::size_t ring_size, std::size_t nvars) {
    if (nvars > max_point_vars)
        throw size_cap_exceeded("point scan over " + std::to_string(nvars) +
                                " variables exceeds the generator cap");
    std::size_t total = 1;
    for (std::size_t i = 0; i < nvars; ++i) {
        if (total > max_point_scan / std::max<std::size_t>(ring_size, 1))
            throw size_cap_exceeded("point scan exceeds the size cap");
        total *= ring_size;
    }
}

} // namespace chainlab::detail
