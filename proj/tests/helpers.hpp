#pragma once

#include <string>

#include "chainlab/ring.hpp"

namespace chainlab::testing {

// Looks an element up by its display label; fails loudly on typos.
inline elem by_label(const ring_table& R, const std::string& label) {
    for (elem a = 0; a < R.size(); ++a)
        if (R.label(a) == label) return a;
    throw std::runtime_error("no element labeled " + label + " in " + R.spec());
}

inline ring_table F2xy_full() {
    return build("monext(Z/2,[x,y],[x^2,x*y,y^2])");
}
inline ring_table F2xy() { return build("monext(Z/2,[x,y],[x^2,y^2])"); }
inline ring_table F2t(unsigned n) {
    return build("monext(Z/2,[t],[t^" + std::to_string(n) + "])");
}
inline ring_table F3t(unsigned n) {
    return build("monext(Z/3,[t],[t^" + std::to_string(n) + "])");
}
inline ring_table ramified() {
    return build("quot(polyquot(Z/4,x,x^2-2),[2*x])");
}

} // namespace chainlab::testing
