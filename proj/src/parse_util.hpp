#pragma once

#include "chainlab/poly.hpp"
#include "lexer.hpp"

namespace chainlab::detail {

// Parses one polynomial expression, stopping at any token that cannot
// extend it (',', '=', ':', ']', an unbalanced ')', a keyword, ...).
int_poly parse_poly(lexer& lx);

bool is_keyword(const std::string& name);

} // namespace chainlab::detail
