#pragma once

#include "lefkit/poly.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace lefkit {

/// Renders `p` as `c*x11*x22^2 - x12^2 + 3/2`, highest degree terms first,
/// using `names[i]` for variable i.
std::string format_poly(const Poly& p, const std::vector<std::string>& names);

/// Parses the text format produced by `format_poly`. Factors within a term
/// may be joined by `*` or whitespace; coefficients are integers or p/q.
/// Unknown identifiers raise Error{Parse}.
Poly parse_poly(std::string_view text, const std::vector<std::string>& names);

} // namespace lefkit
