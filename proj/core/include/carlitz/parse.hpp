#ifndef CARLITZ_PARSE_HPP
#define CARLITZ_PARSE_HPP

#include <string_view>

#include "carlitz/poly.hpp"

namespace carlitz {

// Parses a polynomial literal over the configured field.  The symbol `t`
// denotes theta (ASCII-friendly input); integer literals reduce into the
// prime subfield; `u` is the extension generator and needs e > 1.
// Grammar: sums/differences of products of powers, with parentheses, e.g.
//   "t^2 + 2*t + 1",  "(u+1)*t^2 + u".
// Throws parse_error carrying the 1-based column on failure.
Poly parse_poly(const FieldPtr& ctx, std::string_view src);

}  // namespace carlitz

#endif
