#pragma once

#include <optional>
#include <string_view>

#include "fqlab/kelem.hpp"
#include "fqlab/poly.hpp"
#include "fqlab/series.hpp"
#include "fqlab/upoly.hpp"

namespace fqlab {

// Text syntax shared by every parser here:
//   coefficient  integer (reduced into F_p) or "[c_{m-1},...,c_0]"
//   monomial     c*t^k, t^k, c t, t, ...; '*' may be omitted
//   sum          terms joined by '+' or '-'; parentheses and ^ on groups allowed
// Series additionally accept negative exponents and one trailing "O(t^e)",
// which marks exponent e and everything below it as unknown (floor = e + 1).

/// Polynomial in t (nonnegative exponents only).
Poly parse_poly(const FieldPtr& field, std::string_view text);

/// Truncated series. The floor comes from the O-term, or from `floor` when the
/// text has none; when both are present they must agree.
Series parse_series(const FieldPtr& field, std::string_view text, std::optional<long> floor = std::nullopt);

/// "num / den" gives an exact rational; a series with an O-term gives a
/// truncated series; a finite Laurent sum with no O-term is exact.
KElem parse_kelem(const FieldPtr& field, std::string_view text);

/// Polynomial in u with F_q[t] coefficients, e.g. "u^2", "(t+1)*u^3 + t*u".
UPoly parse_upoly(const FieldPtr& field, std::string_view text);

}  // namespace fqlab
