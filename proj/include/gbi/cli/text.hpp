#pragma once

#include <string>
#include <string_view>

#include "gbi/bannaiito/realization.hpp"
#include "gbi/clifford/clifford_poly.hpp"

namespace gbi {

// Parses the text form printed by CliffordPoly::to_string, e.g.
// `x1^2*x2 - 3*a*x3`, `1/2*b*x1*e2*e1`, `(1 + a)*x1^2`. Coordinates and
// Clifford units commute; units are reordered with the Clifford sign.
// Identifiers other than x<i>, e<i> must name parameters of `space`.
// Throws ParseError carrying the byte offset of the problem.
CliffordPoly parse_poly(std::string_view text, int n, const ParamSpace* space);

// Parses an operator expression over the named operators of a realization:
//   D_i x_i R_i pi_ij P P_i e_i Z_i W_ij S_ij M_ij Q_ij
//   C_i C_ij C_ijk Gamma A_plus A_minus A_0 B_plus B_minus O_S Casimir
// combined with + - *, commutators [X, Y], anticommutators {X, Y},
// parentheses, integer powers X^k, rationals and parameters as scalars.
// Subscripts may be written D_1, D1 or D_{1}.
Operator parse_operator(std::string_view text, const Realization& r);

// Rational literal `p`, `-p`, `p/q`; nullopt when malformed or q = 0.
std::optional<Rational> parse_rational(std::string_view text);

}  // namespace gbi
