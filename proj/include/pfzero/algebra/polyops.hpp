#pragma once

#include "pfzero/algebra/multipoly.hpp"

#include <optional>

namespace pfzero::algebra {

/// Exact multivariate division: the quotient when `b` divides `a`, otherwise
/// nullopt.  Throws DivisionByZeroPolynomial for b == 0.
std::optional<MultiPoly> divide_exact(const MultiPoly& a, const MultiPoly& b);

/// Like divide_exact but treats a nonzero remainder as an internal error.
MultiPoly divide_or_throw(const MultiPoly& a, const MultiPoly& b);

/// Pseudo-remainder of `a` by `b` viewed as polynomials in `v` with
/// coefficients in the remaining variables.
MultiPoly pseudo_remainder(const MultiPoly& a, const MultiPoly& b, Var v);

/// Greatest common divisor, normalized to grevlex leading coefficient 1.
/// gcd(a, 0) is the normalized `a`; gcd(0, 0) throws DegenerateInput.
MultiPoly poly_gcd(const MultiPoly& a, const MultiPoly& b);

/// Content of `p` with respect to `v` (gcd of its coefficients in v).
MultiPoly content_in(const MultiPoly& p, Var v);

/// Sylvester resultant eliminating `v`.  The Sylvester matrix is laid out
/// with coefficients in ascending powers of `v` (f's shifted rows first), so
/// Res_x(x - a, x - b) = b - a; this is the classical resultant times
/// (-1)^(deg f * deg g).  A factor of degree zero in `v` is allowed and gives
/// its power.  Throws DegenerateInput on a zero operand.
MultiPoly resultant(const MultiPoly& f, const MultiPoly& g, Var v);

/// Determinant of a square matrix with polynomial entries (Bareiss, exact).
MultiPoly determinant(std::vector<std::vector<MultiPoly>> m);

} // namespace pfzero::algebra
