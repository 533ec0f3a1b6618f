#pragma once

// Dense univariate helpers over Q.  A UPoly stores coefficients in ascending
// powers and is kept trimmed (no trailing zeros; the zero polynomial is empty).

#include "pfzero/algebra/multipoly.hpp"

#include <vector>

namespace pfzero::algebra::upoly {

using UPoly = std::vector<Rational>;

void trim(UPoly& p);
int degree(const UPoly& p);
UPoly from_multi(const MultiPoly& p, Var v);
MultiPoly to_multi(const UPoly& p, Var v);

UPoly add(const UPoly& a, const UPoly& b);
UPoly sub(const UPoly& a, const UPoly& b);
UPoly mul(const UPoly& a, const UPoly& b);
UPoly scale(const UPoly& a, const Rational& c);
UPoly derivative(const UPoly& p);
/// Quotient and remainder; throws DivisionByZeroPolynomial when `b` is zero.
std::pair<UPoly, UPoly> divrem(const UPoly& a, const UPoly& b);
UPoly monic(const UPoly& p);
/// Monic gcd; gcd(0, 0) is the zero polynomial.
UPoly gcd(const UPoly& a, const UPoly& b);
/// Yun's algorithm: result[k] is the monic product of the factors of
/// multiplicity k + 1 (entries may be 1).
std::vector<UPoly> squarefree_decomposition(const UPoly& p);

} // namespace pfzero::algebra::upoly
