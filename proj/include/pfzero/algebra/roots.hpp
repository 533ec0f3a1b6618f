#pragma once

#include "pfzero/algebra/multipoly.hpp"

#include <complex>
#include <vector>

namespace pfzero::algebra {

/// A root approximation with a disc guaranteed (up to evaluation rounding) to
/// contain a root of the given multiplicity.
struct RootEnclosure {
    std::complex<double> value;
    double radius = 0.0;
    int multiplicity = 1;
};

/// Complex roots of a univariate polynomial in `v`.  The polynomial is split
/// into squarefree factors exactly; each factor is solved by Aberth iteration
/// in extended precision and every root receives the Newton inclusion radius
/// deg * |f(z)| / |f'(z)|, floored at `min_radius`.  Roots whose discs
/// overlap are merged.
std::vector<RootEnclosure> isolate_roots(const MultiPoly& p, Var v, double min_radius = 1e-10);

/// Plain numeric roots (with multiplicity repeated) of a coefficient vector
/// in ascending powers; used for numerically defined polynomials.
std::vector<std::complex<long double>> aberth_roots(const std::vector<std::complex<long double>>& coeffs);

} // namespace pfzero::algebra
