#pragma once

#include "pfzero/algebra/multipoly.hpp"

#include <array>
#include <complex>
#include <vector>

namespace pfzero::algebra {

using ComplexPoint = std::array<std::complex<double>, kNumVars>;

/// Recursive Horner evaluation at a complex point (x, y, t).  With
/// precision_bits <= 53 the arithmetic is binary64; larger values switch to
/// MPFR at that precision and round the result to binary64 at the end.
/// Negative precision means default_precision_bits().
std::complex<double> eval_complex(const MultiPoly& p, const ComplexPoint& point,
                                  int precision_bits = -1);

/// Process-wide default precision used by evaluators that do not take an
/// explicit argument (set from PFZERO_PRECISION_BITS by the CLI).
int default_precision_bits() noexcept;
void set_default_precision_bits(int bits);

/// Pre-converted dense evaluator for a polynomial in t alone; the hot path of
/// the ODE integrators.
class TPolyEvaluator {
public:
    TPolyEvaluator() = default;
    explicit TPolyEvaluator(const MultiPoly& p, int precision_bits = -1);

    std::complex<double> operator()(std::complex<double> t) const;
    /// Value and first derivative.
    std::pair<std::complex<double>, std::complex<double>> with_derivative(std::complex<double> t) const;
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

private:
    std::vector<double> coeffs_; // ascending powers
    MultiPoly exact_;
    int precision_bits_ = 53;
};

} // namespace pfzero::algebra
