#pragma once

#include "pfzero/algebra/multipoly.hpp"

#include <optional>
#include <string>

namespace pfzero::zerocount {

using algebra::Rational;

/// A theoretical bound.  Never a computed count.
struct CalculatorValue {
    std::string formula;
    std::optional<std::string> exact; // decimal integer or "p/q", when it fits
    std::optional<double> log10;      // absent when it overflows a double
    std::optional<double> loglog10;   // absent when log10 <= 0
    std::string note = "theoretical, not a computed count";
};

/// Exact values are produced only below this many decimal digits.
inline constexpr double kExactDigitLimit = 100000;

/// (2/rho)^(2^(d^c)).
CalculatorValue hilbert_bound(int d, const Rational& rho, double c);

/// n (M/rho)^(d^(c_p p^3)).
CalculatorValue ode_zero_bound(int n, const Rational& M, const Rational& rho, int d, int p, double c_p);

struct CalculatorConstants {
    double c = 1;
    double c_p = 1;
};

struct CalculatorReport {
    CalculatorValue hilbert;
    CalculatorValue ode;
};

/// Both formulas; rho must lie in (0, 1) (InvalidRho otherwise).
CalculatorReport asymptotic_bound_calculators(int d, const Rational& rho, int n, const Rational& M, int p,
                                              const CalculatorConstants& constants);

} // namespace pfzero::zerocount
