#pragma once

#include "pfzero/algebra/multipoly.hpp"

#include <complex>
#include <string>

namespace pfzero::algebra {

/// Rational function in t.  Canonical form: gcd(num, den) = 1, all
/// coefficients of num and den are integers with no common integer factor,
/// and den has a positive leading coefficient.  So (t^2 - 1)/(2t - 2) is
/// stored as (t + 1)/2 and 5t/(10t^2) as 1/(2t).
class RatFunc {
public:
    RatFunc() : num_(), den_(1) {}
    RatFunc(const Rational& c) : RatFunc(MultiPoly(c)) {}
    RatFunc(int c) : RatFunc(MultiPoly(c)) {}
    RatFunc(long c) : RatFunc(MultiPoly(c)) {}
    RatFunc(const MultiPoly& num);
    RatFunc(const MultiPoly& num, const MultiPoly& den);

    const MultiPoly& num() const { return num_; }
    const MultiPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_constant(); }

    /// Same function with a monic denominator.
    std::pair<MultiPoly, MultiPoly> monic_form() const;

    RatFunc derivative() const;
    std::complex<double> eval(std::complex<double> t) const;

    RatFunc operator-() const;
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    /// "num" when den == 1, else "(num)/(den)".
    std::string to_string() const;

private:
    struct Canonical {};
    RatFunc(MultiPoly num, MultiPoly den, Canonical) : num_(std::move(num)), den_(std::move(den)) {}

    MultiPoly num_;
    MultiPoly den_;
};

/// gcd-reduce num/den into canonical form.  den == 0 throws
/// DivisionByZeroPolynomial.  Idempotent.
RatFunc ratfunc_normalize(const MultiPoly& num, const MultiPoly& den);

} // namespace pfzero::algebra
