#include "pfzero/algebra/ratfunc.hpp"

#include "pfzero/algebra/eval.hpp"
#include "pfzero/algebra/univariate.hpp"
#include "pfzero/errors.hpp"

namespace pfzero::algebra {

namespace {

using upoly::UPoly;

Integer lcm_of_denominators(const UPoly& a, const UPoly& b) {
    Integer l(1);
    for (const auto* p : {&a, &b})
        for (const auto& c : *p) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    return l;
}

Integer gcd_of_numerators(const UPoly& a, const UPoly& b) {
    Integer g(0);
    for (const auto* p : {&a, &b})
        for (const auto& c : *p) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num_mpz_t());
    return g;
}

} // namespace

RatFunc ratfunc_normalize(const MultiPoly& num, const MultiPoly& den) { return RatFunc(num, den); }

RatFunc::RatFunc(const MultiPoly& num) : RatFunc(num, MultiPoly(1)) {}

RatFunc::RatFunc(const MultiPoly& num, const MultiPoly& den) {
    if (den.is_zero()) throw Error(ErrorKind::DivisionByZeroPolynomial, "rational function with zero denominator");
    UPoly n = upoly::from_multi(num, Var::t), d = upoly::from_multi(den, Var::t);
    if (n.empty()) {
        den_ = MultiPoly(1);
        return;
    }
    const UPoly g = upoly::gcd(n, d);
    if (upoly::degree(g) > 0) {
        n = upoly::divrem(n, g).first;
        d = upoly::divrem(d, g).first;
    }
    Rational s(lcm_of_denominators(n, d));
    n = upoly::scale(n, s);
    d = upoly::scale(d, s);
    Rational c(gcd_of_numerators(n, d));
    if (d.back() < 0) c = -c;
    num_ = upoly::to_multi(upoly::scale(n, 1 / c), Var::t);
    den_ = upoly::to_multi(upoly::scale(d, 1 / c), Var::t);
}

std::pair<MultiPoly, MultiPoly> RatFunc::monic_form() const {
    const Rational inv = 1 / den_.leading_coefficient();
    return {num_ * inv, den_ * inv};
}

RatFunc RatFunc::derivative() const {
    const MultiPoly dn = num_.derive(Var::t), dd = den_.derive(Var::t);
    return RatFunc(dn * den_ - num_ * dd, den_ * den_);
}

std::complex<double> RatFunc::eval(std::complex<double> t) const {
    const std::array<std::complex<double>, kNumVars> pt{0.0, 0.0, t};
    return eval_complex(num_, pt) / eval_complex(den_, pt);
}

RatFunc RatFunc::operator-() const { return RatFunc(-num_, den_, Canonical{}); }

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero() || b.is_zero()) return RatFunc();
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw Error(ErrorKind::DivisionByZeroPolynomial, "division by the zero rational function");
    return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

std::string RatFunc::to_string() const {
    if (den_ == MultiPoly(1)) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

} // namespace pfzero::algebra
