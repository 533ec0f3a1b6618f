#include "pfzero/zerocount/calculators.hpp"

#include "pfzero/errors.hpp"

#include <mpfr.h>

#include <cmath>
#include <sstream>

namespace pfzero::zerocount {

namespace {

constexpr mpfr_prec_t kBits = 256;

class Mp {
public:
    Mp() { mpfr_init2(v_, kBits); }
    ~Mp() { mpfr_clear(v_); }
    Mp(const Mp&) = delete;
    Mp& operator=(const Mp&) = delete;
    mpfr_ptr get() { return v_; }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

private:
    mpfr_t v_;
};

bool is_integral(double v) { return std::isfinite(v) && v >= 0 && std::floor(v) == v; }

std::string rational_string(const mpq_class& q) {
    return q.get_den() == 1 ? q.get_num().get_str() : q.get_num().get_str() + "/" + q.get_den().get_str();
}

// log10 of base^(d^e) (times `factor`), filled into `out`.
void fill_logs(CalculatorValue& out, const Rational& base, int d, double e, const Rational& factor) {
    Mp lb, de, lg, lf;
    mpfr_set_q(lb.get(), base.get_mpq_t(), MPFR_RNDN);
    mpfr_log10(lb.get(), lb.get(), MPFR_RNDN);
    mpfr_set_si(de.get(), d, MPFR_RNDN);
    Mp ee;
    mpfr_set_d(ee.get(), e, MPFR_RNDN);
    mpfr_pow(de.get(), de.get(), ee.get(), MPFR_RNDN); // d^e
    mpfr_mul(lg.get(), de.get(), lb.get(), MPFR_RNDN);
    mpfr_set_q(lf.get(), factor.get_mpq_t(), MPFR_RNDN);
    mpfr_log10(lf.get(), lf.get(), MPFR_RNDN);
    mpfr_add(lg.get(), lg.get(), lf.get(), MPFR_RNDN);
    const double l10 = lg.to_double();
    if (std::isfinite(l10)) out.log10 = l10;
    if (mpfr_sgn(lg.get()) > 0) {
        mpfr_log10(lg.get(), lg.get(), MPFR_RNDN);
        out.loglog10 = lg.to_double();
    }
}

void check_rho(const Rational& rho) {
    if (!(rho > 0 && rho < 1)) throw Error(ErrorKind::InvalidRho, "rho must lie in (0, 1)");
}

} // namespace

CalculatorValue hilbert_bound(int d, const Rational& rho, double c) {
    check_rho(rho);
    if (d < 2) throw Error(ErrorKind::DegenerateInput, "degree must be at least 2");
    if (!(c > 0)) throw Error(ErrorKind::DegenerateInput, "constant c must be positive");
    CalculatorValue out;
    out.formula = "(2/rho)^(2^(d^c))";
    const Rational base = Rational(2) / rho;
    // log10 value = 2^(d^c) log10(2/rho): the d^e form with d = 2, e = d^c.
    const double dc = std::pow(static_cast<double>(d), c);
    fill_logs(out, base, 2, dc, Rational(1));
    {
        Mp lg, l2, lb;
        // log10 log10 value = d^c log10 2 + log10 log10(2/rho), exact in log space.
        mpfr_set_si(lg.get(), d, MPFR_RNDN);
        Mp cc;
        mpfr_set_d(cc.get(), c, MPFR_RNDN);
        mpfr_pow(lg.get(), lg.get(), cc.get(), MPFR_RNDN);
        mpfr_set_ui(l2.get(), 2, MPFR_RNDN);
        mpfr_log10(l2.get(), l2.get(), MPFR_RNDN);
        mpfr_mul(lg.get(), lg.get(), l2.get(), MPFR_RNDN);
        mpfr_set_q(lb.get(), base.get_mpq_t(), MPFR_RNDN);
        mpfr_log10(lb.get(), lb.get(), MPFR_RNDN);
        mpfr_log10(lb.get(), lb.get(), MPFR_RNDN);
        mpfr_add(lg.get(), lg.get(), lb.get(), MPFR_RNDN);
        out.loglog10 = lg.to_double();
    }
    if (is_integral(dc) && dc < 62 && out.log10 && *out.log10 < kExactDigitLimit) {
        const unsigned long e = 1UL << static_cast<unsigned>(dc);
        mpz_class num, den;
        mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), e);
        mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), e);
        out.exact = rational_string(mpq_class(num, den));
    }
    return out;
}

CalculatorValue ode_zero_bound(int n, const Rational& M, const Rational& rho, int d, int p, double c_p) {
    check_rho(rho);
    if (n < 1 || d < 1 || p < 0) throw Error(ErrorKind::DegenerateInput, "n, d must be positive and p nonnegative");
    if (!(M > 0)) throw Error(ErrorKind::DegenerateInput, "height M must be positive");
    if (!(c_p > 0)) throw Error(ErrorKind::DegenerateInput, "constant c_p must be positive");
    CalculatorValue out;
    out.formula = "n*(M/rho)^(d^(c_p*p^3))";
    const Rational base = M / rho;
    const double e = c_p * p * p * p;
    fill_logs(out, base, d, e, Rational(n));
    const double E = std::pow(static_cast<double>(d), e);
    if (is_integral(E) && E < 4e18 && out.log10 && std::abs(*out.log10) < kExactDigitLimit) {
        const auto ex = static_cast<unsigned long>(E);
        mpz_class num, den;
        mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), ex);
        mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), ex);
        out.exact = rational_string(mpq_class(num * n, den));
    }
    return out;
}

CalculatorReport asymptotic_bound_calculators(int d, const Rational& rho, int n, const Rational& M, int p,
                                              const CalculatorConstants& constants) {
    return {hilbert_bound(d, rho, constants.c), ode_zero_bound(n, M, rho, d, p, constants.c_p)};
}

} // namespace pfzero::zerocount
