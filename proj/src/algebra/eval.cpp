#include "pfzero/algebra/eval.hpp"

#include "pfzero/algebra/univariate.hpp"

#include <mpfr.h>

#include <algorithm>
#include <atomic>

namespace pfzero::algebra {

namespace {

std::atomic<int> g_precision_bits{53};

// Minimal RAII complex number over MPFR.
class MpComplex {
public:
    explicit MpComplex(mpfr_prec_t prec) {
        mpfr_init2(re_, prec);
        mpfr_init2(im_, prec);
        mpfr_set_zero(re_, 1);
        mpfr_set_zero(im_, 1);
    }
    MpComplex(const MpComplex& o) {
        mpfr_init2(re_, mpfr_get_prec(o.re_));
        mpfr_init2(im_, mpfr_get_prec(o.im_));
        mpfr_set(re_, o.re_, MPFR_RNDN);
        mpfr_set(im_, o.im_, MPFR_RNDN);
    }
    MpComplex& operator=(const MpComplex& o) {
        mpfr_set(re_, o.re_, MPFR_RNDN);
        mpfr_set(im_, o.im_, MPFR_RNDN);
        return *this;
    }
    ~MpComplex() {
        mpfr_clear(re_);
        mpfr_clear(im_);
    }

    void set(std::complex<double> z) {
        mpfr_set_d(re_, z.real(), MPFR_RNDN);
        mpfr_set_d(im_, z.imag(), MPFR_RNDN);
    }
    void set(const Rational& q) {
        mpfr_set_q(re_, q.get_mpq_t(), MPFR_RNDN);
        mpfr_set_zero(im_, 1);
    }
    void add(const MpComplex& o) {
        mpfr_add(re_, re_, o.re_, MPFR_RNDN);
        mpfr_add(im_, im_, o.im_, MPFR_RNDN);
    }
    void mul(const MpComplex& o) {
        const mpfr_prec_t prec = mpfr_get_prec(re_);
        mpfr_t a, b;
        mpfr_init2(a, prec);
        mpfr_init2(b, prec);
        mpfr_mul(a, re_, o.re_, MPFR_RNDN);
        mpfr_mul(b, im_, o.im_, MPFR_RNDN);
        mpfr_sub(a, a, b, MPFR_RNDN);
        mpfr_mul(b, re_, o.im_, MPFR_RNDN);
        mpfr_fma(im_, im_, o.re_, b, MPFR_RNDN);
        mpfr_set(re_, a, MPFR_RNDN);
        mpfr_clear(a);
        mpfr_clear(b);
    }
    std::complex<double> get() const { return {mpfr_get_d(re_, MPFR_RNDN), mpfr_get_d(im_, MPFR_RNDN)}; }

private:
    mpfr_t re_, im_;
};

struct TermRef {
    Monomial m;
    const Rational* c;
};

template <class C, class Ops>
C horner(std::vector<TermRef>::iterator first, std::vector<TermRef>::iterator last, int level,
         const std::array<C, kNumVars>& point, const Ops& ops) {
    if (level == kNumVars) {
        C acc = ops.zero();
        for (auto it = first; it != last; ++it) ops.add(acc, ops.coef(*it->c));
        return acc;
    }
    std::sort(first, last, [level](const TermRef& a, const TermRef& b) { return a.m.exp[level] > b.m.exp[level]; });
    C result = ops.zero();
    int prev = first->m.exp[level];
    for (auto it = first; it != last;) {
        const int e = it->m.exp[level];
        auto group_end = std::find_if(it, last, [&](const TermRef& r) { return r.m.exp[level] != e; });
        for (int k = e; k < prev; ++k) ops.mul(result, point[level]);
        ops.add(result, horner<C>(it, group_end, level + 1, point, ops));
        prev = e;
        it = group_end;
    }
    for (int k = 0; k < prev; ++k) ops.mul(result, point[level]);
    return result;
}

struct DoubleOps {
    using C = std::complex<double>;
    C zero() const { return {}; }
    C coef(const Rational& q) const { return {q.get_d(), 0.0}; }
    void add(C& a, const C& b) const { a += b; }
    void mul(C& a, const C& b) const { a *= b; }
};

struct MpOps {
    mpfr_prec_t prec;
    MpComplex zero() const { return MpComplex(prec); }
    MpComplex coef(const Rational& q) const {
        MpComplex z(prec);
        z.set(q);
        return z;
    }
    void add(MpComplex& a, const MpComplex& b) const { a.add(b); }
    void mul(MpComplex& a, const MpComplex& b) const { a.mul(b); }
};

} // namespace

int default_precision_bits() noexcept { return g_precision_bits.load(); }
void set_default_precision_bits(int bits) { g_precision_bits.store(std::max(2, bits)); }

std::complex<double> eval_complex(const MultiPoly& p, const ComplexPoint& point, int precision_bits) {
    if (p.is_zero()) return {};
    if (precision_bits < 0) precision_bits = default_precision_bits();
    std::vector<TermRef> terms;
    terms.reserve(p.size());
    for (const auto& [m, c] : p.terms()) terms.push_back({m, &c});
    if (precision_bits <= 53) return horner<std::complex<double>>(terms.begin(), terms.end(), 0, point, DoubleOps{});
    const MpOps ops{static_cast<mpfr_prec_t>(precision_bits)};
    std::array<MpComplex, kNumVars> mp{MpComplex(ops.prec), MpComplex(ops.prec), MpComplex(ops.prec)};
    for (int i = 0; i < kNumVars; ++i) mp[static_cast<std::size_t>(i)].set(point[static_cast<std::size_t>(i)]);
    return horner<MpComplex>(terms.begin(), terms.end(), 0, mp, ops).get();
}

TPolyEvaluator::TPolyEvaluator(const MultiPoly& p, int precision_bits)
    : exact_(p), precision_bits_(precision_bits < 0 ? default_precision_bits() : precision_bits) {
    for (const auto& c : upoly::from_multi(p, Var::t)) coeffs_.push_back(c.get_d());
}

std::complex<double> TPolyEvaluator::operator()(std::complex<double> t) const {
    if (precision_bits_ > 53) return eval_complex(exact_, {0.0, 0.0, t}, precision_bits_);
    std::complex<double> acc{};
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
    return acc;
}

std::pair<std::complex<double>, std::complex<double>> TPolyEvaluator::with_derivative(std::complex<double> t) const {
    std::complex<double> v{}, d{};
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        d = d * t + v;
        v = v * t + *it;
    }
    if (precision_bits_ > 53) v = eval_complex(exact_, {0.0, 0.0, t}, precision_bits_);
    return {v, d};
}

} // namespace pfzero::algebra
