#include "pfzero/zerocount/bounds.hpp"

#include "pfzero/algebra/univariate.hpp"
#include "pfzero/errors.hpp"

#include <boost/numeric/interval.hpp>
#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <queue>

namespace pfzero::zerocount {

namespace {

using ProtectedInterval = boost::numeric::interval<double>;
// Arithmetic runs inside a scope holding ProtectedInterval::traits_type::rounding.
using Interval = boost::numeric::interval_lib::unprotect<ProtectedInterval>::type;
constexpr double kPi = std::numbers::pi;

struct CInterval {
    Interval re, im;
};

CInterval operator+(const CInterval& a, const CInterval& b) { return {a.re + b.re, a.im + b.im}; }
CInterval operator*(const CInterval& a, const CInterval& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

Interval modulus(const CInterval& z) { return sqrt(square(z.re) + square(z.im)); }

Interval enclose(const algebra::Rational& q) {
    mpfr_t lo, hi;
    mpfr_init2(lo, 53);
    mpfr_init2(hi, 53);
    mpfr_set_q(lo, q.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(hi, q.get_mpq_t(), MPFR_RNDU);
    const Interval out(mpfr_get_d(lo, MPFR_RNDD), mpfr_get_d(hi, MPFR_RNDU));
    mpfr_clear(lo);
    mpfr_clear(hi);
    return out;
}

// Enclosures of the Taylor coefficients of a polynomial at a point.
class ShiftedPoly {
public:
    explicit ShiftedPoly(const algebra::MultiPoly& p) {
        for (const auto& c : algebra::upoly::from_multi(p, algebra::Var::t)) coeffs_.push_back(enclose(c));
    }
    bool is_zero() const { return coeffs_.empty(); }

    std::vector<CInterval> taylor_at(Complex m) const {
        std::vector<CInterval> a;
        for (const Interval& c : coeffs_) a.push_back({c, Interval(0.0)});
        const CInterval mm{Interval(m.real()), Interval(m.imag())};
        const std::size_t n = a.size();
        for (std::size_t i = 0; i + 1 < n; ++i)
            for (std::size_t j = n - 1; j-- > i;) a[j] = a[j] + mm * a[j + 1];
        return a;
    }

private:
    std::vector<Interval> coeffs_;
};

// Upper bound of |p| on the disc |t - m| <= r from the Taylor coefficients.
double upper_on_disc(const std::vector<CInterval>& tay, const Interval& r) {
    Interval acc(0.0), rk(1.0);
    for (const CInterval& c : tay) {
        acc += modulus(c) * rk;
        rk *= r;
    }
    return acc.upper();
}

double lower_on_disc(const std::vector<CInterval>& tay, const Interval& r) {
    if (tay.empty()) return 0;
    Interval tail(0.0), rk(1.0);
    for (std::size_t k = 1; k < tay.size(); ++k) {
        rk *= r;
        tail += modulus(tay[k]) * rk;
    }
    return (Interval(modulus(tay[0]).lower()) - tail).lower();
}

struct Coefficient {
    ShiftedPoly num, den;
};

struct Piece {
    double s0, s1, upper;
    bool operator<(const Piece& o) const { return upper < o.upper; }
};

} // namespace

double coefficient_sup(const pfsystem::ScalarODE& ode, const Segment& seg, double tol) {
    if (!(tol > 0)) throw Error(ErrorKind::DegenerateInput, "tolerance must be positive");
    std::vector<Coefficient> coeffs;
    for (const auto& c : ode.coeffs)
        if (!c.is_zero()) coeffs.push_back({ShiftedPoly(c.num()), ShiftedPoly(c.den())});
    if (coeffs.empty()) return 0;

    ProtectedInterval::traits_type::rounding directed; // rounding mode for the whole search
    const Complex a = seg.a, dir = seg.b - seg.a;
    double lower = 0; // certified lower bound of the supremum
    // Upper bound on the piece; updates `lower` from the value at its centre.
    auto bound = [&](double s0, double s1) -> double {
        const Complex t0 = a + s0 * dir, t1 = a + s1 * dir, m = (t0 + t1) / 2.0;
        const double slack = 4 * std::numeric_limits<double>::epsilon() * (std::abs(m) + std::abs(a) + std::abs(seg.b));
        const Interval r = Interval(std::abs(t1 - t0)) / 2.0 * (1 + 1e-15) + slack;
        double up = 0;
        for (const Coefficient& c : coeffs) {
            const auto pn = c.num.taylor_at(m), pd = c.den.taylor_at(m);
            const double at_centre_hi = modulus(pd[0]).upper();
            if (at_centre_hi > 0) lower = std::max(lower, (Interval(modulus(pn[0]).lower()) / at_centre_hi).lower());
            const double dlo = lower_on_disc(pd, r);
            if (dlo <= 0) return INFINITY;
            up = std::max(up, (Interval(upper_on_disc(pn, r)) / dlo).upper());
        }
        return up;
    };

    std::priority_queue<Piece> queue;
    queue.push({0.0, 1.0, bound(0.0, 1.0)});
    const double len = std::abs(dir);
    for (long iter = 0; iter < 2'000'000; ++iter) {
        const Piece top = queue.top();
        if (top.upper <= (1 + tol) * lower || top.upper == 0) return top.upper;
        const double piece_len = (top.s1 - top.s0) * len;
        if (piece_len <= 1e-13 * (1 + std::abs(a + top.s0 * dir))) {
            if (!std::isfinite(top.upper)) throw Error(ErrorKind::PoleOnSegment, "segment passes through a pole");
            return top.upper; // cannot tighten further in double precision
        }
        queue.pop();
        const double mid = (top.s0 + top.s1) / 2;
        queue.push({top.s0, mid, bound(top.s0, mid)});
        queue.push({mid, top.s1, bound(mid, top.s1)});
    }
    throw Error(ErrorKind::Inconclusive, "coefficient supremum did not converge");
}

double coefficient_sup(const pfsystem::ScalarODE& ode, const SegmentSet& segs, double tol) {
    double c = 0;
    for (const Segment& s : segs.segments) c = std::max(c, coefficient_sup(ode, s, tol));
    return c;
}

double yakovenko_varbound(int n, double l, double C) {
    return kPi * (n + 1) * (1 + l * std::max(C, 1.0) / std::log(1.5));
}

int winding_count(const std::function<std::vector<Complex>(int)>& sample, const WindingOptions& opt) {
    for (int level = 0; level <= opt.max_level; ++level) {
        const int n = opt.initial_samples << level;
        const auto v = sample(n);
        if (static_cast<int>(v.size()) != n) throw Error(ErrorKind::DegenerateInput, "sampler returned a wrong count");
        double top = 0;
        for (const Complex& z : v) top = std::max(top, std::abs(z));
        for (const Complex& z : v)
            if (!(std::abs(z) > opt.zero_floor * top)) throw Error(ErrorKind::ZeroOnContour, "function vanishes on the contour");
        double total = 0, worst = 0;
        for (int i = 0; i < n; ++i) {
            const double inc = std::arg(v[static_cast<std::size_t>((i + 1) % n)] / v[static_cast<std::size_t>(i)]);
            worst = std::max(worst, std::abs(inc));
            total += inc;
        }
        if (worst >= opt.max_increment) continue;
        const double turns = total / (2 * kPi);
        const double k = std::round(turns);
        if (std::abs(turns - k) >= opt.max_residual) throw Error(ErrorKind::Inconclusive, "winding number is not close to an integer");
        return static_cast<int>(k);
    }
    throw Error(ErrorKind::Inconclusive, "refinement cap reached before the phase was resolved");
}

int winding_count(const std::function<Complex(Complex)>& f, const std::vector<Complex>& vertices, const WindingOptions& opt) {
    if (vertices.size() < 3) throw Error(ErrorKind::DegenerateInput, "contour needs at least three vertices");
    std::vector<double> cum{0.0};
    for (std::size_t i = 0; i < vertices.size(); ++i)
        cum.push_back(cum.back() + std::abs(vertices[(i + 1) % vertices.size()] - vertices[i]));
    return winding_count(
        [&](int n) {
            std::vector<Complex> v;
            std::size_t e = 0;
            for (int k = 0; k < n; ++k) {
                const double s = cum.back() * k / n;
                while (cum[e + 1] < s) ++e;
                const double u = (s - cum[e]) / (cum[e + 1] - cum[e]);
                v.push_back(f(vertices[e] + u * (vertices[(e + 1) % vertices.size()] - vertices[e])));
            }
            return v;
        },
        opt);
}

ZeroBoundReport zero_count_bound(const pfsystem::ScalarODE& ode, const SimpleDomain& dom, const ZeroBoundOptions& opt) {
    if (ode.order < 1) throw Error(ErrorKind::DegenerateInput, "ODE order must be positive");
    for (const auto& s : ode.true_singularities) {
        const bool cut = std::any_of(dom.sigma.begin(), dom.sigma.end(),
                                     [&](Complex p) { return std::abs(p - s.value) <= std::max(1e-8, 10 * s.radius); });
        if (!cut) throw Error(ErrorKind::DegenerateInput, "every true singularity must be a cut point of the domain");
    }
    std::vector<Complex> poles;
    for (const auto& p : ode.pole_set) poles.push_back(p.value);
    for (const Complex& s : dom.sigma)
        if (std::none_of(poles.begin(), poles.end(), [&](Complex p) { return std::abs(p - s) <= 1e-8; })) poles.push_back(s);

    ZeroBoundReport rep;
    rep.decomposition = decompose_simple_domain(dom, poles);
    rep.segments = rep.decomposition.segments;
    double sum = 0;
    for (const Segment& s : rep.segments) {
        const double c = coefficient_sup(ode, s, opt.tol);
        rep.per_segment_sup.push_back(c);
        rep.per_segment_varbound.push_back(yakovenko_varbound(ode.order, s.length(), c));
        sum += rep.per_segment_varbound.back();
    }
    rep.total_bound = static_cast<long long>(std::floor(sum / (2 * kPi)));

    if (opt.solution && region_area(dom.region) > 0) {
        if (const auto* d = std::get_if<Disc>(&dom.region)) {
            rep.numeric_count = winding_count(
                [&](int n) {
                    std::vector<Complex> v;
                    for (int k = 0; k < n; ++k) v.push_back(opt.solution(d->center + std::polar(d->radius, 2 * kPi * k / n)));
                    return v;
                },
                opt.winding);
        } else {
            rep.numeric_count = winding_count(opt.solution, region_boundary(dom.region, 0), opt.winding);
        }
    } else if (opt.solution) {
        rep.numeric_count = 0;
    }
    return rep;
}

} // namespace pfzero::zerocount
