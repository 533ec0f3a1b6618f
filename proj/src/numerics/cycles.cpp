#include "pfzero/numerics/cycles.hpp"

#include "pfzero/algebra/eval.hpp"
#include "pfzero/algebra/polyops.hpp"
#include "pfzero/algebra/roots.hpp"
#include "pfzero/errors.hpp"
#include "plane_poly.hpp"

#include <boost/math/quadrature/gauss.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>

namespace pfzero::numerics {

using algebra::MultiPoly;
using algebra::Var;
using detail::PlanePoly;
using Point = std::array<double, 2>;

namespace {

constexpr double kPi = std::numbers::pi;

double norm2(double a, double b) { return std::hypot(a, b); }

struct RealCurve {
    PlanePoly h, hx, hy;
    double t;

    explicit RealCurve(const MultiPoly& H, double level)
        : h(H), hx(H.derive(Var::x)), hy(H.derive(Var::y)), t(level) {}

    double value(const Point& p) const { return h(p[0], p[1]) - t; }
    Point grad(const Point& p) const { return {hx(p[0], p[1]), hy(p[0], p[1])}; }
    double tol() const { return 1e-13 * std::max(1.0, std::abs(t)); }

    // Newton along the gradient; nullopt-like failure reported via bool.
    bool project(Point& p, int* iterations = nullptr) const {
        for (int it = 0; it < 50; ++it) {
            const double f = value(p);
            if (std::abs(f) <= tol()) {
                if (iterations) *iterations = it;
                return true;
            }
            const Point g = grad(p);
            const double g2 = g[0] * g[0] + g[1] * g[1];
            if (g2 == 0) return false;
            p[0] -= f * g[0] / g2;
            p[1] -= f * g[1] / g2;
        }
        return std::abs(value(p)) <= 1e3 * tol();
    }

    Point tangent(const Point& p) const {
        const Point g = grad(p);
        const double n = norm2(g[0], g[1]);
        return {-g[1] / n, g[0] / n};
    }
};

// Signed area via the shoelace formula.
double signed_area(const std::vector<Point>& pts) {
    double s = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const Point& a = pts[i];
        const Point& b = pts[(i + 1) % pts.size()];
        s += a[0] * b[1] - a[1] * b[0];
    }
    return s / 2;
}

// Integral of omega over the curve arc whose chord is a -> b, with the
// n-point Gauss rule on [s0, s1] of the chord parameter.
Complex arc_integral(const RealCurve& curve, const PlanePoly& P, const PlanePoly& Q, const Point& a, const Point& b,
                     double s0, double s1) {
    using Rule = boost::math::quadrature::gauss<double, 10>;
    const double dx = b[0] - a[0], dy = b[1] - a[1];
    const double len = norm2(dx, dy);
    const Point n{-dy / len, dx / len};
    auto integrand = [&](double s) {
        Point q{a[0] + s * dx, a[1] + s * dy};
        // Move along the chord normal onto the curve.
        double u = 0;
        for (int it = 0; it < 30; ++it) {
            const double f = curve.value(q);
            const Point g = curve.grad(q);
            const double dn = g[0] * n[0] + g[1] * n[1];
            if (dn == 0) break;
            const double du = -f / dn;
            u += du;
            q[0] += du * n[0];
            q[1] += du * n[1];
            if (std::abs(du) <= 1e-16 * (1 + len) && std::abs(f) <= curve.tol()) break;
        }
        const Point g = curve.grad(q);
        const double du_ds = -(g[0] * dx + g[1] * dy) / (g[0] * n[0] + g[1] * n[1]);
        const double qx = dx + du_ds * n[0], qy = dy + du_ds * n[1];
        return P(q[0], q[1]) * qx + Q(q[0], q[1]) * qy;
    };
    const double mid = (s0 + s1) / 2, half = (s1 - s0) / 2;
    double acc = 0;
    const auto& x = Rule::abscissa();
    const auto& w = Rule::weights();
    for (std::size_t i = 0; i < x.size(); ++i) {
        acc += w[i] * integrand(mid + half * x[i]);
        if (x[i] != 0) acc += w[i] * integrand(mid - half * x[i]);
    }
    return acc * half;
}

} // namespace

CyclePolyline trace_cycle(const Hamiltonian& H, double t, Point seed, const TraceOptions& opt) {
    for (const auto& cv : hamiltonian::critical_values(H).critical_values)
        if (std::abs(cv.value - Complex(t)) <= std::max(cv.radius, opt.critical_margin * std::max(1.0, std::abs(t))))
            throw Error(ErrorKind::NearCritical, "level " + std::to_string(t) + " is a critical value");
    const double box = opt.box > 0 ? opt.box : std::max(10.0, 4 * std::pow(1 + std::abs(t), 1.0 / H.degree));

    const RealCurve curve(H.poly, t);
    Point start = seed;
    if (!curve.project(start)) throw Error(ErrorKind::NotCompactComponent, "seed does not project onto the level curve");

    const double h_max = box / 20;
    double h = std::min(h_max, 0.01 * std::max(1.0, norm2(start[0], start[1])));
    std::vector<Point> pts{start};
    Point p = start;
    double traveled = 0;
    bool closed = false;
    for (long step = 0; step < 2'000'000; ++step) {
        const Point tau = curve.tangent(p);
        const double to_start = norm2(start[0] - p[0], start[1] - p[1]);
        if (traveled > 4 * h && to_start < 1.5 * h && tau[0] * (start[0] - p[0]) + tau[1] * (start[1] - p[1]) > 0) {
            closed = true;
            break;
        }
        Point q{p[0] + h * tau[0], p[1] + h * tau[1]};
        int iters = 0;
        const bool ok = curve.project(q, &iters);
        const double drift = ok ? norm2(q[0] - p[0] - h * tau[0], q[1] - p[1] - h * tau[1]) : 0;
        double turn = 0;
        if (ok) {
            const Point tq = curve.tangent(q);
            turn = std::acos(std::clamp(tau[0] * tq[0] + tau[1] * tq[1], -1.0, 1.0));
        }
        if (!ok || drift > 0.2 * h || turn > 0.15) {
            h /= 2;
            if (h < 1e-12) throw Error(ErrorKind::NearCritical, "level curve is too close to singular");
            continue;
        }
        traveled += norm2(q[0] - p[0], q[1] - p[1]);
        p = q;
        pts.push_back(p);
        if (std::abs(p[0]) > box || std::abs(p[1]) > box)
            throw Error(ErrorKind::NotCompactComponent, "level curve leaves the tracing box");
        if (turn < 0.05) h = std::min(1.5 * h, h_max);
    }
    if (!closed) throw Error(ErrorKind::NotCompactComponent, "level curve did not close");

    CyclePolyline out;
    out.level = t;
    out.curve = H.poly;
    out.closure_gap = std::abs(curve.value(start));
    out.points = std::move(pts);
    if (signed_area(out.points) < 0) std::reverse(out.points.begin() + 1, out.points.end());
    return out;
}

CyclePolyline reversed(const CyclePolyline& cycle) {
    CyclePolyline r = cycle;
    std::reverse(r.points.begin() + 1, r.points.end());
    return r;
}

Period period_quadrature(const CyclePolyline& cycle, const OneForm& omega) {
    const RealCurve curve(cycle.curve, cycle.level);
    const PlanePoly P(omega.P), Q(omega.Q);
    std::vector<Point> pts = cycle.points;
    Period best;
    for (int round = 0; round < 8; ++round) {
        Complex coarse = 0, fine = 0;
        double scale = 0;
        for (std::size_t i = 0; i < pts.size(); ++i) {
            const Point& a = pts[i];
            const Point& b = pts[(i + 1) % pts.size()];
            const Complex whole = arc_integral(curve, P, Q, a, b, 0, 1);
            const Complex halves = arc_integral(curve, P, Q, a, b, 0, 0.5) + arc_integral(curve, P, Q, a, b, 0.5, 1);
            coarse += whole;
            fine += halves;
            scale += std::abs(halves);
        }
        best = {fine, std::abs(fine - coarse)};
        if (best.error_estimate <= 1e-12 * std::max(scale, 1e-300)) break;
        // Refine: insert projected chord midpoints.
        std::vector<Point> refined;
        for (std::size_t i = 0; i < pts.size(); ++i) {
            const Point& a = pts[i];
            const Point& b = pts[(i + 1) % pts.size()];
            Point m{(a[0] + b[0]) / 2, (a[1] + b[1]) / 2};
            curve.project(m);
            refined.push_back(a);
            refined.push_back(m);
        }
        pts = std::move(refined);
    }
    return best;
}

// ---------------------------------------------------------------------------
// Lifted complex cycles.

namespace {

struct ComplexFibre {
    std::vector<PlanePoly> coeffs; // coefficients of H - t in y, as polys in (x, t) with t stored as y
    PlanePoly hx, hy;

    explicit ComplexFibre(const Hamiltonian& H) : hx(H.dx()), hy(H.dy()) {
        const MultiPoly F = H.poly - MultiPoly::variable(Var::t);
        for (const auto& c : F.coefficients_in(Var::y))
            coeffs.emplace_back(c.substitute(Var::t, MultiPoly::variable(Var::y)));
    }

    std::vector<Complex> roots(Complex x, Complex t) const {
        std::vector<std::complex<long double>> c;
        for (const auto& p : coeffs) c.emplace_back(p(x, t));
        std::vector<Complex> out;
        for (const auto& r : algebra::aberth_roots(c)) out.emplace_back(static_cast<double>(r.real()), static_cast<double>(r.imag()));
        return out;
    }

    Complex polish(Complex x, Complex y, Complex t) const {
        for (int it = 0; it < 8; ++it) {
            Complex f = 0, df = 0, yk = 1;
            for (std::size_t k = 0; k < coeffs.size(); ++k) {
                const Complex c = coeffs[k](x, t);
                f += c * yk;
                if (k + 1 < coeffs.size()) df += static_cast<double>(k + 1) * coeffs[k + 1](x, t) * yk;
                yk *= y;
            }
            if (df == Complex(0)) break;
            const Complex dy = f / df;
            y -= dy;
            if (std::abs(dy) <= 1e-15 * (1 + std::abs(y))) break;
        }
        return y;
    }

    Complex slope(Complex x, Complex y) const { return -hx(x, y) / hy(x, y); }
};

Complex contour_x(const LiftedCycle& c, double theta) {
    return c.center + c.half_axis * std::cosh(Complex(c.xi, theta + kPi / 2));
}
Complex contour_dx(const LiftedCycle& c, double theta) {
    return c.half_axis * std::sinh(Complex(c.xi, theta + kPi / 2)) * Complex(0, 1);
}

// Pick the root nearest to pred if it is unambiguous.
std::optional<Complex> nearest_root(const std::vector<Complex>& rts, Complex pred) {
    if (rts.size() == 1) return rts[0];
    double d1 = INFINITY, d2 = INFINITY;
    Complex best = pred;
    for (const Complex& r : rts) {
        const double d = std::abs(r - pred);
        if (d < d1) {
            d2 = d1;
            d1 = d;
            best = r;
        } else if (d < d2) {
            d2 = d;
        }
    }
    if (d1 < 0.25 * d2) return best;
    return std::nullopt;
}

// Continue y from (theta_a, ya) to theta_b, subdividing until the predicted
// value picks out one root unambiguously.
Complex continue_root(const ComplexFibre& fib, const LiftedCycle& c, Complex t, double ta, double tb, Complex ya, int depth = 0) {
    const Complex xa = contour_x(c, ta), xb = contour_x(c, tb);
    const Complex pred = ya + fib.slope(xa, ya) * (xb - xa);
    if (const auto r = nearest_root(fib.roots(xb, t), pred)) return fib.polish(xb, *r, t);
    if (depth > 40) throw Error(ErrorKind::NearCritical, "cannot separate sheets along the contour");
    const double tm = (ta + tb) / 2;
    const Complex ym = continue_root(fib, c, t, ta, tm, ya, depth + 1);
    return continue_root(fib, c, t, tm, tb, ym, depth + 1);
}

// Follow the sheet at fixed x from level ta to tb (dy/dt = 1/H_y).
Complex continue_in_level(const ComplexFibre& fib, Complex x, Complex ta, Complex tb, Complex ya, int depth = 0) {
    if (ta == tb) return ya;
    const Complex pred = ya + (tb - ta) / fib.hy(x, ya);
    if (const auto r = nearest_root(fib.roots(x, tb), pred)) return fib.polish(x, *r, tb);
    if (depth > 40) throw Error(ErrorKind::NearCritical, "cannot follow the sheet between levels");
    const Complex tm = (ta + tb) / 2.0;
    return continue_in_level(fib, x, tm, tb, continue_in_level(fib, x, ta, tm, ya, depth + 1), depth + 1);
}

struct Lift {
    std::vector<Complex> x, dx, y;
    bool closed = false;
};

Lift lift(const ComplexFibre& fib, const LiftedCycle& c, Complex t, int n) {
    Lift out;
    Complex y = continue_in_level(fib, contour_x(c, 0), c.level, t, fib.polish(contour_x(c, 0), c.y_start, c.level));
    const Complex y0 = y;
    for (int k = 0; k < n; ++k) {
        const double th = 2 * kPi * k / n;
        out.x.push_back(contour_x(c, th));
        out.dx.push_back(contour_dx(c, th));
        out.y.push_back(y);
        y = continue_root(fib, c, t, th, 2 * kPi * (k + 1) / n, y);
    }
    out.closed = std::abs(y - y0) <= 1e-8 * (1 + std::abs(y0));
    return out;
}

} // namespace

std::vector<Period> lifted_periods(const Hamiltonian& H, Complex t, const LiftedCycle& cycle, const std::vector<OneForm>& forms) {
    const ComplexFibre fib(H);
    std::vector<PlanePoly> P, Q;
    for (const auto& w : forms) {
        P.emplace_back(w.P);
        Q.emplace_back(w.Q);
    }
    std::vector<Complex> prev;
    for (int n = 32; n <= (1 << 17); n *= 2) {
        const Lift l = lift(fib, cycle, t, n);
        if (!l.closed) throw Error(ErrorKind::NotCompactComponent, "lifted contour does not close on the curve");
        std::vector<Complex> sums(forms.size());
        std::vector<double> mass(forms.size());
        for (int k = 0; k < n; ++k) {
            const Complex x = l.x[static_cast<std::size_t>(k)], y = l.y[static_cast<std::size_t>(k)];
            const Complex dydx = fib.slope(x, y);
            for (std::size_t f = 0; f < forms.size(); ++f) {
                const Complex v = (P[f](x, y) + Q[f](x, y) * dydx) * l.dx[static_cast<std::size_t>(k)];
                sums[f] += v;
                mass[f] += std::abs(v);
            }
        }
        for (auto& s : sums) s *= 2 * kPi / n;
        if (!prev.empty()) {
            bool converged = true;
            std::vector<Period> out;
            for (std::size_t f = 0; f < forms.size(); ++f) {
                const double err = std::abs(sums[f] - prev[f]);
                converged = converged && err <= 1e-13 * std::max(std::abs(sums[f]), mass[f] * 2 * kPi / n);
                out.push_back({sums[f], err});
            }
            if (converged) return out;
            if (n == (1 << 17)) return out;
        }
        prev = std::move(sums);
    }
    return {};
}

std::vector<LiftedCycle> lifted_cycles(const Hamiltonian& H, Complex t) {
    if (H.poly.degree_in(Var::y) < 1) throw Error(ErrorKind::DegenerateInput, "H must depend on y");
    const MultiPoly F = H.poly - MultiPoly::variable(Var::t);
    // Branch points: roots in x of the discriminant, which contains the
    // leading coefficient (poles of y) as a factor.
    const MultiPoly disc = algebra::resultant(F, H.dy(), Var::y);
    std::vector<std::complex<long double>> dc;
    for (const auto& c : disc.coefficients_in(Var::x))
        dc.emplace_back(algebra::eval_complex(c, {0.0, 0.0, t}));
    std::vector<Complex> obstacles;
    for (const auto& r : algebra::aberth_roots(dc)) obstacles.emplace_back(static_cast<double>(r.real()), static_cast<double>(r.imag()));
    const auto lead = F.coefficients_in(Var::y).back();
    std::vector<Complex> poles;
    if (lead.degree() > 0)
        for (const auto& r : algebra::isolate_roots(lead, Var::x)) poles.push_back(r.value);
    std::vector<Complex> branch;
    for (const Complex& o : obstacles) {
        const bool is_pole = std::any_of(poles.begin(), poles.end(), [&](Complex p) { return std::abs(p - o) < 1e-6 * (1 + std::abs(p)); });
        if (!is_pole) branch.push_back(o);
    }
    for (const Complex& p : poles) obstacles.push_back(p);

    const ComplexFibre fib(H);
    std::vector<LiftedCycle> out;
    for (std::size_t i = 0; i < branch.size(); ++i)
        for (std::size_t j = i + 1; j < branch.size(); ++j) {
            LiftedCycle c;
            c.center = (branch[i] + branch[j]) / 2.0;
            c.half_axis = (branch[j] - branch[i]) / 2.0;
            if (std::abs(c.half_axis) < 1e-9) continue;
            double xi_min = INFINITY;
            for (const Complex& o : obstacles) {
                if (std::abs(o - branch[i]) < 1e-9 || std::abs(o - branch[j]) < 1e-9) continue;
                xi_min = std::min(xi_min, std::acosh((o - c.center) / c.half_axis).real());
            }
            // Thin ellipses change class under small level shifts.
            if (xi_min < 0.2) continue;
            c.xi = std::isinf(xi_min) ? 1.0 : xi_min / 2;
            c.level = t;
            // Only sheets meeting at the two branch points give a nontrivial
            // cycle; the others lift to loops bounding a disc.
            for (const Complex& y0 : fib.roots(contour_x(c, 0), t)) {
                c.y_start = y0;
                try {
                    const MultiPoly x = MultiPoly::variable(Var::x), y = MultiPoly::variable(Var::y);
                    const auto probe = lifted_periods(H, t, c, {OneForm{MultiPoly(), x}, OneForm{MultiPoly(), x * x},
                                                               OneForm{MultiPoly(), x * y}, OneForm{MultiPoly(), x * y * y}});
                    double mass = 0;
                    for (const auto& p : probe) mass += std::abs(p.value);
                    if (mass > 1e-8 * std::abs(c.half_axis) * (1 + std::abs(y0))) {
                        out.push_back(c);
                        break;
                    }
                } catch (const Error&) {
                }
            }
        }
    return out;
}

} // namespace pfzero::numerics
