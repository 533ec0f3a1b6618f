// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include "pfzero/algebra/text.hpp"
#include "pfzero/errors.hpp"
#include "pfzero/hamiltonian/hamiltonian.hpp"
#include "pfzero/numerics/continuation.hpp"
#include "pfzero/numerics/residual.hpp"
#include "pfzero/petrov/petrov.hpp"
#include "pfzero/pfsystem/pfsystem.hpp"
#include "pfzero/zerocount/bounds.hpp"
#include "pfzero/zerocount/calculators.hpp"
#include "support/hamiltonians.hpp"
#include "support/rational_cases.hpp"

#include <mpfr.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>

using namespace pfzero;
using algebra::MultiPoly;
using algebra::PolyMatrix;
using algebra::RatFunc;
using algebra::Rational;
using Complex = std::complex<double>;

namespace {

constexpr double kPi = std::numbers::pi;
MultiPoly P(const char* s) { return algebra::parse_polynomial(s); }

struct Outcome {
    bool pass = true;
    std::ostringstream detail;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            detail << "[failed: " << what << "] ";
        }
    }
};

struct Criterion {
    int id;
    const char* name;
    double time_limit; // seconds; 0 for none
    std::function<void(Outcome&)> run;
};

PolyMatrix scalar(const MultiPoly& p) {
    PolyMatrix m(1, 1);
    m(0, 0) = p;
    return m;
}

void c1_quadratic_pipeline(Outcome& o) {
    const auto h = hamiltonian::make_hamiltonian(P("x^2 + y^2"));
    const auto sys = pfsystem::assemble_pf_system(h);
    o.require(sys.dim == 1, "dim 1");
    o.require(sys.K == scalar(P("4*t^2")), "K = [4t^2]");
    o.require(sys.L == scalar(P("12*t")), "L = [12t]");
    o.require(RatFunc(sys.A(0, 0), sys.a) == RatFunc(P("1"), P("t")), "A/a = 1/t");
    const auto ode = pfsystem::derive_scalar_ode(sys, 0);
    o.require(ode.order == 1 && ode.coeffs == std::vector<RatFunc>{RatFunc(P("-1"), P("t"))}, "y' - (1/t) y = 0");
    const auto aug = pfsystem::augment_and_reduce(sys, {MultiPoly(1)});
    o.require(aug.order == 2 && aug.coeffs == std::vector<RatFunc>{RatFunc(0), RatFunc(0)}, "augmented y'' = 0");
    o.detail << "K=[" << sys.K(0, 0).to_string() << "] L=[" << sys.L(0, 0).to_string() << "] A/a=" << sys.A(0, 0).to_string()
             << "/" << sys.a.to_string() << "; scalar order " << ode.order << ", augmented order " << aug.order;
}

void c2_petrov(Outcome& o) {
    std::mt19937_64 rng(2002);
    int successes = 0, failures = 0, exact = 0, bound_ok = 0;
    for (int i = 0; i < 200; ++i) {
        const int d = 2 + i % 3;
        const auto h = hamiltonian::make_hamiltonian(testing::random_regular_hamiltonian(rng, d));
        const auto basis = pfsystem::make_basis_forms(hamiltonian::monomial_basis(h));
        std::uniform_int_distribution<int> deg(1, 2 * d);
        const int dw = deg(rng);
        const petrov::OneForm w{testing::random_poly(rng, {algebra::Var::x, algebra::Var::y}, dw, 5, 0.4),
                                testing::random_poly(rng, {algebra::Var::x, algebra::Var::y}, dw, 5, 0.4)};
        try {
            const auto dec = petrov::petrov_decompose(w, h, basis);
            ++successes;
            if (petrov::reconstruct(dec, h, basis) == w) ++exact;
            bool ok = true;
            for (std::size_t k = 0; k < basis.size(); ++k)
                if (!dec.coeffs[k].is_zero() && dec.coeffs[k].degree() * d > w.degree() - basis[k].degree()) ok = false;
            bound_ok += ok;
        } catch (const Error& e) {
            ++failures;
            o.detail << "(decomposition failed: " << e.what() << ") ";
        }
    }
    o.require(exact == successes, "exact reconstruction");
    o.require(bound_ok == successes, "coefficient degree bound");
    o.detail << successes << "/200 decomposed, " << exact << " exact, " << bound_ok << " within the degree bound";
}

void c3_residual(Outcome& o) {
    const auto h = hamiltonian::make_hamiltonian(P("x^3 - x*y^2 + y"));
    const auto sys = pfsystem::assemble_pf_system(h);
    std::vector<double> ts;
    for (int k = 0; k < 40 && ts.size() < 24; ++k) {
        const double t = -1.0 + (k + 0.5) / 20.0;
        bool regular = true;
        for (const auto& c : sys.sigma.critical_values) regular = regular && std::abs(Complex(t) - c.value) > 0.05;
        if (regular) ts.push_back(t);
    }
    const auto rep = numerics::residual_check(sys, h, ts);
    int cycles = 1 << 30;
    for (const auto& s : rep.samples) cycles = std::min(cycles, s.cycles);
    o.require(rep.samples.size() >= 20, ">= 20 samples");
    o.require(rep.max_relative < 1e-6, "relative residual < 1e-6");
    o.detail << rep.samples.size() << " levels in [-1, 1], >= " << cycles << " cycles each, max relative residual "
             << rep.max_relative;
}

void c4_basis(Outcome& o) {
    const auto h = hamiltonian::make_hamiltonian(P("x^3 - x*y^2"));
    const auto b = hamiltonian::monomial_basis(h);
    using algebra::Monomial;
    o.require(b.monomials == std::vector<Monomial>{{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 2, 0}}, "{1, x, y, y^2}");
    std::mt19937_64 rng(404);
    int good = 0;
    for (int i = 0; i < 50; ++i) {
        const int d = 2 + i % 3;
        const auto hr = hamiltonian::make_hamiltonian(testing::random_regular_hamiltonian(rng, d));
        if (hamiltonian::is_regular_at_infinity(hr) &&
            static_cast<int>(hamiltonian::monomial_basis(hr).size()) == (d - 1) * (d - 1))
            ++good;
    }
    o.require(good == 50, "(d-1)^2 on all random instances");
    o.detail << "x^3 - x*y^2 -> {1, x, y, y^2}; " << good << "/50 random H with |basis| = (d-1)^2";
}

void c5_zero_counting(Outcome& o) {
    const auto h = hamiltonian::make_hamiltonian(P("x^2 + y^2"));
    const auto ode = pfsystem::derive_scalar_ode(pfsystem::assemble_pf_system(h), 0);
    zerocount::SimpleDomain dom;
    dom.region = zerocount::Disc{1.0, 0.4};
    dom.rho = 0.1;
    dom.relaxed_bounds = true; // the disc reaches Re t = 1.4
    for (const auto& s : ode.true_singularities) dom.sigma.push_back(s.value);
    dom.ray_directions = zerocount::auto_rays(dom.sigma, dom.region);
    auto circle_integral = [](Complex t) { return kPi * t; };
    const int w = zerocount::winding_count(circle_integral, zerocount::region_boundary(dom.region, 256));
    zerocount::ZeroBoundOptions opt;
    opt.solution = circle_integral;
    const auto rep = zerocount::zero_count_bound(ode, dom, opt);
    o.require(w == 0, "winding 0 on disc(1, 0.4)");
    o.require(rep.total_bound >= 0 && std::isfinite(static_cast<double>(rep.total_bound)), "finite bound");

    std::mt19937_64 rng(5005);
    int exact = 0, bounded = 0;
    long long worst_slack = -1;
    for (int k = 0; k < 50; ++k) {
        const auto c = testing::random_rational_case(rng);
        zerocount::ZeroBoundOptions ropt;
        ropt.solution = [&](Complex t) { return c(t); };
        const auto r = zerocount::zero_count_bound(c.ode, c.dom, ropt);
        exact += r.numeric_count && *r.numeric_count == c.zeros_inside;
        bounded += r.numeric_count && *r.numeric_count <= r.total_bound;
        if (r.numeric_count) worst_slack = worst_slack < 0 ? r.total_bound - *r.numeric_count
                                                           : std::min(worst_slack, r.total_bound - *r.numeric_count);
    }
    o.require(exact == 50, "numeric count equals ground truth");
    o.require(bounded == 50, "numeric count <= total bound");
    o.detail << "pi*t on disc(1, 0.4): winding " << w << ", bound " << rep.total_bound << " (" << rep.segments.size()
             << " segments); rational cases: " << exact << "/50 exact, " << bounded << "/50 within bound (min slack "
             << worst_slack << ")";
}

void c6_varbound(Outcome& o) {
    const double a = zerocount::yakovenko_varbound(1, 1, 1), b = zerocount::yakovenko_varbound(1, 0, 1);
    o.require(std::abs(a - 21.7792) < 1e-3, "(1,1,1) = 21.7792");
    o.require(std::abs(b - 2 * kPi) <= 4 * std::numeric_limits<double>::epsilon() * 2 * kPi, "(1,0,1) = 2 pi");
    char buf[128];
    std::snprintf(buf, sizeof buf, "(1,1,1) = %.6f, (1,0,1) - 2pi = %.3g", a, b - 2 * kPi);
    o.detail << buf;
}

void c7_calculators(Outcome& o) {
    const auto exact = zerocount::hilbert_bound(2, Rational(1, 2), 1);
    o.require(exact.exact && *exact.exact == "256", "(2, 1/2, 1) = 256");
    const auto big = zerocount::hilbert_bound(3, Rational(1, 10), 2);
    // log10 of 20^(2^9) = 512 log10 20 at 200 bits.
    mpfr_t ref;
    mpfr_init2(ref, 200);
    mpfr_set_ui(ref, 20, MPFR_RNDN);
    mpfr_log10(ref, ref, MPFR_RNDN);
    mpfr_mul_ui(ref, ref, 512, MPFR_RNDN);
    const double r = mpfr_get_d(ref, MPFR_RNDN);
    mpfr_clear(ref);
    const double rel = big.log10 ? std::abs(*big.log10 - r) / r : INFINITY;
    o.require(rel < 1e-9, "log10 within 1e-9 of the 200-bit reference");
    char buf[160];
    std::snprintf(buf, sizeof buf, "exact %s; (3, 0.1, 2): log10 = %.12f, reference %.12f, rel err %.2g",
                  exact.exact.value_or("-").c_str(), big.log10.value_or(NAN), r, rel);
    o.detail << buf;
}

void c8_continuation(Outcome& o) {
    const auto sys = pfsystem::assemble_pf_system(hamiltonian::make_hamiltonian(P("x^2 + y^2")));
    const numerics::PeriodSample start{1.0, {kPi}, 0.0};
    const double e1 = std::abs(numerics::integrate_pf_numeric(sys, {1.0, 4.0}, start).back().periods[0] - 4 * kPi);
    std::vector<Complex> loop;
    for (int k = 0; k <= 64; ++k) loop.push_back(std::polar(1.0, 2 * kPi * k / 64));
    const double e2 = std::abs(numerics::integrate_pf_numeric(sys, loop, start).back().periods[0] - kPi);
    o.require(e1 < 1e-8, "t = 1 -> 4 gives 4 pi");
    o.require(e2 < 1e-8, "loop around t = 0 returns pi");
    o.detail << "|I(4) - 4pi| = " << e1 << ", loop error " << e2;
}

void c9_generic_order(Outcome& o) {
    std::mt19937_64 rng(9009);
    int full = 0;
    for (int i = 0; i < 10; ++i) {
        const auto h = hamiltonian::make_hamiltonian(testing::random_generic_hamiltonian(rng, 3));
        const auto sys = pfsystem::assemble_pf_system(h);
        std::vector<int> orders;
        for (int m = 0; m < sys.dim; ++m) orders.push_back(pfsystem::derive_scalar_ode(sys, m).order);
        const int k = orders.back();
        full += k == 4;
        if (k != 4) o.detail << "(drop: " << h.poly.to_string() << " has k = " << k << ") ";
        if (i == 0) {
            o.detail << "component orders of the first instance:";
            for (int v : orders) o.detail << " " << v;
            o.detail << "; ";
        }
    }
    o.require(full > 8, "> 8/10 reach k = 4");
    o.detail << full << "/10 reach k = 4 on the last component (nonzero lower-order coefficients)";
}

} // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "d=2 exact pipeline", 1, c1_quadratic_pipeline},
        {2, "Petrov reconstruction on 200 random forms", 120, c2_petrov},
        {3, "system residual on the cubic", 60, c3_residual},
        {4, "monomial basis", 0, c4_basis},
        {5, "zero counting soundness", 0, c5_zero_counting},
        {6, "variation-of-argument formula", 0, c6_varbound},
        {7, "bound calculators", 0, c7_calculators},
        {8, "continuation consistency", 0, c8_continuation},
        {9, "generic scalar ODE order", 0, c9_generic_order},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        Outcome o;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            c.run(o);
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail << "[exception: " << e.what() << "]";
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (c.time_limit > 0 && secs >= c.time_limit) {
            o.pass = false;
            o.detail << " [over the " << c.time_limit << " s limit]";
        }
        failed += !o.pass;
        std::printf("%s [%d] %s (%.2f s): %s\n", o.pass ? "PASS" : "FAIL", c.id, c.name, secs, o.detail.str().c_str());
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
