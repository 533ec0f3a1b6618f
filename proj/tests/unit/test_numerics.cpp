#include <doctest.h>

#include "pfzero/algebra/text.hpp"
#include "pfzero/errors.hpp"
#include "pfzero/numerics/continuation.hpp"
#include "pfzero/numerics/residual.hpp"
#include "pfzero/petrov/petrov.hpp"
#include "support/generators.hpp"

#include <boost/math/quadrature/tanh_sinh.hpp>

#include <numbers>

using namespace pfzero;
using namespace pfzero::algebra;
using namespace pfzero::numerics;
using hamiltonian::make_hamiltonian;

namespace {

constexpr double kPi = std::numbers::pi;
MultiPoly P(const char* s) { return parse_polynomial(s); }
const auto circle = make_hamiltonian(P("x^2 + y^2"));
const OneForm x_dy{MultiPoly(), P("x")};

ErrorKind kind_of(auto&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    return ErrorKind::Usage; // sentinel: nothing thrown
}

} // namespace

TEST_CASE("trace_cycle on the unit circle") {
    const auto c = trace_cycle(circle, 1.0, {1.1, 0.05});
    CHECK(c.closure_gap < 1e-9);
    for (const auto& p : c.points) CHECK(std::abs(p[0] * p[0] + p[1] * p[1] - 1) <= 1e-9);
    CHECK(kind_of([] { (void)trace_cycle(circle, 0.0, {0.1, 0.0}); }) == ErrorKind::NearCritical);
}

TEST_CASE("period_quadrature examples on the unit circle") {
    const auto c = trace_cycle(circle, 1.0, {1.0, 0.0});
    CHECK(std::abs(period_quadrature(c, x_dy).value - kPi) < 1e-9);
    CHECK(std::abs(period_quadrature(c, {MultiPoly(), P("x^2")}).value) < 1e-9);
    CHECK(std::abs(period_quadrature(c, {P("y"), MultiPoly()}).value + kPi) < 1e-9);
}

TEST_CASE("elliptic oval of x^3 - 3x + y^2 against a one-dimensional oracle") {
    const auto h = make_hamiltonian(P("x^3 - 3*x + y^2"));
    const auto c = trace_cycle(h, 0.0, {1.7, 0.0});
    CHECK(c.closure_gap < 1e-9);
    // Enclosed area: 2 * int_0^sqrt3 sqrt(3x - x^3) dx.
    boost::math::quadrature::tanh_sinh<double> ts;
    const double area = 2 * ts.integrate([](double x) { return std::sqrt(std::max(0.0, 3 * x - x * x * x)); }, 0.0, std::sqrt(3.0));
    CHECK(period_quadrature(c, x_dy).value.real() == doctest::Approx(area).epsilon(1e-9));

    // Doubling the nodes changes nothing; reversing negates.
    auto refined = c;
    refined.points.clear();
    for (std::size_t i = 0; i < c.points.size(); ++i) {
        const auto& a = c.points[i];
        const auto& b = c.points[(i + 1) % c.points.size()];
        refined.points.push_back(a);
        refined.points.push_back({(a[0] + b[0]) / 2, (a[1] + b[1]) / 2});
    }
    for (const OneForm& w : {x_dy, OneForm{P("x*y"), P("x^2 - y")}, OneForm{MultiPoly(), P("x^2*y^2")}}) {
        const Complex base = period_quadrature(c, w).value;
        CHECK(std::abs(period_quadrature(refined, w).value - base) <= 1e-10 * std::max(1.0, std::abs(base)));
        CHECK(std::abs(period_quadrature(reversed(c), w).value + base) <= 1e-12 * std::max(1.0, std::abs(base)));
    }
}

TEST_CASE("lifted complex cycles agree with real ovals") {
    const auto lc = lifted_cycles(circle, 2.0);
    REQUIRE(lc.size() == 1);
    CHECK(std::abs(std::abs(lifted_periods(circle, 2.0, lc[0], {x_dy})[0].value) - 2 * kPi) < 1e-11);

    const auto h = make_hamiltonian(P("x^3 - 3*x + y^2"));
    const Complex oval = period_quadrature(trace_cycle(h, 0.0, {1.7, 0.0}), x_dy).value;
    bool matched = false;
    for (const auto& cyc : lifted_cycles(h, 0.0)) {
        const Complex v = lifted_periods(h, 0.0, cyc, {x_dy})[0].value;
        matched = matched || std::abs(std::abs(v) - std::abs(oval)) < 1e-9;
    }
    CHECK(matched);
}

TEST_CASE("integrate_pf_numeric on the d=2 system") {
    const auto sys = pfsystem::assemble_pf_system(circle);
    const PeriodSample start{1.0, {kPi}, 0.0};
    const auto line = integrate_pf_numeric(sys, {1.0, 4.0}, start);
    CHECK(std::abs(line.back().periods[0] - 4 * kPi) < 1e-8);

    std::vector<Complex> loop;
    for (int k = 0; k <= 64; ++k) loop.push_back(std::polar(1.0, 2 * kPi * k / 64));
    const auto around = integrate_pf_numeric(sys, loop, start);
    CHECK(std::abs(around.back().periods[0] - kPi) < 1e-8);

    CHECK(kind_of([&] { (void)integrate_pf_numeric(sys, {1.0, -1.0}, start); }) == ErrorKind::PathTooClose);
}

TEST_CASE("continuation matches quadrature along a path of regular values") {
    // Regular at infinity, with a family of ovals around the minimum at 0.
    const auto h = make_hamiltonian(P("x^2 + y^2 + x*y^2 - 1/3*x^3"));
    const auto sys = pfsystem::assemble_pf_system(h);
    auto periods_at = [&](double t) {
        const auto c = trace_cycle(h, t, {std::sqrt(t), 0.0});
        std::vector<Complex> v;
        for (const auto& w : sys.forms) v.push_back(period_quadrature(c, w).value);
        return v;
    };
    const PeriodSample start{0.05, periods_at(0.05), 0.0};
    const auto end = integrate_pf_numeric(sys, {0.05, 0.1}, start).back();
    const auto direct = periods_at(0.1);
    double scale = 0;
    for (const auto& v : direct) scale = std::max(scale, std::abs(v));
    for (std::size_t i = 0; i < direct.size(); ++i)
        CHECK(std::abs(end.periods[i] - direct[i]) <= std::max(1e-6 * std::abs(direct[i]), 1e-12 * std::max(1.0, scale)));
}

TEST_CASE("Petrov bridge: forms with zero coefficients have zero periods") {
    // No symmetry, so no basis form has identically vanishing periods.
    const auto h = make_hamiltonian(P("x^2 + y^2 + x*y^2 - 1/3*x^3 + 1/5*y^3"));
    REQUIRE(hamiltonian::is_regular_at_infinity(h));
    const auto basis = pfsystem::make_basis_forms(hamiltonian::monomial_basis(h));
    const auto oval = trace_cycle(h, 0.08, {0.3, 0.0});
    std::mt19937_64 rng(61);
    for (int i = 0; i < 5; ++i) {
        const auto A = pfzero::testing::random_poly(rng, {Var::x, Var::y}, 3, 5);
        const auto B = pfzero::testing::random_poly(rng, {Var::x, Var::y}, 2, 5);
        const OneForm w = petrov::differential(A) + B * petrov::differential(h.poly);
        const auto dec = petrov::petrov_decompose(w, h, basis);
        for (const auto& c : dec.coeffs) REQUIRE(c.is_zero());
        CHECK(std::abs(period_quadrature(oval, w).value) <= 1e-8);
    }
    for (const auto& w : basis) {
        bool nonzero = std::abs(period_quadrature(oval, w).value) > 1e-8;
        for (const auto& cyc : lifted_cycles(h, 0.08))
            nonzero = nonzero || std::abs(lifted_periods(h, 0.08, cyc, {w})[0].value) > 1e-8;
        CHECK(nonzero);
    }
}

TEST_CASE("residual_check") {
    const auto sys = pfsystem::assemble_pf_system(circle);
    const auto report = residual_check(sys, circle, {0.5, 1.0, 2.0});
    CHECK(report.max_relative < 1e-6);
    CHECK(kind_of([&] { (void)residual_check(sys, circle, {0.0}); }) == ErrorKind::NearCritical);

    const auto cubic = make_hamiltonian(P("x^3 - x*y^2 + y"));
    const auto sys3 = pfsystem::assemble_pf_system(cubic);
    const auto r3 = residual_check(sys3, cubic, {-0.3, 0.2});
    CHECK(r3.max_relative < 1e-6);
    for (const auto& s : r3.samples) CHECK(s.cycles >= 4);
}

TEST_CASE("scalar ODE of the cubic annihilates numeric periods") {
    const auto cubic = make_hamiltonian(P("x^3 - x*y^2 + y"));
    const auto sys = pfsystem::assemble_pf_system(cubic);
    const double t = 0.1, h = 1e-2;
    const auto cycles = lifted_cycles(cubic, t);
    REQUIRE(!cycles.empty());
    for (int m = 0; m < sys.dim; ++m) {
        const auto ode = pfsystem::derive_scalar_ode(sys, m);
        REQUIRE(ode.order == 3);
        for (const auto& cyc : cycles) {
            std::vector<Complex> f;
            for (int k = -2; k <= 2; ++k)
                f.push_back(lifted_periods(cubic, t + k * h, cyc, {sys.forms[static_cast<std::size_t>(m)]})[0].value);
            const std::vector<Complex> d{f[2], (-f[4] + 8.0 * f[3] - 8.0 * f[1] + f[0]) / (12 * h),
                                         (-f[4] + 16.0 * f[3] - 30.0 * f[2] + 16.0 * f[1] - f[0]) / (12 * h * h),
                                         (f[4] - 2.0 * f[3] + 2.0 * f[1] - f[0]) / (2 * h * h * h)};
            double scale = 0;
            for (int j = 0; j <= ode.order; ++j) scale += std::abs(ode.coefficient_of_derivative(j).eval(t) * d[static_cast<std::size_t>(j)]);
            CHECK(std::abs(pfsystem::apply_operator(ode, t, d)) <= 1e-3 * scale);
        }
    }
}
