#include "pfzero/pfsystem/pfsystem.hpp"

#include "pfzero/algebra/polyops.hpp"
#include "pfzero/algebra/roots.hpp"
#include "pfzero/errors.hpp"
#include "pfzero/petrov/petrov.hpp"

#include <algorithm>

namespace pfzero::pfsystem {

using algebra::Monomial;
using algebra::Rational;
using algebra::Var;

std::vector<OneForm> make_basis_forms(const hamiltonian::MonomialBasis& basis) {
    std::vector<OneForm> forms;
    for (const auto& g : basis.monomials) {
        const int a = g[Var::x], b = g[Var::y];
        forms.push_back({MultiPoly(), MultiPoly::term(Monomial(a + 1, b, 0), Rational(1, a + 1))});
    }
    return forms;
}

MultiPoly euler_multiplier(const Hamiltonian& H) {
    const MultiPoly e = MultiPoly::variable(Var::x) * H.dx() + MultiPoly::variable(Var::y) * H.dy();
    return e * e;
}

OneForm gelfand_leray_rhs(const Hamiltonian& H, const OneForm& omega) {
    const MultiPoly g = (euler_multiplier(H) * omega).exterior_derivative();
    try {
        auto [a, b] = petrov::ideal_representation(g, H, g.degree() + H.degree * H.degree);
        return {std::move(a), std::move(b)};
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::NotInIdeal)
            throw Error(ErrorKind::DecompositionFailed, "Gelfand-Leray form not found: " + std::string(e.what()));
        throw;
    }
}

namespace {

MultiPoly lcm(const MultiPoly& p, const MultiPoly& q) {
    return algebra::divide_or_throw(p * q, algebra::poly_gcd(p, q)).monic();
}

} // namespace

PFSystem assemble_pf_system(const Hamiltonian& H) {
    const auto basis = hamiltonian::monomial_basis(H);
    PFSystem sys = assemble_pf_system(H, make_basis_forms(basis));
    sys.basis = basis;
    return sys;
}

PFSystem assemble_pf_system(const Hamiltonian& H, const std::vector<OneForm>& forms) {
    if (!hamiltonian::is_regular_at_infinity(H))
        throw Error(ErrorKind::NotRegularAtInfinity, "Picard-Fuchs assembly needs H regular at infinity");
    const int n = static_cast<int>(forms.size());
    PFSystem sys;
    sys.dim = n;
    sys.forms = forms;
    sys.H = H;
    sys.K = PolyMatrix(n, n);
    sys.L = PolyMatrix(n, n);

    const MultiPoly e = euler_multiplier(H);
    for (int l = 0; l < n; ++l) {
        const auto k_row = petrov::petrov_decompose(e * forms[static_cast<std::size_t>(l)], H, forms);
        const auto l_row = petrov::petrov_decompose(gelfand_leray_rhs(H, forms[static_cast<std::size_t>(l)]), H, forms);
        for (int m = 0; m < n; ++m) {
            sys.K(l, m) = k_row.coeffs[static_cast<std::size_t>(m)];
            sys.L(l, m) = l_row.coeffs[static_cast<std::size_t>(m)];
            if (sys.K(l, m).degree() > H.degree)
                throw Error(ErrorKind::DecompositionFailed, "K entry exceeds degree d");
        }
    }

    if (algebra::determinant(sys.K).is_zero()) throw Error(ErrorKind::DegenerateK, "det K vanishes identically");
    const auto x = algebra::solve_over_rational_functions(sys.K, sys.L - sys.K.derive(Var::t));

    MultiPoly a(1);
    for (const auto& row : x)
        for (const auto& f : row) a = lcm(a, f.den());
    sys.A = PolyMatrix(n, n);
    MultiPoly g = a;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const RatFunc& f = x[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            sys.A(i, j) = f.num() * algebra::divide_or_throw(a, f.den());
            if (!sys.A(i, j).is_zero()) g = algebra::poly_gcd(g, sys.A(i, j));
        }
    // Cancel the common factor and make a monic.
    const Rational lc = algebra::divide_or_throw(a, g).leading_coefficient();
    sys.a = algebra::divide_or_throw(a, g) * (1 / lc);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) sys.A(i, j) = algebra::divide_or_throw(sys.A(i, j), g) * (1 / lc);

    sys.sigma = hamiltonian::critical_values(H);
    return sys;
}

std::vector<PolyMatrix> derivative_matrices(const PFSystem& sys, int count) {
    std::vector<PolyMatrix> out{PolyMatrix::identity(sys.dim)};
    const MultiPoly da = sys.a.derive(Var::t);
    for (int j = 0; j + 1 < count; ++j) {
        const PolyMatrix& aj = out.back();
        const PolyMatrix shifted = sys.A - MultiPoly(Rational(j)) * da * PolyMatrix::identity(sys.dim);
        out.push_back(sys.a * aj.derive(Var::t) + aj * shifted);
    }
    return out;
}

RatFunc ScalarODE::coefficient_of_derivative(int j) const {
    if (j == order) return RatFunc(1);
    return coeffs[static_cast<std::size_t>(order - 1 - j)];
}

namespace {

ScalarODE finish(std::vector<RatFunc> low_to_high, const hamiltonian::SingularSet& sigma) {
    ScalarODE ode;
    ode.order = static_cast<int>(low_to_high.size());
    ode.coeffs.assign(low_to_high.rbegin(), low_to_high.rend());
    ode.denominator = MultiPoly(1);
    for (const auto& c : ode.coeffs) ode.denominator = lcm(ode.denominator, c.den());
    if (ode.denominator.degree() > 0) ode.pole_set = algebra::isolate_roots(ode.denominator, Var::t);
    for (const auto& cv : sigma.critical_values) {
        const bool is_pole = std::any_of(ode.pole_set.begin(), ode.pole_set.end(), [&](const algebra::RootEnclosure& p) {
            return std::abs(p.value - cv.value) <= p.radius + cv.radius + 1e-9 * (1 + std::abs(cv.value));
        });
        if (is_pole) ode.true_singularities.push_back(cv);
    }
    return ode;
}

} // namespace

ScalarODE derive_scalar_ode(const PFSystem& sys, int m) {
    if (m < 0 || m >= sys.dim) throw Error(ErrorKind::DegenerateInput, "component index out of range");
    std::vector<std::vector<MultiPoly>> alphas;
    PolyMatrix aj = PolyMatrix::identity(sys.dim);
    const MultiPoly da = sys.a.derive(Var::t);
    for (int j = 0;; ++j) {
        alphas.push_back(aj.row(m));
        if (algebra::rank_over_rational_functions(alphas) < static_cast<int>(alphas.size())) break;
        aj = sys.a * aj.derive(Var::t) + aj * (sys.A - MultiPoly(Rational(j)) * da * PolyMatrix::identity(sys.dim));
    }
    const int k = static_cast<int>(alphas.size()) - 1;
    const auto target = alphas.back();
    alphas.pop_back();
    const auto w = algebra::express_in_span(alphas, target);
    if (!w) throw Error(ErrorKind::DegenerateInput, "dependent row not in span of its predecessors");

    // a^k y^(k) = sum_l w_l a^l y^(l)  =>  y^(k) - sum_l w_l a^(l-k) y^(l) = 0.
    std::vector<RatFunc> low_to_high;
    for (int l = 0; l < k; ++l)
        low_to_high.push_back(-((*w)[static_cast<std::size_t>(l)] / RatFunc(sys.a.pow(static_cast<unsigned>(k - l)))));
    return finish(std::move(low_to_high), sys.sigma);
}

ScalarODE augment_and_reduce(const PFSystem& sys, const std::vector<MultiPoly>& mu) {
    if (static_cast<int>(mu.size()) != sys.dim)
        throw Error(ErrorKind::DegenerateInput, "mu must have one entry per basis form");
    PFSystem aug = sys;
    const int n = sys.dim + 1;
    aug.dim = n;
    aug.A = PolyMatrix(n, n);
    for (int j = 0; j < sys.dim; ++j) {
        // Row of I_0' = (a mu' + mu A) I / a.
        MultiPoly entry = sys.a * mu[static_cast<std::size_t>(j)].derive(Var::t);
        for (int i = 0; i < sys.dim; ++i) entry += mu[static_cast<std::size_t>(i)] * sys.A(i, j);
        aug.A(0, j + 1) = entry;
        for (int i = 0; i < sys.dim; ++i) aug.A(i + 1, j + 1) = sys.A(i, j);
    }
    return derive_scalar_ode(aug, 0);
}

std::complex<double> apply_operator(const ScalarODE& ode, std::complex<double> t,
                                    const std::vector<std::complex<double>>& derivatives) {
    std::complex<double> acc{};
    for (int j = 0; j <= ode.order; ++j)
        acc += ode.coefficient_of_derivative(j).eval(t) * derivatives[static_cast<std::size_t>(j)];
    return acc;
}

} // namespace pfzero::pfsystem
