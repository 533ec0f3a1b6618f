#include "pfzero/hamiltonian/hamiltonian.hpp"

#include "pfzero/algebra/groebner.hpp"
#include "pfzero/algebra/polyops.hpp"
#include "pfzero/algebra/roots.hpp"
#include "pfzero/algebra/univariate.hpp"
#include "pfzero/errors.hpp"

#include <algorithm>

namespace pfzero::hamiltonian {

using algebra::Rational;
using algebra::Var;

MultiPoly highest_part(const MultiPoly& H) {
    const int d = H.degree();
    if (d < 2) throw Error(ErrorKind::UnsupportedDegree, "Hamiltonian must have degree >= 2, got " + std::to_string(d));
    return H.homogeneous_part(d);
}

Hamiltonian make_hamiltonian(const MultiPoly& poly) {
    if (poly.degree_in(Var::t) > 0) throw Error(ErrorKind::DegenerateInput, "Hamiltonian may only involve x and y");
    Hamiltonian h;
    h.poly = poly;
    h.highest_part = highest_part(poly);
    h.degree = poly.degree();
    return h;
}

bool is_regular_at_infinity(const Hamiltonian& H) {
    // Dehomogenize at x = 1: f(s) = H~(1, s). A linear factor x appears as a
    // drop in degree, and may do so at most once.
    const auto f = algebra::upoly::from_multi(H.highest_part.substitute(Var::x, MultiPoly(1)), Var::y);
    const int deg_f = algebra::upoly::degree(f);
    if (H.degree - deg_f > 1) return false;
    if (deg_f <= 0) return true;
    return algebra::upoly::degree(algebra::upoly::gcd(f, algebra::upoly::derivative(f))) == 0;
}

SingularSet critical_values(const Hamiltonian& H) {
    const MultiPoly hx = H.dx(), hy = H.dy();
    if (algebra::poly_gcd(hx, hy).degree() > 0)
        throw Error(ErrorKind::NonIsolatedCritical, "H_x and H_y share a nonconstant factor");

    SingularSet out;
    out.may_miss_atypical = !is_regular_at_infinity(H);

    // Coprime in two variables means <H_x, H_y> is zero-dimensional, so the
    // quotient is finite and multiplication by H acts on it as a matrix.
    const auto gb = algebra::groebner_basis({hx, hy});
    const auto basis = algebra::standard_monomials(gb);
    if (!basis) throw Error(ErrorKind::NonIsolatedCritical, "critical locus is not zero-dimensional");
    const std::size_t n = basis->size();
    if (n == 0) {
        out.eliminant = MultiPoly(1);
        return out;
    }

    std::vector<std::vector<MultiPoly>> char_matrix(n, std::vector<MultiPoly>(n));
    const MultiPoly t = MultiPoly::variable(Var::t);
    for (std::size_t j = 0; j < n; ++j) {
        const MultiPoly image = algebra::normal_form(H.poly * (*basis)[j], gb);
        for (std::size_t i = 0; i < n; ++i) char_matrix[i][j] = MultiPoly(-image.coefficient((*basis)[i]));
        char_matrix[j][j] += t;
    }
    out.eliminant = algebra::determinant(char_matrix);
    out.count_with_multiplicity = out.eliminant.degree();

    for (const auto& r : algebra::isolate_roots(out.eliminant, Var::t))
        out.critical_values.push_back({r.value, r.radius, r.multiplicity});
    return out;
}

MonomialBasis monomial_basis(const Hamiltonian& H) {
    if (!is_regular_at_infinity(H))
        throw Error(ErrorKind::NotRegularAtInfinity, "highest homogeneous part has a repeated linear factor");
    const MultiPoly& top = H.highest_part;
    const auto gb = algebra::groebner_basis({top.derive(Var::x), top.derive(Var::y)});
    const auto standard = algebra::standard_monomials(gb);
    const std::size_t expected = static_cast<std::size_t>((H.degree - 1) * (H.degree - 1));
    if (!standard || standard->size() != expected)
        throw Error(ErrorKind::NotRegularAtInfinity, "Jacobian quotient has unexpected dimension");
    return {*standard, algebra::leading_term_generators(gb)};
}

} // namespace pfzero::hamiltonian
