#pragma once

#include "pfzero/algebra/multipoly.hpp"

#include <random>
#include <vector>

namespace pfzero::testing {

using algebra::Monomial;
using algebra::MultiPoly;
using algebra::Rational;
using algebra::Var;

/// Random polynomial with integer coefficients in [-range, range] in the
/// listed variables, total degree <= max_degree, roughly `density` of the
/// monomials present.
inline MultiPoly random_poly(std::mt19937_64& rng, const std::vector<Var>& vars, int max_degree, int range,
                             double density = 0.6) {
    std::uniform_int_distribution<int> coef(-range, range);
    std::uniform_real_distribution<double> keep(0.0, 1.0);
    MultiPoly p;
    std::vector<Monomial> monos{Monomial{}};
    for (Var v : vars) {
        std::vector<Monomial> next;
        for (const auto& m : monos)
            for (int e = 0; m.degree() + e <= max_degree; ++e) {
                Monomial mm = m;
                mm[v] = e;
                next.push_back(mm);
            }
        monos = std::move(next);
    }
    for (const auto& m : monos)
        if (keep(rng) < density) p.add_term(m, Rational(coef(rng)));
    return p;
}

/// Random rational coefficient p/q with |p| <= range and 1 <= q <= qmax.
inline Rational random_rational(std::mt19937_64& rng, int range, int qmax) {
    std::uniform_int_distribution<int> num(-range, range), den(1, qmax);
    Rational r(num(rng), den(rng));
    r.canonicalize();
    return r;
}

} // namespace pfzero::testing
