#pragma once

#include "support/generators.hpp"

#include <algorithm>

namespace pfzero::testing {

/// Random H of degree d whose top part is c * prod (y - s_i x) over distinct
/// rational slopes, plus integer lower-order noise in [-range, range].
/// Regular at infinity by construction.
inline MultiPoly random_regular_hamiltonian(std::mt19937_64& rng, int d, int range = 5) {
    const MultiPoly x = MultiPoly::variable(Var::x), y = MultiPoly::variable(Var::y);
    std::uniform_int_distribution<int> pick(-range, range);
    std::vector<Rational> slopes;
    while (static_cast<int>(slopes.size()) < d) {
        const Rational s(pick(rng));
        if (std::find(slopes.begin(), slopes.end(), s) == slopes.end()) slopes.push_back(s);
    }
    MultiPoly top(1);
    for (const auto& s : slopes) top = top * (y - s * x);
    int lead = 0;
    while (lead == 0) lead = pick(rng);
    top *= Rational(lead);
    return top + random_poly(rng, {Var::x, Var::y}, d - 1, range);
}

/// Like random_regular_hamiltonian, but every monomial of degree < d gets a
/// nonzero coefficient, which keeps clear of the coordinate-aligned
/// degeneracies (symmetries, missing terms) that small integers hit often.
inline MultiPoly random_generic_hamiltonian(std::mt19937_64& rng, int d, int range = 5) {
    MultiPoly h = random_regular_hamiltonian(rng, d, range);
    std::uniform_int_distribution<int> pick(1, range), sign(0, 1);
    MultiPoly top;
    for (const auto& [m, c] : h.terms())
        if (m.degree() == d) top.add_term(m, c);
    for (int a = 0; a < d; ++a)
        for (int b = 0; a + b < d; ++b) top.add_term(Monomial(a, b, 0), Rational(sign(rng) ? pick(rng) : -pick(rng)));
    return top;
}

} // namespace pfzero::testing
