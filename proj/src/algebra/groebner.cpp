#include "pfzero/algebra/groebner.hpp"

#include <algorithm>
#include <deque>
#include <utility>

namespace pfzero::algebra {

namespace {

// One reduction step family: repeatedly cancel any term of p divisible by a
// leading monomial of g. With `top_only` only the leading term is reduced.
MultiPoly reduce(MultiPoly p, const std::vector<MultiPoly>& g, bool top_only) {
    MultiPoly rest;
    while (!p.is_zero()) {
        const Monomial lm = p.leading_monomial();
        const Rational lc = p.leading_coefficient();
        bool reduced = false;
        for (const auto& f : g) {
            if (f.is_zero() || !f.leading_monomial().divides(lm)) continue;
            p -= (f * (lm / f.leading_monomial())) * (lc / f.leading_coefficient());
            reduced = true;
            break;
        }
        if (reduced) continue;
        if (top_only) return p + rest;
        rest.add_term(lm, lc);
        p -= MultiPoly::term(lm, lc);
    }
    return rest;
}

MultiPoly s_polynomial(const MultiPoly& f, const MultiPoly& g) {
    const Monomial l = lcm(f.leading_monomial(), g.leading_monomial());
    return (f * (l / f.leading_monomial())) * (1 / Rational(f.leading_coefficient())) -
           (g * (l / g.leading_monomial())) * (1 / Rational(g.leading_coefficient()));
}

bool coprime(const Monomial& a, const Monomial& b) {
    for (int i = 0; i < kNumVars; ++i)
        if (a.exp[i] > 0 && b.exp[i] > 0) return false;
    return true;
}

} // namespace

MultiPoly normal_form(const MultiPoly& p, const std::vector<MultiPoly>& basis) { return reduce(p, basis, false); }

std::vector<MultiPoly> groebner_basis(std::vector<MultiPoly> generators) {
    std::vector<MultiPoly> g;
    for (auto& f : generators)
        if (!f.is_zero()) g.push_back(f.monic());
    std::deque<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t j = 0; j < g.size(); ++j)
        for (std::size_t i = 0; i < j; ++i) pairs.emplace_back(i, j);
    while (!pairs.empty()) {
        const auto [i, j] = pairs.front();
        pairs.pop_front();
        // Buchberger's first criterion.
        if (coprime(g[i].leading_monomial(), g[j].leading_monomial())) continue;
        MultiPoly r = normal_form(s_polynomial(g[i], g[j]), g);
        if (r.is_zero()) continue;
        g.push_back(r.monic());
        for (std::size_t k = 0; k + 1 < g.size(); ++k) pairs.emplace_back(k, g.size() - 1);
    }

    // Minimalize, then inter-reduce.
    std::vector<MultiPoly> minimal;
    for (std::size_t i = 0; i < g.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < g.size() && !redundant; ++j) {
            if (i == j) continue;
            const auto& li = g[i].leading_monomial();
            const auto& lj = g[j].leading_monomial();
            // Drop g[i] if another leading monomial divides it; on ties keep the first.
            if (lj.divides(li) && (lj != li || j < i)) redundant = true;
        }
        if (!redundant) minimal.push_back(g[i]);
    }
    std::vector<MultiPoly> reduced;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<MultiPoly> others;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        const MultiPoly& f = minimal[i];
        MultiPoly tail = f - MultiPoly::term(f.leading_monomial(), f.leading_coefficient());
        reduced.push_back((MultiPoly::term(f.leading_monomial(), f.leading_coefficient()) + normal_form(tail, others)).monic());
    }
    std::sort(reduced.begin(), reduced.end(), [](const MultiPoly& a, const MultiPoly& b) {
        return grevlex_less(b.leading_monomial(), a.leading_monomial());
    });
    return reduced;
}

std::vector<Monomial> leading_term_generators(const std::vector<MultiPoly>& basis) {
    std::vector<Monomial> lt;
    for (const auto& f : basis) lt.push_back(f.leading_monomial());
    std::vector<Monomial> minimal;
    for (std::size_t i = 0; i < lt.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < lt.size() && !redundant; ++j)
            if (i != j && lt[j].divides(lt[i]) && (lt[j] != lt[i] || j < i)) redundant = true;
        if (!redundant) minimal.push_back(lt[i]);
    }
    std::sort(minimal.begin(), minimal.end(), grevlex_less);
    return minimal;
}

std::optional<std::vector<Monomial>> standard_monomials(const std::vector<MultiPoly>& basis) {
    const auto lt = leading_term_generators(basis);
    int x_bound = -1, y_bound = -1;
    for (const auto& m : lt) {
        if (m[Var::t] > 0) continue;
        if (m[Var::y] == 0) x_bound = x_bound < 0 ? m[Var::x] : std::min(x_bound, m[Var::x]);
        if (m[Var::x] == 0) y_bound = y_bound < 0 ? m[Var::y] : std::min(y_bound, m[Var::y]);
    }
    if (x_bound < 0 || y_bound < 0) return std::nullopt;
    std::vector<Monomial> out;
    for (int a = 0; a < x_bound; ++a)
        for (int b = 0; b < y_bound; ++b) {
            const Monomial m(a, b, 0);
            if (std::none_of(lt.begin(), lt.end(), [&](const Monomial& g) { return g.divides(m); })) out.push_back(m);
        }
    // Ascending degree; within a degree, x-heavy monomials first.
    std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        return grevlex_less(b, a);
    });
    return out;
}

} // namespace pfzero::algebra
