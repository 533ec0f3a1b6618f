#include "pfzero/petrov/petrov.hpp"

#include "pfzero/algebra/linear_solve.hpp"
#include "pfzero/errors.hpp"

#include <algorithm>
#include <map>

namespace pfzero::petrov {

using algebra::Monomial;
using algebra::Rational;
using algebra::SparseSystem;
using algebra::Var;

namespace {

// Monomials in x, y with lo <= degree <= hi; ascending degree, x-heavy first.
std::vector<Monomial> monomials_xy(int lo, int hi) {
    std::vector<Monomial> out;
    for (int deg = std::max(lo, 0); deg <= hi; ++deg)
        for (int a = deg; a >= 0; --a) out.emplace_back(a, deg - a, 0);
    return out;
}

// Coefficient-matching system: one row per monomial of each component
// equation, built column by column.
class SystemBuilder {
public:
    explicit SystemBuilder(int components) : rows_(static_cast<std::size_t>(components)) {}

    int add_column(const std::vector<MultiPoly>& images) {
        const int col = cols_++;
        for (std::size_t k = 0; k < images.size(); ++k)
            for (const auto& [m, c] : images[k].terms()) rows_[k][m].emplace_back(col, c);
        return col;
    }

    SparseSystem build(const std::vector<MultiPoly>& targets) {
        SparseSystem s;
        s.cols = cols_;
        for (std::size_t k = 0; k < targets.size(); ++k) {
            auto& rows = rows_[k];
            for (const auto& [m, c] : targets[k].terms()) rows.try_emplace(m);
            for (auto& [m, entries] : rows) s.add_row(entries, targets[k].coefficient(m));
        }
        return s;
    }

private:
    int cols_ = 0;
    std::vector<std::map<Monomial, std::vector<std::pair<int, Rational>>>> rows_;
};

MultiPoly assemble(const std::vector<Monomial>& monos, const std::vector<Rational>& values, std::size_t offset) {
    MultiPoly p;
    for (std::size_t i = 0; i < monos.size(); ++i) p.add_term(monos[i], values[offset + i]);
    return p;
}

} // namespace

std::pair<MultiPoly, MultiPoly> ideal_representation(const MultiPoly& g, const Hamiltonian& H, int deg_cap) {
    const MultiPoly hx = H.dx(), hy = H.dy();
    if (g.is_zero()) return {MultiPoly(), MultiPoly()};
    for (int deg = std::max(0, g.degree() - H.degree + 1); deg <= deg_cap; ++deg) {
        const auto monos = monomials_xy(0, deg);
        SystemBuilder builder(1);
        for (const auto& m : monos) builder.add_column({hx * m});
        for (const auto& m : monos) builder.add_column({-(hy * m)});
        try {
            const auto sol = algebra::exact_linear_solve(builder.build({g}));
            MultiPoly b = assemble(monos, sol.values, 0);
            MultiPoly a = assemble(monos, sol.values, monos.size());
            return {std::move(a), std::move(b)};
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::Inconsistent) throw;
        }
    }
    throw Error(ErrorKind::NotInIdeal, "polynomial is not in <H_x, H_y> up to degree " + std::to_string(deg_cap));
}

OneForm reconstruct(const PetrovDecomposition& dec, const Hamiltonian& H, const std::vector<OneForm>& basis) {
    OneForm out = differential(dec.A) + dec.B * differential(H.poly);
    for (std::size_t i = 0; i < basis.size(); ++i)
        out += dec.coeffs[i].substitute(Var::t, H.poly) * basis[i];
    return out;
}

PetrovDecomposition petrov_decompose(const OneForm& omega, const Hamiltonian& H, const std::vector<OneForm>& basis) {
    const int d = H.degree;
    const int deg_omega = std::max(omega.degree(), 0);
    const OneForm dH = differential(H.poly);

    std::vector<int> coeff_degree;
    int max_coeff_degree = -1;
    for (const auto& w : basis) {
        const int k = deg_omega >= w.degree() ? (deg_omega - w.degree()) / d : -1;
        coeff_degree.push_back(k);
        max_coeff_degree = std::max(max_coeff_degree, k);
    }
    std::vector<MultiPoly> h_pow{MultiPoly(1)};
    for (int k = 1; k <= max_coeff_degree; ++k) h_pow.push_back(h_pow.back() * H.poly);

    const int cap = d * d * d * std::max(deg_omega, d);
    for (int deg_a = deg_omega + 1;; deg_a = std::min(2 * deg_a, cap)) {
        const int deg_b = std::max(0, deg_a - d);
        SystemBuilder builder(2);
        for (std::size_t i = 0; i < basis.size(); ++i)
            for (int k = 0; k <= coeff_degree[i]; ++k)
                builder.add_column({h_pow[static_cast<std::size_t>(k)] * basis[i].P, h_pow[static_cast<std::size_t>(k)] * basis[i].Q});
        const auto a_monos = monomials_xy(1, deg_a);
        const auto b_monos = monomials_xy(0, deg_b);
        for (const auto& m : a_monos) {
            const MultiPoly mono = MultiPoly::term(m, Rational(1));
            builder.add_column({mono.derive(Var::x), mono.derive(Var::y)});
        }
        for (const auto& m : b_monos) builder.add_column({dH.P * m, dH.Q * m});

        try {
            const auto sol = algebra::exact_linear_solve(builder.build({omega.P, omega.Q}));
            PetrovDecomposition dec;
            std::size_t at = 0;
            for (std::size_t i = 0; i < basis.size(); ++i) {
                std::vector<MultiPoly> c;
                for (int k = 0; k <= coeff_degree[i]; ++k) c.push_back(MultiPoly(sol.values[at++]));
                dec.coeffs.push_back(c.empty() ? MultiPoly() : MultiPoly::from_coefficients(Var::t, c));
            }
            dec.A = assemble(a_monos, sol.values, at);
            dec.B = assemble(b_monos, sol.values, at + a_monos.size());
            dec.ansatz_degree = deg_a;
            if (!(reconstruct(dec, H, basis) == omega))
                throw Error(ErrorKind::DecompositionFailed, "reconstruction identity failed");
            return dec;
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::Inconsistent) throw;
        }
        if (deg_a >= cap) break;
    }
    throw Error(ErrorKind::DecompositionFailed,
                "no decomposition with deg A <= " + std::to_string(cap) + "; H may not be regular at infinity");
}

} // namespace pfzero::petrov
