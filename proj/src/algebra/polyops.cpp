#include "pfzero/algebra/polyops.hpp"

#include "pfzero/algebra/univariate.hpp"
#include "pfzero/errors.hpp"

namespace pfzero::algebra {

std::optional<MultiPoly> divide_exact(const MultiPoly& a, const MultiPoly& b) {
    if (b.is_zero()) throw Error(ErrorKind::DivisionByZeroPolynomial, "exact division by zero");
    if (a.is_zero()) return MultiPoly{};
    if (b.is_constant()) return a * (1 / b.constant_term());
    const Monomial& lb = b.leading_monomial();
    const Rational inv = 1 / b.leading_coefficient();
    MultiPoly r = a, q;
    while (!r.is_zero()) {
        const Monomial& lr = r.leading_monomial();
        if (!lb.divides(lr)) return std::nullopt;
        const Monomial m = lr / lb;
        const Rational c = r.leading_coefficient() * inv;
        q.add_term(m, c);
        r -= (b * m) * c;
    }
    return q;
}

MultiPoly divide_or_throw(const MultiPoly& a, const MultiPoly& b) {
    auto q = divide_exact(a, b);
    if (!q) throw Error(ErrorKind::DegenerateInput, "expected exact polynomial division");
    return *q;
}

MultiPoly pseudo_remainder(const MultiPoly& a, const MultiPoly& b, Var v) {
    if (b.is_zero()) throw Error(ErrorKind::DivisionByZeroPolynomial, "pseudo-division by zero");
    const int db = b.degree_in(v);
    const auto bc = b.coefficients_in(v);
    const MultiPoly& lb = bc.back();
    MultiPoly r = a;
    int dr = r.degree_in(v);
    while (!r.is_zero() && dr >= db) {
        const MultiPoly lr = r.coefficients_in(v).back();
        r = lb * r - (lr * b) * Monomial::of(v, dr - db);
        dr = r.degree_in(v);
    }
    return r;
}

namespace {

bool all_univariate_in(const MultiPoly& a, const MultiPoly& b, Var v) {
    return a.is_univariate_in(v) && b.is_univariate_in(v);
}

MultiPoly gcd_rec(const MultiPoly& a, const MultiPoly& b);

MultiPoly content_rec(const MultiPoly& p, Var v) {
    MultiPoly g;
    for (const auto& c : p.coefficients_in(v)) {
        if (c.is_zero()) continue;
        g = g.is_zero() ? c.monic() : gcd_rec(g, c);
        if (g.is_constant()) return MultiPoly(1);
    }
    return g;
}

MultiPoly gcd_rec(const MultiPoly& a, const MultiPoly& b) {
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    if (a.is_constant() || b.is_constant()) return MultiPoly(1);

    const auto va = a.variables(), vb = b.variables();
    Var v = va.front();
    if (!vb.empty() && static_cast<int>(vb.front()) < static_cast<int>(v)) v = vb.front();

    if (all_univariate_in(a, b, v)) {
        return upoly::to_multi(upoly::gcd(upoly::from_multi(a, v), upoly::from_multi(b, v)), v);
    }
    if (a.degree_in(v) == 0) return gcd_rec(a, content_rec(b, v));
    if (b.degree_in(v) == 0) return gcd_rec(content_rec(a, v), b);

    const MultiPoly ca = content_rec(a, v), cb = content_rec(b, v);
    const MultiPoly c = gcd_rec(ca, cb);
    MultiPoly p = divide_or_throw(a, ca), q = divide_or_throw(b, cb);
    if (p.degree_in(v) < q.degree_in(v)) std::swap(p, q);
    // Primitive PRS.
    while (!q.is_zero()) {
        MultiPoly r = pseudo_remainder(p, q, v);
        p = std::move(q);
        if (r.is_zero()) break;
        if (r.degree_in(v) == 0) {
            p = MultiPoly(1);
            break;
        }
        q = divide_or_throw(r, content_rec(r, v));
    }
    if (p.degree_in(v) > 0) p = divide_or_throw(p, content_rec(p, v));
    return (c * p).monic();
}

} // namespace

MultiPoly poly_gcd(const MultiPoly& a, const MultiPoly& b) {
    if (a.is_zero() && b.is_zero()) throw Error(ErrorKind::DegenerateInput, "gcd(0, 0) is undefined");
    return gcd_rec(a, b);
}

MultiPoly content_in(const MultiPoly& p, Var v) { return content_rec(p, v); }

MultiPoly determinant(std::vector<std::vector<MultiPoly>> m) {
    const std::size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw Error(ErrorKind::DegenerateInput, "determinant of a non-square matrix");
    if (n == 0) return MultiPoly(1);
    MultiPoly prev(1);
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            std::size_t p = k + 1;
            while (p < n && m[p][k].is_zero()) ++p;
            if (p == n) return MultiPoly{};
            std::swap(m[k], m[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = divide_or_throw(m[k][k] * m[i][j] - m[i][k] * m[k][j], prev);
            m[i][k] = MultiPoly{};
        }
        prev = m[k][k];
    }
    return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

MultiPoly resultant(const MultiPoly& f, const MultiPoly& g, Var v) {
    if (f.is_zero() || g.is_zero()) throw Error(ErrorKind::DegenerateInput, "resultant of a zero polynomial");
    const auto fc = f.coefficients_in(v), gc = g.coefficients_in(v);
    const std::size_t m = fc.size() - 1, n = gc.size() - 1;
    const std::size_t size = m + n;
    if (size == 0) return MultiPoly(1);
    std::vector<std::vector<MultiPoly>> syl(size, std::vector<MultiPoly>(size));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k <= m; ++k) syl[i][i + k] = fc[k];
    for (std::size_t j = 0; j < m; ++j)
        for (std::size_t k = 0; k <= n; ++k) syl[n + j][j + k] = gc[k];
    return determinant(std::move(syl));
}

} // namespace pfzero::algebra
