#include "pfzero/algebra/univariate.hpp"

#include "pfzero/errors.hpp"

namespace pfzero::algebra::upoly {

void trim(UPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

int degree(const UPoly& p) { return static_cast<int>(p.size()) - 1; }

UPoly from_multi(const MultiPoly& p, Var v) {
    UPoly out(static_cast<std::size_t>(std::max(0, p.degree_in(v) + 1)));
    for (const auto& [m, c] : p.terms()) {
        if (m.degree() != m[v])
            throw Error(ErrorKind::DegenerateInput,
                        std::string("polynomial is not univariate in ") + var_name(v));
        out[static_cast<std::size_t>(m[v])] = c;
    }
    trim(out);
    return out;
}

MultiPoly to_multi(const UPoly& p, Var v) {
    MultiPoly out;
    for (std::size_t k = 0; k < p.size(); ++k) out.add_term(Monomial::of(v, static_cast<int>(k)), p[k]);
    return out;
}

UPoly add(const UPoly& a, const UPoly& b) {
    UPoly out(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
    trim(out);
    return out;
}

UPoly sub(const UPoly& a, const UPoly& b) {
    UPoly out(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
    trim(out);
    return out;
}

UPoly mul(const UPoly& a, const UPoly& b) {
    if (a.empty() || b.empty()) return {};
    UPoly out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    trim(out);
    return out;
}

UPoly scale(const UPoly& a, const Rational& c) {
    if (c == 0) return {};
    UPoly out = a;
    for (auto& x : out) x *= c;
    return out;
}

UPoly derivative(const UPoly& p) {
    if (p.size() <= 1) return {};
    UPoly out(p.size() - 1);
    for (std::size_t k = 1; k < p.size(); ++k) out[k - 1] = p[k] * static_cast<long>(k);
    trim(out);
    return out;
}

std::pair<UPoly, UPoly> divrem(const UPoly& a, const UPoly& b) {
    if (b.empty()) throw Error(ErrorKind::DivisionByZeroPolynomial, "division by the zero polynomial");
    UPoly r = a;
    trim(r);
    if (r.size() < b.size()) return {UPoly{}, r};
    UPoly q(r.size() - b.size() + 1);
    const Rational inv = 1 / b.back();
    for (std::size_t k = r.size(); k-- >= b.size();) {
        if (r[k] == 0) continue;
        const Rational f = r[k] * inv;
        const std::size_t shift = k - (b.size() - 1);
        q[shift] = f;
        for (std::size_t j = 0; j < b.size(); ++j) r[shift + j] -= f * b[j];
    }
    trim(q);
    trim(r);
    return {q, r};
}

UPoly monic(const UPoly& p) {
    if (p.empty()) return p;
    return scale(p, 1 / p.back());
}

UPoly gcd(const UPoly& a, const UPoly& b) {
    UPoly x = a, y = b;
    trim(x);
    trim(y);
    while (!y.empty()) {
        UPoly r = divrem(x, y).second;
        x = std::move(y);
        y = monic(r);
    }
    return monic(x);
}

std::vector<UPoly> squarefree_decomposition(const UPoly& p) {
    std::vector<UPoly> out;
    if (degree(p) < 1) return out;
    const UPoly dp = derivative(p);
    UPoly g = gcd(p, dp);
    UPoly b = divrem(p, g).first;
    UPoly c = divrem(dp, g).first;
    UPoly dd = sub(c, derivative(b));
    while (degree(b) > 0) {
        UPoly a = gcd(b, dd);
        out.push_back(monic(a));
        b = divrem(b, a).first;
        c = divrem(dd, a).first;
        dd = sub(c, derivative(b));
    }
    while (!out.empty() && degree(out.back()) == 0) out.pop_back();
    return out;
}

} // namespace pfzero::algebra::upoly
