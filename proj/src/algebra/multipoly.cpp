#include "pfzero/algebra/multipoly.hpp"

#include "pfzero/errors.hpp"

#include <algorithm>
#include <sstream>

namespace pfzero::algebra {

char var_name(Var v) noexcept {
    switch (v) {
    case Var::x: return 'x';
    case Var::y: return 'y';
    case Var::t: return 't';
    }
    return '?';
}

Monomial Monomial::of(Var v, int power) {
    Monomial m;
    m[v] = power;
    return m;
}

bool Monomial::divides(const Monomial& other) const {
    for (int i = 0; i < kNumVars; ++i)
        if (exp[i] > other.exp[i]) return false;
    return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    return {a.exp[0] + b.exp[0], a.exp[1] + b.exp[1], a.exp[2] + b.exp[2]};
}

Monomial operator/(const Monomial& a, const Monomial& b) {
    return {a.exp[0] - b.exp[0], a.exp[1] - b.exp[1], a.exp[2] - b.exp[2]};
}

Monomial lcm(const Monomial& a, const Monomial& b) {
    return {std::max(a.exp[0], b.exp[0]), std::max(a.exp[1], b.exp[1]),
            std::max(a.exp[2], b.exp[2])};
}

bool grevlex_less(const Monomial& a, const Monomial& b) {
    const int da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    // Equal degree: the monomial with the larger exponent in the last
    // differing variable is the smaller one.
    for (int i = kNumVars - 1; i >= 0; --i) {
        if (a.exp[i] != b.exp[i]) return a.exp[i] > b.exp[i];
    }
    return false;
}

MultiPoly::MultiPoly(const Rational& c) {
    if (c != 0) terms_.emplace(Monomial{}, c);
}

MultiPoly MultiPoly::variable(Var v) { return term(Monomial::of(v), Rational(1)); }

MultiPoly MultiPoly::term(const Monomial& m, const Rational& c) {
    MultiPoly p;
    p.add_term(m, c);
    return p;
}

bool MultiPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

int MultiPoly::degree() const {
    // Descending grevlex: the first term has the maximal total degree.
    return terms_.empty() ? -1 : terms_.begin()->first.degree();
}

int MultiPoly::degree_in(Var v) const {
    int d = terms_.empty() ? -1 : 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m[v]);
    return d;
}

std::vector<Var> MultiPoly::variables() const {
    std::array<bool, kNumVars> seen{};
    for (const auto& [m, c] : terms_)
        for (int i = 0; i < kNumVars; ++i) seen[i] = seen[i] || m.exp[i] > 0;
    std::vector<Var> out;
    for (int i = 0; i < kNumVars; ++i)
        if (seen[i]) out.push_back(static_cast<Var>(i));
    return out;
}

bool MultiPoly::is_univariate_in(Var v) const {
    for (const auto& [m, c] : terms_)
        if (m.degree() != m[v]) return false;
    return true;
}

const Monomial& MultiPoly::leading_monomial() const {
    if (terms_.empty()) throw Error(ErrorKind::DegenerateInput, "leading monomial of zero polynomial");
    return terms_.begin()->first;
}

const Rational& MultiPoly::leading_coefficient() const {
    if (terms_.empty()) throw Error(ErrorKind::DegenerateInput, "leading coefficient of zero polynomial");
    return terms_.begin()->second;
}

Rational MultiPoly::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

MultiPoly MultiPoly::homogeneous_part(int deg) const {
    MultiPoly out;
    for (const auto& [m, c] : terms_)
        if (m.degree() == deg) out.terms_.emplace_hint(out.terms_.end(), m, c);
    return out;
}

MultiPoly MultiPoly::derive(Var v) const {
    MultiPoly out;
    for (const auto& [m, c] : terms_) {
        const int e = m[v];
        if (e == 0) continue;
        Monomial dm = m;
        dm[v] = e - 1;
        out.add_term(dm, c * e);
    }
    return out;
}

MultiPoly MultiPoly::pow(unsigned n) const {
    MultiPoly result(1), base = *this;
    while (n) {
        if (n & 1u) result = result * base;
        n >>= 1u;
        if (n) base = base * base;
    }
    return result;
}

MultiPoly MultiPoly::substitute(Var v, const MultiPoly& value) const {
    auto coeffs = coefficients_in(v);
    MultiPoly out;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) out = out * value + *it;
    return out;
}

std::vector<MultiPoly> MultiPoly::coefficients_in(Var v) const {
    std::vector<MultiPoly> out(static_cast<std::size_t>(std::max(0, degree_in(v) + 1)));
    for (const auto& [m, c] : terms_) {
        Monomial rest = m;
        rest[v] = 0;
        out[static_cast<std::size_t>(m[v])].add_term(rest, c);
    }
    return out;
}

MultiPoly MultiPoly::from_coefficients(Var v, const std::vector<MultiPoly>& coeffs) {
    MultiPoly out;
    for (std::size_t k = 0; k < coeffs.size(); ++k)
        for (const auto& [m, c] : coeffs[k].terms()) {
            Monomial mm = m;
            mm[v] += static_cast<int>(k);
            out.add_term(mm, c);
        }
    return out;
}

MultiPoly MultiPoly::monic() const {
    if (terms_.empty()) return *this;
    const Rational inv = 1 / leading_coefficient();
    return *this * inv;
}

void MultiPoly::add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly out = *this;
    for (auto& [m, c] : out.terms_) c = -c;
    return out;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly out;
    if (a.is_zero() || b.is_zero()) return out;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
    return out;
}

MultiPoly operator*(const MultiPoly& a, const Monomial& m) {
    MultiPoly out;
    for (const auto& [ma, ca] : a.terms_) out.terms_.emplace_hint(out.terms_.end(), ma * m, ca);
    return out;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    auto ib = b.terms_.begin();
    for (auto ia = a.terms_.begin(); ia != a.terms_.end(); ++ia, ++ib)
        if (ia->first != ib->first || ia->second != ib->second) return false;
    return true;
}

std::string to_string(const Rational& q) { return q.get_str(); }

std::string MultiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        const bool neg = c < 0;
        const Rational mag = neg ? Rational(-c) : c;
        if (first) {
            if (neg) os << '-';
        } else {
            os << (neg ? " - " : " + ");
        }
        first = false;
        bool need_star = false;
        if (m.is_one() || mag != 1) {
            os << mag.get_str();
            need_star = true;
        }
        for (int i = 0; i < kNumVars; ++i) {
            const int e = m.exp[i];
            if (e == 0) continue;
            if (need_star) os << '*';
            os << var_name(static_cast<Var>(i));
            if (e != 1) os << '^' << e;
            need_star = true;
        }
    }
    return os.str();
}

MultiPoly derive(const MultiPoly& p, Var v) { return p.derive(v); }

} // namespace pfzero::algebra
