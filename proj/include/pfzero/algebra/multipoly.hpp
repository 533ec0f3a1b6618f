#pragma once

#include <gmpxx.h>

#include <array>
#include <compare>
#include <map>
#include <string>
#include <vector>

namespace pfzero::algebra {

using Integer = mpz_class;
using Rational = mpq_class;

/// The three symbols a polynomial may use, in canonical order x > y > t.
enum class Var : int { x = 0, y = 1, t = 2 };
inline constexpr int kNumVars = 3;

char var_name(Var v) noexcept;

struct Monomial {
    std::array<int, kNumVars> exp{};

    Monomial() = default;
    constexpr Monomial(int ex, int ey, int et) : exp{ex, ey, et} {}

    static Monomial of(Var v, int power = 1);

    int operator[](Var v) const { return exp[static_cast<int>(v)]; }
    int& operator[](Var v) { return exp[static_cast<int>(v)]; }
    int degree() const { return exp[0] + exp[1] + exp[2]; }
    bool is_one() const { return degree() == 0; }
    bool divides(const Monomial& other) const;

    friend Monomial operator*(const Monomial& a, const Monomial& b);
    /// Exponent-wise difference; caller guarantees `b.divides(a)`.
    friend Monomial operator/(const Monomial& a, const Monomial& b);
    friend Monomial lcm(const Monomial& a, const Monomial& b);
    friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// Graded reverse lexicographic order with x > y > t.
bool grevlex_less(const Monomial& a, const Monomial& b);

struct GrevlexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const { return grevlex_less(b, a); }
};

/// Sparse polynomial over Q in at most the variables x, y, t.  Terms are kept
/// in descending grevlex order and zero coefficients are never stored.
class MultiPoly {
public:
    using TermMap = std::map<Monomial, Rational, GrevlexGreater>;

    MultiPoly() = default;
    MultiPoly(const Rational& c);
    MultiPoly(long c) : MultiPoly(Rational(c)) {}
    MultiPoly(int c) : MultiPoly(Rational(c)) {}

    static MultiPoly variable(Var v);
    static MultiPoly term(const Monomial& m, const Rational& c);

    const TermMap& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;

    /// Total degree; -1 for the zero polynomial.
    int degree() const;
    int degree_in(Var v) const;
    /// Variables with a positive exponent somewhere, canonical order.
    std::vector<Var> variables() const;
    bool is_univariate_in(Var v) const;

    const Monomial& leading_monomial() const;
    const Rational& leading_coefficient() const;
    Rational coefficient(const Monomial& m) const;
    Rational constant_term() const { return coefficient(Monomial{}); }

    MultiPoly homogeneous_part(int deg) const;
    MultiPoly derive(Var v) const;
    MultiPoly pow(unsigned n) const;
    /// Replace every occurrence of `v` by `value`.
    MultiPoly substitute(Var v, const MultiPoly& value) const;

    /// Coefficients with respect to `v`: result[k] is the coefficient of v^k,
    /// a polynomial free of `v`.
    std::vector<MultiPoly> coefficients_in(Var v) const;
    static MultiPoly from_coefficients(Var v, const std::vector<MultiPoly>& coeffs);

    /// Divide all coefficients so the grevlex leading coefficient is 1.
    MultiPoly monic() const;

    void add_term(const Monomial& m, const Rational& c);

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly& operator*=(const Rational& c);

    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
    friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }
    friend MultiPoly operator*(const MultiPoly& a, const Monomial& m);
    friend bool operator==(const MultiPoly& a, const MultiPoly& b);

    /// Canonical text form, parsable by `parse_polynomial`.
    std::string to_string() const;

private:
    TermMap terms_;
};

MultiPoly derive(const MultiPoly& p, Var v);

std::string to_string(const Rational& q);

} // namespace pfzero::algebra
