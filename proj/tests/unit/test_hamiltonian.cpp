#include <doctest.h>

#include "pfzero/algebra/text.hpp"
#include "pfzero/errors.hpp"
#include "pfzero/hamiltonian/hamiltonian.hpp"
#include "support/generators.hpp"

#include <algorithm>

using namespace pfzero;
using namespace pfzero::algebra;
using namespace pfzero::hamiltonian;

namespace {

Hamiltonian H(const char* s) { return make_hamiltonian(parse_polynomial(s)); }

std::vector<double> real_values(const SingularSet& s) {
    std::vector<double> v;
    for (const auto& c : s.critical_values) {
        CHECK(std::abs(c.value.imag()) <= c.radius + 1e-12);
        v.push_back(c.value.real());
    }
    std::sort(v.begin(), v.end());
    return v;
}

// H(a x + b y, c x + d y), via t as a scratch variable.
MultiPoly linear_change(const MultiPoly& p, const Rational& a, const Rational& b, const Rational& c, const Rational& d) {
    const MultiPoly x = MultiPoly::variable(Var::x), y = MultiPoly::variable(Var::y);
    return p.substitute(Var::x, MultiPoly::variable(Var::t))
        .substitute(Var::y, c * x + d * y)
        .substitute(Var::t, a * x + b * y);
}

// Random H with top part a product of distinct rational lines, plus lower
// order noise; regular at infinity by construction.
MultiPoly random_regular(std::mt19937_64& rng, int d) {
    const MultiPoly x = MultiPoly::variable(Var::x), y = MultiPoly::variable(Var::y);
    std::vector<Rational> slopes;
    std::uniform_int_distribution<int> pick(-5, 5);
    while (static_cast<int>(slopes.size()) < d) {
        Rational s(pick(rng), std::abs(pick(rng)) + 1);
        s.canonicalize();
        if (std::find(slopes.begin(), slopes.end(), s) == slopes.end()) slopes.push_back(s);
    }
    MultiPoly top(1);
    for (const auto& s : slopes) top = top * (y - s * x);
    top *= Rational(std::abs(pick(rng)) + 1);
    return top + pfzero::testing::random_poly(rng, {Var::x, Var::y}, d - 1, 5);
}

} // namespace

TEST_CASE("highest_part examples") {
    CHECK(highest_part(parse_polynomial("x^3 - x*y^2 + y")) == parse_polynomial("x^3 - x*y^2"));
    CHECK(highest_part(parse_polynomial("x^2 + y^2 + 1")) == parse_polynomial("x^2 + y^2"));
    try {
        (void)highest_part(parse_polynomial("y"));
        FAIL("expected UnsupportedDegree");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::UnsupportedDegree);
    }
}

TEST_CASE("is_regular_at_infinity examples") {
    CHECK(is_regular_at_infinity(H("x^2 + y^2")));
    CHECK_FALSE(is_regular_at_infinity(H("x^3 + y")));
    CHECK(is_regular_at_infinity(H("x^3 - x*y^2 + y")));
    CHECK_FALSE(is_regular_at_infinity(H("x^2*y + y^3 - 2*x*y^2")));   // y (x - y)^2
    CHECK(is_regular_at_infinity(H("x*y")));
    CHECK_FALSE(is_regular_at_infinity(H("y^2 + x")));
}

TEST_CASE("critical_values examples") {
    auto a = critical_values(H("x^2 + y^2"));
    CHECK(real_values(a) == std::vector<double>{0.0});
    CHECK(a.count_with_multiplicity == 1);
    CHECK_FALSE(a.may_miss_atypical);

    auto b = real_values(critical_values(H("x^3 - 3*x + y^2")));
    REQUIRE(b.size() == 2);
    CHECK(b[0] == doctest::Approx(-2).epsilon(1e-12));
    CHECK(b[1] == doctest::Approx(2).epsilon(1e-12));
    CHECK(critical_values(H("x^3 - 3*x + y^2")).may_miss_atypical);

    CHECK(real_values(critical_values(H("x^2 - y^2"))) == std::vector<double>{0.0});

    try {
        (void)critical_values(H("x^2*y^2"));
        FAIL("expected NonIsolatedCritical");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NonIsolatedCritical);
    }
}

TEST_CASE("critical values of the cubic are four saddles, two of them complex") {
    // x^3 - x y^2 + y: 4 = (d-1)^2 Morse points.
    const auto s = critical_values(H("x^3 - x*y^2 + y"));
    CHECK(s.count_with_multiplicity == 4);
    CHECK(s.critical_values.size() == 4);
    for (const auto& c : s.critical_values) CHECK(c.radius <= 1e-9);
}

TEST_CASE("monomial_basis examples") {
    auto a = monomial_basis(H("x^2 + y^2"));
    CHECK(a.monomials == std::vector<Monomial>{Monomial(0, 0, 0)});
    auto b = monomial_basis(H("x^3 - x*y^2"));
    CHECK(b.monomials == std::vector<Monomial>{Monomial(0, 0, 0), Monomial(1, 0, 0), Monomial(0, 1, 0), Monomial(0, 2, 0)});
    CHECK(b.leading_term_diagram == std::vector<Monomial>{Monomial(1, 1, 0), Monomial(2, 0, 0), Monomial(0, 3, 0)});
    try {
        (void)monomial_basis(H("x^3 + y"));
        FAIL("expected NotRegularAtInfinity");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotRegularAtInfinity);
    }
}

TEST_CASE("basis size is (d-1)^2 on random regular Hamiltonians") {
    std::mt19937_64 rng(41);
    for (int i = 0; i < 50; ++i) {
        const int d = 2 + i % 3;
        const auto h = make_hamiltonian(random_regular(rng, d));
        REQUIRE(is_regular_at_infinity(h));
        const auto basis = monomial_basis(h);
        CHECK(basis.size() == static_cast<std::size_t>((d - 1) * (d - 1)));
        for (const auto& m : basis.monomials) CHECK(m.degree() <= (d - 1) * (d - 1) - 1);
    }
}

TEST_CASE("critical values shift exactly with H + c") {
    std::mt19937_64 rng(43);
    for (int i = 0; i < 10; ++i) {
        const int d = 2 + i % 3;
        const MultiPoly p = random_regular(rng, d);
        const Rational c = pfzero::testing::random_rational(rng, 9, 4);
        const auto s0 = critical_values(make_hamiltonian(p));
        const auto s1 = critical_values(make_hamiltonian(p + MultiPoly(c)));
        REQUIRE(s0.critical_values.size() == s1.critical_values.size());
        CHECK(s0.eliminant.substitute(Var::t, MultiPoly::variable(Var::t) - MultiPoly(c)) == s1.eliminant);
        for (const auto& v0 : s0.critical_values) {
            const std::complex<double> shifted = v0.value + c.get_d();
            const bool found = std::any_of(s1.critical_values.begin(), s1.critical_values.end(), [&](const CriticalValue& v1) {
                return std::abs(v1.value - shifted) <= v0.radius + v1.radius + 1e-12 * (1 + std::abs(shifted));
            });
            CHECK(found);
        }
    }
}

TEST_CASE("regularity at infinity is invariant under linear changes of coordinates") {
    std::mt19937_64 rng(47);
    const std::vector<const char*> cases{"x^2 + y^2", "x^3 + y", "x^3 - x*y^2 + y", "x^2*y + y^3 - 2*x*y^2",
                                         "x^4 + y^4 - x*y", "x^4 - 2*x^2*y^2 + y^4"};
    for (const char* s : cases) {
        const auto base = H(s);
        const bool expected = is_regular_at_infinity(base);
        int done = 0;
        while (done < 10) {
            const Rational a = pfzero::testing::random_rational(rng, 4, 3), b = pfzero::testing::random_rational(rng, 4, 3);
            const Rational c = pfzero::testing::random_rational(rng, 4, 3), d = pfzero::testing::random_rational(rng, 4, 3);
            if (a * d - b * c == 0) continue;
            CHECK(is_regular_at_infinity(make_hamiltonian(linear_change(base.poly, a, b, c, d))) == expected);
            ++done;
        }
    }
}
