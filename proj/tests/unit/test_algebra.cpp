#include <doctest.h>

#include "pfzero/algebra/eval.hpp"
#include "pfzero/algebra/linear_solve.hpp"
#include "pfzero/algebra/polyops.hpp"
#include "pfzero/algebra/ratfunc.hpp"
#include "pfzero/algebra/roots.hpp"
#include "pfzero/algebra/text.hpp"
#include "pfzero/errors.hpp"
#include "support/generators.hpp"

using namespace pfzero;
using namespace pfzero::algebra;
using pfzero::testing::random_poly;

namespace {
MultiPoly P(const char* s) { return parse_polynomial(s); }
const MultiPoly X = MultiPoly::variable(Var::x);
const MultiPoly Y = MultiPoly::variable(Var::y);
} // namespace

TEST_CASE("poly_arith examples") {
    CHECK((X + Y) * (X - Y) == P("x^2 - y^2"));
    CHECK(P("3*x^2*y").derive(Var::x) == P("6*x*y"));
    const MultiPoly s = P("x^2+y^2");
    CHECK((s + (-s)).is_zero());
    CHECK((s + (-s)).terms().empty());
}

TEST_CASE("degree and accessors") {
    const MultiPoly p = P("x^3 - x*y^2 + y");
    CHECK(p.degree() == 3);
    CHECK(p.homogeneous_part(3) == P("x^3 - x*y^2"));
    CHECK(p.degree_in(Var::y) == 2);
    CHECK(p.variables() == std::vector<Var>{Var::x, Var::y});
    CHECK(MultiPoly().degree() == -1);
}

TEST_CASE("text grammar") {
    CHECK(P("x^2+y^2") == X * X + Y * Y);
    CHECK(P("3/2*x*y - t") == Rational(3, 2) * X * Y - MultiPoly::variable(Var::t));
    CHECK(P(" 3 * x ^ 2 * y-1/2*y^3+t ").to_string() == "3*x^2*y - 1/2*y^3 + t");
    CHECK(P("-x").to_string() == "-x");
    CHECK(P("2*x*3").to_string() == "6*x");
    CHECK(P("0").to_string() == "0");
    CHECK(P("-7/3").to_string() == "-7/3");

    try {
        (void)P("x^");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.offset() == 2);
    }
    CHECK_THROWS_AS(P(""), ParseError);
    CHECK_THROWS_AS(P("x + z"), ParseError);
    CHECK_THROWS_AS(P("x++y"), ParseError);
    CHECK_THROWS_AS(P("1/0"), ParseError);
}

TEST_CASE("text round trip is bit exact on random polynomials") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 100; ++i) {
        MultiPoly p = random_poly(rng, {Var::x, Var::y, Var::t}, 5, 9);
        p *= pfzero::testing::random_rational(rng, 5, 7) + Rational(11);
        const std::string s = p.to_string();
        CHECK(parse_polynomial(s) == p);
        CHECK(parse_polynomial(s).to_string() == s);
    }
}

TEST_CASE("parse_rational accepts fractions and decimals exactly") {
    CHECK(parse_rational("1/2") == Rational(1, 2));
    CHECK(parse_rational("0.1") == Rational(1, 10));
    CHECK(parse_rational("-2.5e-1") == Rational(-1, 4));
    CHECK(parse_rational("3") == Rational(3));
    CHECK(parse_rational("0.9") == Rational(9, 10));
    CHECK(parse_rational("08/09") == Rational(8, 9));
    CHECK(parse_rational("010") == Rational(10));
    CHECK(parse_polynomial("010*x") == parse_polynomial("10*x"));
    CHECK_THROWS_AS(parse_rational("abc"), ParseError);
}

TEST_CASE("ring axioms and Leibniz rule on random triples") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 50; ++i) {
        const auto a = random_poly(rng, {Var::x, Var::y, Var::t}, 3, 5);
        const auto b = random_poly(rng, {Var::x, Var::y, Var::t}, 3, 5);
        const auto c = random_poly(rng, {Var::x, Var::y, Var::t}, 3, 5);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        for (Var v : {Var::x, Var::y, Var::t})
            CHECK((a * b).derive(v) == a.derive(v) * b + a * b.derive(v));
    }
}

TEST_CASE("poly_gcd examples") {
    CHECK(poly_gcd(P("x^2 - y^2"), P("x - y")) == P("x - y"));
    CHECK(poly_gcd(P("2*x"), P("2*y")) == MultiPoly(1));
    CHECK(poly_gcd(P("x^3"), P("x^2")) == P("x^2"));
    CHECK(poly_gcd(P("3*x + 6"), MultiPoly()) == P("x + 2"));
    CHECK_THROWS_AS(poly_gcd(MultiPoly(), MultiPoly()), Error);
}

TEST_CASE("poly_gcd recovers planted common factors") {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 30; ++i) {
        auto g = random_poly(rng, {Var::x, Var::y}, 2, 4);
        auto a = random_poly(rng, {Var::x, Var::y}, 2, 4);
        auto b = random_poly(rng, {Var::x, Var::y}, 2, 4);
        if (g.degree() < 1 || a.is_zero() || b.is_zero()) continue;
        const auto h = poly_gcd(g * a, g * b);
        CHECK(divide_exact(h, g.monic()).has_value());
        CHECK(divide_exact(g * a, h).has_value());
        CHECK(divide_exact(g * b, h).has_value());
    }
}

TEST_CASE("resultant examples") {
    CHECK(resultant(P("y^2 + x^2 - t"), P("2*y"), Var::y) == P("4*x^2 - 4*t"));
    CHECK(resultant(P("x - 1"), P("x - 1"), Var::x).is_zero());
    CHECK(resultant(P("x - 1"), P("x - 3"), Var::x) == MultiPoly(2));
    CHECK(resultant(P("3*x^2 - 3"), P("2*y"), Var::y) == P("3*x^2 - 3"));
    CHECK_THROWS_AS(resultant(MultiPoly(), P("x"), Var::x), Error);
}

TEST_CASE("resultant vanishes exactly when gcd is nonconstant") {
    std::mt19937_64 rng(19);
    std::uniform_int_distribution<int> coin(0, 1), root(-4, 4);
    int shared = 0;
    for (int i = 0; i < 100; ++i) {
        auto f = random_poly(rng, {Var::x}, 5, 6, 0.8);
        auto g = random_poly(rng, {Var::x}, 5, 6, 0.8);
        if (coin(rng)) {
            const MultiPoly common = X - MultiPoly(root(rng));
            f = f * common;
            g = g * common;
            ++shared;
        }
        if (f.degree_in(Var::x) < 1 || g.degree_in(Var::x) < 1) continue;
        const bool res_zero = resultant(f, g, Var::x).is_zero();
        const bool common_factor = poly_gcd(f, g).degree() > 0;
        CHECK(res_zero == common_factor);
    }
    CHECK(shared > 20);
}

TEST_CASE("exact_linear_solve examples") {
    auto s = exact_linear_solve({{Rational(2)}}, {Rational(4)});
    CHECK(s.values == std::vector<Rational>{Rational(2)});
    CHECK(s.rank == 1);
    CHECK(determinant(std::vector<std::vector<Rational>>{{Rational(1), Rational(2)}, {Rational(3), Rational(4)}}) == Rational(-2));
    CHECK_THROWS_AS(exact_linear_solve({{Rational(1), Rational(1)}, {Rational(2), Rational(2)}},
                                       {Rational(1), Rational(3)}),
                    Error);
    try {
        exact_linear_solve({{Rational(1), Rational(1)}, {Rational(2), Rational(2)}}, {Rational(1), Rational(3)});
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Inconsistent);
    }
}

TEST_CASE("exact_linear_solve sets free columns to zero") {
    // u0 + u1 = 3 with u1 free.
    auto s = exact_linear_solve({{Rational(1), Rational(1)}, {Rational(2), Rational(2)}}, {Rational(3), Rational(6)});
    CHECK(s.rank == 1);
    CHECK(s.values == std::vector<Rational>{Rational(3), Rational(0)});
    CHECK(s.free_columns == std::vector<int>{1});
}

TEST_CASE("exact_linear_solve residual is identically zero on random systems") {
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<int> dim(1, 9), zero(0, 3);
    for (int trial = 0; trial < 60; ++trial) {
        const int rows = dim(rng), cols = dim(rng);
        std::vector<std::vector<Rational>> m(static_cast<std::size_t>(rows), std::vector<Rational>(static_cast<std::size_t>(cols)));
        std::vector<Rational> u(static_cast<std::size_t>(cols));
        for (auto& x : u) x = pfzero::testing::random_rational(rng, 7, 5);
        for (auto& r : m)
            for (auto& x : r) x = zero(rng) == 0 ? Rational(0) : pfzero::testing::random_rational(rng, 9, 4);
        // Consistent right-hand side.
        std::vector<Rational> v(static_cast<std::size_t>(rows));
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) v[static_cast<std::size_t>(i)] += m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] * u[static_cast<std::size_t>(j)];
        const auto s = exact_linear_solve(m, v);
        for (int i = 0; i < rows; ++i) {
            Rational acc(0);
            for (int j = 0; j < cols; ++j) acc += m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] * s.values[static_cast<std::size_t>(j)];
            CHECK(acc == v[static_cast<std::size_t>(i)]);
        }
        CHECK(s.rank == matrix_rank(m));
    }
}

TEST_CASE("determinant matches cofactor expansion") {
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<std::vector<Rational>> m(4, std::vector<Rational>(4));
        for (auto& r : m)
            for (auto& x : r) x = pfzero::testing::random_rational(rng, 5, 3);
        // Leibniz formula over all 24 permutations.
        std::vector<int> perm{0, 1, 2, 3};
        Rational ref(0);
        do {
            int inv = 0;
            for (int i = 0; i < 4; ++i)
                for (int j = i + 1; j < 4; ++j) inv += perm[static_cast<std::size_t>(i)] > perm[static_cast<std::size_t>(j)];
            Rational prod(1);
            for (int i = 0; i < 4; ++i) prod *= m[static_cast<std::size_t>(i)][static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])];
            ref += (inv % 2) ? Rational(-prod) : prod;
        } while (std::next_permutation(perm.begin(), perm.end()));
        CHECK(determinant(m) == ref);
    }
}

TEST_CASE("ratfunc_normalize examples") {
    const RatFunc a = ratfunc_normalize(P("2*t^2 + 2*t"), P("2*t"));
    CHECK(a.num() == P("t + 1"));
    CHECK(a.den() == MultiPoly(1));
    const RatFunc b = ratfunc_normalize(P("t"), P("t"));
    CHECK(b.num() == MultiPoly(1));
    CHECK(b.den() == MultiPoly(1));
    const RatFunc c = ratfunc_normalize(P("t^2 - 1"), P("2*t - 2"));
    CHECK(c.num() == P("t + 1"));
    CHECK(c.den() == MultiPoly(2));
    CHECK(c.monic_form().first == P("1/2*t + 1/2"));
    CHECK(c.monic_form().second == MultiPoly(1));
    // Idempotent.
    CHECK(ratfunc_normalize(c.num(), c.den()) == c);
    CHECK_THROWS_AS(ratfunc_normalize(P("t"), MultiPoly()), Error);
}

TEST_CASE("rational function field operations") {
    const RatFunc a(P("t"), P("t^2 - 1"));
    const RatFunc b(P("1"), P("t + 1"));
    CHECK(a - b == RatFunc(MultiPoly(1), P("t^2 - 1")));
    CHECK(a * RatFunc(P("t - 1")) == RatFunc(P("t"), P("t + 1")));
    CHECK((a / a) == RatFunc(MultiPoly(1)));
    CHECK(RatFunc(MultiPoly(1), P("t")).derivative() == RatFunc(MultiPoly(-1), P("t^2")));
}

TEST_CASE("eval_complex examples") {
    using C = std::complex<double>;
    CHECK(std::abs(eval_complex(P("x^2 + y^2"), {C(1), C(0, 1), C(0)})) < 1e-15);
    CHECK(std::abs(eval_complex(P("t^2 + 1"), {C(0), C(0), C(0, 1)})) < 1e-15);
    CHECK(eval_complex(P("t^2 + 1"), {C(0), C(0), C(2)}) == C(5));
    CHECK(std::abs(eval_complex(P("t^2 + 1"), {C(0), C(0), C(2)}, 200) - C(5)) == 0.0);
}

TEST_CASE("eval_complex is multiplicative within 1e-12 relative") {
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int i = 0; i < 100; ++i) {
        const auto a = random_poly(rng, {Var::x, Var::y, Var::t}, 3, 1000);
        const auto b = random_poly(rng, {Var::x, Var::y, Var::t}, 3, 1000);
        ComplexPoint pt;
        for (auto& z : pt) z = {u(rng) * 1.4, u(rng) * 1.4};
        const MultiPoly ab = a * b;
        const auto lhs = eval_complex(ab, pt);
        const auto rhs = eval_complex(a, pt) * eval_complex(b, pt);
        // Relative to the scale of the operands, which bounds the rounding.
        double scale = 0;
        for (const auto& [m, c] : ab.terms()) scale += std::abs(c.get_d()) * std::pow(2.0, m.degree());
        CHECK(std::abs(lhs - rhs) <= 1e-12 * std::max(1.0, scale));
    }
}

TEST_CASE("isolate_roots finds simple and multiple roots") {
    const auto r = isolate_roots(P("t^3 - t"), Var::t);
    REQUIRE(r.size() == 3);
    CHECK(std::abs(r[0].value - std::complex<double>(-1)) < 1e-12);
    CHECK(std::abs(r[1].value) < 1e-12);
    CHECK(std::abs(r[2].value - std::complex<double>(1)) < 1e-12);
    const auto d = isolate_roots(P("t^3 - 4*t^2 + 4*t"), Var::t); // t (t-2)^2
    REQUIRE(d.size() == 2);
    CHECK(d[1].multiplicity == 2);
    CHECK(std::abs(d[1].value - std::complex<double>(2)) < 1e-12);
    const auto c = isolate_roots(P("t^2 + 1"), Var::t);
    REQUIRE(c.size() == 2);
    CHECK(std::abs(std::abs(c[0].value.imag()) - 1) < 1e-12);
}
