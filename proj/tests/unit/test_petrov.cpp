#include <doctest.h>

#include "pfzero/algebra/text.hpp"
#include "pfzero/errors.hpp"
#include "pfzero/petrov/petrov.hpp"
#include "pfzero/pfsystem/pfsystem.hpp"
#include "support/hamiltonians.hpp"

using namespace pfzero;
using namespace pfzero::algebra;
using namespace pfzero::petrov;
using hamiltonian::make_hamiltonian;

namespace {
MultiPoly P(const char* s) { return parse_polynomial(s); }
const auto circle = make_hamiltonian(P("x^2 + y^2"));
const std::vector<OneForm> circle_basis{{MultiPoly(), P("x")}};
} // namespace

TEST_CASE("ideal_representation examples") {
    auto [a, b] = ideal_representation(P("20*x^4 + 24*x^2*y^2 + 4*y^4"), circle, 8);
    CHECK(a == P("-2*y^3"));
    CHECK(b == P("10*x^3 + 12*x*y^2"));

    try {
        (void)ideal_representation(MultiPoly(1), circle, 8);
        FAIL("expected NotInIdeal");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotInIdeal);
    }

    auto [a2, b2] = ideal_representation(P("2*x"), circle, 8);
    CHECK(a2.is_zero());
    CHECK(b2 == MultiPoly(1));
}

TEST_CASE("ideal_representation satisfies the defining identity on the cubic") {
    const auto h = make_hamiltonian(P("x^3 - x*y^2 + y"));
    std::mt19937_64 rng(5);
    for (int i = 0; i < 20; ++i) {
        const auto u = pfzero::testing::random_poly(rng, {Var::x, Var::y}, 4, 5);
        const auto v = pfzero::testing::random_poly(rng, {Var::x, Var::y}, 4, 5);
        const MultiPoly g = h.dx() * u - h.dy() * v;
        auto [a, b] = ideal_representation(g, h, 12);
        CHECK(h.dx() * b - h.dy() * a == g);
    }
}

TEST_CASE("petrov_decompose examples") {
    auto d1 = petrov_decompose({MultiPoly(), P("x^2")}, circle, circle_basis);
    CHECK(d1.coeffs == std::vector<MultiPoly>{MultiPoly()});
    CHECK(d1.A == P("x^2*y + 2/3*y^3"));
    CHECK(d1.B == P("-y"));

    auto d2 = petrov_decompose({P("y"), MultiPoly()}, circle, circle_basis);
    CHECK(d2.coeffs == std::vector<MultiPoly>{MultiPoly(-1)});
    CHECK(d2.A == P("x*y"));
    CHECK(d2.B.is_zero());

    const MultiPoly h2 = circle.poly * circle.poly;
    auto d3 = petrov_decompose({MultiPoly(), Rational(4) * h2 * P("x")}, circle, circle_basis);
    CHECK(d3.coeffs == std::vector<MultiPoly>{P("4*t^2")});
    CHECK(d3.A.is_zero());
    CHECK(d3.B.is_zero());
}

TEST_CASE("decompositions reconstruct exactly and respect the coefficient degree bound") {
    std::mt19937_64 rng(53);
    int successes = 0;
    for (int i = 0; i < 60; ++i) {
        const int d = 2 + i % 3;
        const auto h = make_hamiltonian(pfzero::testing::random_regular_hamiltonian(rng, d));
        const auto basis = pfsystem::make_basis_forms(hamiltonian::monomial_basis(h));
        const OneForm w{pfzero::testing::random_poly(rng, {Var::x, Var::y}, 2 * d, 5, 0.3),
                        pfzero::testing::random_poly(rng, {Var::x, Var::y}, 2 * d, 5, 0.3)};
        const auto dec = petrov_decompose(w, h, basis);
        CHECK(reconstruct(dec, h, basis) == w);
        for (std::size_t k = 0; k < basis.size(); ++k)
            if (!dec.coeffs[k].is_zero()) CHECK(dec.coeffs[k].degree() * d <= w.degree() - basis[k].degree());
        ++successes;
    }
    CHECK(successes == 60);
}

TEST_CASE("decomposition is linear when ansatz degrees agree") {
    const auto h = make_hamiltonian(P("x^3 - x*y^2 + y"));
    const auto basis = pfsystem::make_basis_forms(hamiltonian::monomial_basis(h));
    const OneForm w1{P("x^2*y"), P("y^3 - x")};
    const OneForm w2{P("x*y^2 + 3"), P("x^3 + 2*y")};
    const auto d1 = petrov_decompose(w1, h, basis);
    const auto d2 = petrov_decompose(w2, h, basis);
    const auto d12 = petrov_decompose(w1 + w2, h, basis);
    REQUIRE(d1.ansatz_degree == d12.ansatz_degree);
    REQUIRE(d2.ansatz_degree == d12.ansatz_degree);
    for (std::size_t k = 0; k < basis.size(); ++k) CHECK(d12.coeffs[k] == d1.coeffs[k] + d2.coeffs[k]);
    CHECK(d12.A == d1.A + d2.A);
    CHECK(d12.B == d1.B + d2.B);
}
