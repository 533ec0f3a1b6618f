#pragma once

#include "pfzero/algebra/multipoly.hpp"

#include <complex>
#include <vector>

namespace pfzero::hamiltonian {

using algebra::Monomial;
using algebra::MultiPoly;

struct Hamiltonian {
    MultiPoly poly;
    int degree = 0;
    MultiPoly highest_part;

    MultiPoly dx() const { return poly.derive(algebra::Var::x); }
    MultiPoly dy() const { return poly.derive(algebra::Var::y); }
};

/// Validates H (variables x, y only, degree >= 2) and caches its top part.
Hamiltonian make_hamiltonian(const MultiPoly& poly);

MultiPoly highest_part(const MultiPoly& H);

/// True iff the top homogeneous part is a product of pairwise distinct
/// linear factors.
bool is_regular_at_infinity(const Hamiltonian& H);

struct CriticalValue {
    std::complex<double> value;
    double radius = 0;
    int multiplicity = 1; // sum of Milnor numbers over the fibre
};

struct SingularSet {
    std::vector<CriticalValue> critical_values;
    int count_with_multiplicity = 0;
    // Set when H is not regular at infinity: atypical values may then be
    // missing from the list.
    bool may_miss_atypical = false;
    // Characteristic polynomial of multiplication by H on C[x,y]/<H_x,H_y>;
    // its roots are exactly the critical values.
    MultiPoly eliminant;
};

SingularSet critical_values(const Hamiltonian& H);

struct MonomialBasis {
    std::vector<Monomial> monomials;
    std::vector<Monomial> leading_term_diagram;

    std::size_t size() const { return monomials.size(); }
};

/// Standard monomials of C[x,y]/<H~_x, H~_y> under grevlex x > y.
MonomialBasis monomial_basis(const Hamiltonian& H);

} // namespace pfzero::hamiltonian
