#pragma once

#include "pfzero/algebra/poly_matrix.hpp"
#include "pfzero/algebra/ratfunc.hpp"
#include "pfzero/algebra/roots.hpp"
#include "pfzero/hamiltonian/hamiltonian.hpp"
#include "pfzero/petrov/oneform.hpp"

#include <complex>
#include <vector>

namespace pfzero::pfsystem {

using algebra::MultiPoly;
using algebra::PolyMatrix;
using algebra::RatFunc;
using hamiltonian::Hamiltonian;
using petrov::OneForm;

/// omega_i = x^{a+1} y^b / (a+1) dy for each basis monomial x^a y^b.
std::vector<OneForm> make_basis_forms(const hamiltonian::MonomialBasis& basis);

/// The Euler-type multiplier (x H_x + y H_y)^2 used to build the system.
MultiPoly euler_multiplier(const Hamiltonian& H);

/// alpha with dH ^ alpha = d((x H_x + y H_y)^2 omega).
OneForm gelfand_leray_rhs(const Hamiltonian& H, const OneForm& omega);

/// I' = (A / a) I for the period vector I of the basis forms.
struct PFSystem {
    int dim = 0;
    PolyMatrix A;
    MultiPoly a;
    PolyMatrix K;
    PolyMatrix L;
    hamiltonian::MonomialBasis basis;
    std::vector<OneForm> forms;
    Hamiltonian H;
    hamiltonian::SingularSet sigma;
};

PFSystem assemble_pf_system(const Hamiltonian& H);

/// Same, with explicitly supplied basis forms (diagnostics; a dependent set
/// yields DegenerateK).
PFSystem assemble_pf_system(const Hamiltonian& H, const std::vector<OneForm>& forms);

/// A_0 = Id, A_{j+1} = a A_j' + A_j (A - j a' Id), so a^j I^{(j)} = A_j I.
std::vector<PolyMatrix> derivative_matrices(const PFSystem& sys, int count);

/// Monic linear ODE y^(n) + coeffs[0] y^(n-1) + ... + coeffs[n-1] y = 0.
struct ScalarODE {
    int order = 0;
    std::vector<RatFunc> coeffs;
    MultiPoly denominator; // lcm of coefficient denominators, monic
    std::vector<algebra::RootEnclosure> pole_set;
    std::vector<hamiltonian::CriticalValue> true_singularities;

    /// Coefficient of y^(j) in the monic form (1 for j == order).
    RatFunc coefficient_of_derivative(int j) const;
};

/// Scalar ODE satisfied by component m of I.
ScalarODE derive_scalar_ode(const PFSystem& sys, int m);

/// Prepends I_0 = sum mu_i(t) I_i and derives the ODE of I_0. Constant mu
/// gives the classical augmented equation; constants always solve it.
ScalarODE augment_and_reduce(const PFSystem& sys, const std::vector<MultiPoly>& mu);

/// Apply the monic ODE operator to a function given by its derivative
/// values f[0..order] at t.
std::complex<double> apply_operator(const ScalarODE& ode, std::complex<double> t,
                                    const std::vector<std::complex<double>>& derivatives);

} // namespace pfzero::pfsystem
