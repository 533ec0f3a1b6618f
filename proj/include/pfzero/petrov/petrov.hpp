#pragma once

#include "pfzero/hamiltonian/hamiltonian.hpp"
#include "pfzero/petrov/oneform.hpp"

#include <utility>
#include <vector>

namespace pfzero::petrov {

using hamiltonian::Hamiltonian;

/// (a, b) with H_x b - H_y a = g, degrees at most deg_cap.
std::pair<MultiPoly, MultiPoly> ideal_representation(const MultiPoly& g, const Hamiltonian& H, int deg_cap);

/// omega = sum c_i(H) omega_i + dA + B dH.
struct PetrovDecomposition {
    std::vector<MultiPoly> coeffs; // c_i(t), polynomials in t
    MultiPoly A;
    MultiPoly B;
    int ansatz_degree = 0; // deg A used by the successful solve
};

PetrovDecomposition petrov_decompose(const OneForm& omega, const Hamiltonian& H, const std::vector<OneForm>& basis);

/// sum c_i(H) omega_i + dA + B dH, for checking a decomposition.
OneForm reconstruct(const PetrovDecomposition& dec, const Hamiltonian& H, const std::vector<OneForm>& basis);

} // namespace pfzero::petrov
