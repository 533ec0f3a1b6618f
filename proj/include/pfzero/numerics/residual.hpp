#pragma once

#include "pfzero/numerics/cycles.hpp"
#include "pfzero/pfsystem/pfsystem.hpp"

#include <vector>

namespace pfzero::numerics {

struct ResidualSample {
    double t = 0;
    int cycles = 0;            // independent cycles checked at this level
    double max_relative = 0;   // worst ||a I' - A I|| / (||A I|| + floor) over cycles
    std::vector<double> per_cycle;
};

struct ResidualReport {
    std::vector<ResidualSample> samples;
    double max_relative = 0;
};

/// Checks a I' = A I on period vectors of the system's basis forms. Periods
/// come from quadrature over lifted complex cycles at each level (which also
/// covers curves without real ovals); I' from central differences with step
/// 1e-5 max(1, |t|).
ResidualReport residual_check(const pfsystem::PFSystem& sys, const Hamiltonian& H, const std::vector<double>& t_samples);

} // namespace pfzero::numerics
