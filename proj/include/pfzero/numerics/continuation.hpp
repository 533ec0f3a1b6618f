#pragma once

#include "pfzero/pfsystem/pfsystem.hpp"

#include <complex>
#include <vector>

namespace pfzero::numerics {

using Complex = std::complex<double>;

struct PeriodSample {
    Complex t;
    std::vector<Complex> periods;
    double error_estimate = 0;
};

struct ContinuationOptions {
    double rtol = 1e-10;
    double atol = 1e-14;
    // Minimum distance from the path to any root of a(t).
    double pole_margin = 1e-3;
    // Dense-output samples per path segment (the segment end is always one).
    int samples_per_segment = 1;
};

/// Continues I' = (A/a) I along the polyline `path` (path[0] == initial.t).
/// Returns the initial sample followed by the requested samples.
std::vector<PeriodSample> integrate_pf_numeric(const pfsystem::PFSystem& sys, const std::vector<Complex>& path,
                                               const PeriodSample& initial, const ContinuationOptions& opt = {});

} // namespace pfzero::numerics
