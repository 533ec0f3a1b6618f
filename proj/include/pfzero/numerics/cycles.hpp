#pragma once

#include "pfzero/hamiltonian/hamiltonian.hpp"
#include "pfzero/petrov/oneform.hpp"

#include <array>
#include <complex>
#include <vector>

namespace pfzero::numerics {

using hamiltonian::Hamiltonian;
using petrov::OneForm;
using Complex = std::complex<double>;

/// Closed real oval of {H = t}, positively oriented (enclosed region on the
/// left). The first point is not repeated at the end.
struct CyclePolyline {
    std::vector<std::array<double, 2>> points;
    double closure_gap = 0;
    double level = 0;
    algebra::MultiPoly curve; // H, kept for projecting quadrature nodes
};

struct TraceOptions {
    // Refuse levels closer than this (relative) to a critical value.
    double critical_margin = 1e-8;
    // Half-width of the tracing box; 0 selects max(10, 4 (1+|t|)^(1/d)).
    double box = 0;
};

CyclePolyline trace_cycle(const Hamiltonian& H, double t, std::array<double, 2> seed, const TraceOptions& opt = {});

struct Period {
    Complex value;
    double error_estimate = 0;
};

/// Integral of omega over the traced oval, Gauss-Legendre on curved arcs.
Period period_quadrature(const CyclePolyline& cycle, const OneForm& omega);

/// The same oval traversed backwards.
CyclePolyline reversed(const CyclePolyline& cycle);

/// A cycle on the complex curve {H = t}: a closed contour in the x-plane
/// enclosing exactly two branch points of y(x), lifted by continuation of y.
/// The contour is a confocal ellipse x = c + L u cosh(xi + i (theta + pi/2)),
/// starting on the minor axis, away from both foci.
struct LiftedCycle {
    Complex center;
    Complex half_axis; // L u: half the vector between the two branch points
    double xi = 0;
    Complex level;   // t the cycle was built at
    Complex y_start; // sheet at theta = 0 on that level
};

/// All two-branch-point cycles of {H = t} whose contour stays clear of the
/// remaining branch points and poles of y(x). Requires deg_y H >= 1.
std::vector<LiftedCycle> lifted_cycles(const Hamiltonian& H, Complex t);

/// Periods of every form over the cycle at level t (which may differ
/// slightly from the level the cycle was built for; the sheet is followed by
/// continuity). Trapezoid rule in theta, doubled until converged.
std::vector<Period> lifted_periods(const Hamiltonian& H, Complex t, const LiftedCycle& cycle,
                                   const std::vector<OneForm>& forms);

} // namespace pfzero::numerics
