#pragma once

#include "pfzero/pfsystem/pfsystem.hpp"
#include "pfzero/zerocount/domain.hpp"

#include <functional>
#include <numbers>
#include <optional>

namespace pfzero::zerocount {

/// Rigorous upper bound C on max_j sup |c_j(t)| over a segment, where c_j are
/// the coefficients of the monic ODE.  Branch and bound over subsegments with
/// outward-rounded interval Taylor enclosures; stops once C <= (1 + tol) L for
/// a certified lower bound L of the supremum.
double coefficient_sup(const pfsystem::ScalarODE& ode, const Segment& seg, double tol = 1e-6);
double coefficient_sup(const pfsystem::ScalarODE& ode, const SegmentSet& segs, double tol = 1e-6);

/// Bound on the variation of argument of a solution along a segment of
/// length l where the coefficients are bounded by C (clamped to C >= 1).
double yakovenko_varbound(int n, double l, double C);

struct WindingOptions {
    int initial_samples = 64;
    int max_level = 12;          // each level doubles the sample count
    double zero_floor = 1e-12;   // relative to the largest sample modulus
    double max_increment = std::numbers::pi / 2;
    double max_residual = 0.25;
};

/// Winding number of a closed sampled path.  sample(n) returns n values at
/// equally spaced parameters of the closed contour (no repeated endpoint).
/// Doubles n until every phase increment is below max_increment.
int winding_count(const std::function<std::vector<Complex>(int)>& sample, const WindingOptions& opt = {});

/// Convenience: f evaluated along a closed polyline through the vertices.
int winding_count(const std::function<Complex(Complex)>& f, const std::vector<Complex>& vertices,
                  const WindingOptions& opt = {});

struct ZeroBoundReport {
    std::vector<Segment> segments;
    std::vector<double> per_segment_sup;
    std::vector<double> per_segment_varbound;
    long long total_bound = 0;
    std::optional<int> numeric_count;
    SegmentSet decomposition;
};

struct ZeroBoundOptions {
    double tol = 1e-6;
    /// When set, the zeros of this solution inside the region are counted by
    /// the argument principle along the region boundary.
    std::function<Complex(Complex)> solution;
    WindingOptions winding;
};

/// Decompose, bound the coefficients on every segment, and add up the
/// variation bounds divided by 2 pi.
ZeroBoundReport zero_count_bound(const pfsystem::ScalarODE& ode, const SimpleDomain& dom,
                                 const ZeroBoundOptions& opt = {});

} // namespace pfzero::zerocount
