#pragma once

#include <complex>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace pfzero::zerocount {

using Complex = std::complex<double>;

struct Disc {
    Complex center;
    double radius = 0;
};

struct Polygon {
    std::vector<Complex> vertices; // either orientation, not closed
};

using Region = std::variant<Disc, Polygon>;

/// A region in the plane cut along rays from the singular points.
struct SimpleDomain {
    std::vector<Complex> sigma;
    std::vector<Complex> ray_directions; // one per sigma point, any nonzero length
    Region region;
    double rho = 0.1;
    bool relaxed_bounds = false; // allow regions leaving the unit disc
};

/// Clearance constant: segments keep rho / (kClearanceConstant |Z|) from poles.
inline constexpr double kClearanceConstant = 4.0;
/// Segment count cap per max(1, |sigma|^2).
inline constexpr int kSegmentCapFactor = 64;

struct Segment {
    Complex a, b;
    double length() const { return std::abs(b - a); }
};

struct SegmentSet {
    std::vector<Segment> segments;
    double clearance_to_poles = 0;  // achieved minimum distance to the pole set
    double required_clearance = 0;  // rho / (4 |Z|)
    double frame_clearance = 0;     // achieved distance to the outer frame
    int segment_cap = 0;
    std::vector<std::string> provenance;
};

double distance_to_region(const Region& r, Complex p);
double region_area(const Region& r);
bool region_in_unit_disc(const Region& r);
/// Closed boundary of the region as a polyline (disc: regular polygon
/// through boundary points with n vertices).
std::vector<Complex> region_boundary(const Region& r, int n);

/// Ray directions pointing away from the region, rotated where needed so
/// that rays neither cross each other nor meet the region.
std::vector<Complex> auto_rays(const std::vector<Complex>& sigma, const Region& region);

/// Checks the domain invariants; throws InvalidRays, InfeasibleClearance or
/// DegenerateInput.
void validate(const SimpleDomain& dom);

/// Boundary segments of polygonal pieces covering the cut region, clipped to
/// a frame around it and kept clear of the poles.
SegmentSet decompose_simple_domain(const SimpleDomain& dom, const std::vector<Complex>& poles);

} // namespace pfzero::zerocount
