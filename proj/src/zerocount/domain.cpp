#include "pfzero/zerocount/domain.hpp"

#include "pfzero/errors.hpp"

#include <boost/geometry.hpp>
#include <boost/geometry/geometries/point_xy.hpp>
#include <boost/geometry/geometries/polygon.hpp>
#include <boost/geometry/geometries/segment.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace pfzero::zerocount {

namespace bg = boost::geometry;

namespace {

using Pt = bg::model::d2::point_xy<double>;
using Poly = bg::model::polygon<Pt>;
using MultiPoly = bg::model::multi_polygon<Poly>;
using Seg = bg::model::segment<Pt>;

constexpr double kPi = std::numbers::pi;

Pt pt(Complex z) { return {z.real(), z.imag()}; }
Complex cx(const Pt& p) { return {p.x(), p.y()}; }

Poly make_polygon(const std::vector<Complex>& vs) {
    Poly p;
    for (const Complex& v : vs) p.outer().push_back(pt(v));
    bg::correct(p);
    return p;
}

Poly rectangle(double x0, double y0, double x1, double y1) {
    return make_polygon({{x0, y0}, {x1, y0}, {x1, y1}, {x0, y1}});
}

Poly square(Complex c, double h) { return rectangle(c.real() - h, c.imag() - h, c.real() + h, c.imag() + h); }

// Rectangle of half-width w along [a, b].
Poly strip(Complex a, Complex b, double w) {
    const Complex n = (b - a) / std::abs(b - a) * Complex(0, 1) * w;
    return make_polygon({a - n, b - n, b + n, a + n});
}

double point_segment_distance(Complex p, Complex a, Complex b) {
    const Complex ab = b - a;
    const double len2 = std::norm(ab);
    if (len2 == 0) return std::abs(p - a);
    const double s = std::clamp(((p - a) * std::conj(ab)).real() / len2, 0.0, 1.0);
    return std::abs(p - (a + s * ab));
}

double point_ray_distance(Complex p, Complex o, Complex u) {
    const double s = std::max(0.0, ((p - o) * std::conj(u)).real());
    return std::abs(p - (o + s * u));
}

double cross(Complex a, Complex b) { return a.real() * b.imag() - a.imag() * b.real(); }

bool rays_intersect(Complex o1, Complex u1, Complex o2, Complex u2) {
    const double den = cross(u1, u2);
    const Complex d = o2 - o1;
    if (std::abs(den) < 1e-14) {
        if (std::abs(cross(d, u1)) > 1e-12 * (1 + std::abs(d))) return false; // parallel, distinct lines
        // Collinear: disjoint only when pointing apart.
        const double along = (d * std::conj(u1)).real();
        const bool same = (u1 * std::conj(u2)).real() > 0;
        return same || along >= 0;
    }
    const double s = cross(d, u2) / den;
    const double r = cross(d, u1) / den;
    return s >= 0 && r >= 0;
}

double ray_region_distance(const Region& r, Complex o, Complex u, double far) {
    if (const auto* d = std::get_if<Disc>(&r)) return std::max(0.0, point_ray_distance(d->center, o, u) - d->radius);
    const Poly poly = make_polygon(std::get<Polygon>(r).vertices);
    return bg::distance(Seg(pt(o), pt(o + far * u)), poly);
}

std::array<double, 4> bounding_box(const Region& r) {
    if (const auto* d = std::get_if<Disc>(&r))
        return {d->center.real() - d->radius, d->center.imag() - d->radius, d->center.real() + d->radius,
                d->center.imag() + d->radius};
    std::array<double, 4> b{INFINITY, INFINITY, -INFINITY, -INFINITY};
    for (const Complex& v : std::get<Polygon>(r).vertices) {
        b[0] = std::min(b[0], v.real());
        b[1] = std::min(b[1], v.imag());
        b[2] = std::max(b[2], v.real());
        b[3] = std::max(b[3], v.imag());
    }
    return b;
}

Complex region_center(const Region& r) {
    const auto b = bounding_box(r);
    return {(b[0] + b[2]) / 2, (b[1] + b[3]) / 2};
}

double region_scale(const Region& r) {
    const auto b = bounding_box(r);
    return std::hypot(b[2] - b[0], b[3] - b[1]) + std::abs(region_center(r));
}

template <class F>
void for_each_edge(const MultiPoly& g, F&& f) {
    auto ring_edges = [&](const auto& ring) {
        for (std::size_t i = 0; i + 1 < ring.size(); ++i) f(cx(ring[i]), cx(ring[i + 1]));
    };
    for (const Poly& p : g) {
        ring_edges(p.outer());
        for (const auto& in : p.inners()) ring_edges(in);
    }
}

double boundary_distance(const MultiPoly& g, Complex z) {
    double best = INFINITY;
    for_each_edge(g, [&](Complex a, Complex b) { best = std::min(best, point_segment_distance(z, a, b)); });
    return best;
}

MultiPoly subtract(const MultiPoly& g, const Poly& p) {
    MultiPoly out;
    bg::difference(g, p, out);
    return out;
}

MultiPoly unite(const MultiPoly& g, const Poly& p) {
    MultiPoly out;
    bg::union_(g, p, out);
    return out;
}

// Closed ring edges with collinear runs merged.
void append_ring_segments(const std::vector<Complex>& ring, std::vector<Segment>& out) {
    std::vector<Complex> v;
    for (std::size_t i = 0; i + 1 < ring.size(); ++i)
        if (v.empty() || std::abs(ring[i] - v.back()) > 1e-14) v.push_back(ring[i]);
    while (v.size() > 1 && std::abs(v.front() - v.back()) <= 1e-14) v.pop_back();
    bool changed = true;
    while (changed && v.size() > 3) {
        changed = false;
        for (std::size_t i = 0; i < v.size() && v.size() > 3; ++i) {
            const Complex a = v[(i + v.size() - 1) % v.size()], b = v[i], c = v[(i + 1) % v.size()];
            if (std::abs(cross(b - a, c - b)) <= 1e-13 * std::abs(b - a) * std::abs(c - b) &&
                ((b - a) * std::conj(c - b)).real() > 0) {
                v.erase(v.begin() + static_cast<std::ptrdiff_t>(i));
                changed = true;
                break;
            }
        }
    }
    for (std::size_t i = 0; i < v.size(); ++i) out.push_back({v[i], v[(i + 1) % v.size()]});
}

} // namespace

double distance_to_region(const Region& r, Complex p) {
    if (const auto* d = std::get_if<Disc>(&r)) return std::max(0.0, std::abs(p - d->center) - d->radius);
    return bg::distance(pt(p), make_polygon(std::get<Polygon>(r).vertices));
}

double region_area(const Region& r) {
    if (const auto* d = std::get_if<Disc>(&r)) return kPi * d->radius * d->radius;
    return std::abs(bg::area(make_polygon(std::get<Polygon>(r).vertices)));
}

bool region_in_unit_disc(const Region& r) {
    if (const auto* d = std::get_if<Disc>(&r)) return std::abs(d->center) + d->radius <= 1 + 1e-12;
    const auto& vs = std::get<Polygon>(r).vertices;
    return std::all_of(vs.begin(), vs.end(), [](Complex v) { return std::abs(v) <= 1 + 1e-12; });
}

std::vector<Complex> region_boundary(const Region& r, int n) {
    if (const auto* d = std::get_if<Disc>(&r)) {
        std::vector<Complex> out;
        for (int k = 0; k < n; ++k) out.push_back(d->center + std::polar(d->radius, 2 * kPi * k / n));
        return out;
    }
    auto vs = std::get<Polygon>(r).vertices;
    double area2 = 0;
    for (std::size_t i = 0; i < vs.size(); ++i) area2 += cross(vs[i], vs[(i + 1) % vs.size()]);
    if (area2 < 0) std::reverse(vs.begin(), vs.end());
    return vs;
}

std::vector<Complex> auto_rays(const std::vector<Complex>& sigma, const Region& region) {
    const Complex c = region_center(region);
    const double far = 10 * (region_scale(region) + 1);
    std::vector<Complex> dirs;
    for (std::size_t i = 0; i < sigma.size(); ++i) {
        const double base = sigma[i] == c ? 0.0 : std::arg(sigma[i] - c);
        Complex best{};
        double best_dist = 0;
        for (int k = 0; k < 32; ++k) {
            const double off = (k % 2 ? 1 : -1) * ((k + 1) / 2) * kPi / 16;
            const Complex u = std::polar(1.0, base + off);
            bool ok = true;
            for (std::size_t j = 0; j < sigma.size() && ok; ++j) {
                if (j == i) continue;
                // Never pass through another cut point; never cross an earlier ray.
                if (point_ray_distance(sigma[j], sigma[i], u) < 1e-12) ok = false;
                else if (j < i && rays_intersect(sigma[i], u, sigma[j], dirs[j])) ok = false;
            }
            if (!ok) continue;
            const double dist = ray_region_distance(region, sigma[i], u, far);
            if (dist > best_dist * (1 + 1e-9)) {
                best_dist = dist;
                best = u;
            }
        }
        if (best_dist <= 0) throw Error(ErrorKind::InvalidRays, "no admissible ray direction for a cut point");
        dirs.push_back(best);
    }
    return dirs;
}

void validate(const SimpleDomain& dom) {
    if (!(dom.rho > 0) || !std::isfinite(dom.rho)) throw Error(ErrorKind::DegenerateInput, "rho must be positive");
    if (dom.sigma.size() != dom.ray_directions.size())
        throw Error(ErrorKind::InvalidRays, "one ray direction per cut point is required");
    if (const auto* d = std::get_if<Disc>(&dom.region); d && !(d->radius >= 0))
        throw Error(ErrorKind::DegenerateInput, "disc radius must be nonnegative");
    if (const auto* p = std::get_if<Polygon>(&dom.region); p && p->vertices.size() < 3)
        throw Error(ErrorKind::DegenerateInput, "polygon needs at least three vertices");
    if (!dom.relaxed_bounds && !region_in_unit_disc(dom.region))
        throw Error(ErrorKind::DegenerateInput, "region leaves the closed unit disc; enable relaxed bounds");
    const double far = 10 * (region_scale(dom.region) + 1);
    for (std::size_t i = 0; i < dom.sigma.size(); ++i) {
        const Complex u = dom.ray_directions[i];
        if (std::abs(u) == 0) throw Error(ErrorKind::InvalidRays, "zero ray direction");
        for (std::size_t j = i + 1; j < dom.sigma.size(); ++j)
            if (rays_intersect(dom.sigma[i], u / std::abs(u), dom.sigma[j], dom.ray_directions[j] / std::abs(dom.ray_directions[j])))
                throw Error(ErrorKind::InvalidRays, "rays intersect");
        if (ray_region_distance(dom.region, dom.sigma[i], u / std::abs(u), far * (1 + std::abs(dom.sigma[i]))) <= 0)
            throw Error(ErrorKind::InvalidRays, "a ray meets the region");
        if (distance_to_region(dom.region, dom.sigma[i]) < dom.rho)
            throw Error(ErrorKind::InfeasibleClearance, "region is closer than rho to a cut point");
    }
}

SegmentSet decompose_simple_domain(const SimpleDomain& dom, const std::vector<Complex>& poles) {
    validate(dom);
    SegmentSet out;
    const double rho = dom.rho;
    const std::size_t nsigma = dom.sigma.size();
    out.segment_cap = kSegmentCapFactor * static_cast<int>(std::max<std::size_t>(1, nsigma * nsigma));
    const std::size_t nz = std::max<std::size_t>(1, poles.size());
    out.required_clearance = rho / (kClearanceConstant * static_cast<double>(nz));
    {
        std::ostringstream s;
        s << "clearance constant " << kClearanceConstant << ", segment cap " << kSegmentCapFactor << "*max(1,|sigma|^2) = "
          << out.segment_cap;
        out.provenance.push_back(s.str());
    }
    if (region_area(dom.region) == 0) {
        out.provenance.push_back("region has zero area: no segments");
        out.clearance_to_poles = INFINITY;
        out.frame_clearance = INFINITY;
        return out;
    }

    const auto box = bounding_box(dom.region);
    const double ox0 = box[0] - rho, oy0 = box[1] - rho, ox1 = box[2] + rho, oy1 = box[3] + rho; // outer frame
    const double rx0 = box[0] - rho / 2, ry0 = box[1] - rho / 2, rx1 = box[2] + rho / 2, ry1 = box[3] + rho / 2;
    MultiPoly g{rectangle(rx0, ry0, rx1, ry1)};
    out.provenance.push_back("frame: region bounding box grown by rho/2");

    // Cut strips, thin enough to miss the region.
    const double far = 10 * (region_scale(dom.region) + 1);
    double width = rho / 4;
    for (std::size_t i = 0; i < nsigma; ++i) {
        const Complex u = dom.ray_directions[i] / std::abs(dom.ray_directions[i]);
        width = std::min(width, ray_region_distance(dom.region, dom.sigma[i], u, far) / 2);
    }
    std::vector<Poly> obstacles;
    for (std::size_t i = 0; i < nsigma; ++i) {
        const Complex s = dom.sigma[i];
        const Complex u = dom.ray_directions[i] / std::abs(dom.ray_directions[i]);
        obstacles.push_back(square(s, rho / 2));
        obstacles.push_back(strip(s, s + (far + std::abs(s)) * u, width));
    }
    for (const Poly& o : obstacles) g = subtract(g, o);
    if (nsigma > 0) {
        std::ostringstream s;
        s << nsigma << " cut point(s): squares of half-width rho/2, ray strips of half-width " << width;
        out.provenance.push_back(s.str());
    }

    // Keep the boundary clear of every pole by cutting out or adding a small
    // square around it.
    const double c = out.required_clearance;
    const double h = c * (1 + 1e-6);
    for (int pass = 0; pass < 4 && !g.empty(); ++pass) {
        bool changed = false;
        for (const Complex& z : poles) {
            if (boundary_distance(g, z) >= c) continue;
            const Poly sq = square(z, h);
            if (distance_to_region(dom.region, z) > h * std::sqrt(2.0)) {
                g = subtract(g, sq);
                out.provenance.push_back("pole near boundary: square cut out");
            } else {
                bool clear = z.real() - h >= rx0 && z.real() + h <= rx1 && z.imag() - h >= ry0 && z.imag() + h <= ry1;
                for (const Poly& o : obstacles) clear = clear && bg::distance(pt(z), o) > h * std::sqrt(2.0);
                if (!clear) throw Error(ErrorKind::InfeasibleClearance, "cannot keep the boundary clear of a pole");
                g = unite(g, sq);
                out.provenance.push_back("pole near boundary: square added");
            }
            changed = true;
        }
        if (!changed) break;
    }

    for (const Poly& p : g) {
        auto ring = [](const auto& r) {
            std::vector<Complex> v;
            for (const Pt& q : r) v.push_back(cx(q));
            return v;
        };
        append_ring_segments(ring(p.outer()), out.segments);
        for (const auto& in : p.inners()) append_ring_segments(ring(in), out.segments);
    }

    // Invariants.
    out.clearance_to_poles = INFINITY;
    for (const Complex& z : poles)
        for (const Segment& s : out.segments)
            out.clearance_to_poles = std::min(out.clearance_to_poles, point_segment_distance(z, s.a, s.b));
    out.frame_clearance = INFINITY;
    for (const Segment& s : out.segments)
        for (const Complex& e : {s.a, s.b})
            out.frame_clearance = std::min({out.frame_clearance, e.real() - ox0, ox1 - e.real(), e.imag() - oy0, oy1 - e.imag()});
    if (out.clearance_to_poles < c) throw Error(ErrorKind::InfeasibleClearance, "segments too close to a pole");
    if (out.frame_clearance < rho / 2 * (1 - 1e-9)) throw Error(ErrorKind::InfeasibleClearance, "segments too close to the frame");
    if (static_cast<int>(out.segments.size()) > out.segment_cap)
        throw Error(ErrorKind::InfeasibleClearance, "segment count exceeds the cap");
    return out;
}

} // namespace pfzero::zerocount
