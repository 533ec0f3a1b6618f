#include "pfzero/numerics/continuation.hpp"

#include "pfzero/algebra/eval.hpp"
#include "pfzero/algebra/roots.hpp"
#include "pfzero/errors.hpp"

#include <boost/numeric/odeint.hpp>

#include <algorithm>

namespace pfzero::numerics {

namespace odeint = boost::numeric::odeint;

namespace {

using State = std::vector<Complex>;

double distance_to_segment(Complex p, Complex a, Complex b) {
    const Complex d = b - a;
    const double len2 = std::norm(d);
    if (len2 == 0) return std::abs(p - a);
    const double s = std::clamp(((p - a) * std::conj(d)).real() / len2, 0.0, 1.0);
    return std::abs(p - (a + s * d));
}

} // namespace

std::vector<PeriodSample> integrate_pf_numeric(const pfsystem::PFSystem& sys, const std::vector<Complex>& path,
                                               const PeriodSample& initial, const ContinuationOptions& opt) {
    const int n = sys.dim;
    if (path.empty() || static_cast<int>(initial.periods.size()) != n)
        throw Error(ErrorKind::DegenerateInput, "path or initial periods have the wrong size");
    if (std::abs(path.front() - initial.t) > 1e-12 * (1 + std::abs(initial.t)))
        throw Error(ErrorKind::DegenerateInput, "path must start at the initial sample");

    if (sys.a.degree() > 0)
        for (const auto& pole : algebra::isolate_roots(sys.a, algebra::Var::t))
            for (std::size_t i = 0; i + 1 < path.size(); ++i)
                if (distance_to_segment(pole.value, path[i], path[i + 1]) < opt.pole_margin + pole.radius)
                    throw Error(ErrorKind::PathTooClose, "path passes within the pole margin of a root of a(t)");

    std::vector<algebra::TPolyEvaluator> entries;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) entries.emplace_back(sys.A(i, j));
    const algebra::TPolyEvaluator a(sys.a);

    std::vector<PeriodSample> out{initial};
    State state = initial.periods;
    for (std::size_t seg = 0; seg + 1 < path.size(); ++seg) {
        const Complex t0 = path[seg], dt = path[seg + 1] - path[seg];
        // Along the segment t = t0 + s dt, s in [0, 1].
        auto rhs = [&](const State& y, State& dy, double s) {
            const Complex t = t0 + s * dt;
            const Complex scale = dt / a(t);
            for (int i = 0; i < n; ++i) {
                Complex acc = 0;
                for (int j = 0; j < n; ++j) acc += entries[static_cast<std::size_t>(i * n + j)](t) * y[static_cast<std::size_t>(j)];
                dy[static_cast<std::size_t>(i)] = scale * acc;
            }
        };
        auto stepper = odeint::make_dense_output(opt.atol, opt.rtol, odeint::runge_kutta_dopri5<State>());
        std::vector<double> times;
        for (int k = 0; k <= opt.samples_per_segment; ++k) times.push_back(static_cast<double>(k) / opt.samples_per_segment);
        std::size_t hit = 0;
        try {
            odeint::integrate_times(stepper, rhs, state, times.begin(), times.end(), 1e-3,
                                    [&](const State& y, double s) {
                                        if (hit++ == 0) return; // segment start is already recorded
                                        out.push_back({t0 + s * dt, y, 0.0});
                                    },
                                    odeint::max_step_checker(1'000'000));
        } catch (const odeint::odeint_error& e) {
            throw Error(ErrorKind::StiffnessFailure, std::string("integrator gave up: ") + e.what());
        } catch (const std::overflow_error& e) {
            throw Error(ErrorKind::StiffnessFailure, std::string("integrator gave up: ") + e.what());
        }
    }
    // Local error control only; report the tolerance as the estimate.
    for (auto& s : out) s.error_estimate = opt.rtol;
    out.front().error_estimate = initial.error_estimate;
    return out;
}

} // namespace pfzero::numerics
