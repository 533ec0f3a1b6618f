#include "pfzero/numerics/residual.hpp"

#include "pfzero/algebra/eval.hpp"
#include "pfzero/errors.hpp"

#include <algorithm>

namespace pfzero::numerics {

namespace {

std::vector<Complex> values(const std::vector<Period>& p) {
    std::vector<Complex> v;
    for (const auto& x : p) v.push_back(x.value);
    return v;
}

double norm(const std::vector<Complex>& v) {
    double s = 0;
    for (const auto& z : v) s += std::norm(z);
    return std::sqrt(s);
}

} // namespace

ResidualReport residual_check(const pfsystem::PFSystem& sys, const Hamiltonian& H, const std::vector<double>& t_samples) {
    ResidualReport report;
    const std::size_t n = static_cast<std::size_t>(sys.dim);
    for (double t : t_samples) {
        for (const auto& cv : sys.sigma.critical_values)
            if (std::abs(cv.value - Complex(t)) <= std::max(cv.radius, 1e-8 * std::max(1.0, std::abs(t))))
                throw Error(ErrorKind::NearCritical, "sample " + std::to_string(t) + " is a critical value");
        const double h = 1e-5 * std::max(1.0, std::abs(t));
        ResidualSample sample;
        sample.t = t;
        const Complex a = algebra::eval_complex(sys.a, {0.0, 0.0, Complex(t)});
        for (const auto& cycle : lifted_cycles(H, t)) {
            const auto I = values(lifted_periods(H, t, cycle, sys.forms));
            const auto Ip = values(lifted_periods(H, t + h, cycle, sys.forms));
            const auto Im = values(lifted_periods(H, t - h, cycle, sys.forms));
            std::vector<Complex> lhs(n), rhs(n);
            for (std::size_t i = 0; i < n; ++i) {
                lhs[i] = a * (Ip[i] - Im[i]) / (2 * h);
                for (std::size_t j = 0; j < n; ++j)
                    rhs[i] += algebra::eval_complex(sys.A(static_cast<int>(i), static_cast<int>(j)), {0.0, 0.0, Complex(t)}) * I[j];
            }
            std::vector<Complex> diff(n);
            for (std::size_t i = 0; i < n; ++i) diff[i] = lhs[i] - rhs[i];
            const double rel = norm(diff) / (norm(rhs) + 1e-12 * std::max(1.0, norm(I)));
            sample.per_cycle.push_back(rel);
            sample.max_relative = std::max(sample.max_relative, rel);
        }
        sample.cycles = static_cast<int>(sample.per_cycle.size());
        if (sample.cycles == 0) throw Error(ErrorKind::NotCompactComponent, "no cycles found at level " + std::to_string(t));
        report.max_relative = std::max(report.max_relative, sample.max_relative);
        report.samples.push_back(std::move(sample));
    }
    return report;
}

} // namespace pfzero::numerics
