#include "pfzero/algebra/roots.hpp"

#include "pfzero/algebra/univariate.hpp"
#include "pfzero/errors.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <numbers>

namespace pfzero::algebra {

namespace {

using cld = std::complex<long double>;

std::pair<cld, cld> eval_with_derivative(const std::vector<cld>& c, cld z) {
    cld v = 0, d = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        d = d * z + v;
        v = v * z + *it;
    }
    return {v, d};
}

// Running error bound for Horner evaluation.
long double horner_error(const std::vector<cld>& c, cld z) {
    const long double az = std::abs(z);
    long double acc = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * az + std::abs(*it);
    return acc * 4 * static_cast<long double>(c.size()) * std::numeric_limits<long double>::epsilon();
}

long double to_long_double(const Rational& q) {
    mpfr_t tmp;
    mpfr_init2(tmp, 64);
    mpfr_set_q(tmp, q.get_mpq_t(), MPFR_RNDN);
    const long double out = mpfr_get_ld(tmp, MPFR_RNDN);
    mpfr_clear(tmp);
    return out;
}

} // namespace

std::vector<cld> aberth_roots(const std::vector<cld>& input) {
    std::vector<cld> c = input;
    while (!c.empty() && c.back() == cld(0)) c.pop_back();
    if (c.size() <= 1) return {};
    std::vector<cld> roots;
    // Zero roots first.
    std::size_t lead_zeros = 0;
    while (c[lead_zeros] == cld(0)) ++lead_zeros;
    for (std::size_t i = 0; i < lead_zeros; ++i) roots.emplace_back(0);
    c.erase(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(lead_zeros));
    const std::size_t n = c.size() - 1;
    if (n == 0) return roots;
    if (n == 1) {
        roots.push_back(-c[0] / c[1]);
        return roots;
    }
    // Initial guesses on a circle of the Cauchy-bound radius.
    long double bound = 0;
    for (std::size_t i = 0; i < n; ++i) bound = std::max(bound, std::abs(c[i] / c[n]));
    const long double r0 = std::min<long double>(1 + bound, std::pow(std::abs(c[0] / c[n]), 1.0L / n) + 1);
    std::vector<cld> z(n);
    for (std::size_t k = 0; k < n; ++k) {
        const long double ang = 2 * std::numbers::pi_v<long double> * k / n + 0.4L;
        z[k] = std::polar(r0, ang);
    }
    for (int iter = 0; iter < 1000; ++iter) {
        long double maxstep = 0;
        for (std::size_t k = 0; k < n; ++k) {
            auto [v, d] = eval_with_derivative(c, z[k]);
            if (v == cld(0)) continue;
            const cld ratio = v / d;
            cld sum = 0;
            for (std::size_t j = 0; j < n; ++j)
                if (j != k) sum += cld(1) / (z[k] - z[j]);
            const cld step = ratio / (cld(1) - ratio * sum);
            z[k] -= step;
            maxstep = std::max(maxstep, std::abs(step) / std::max<long double>(1, std::abs(z[k])));
        }
        if (maxstep < 1e-19L) break;
    }
    roots.insert(roots.end(), z.begin(), z.end());
    return roots;
}

std::vector<RootEnclosure> isolate_roots(const MultiPoly& p, Var v, double min_radius) {
    if (p.is_zero()) throw Error(ErrorKind::DegenerateInput, "roots of the zero polynomial");
    const auto factors = upoly::squarefree_decomposition(upoly::from_multi(p, v));
    std::vector<RootEnclosure> out;
    for (std::size_t k = 0; k < factors.size(); ++k) {
        const auto& f = factors[k];
        if (upoly::degree(f) < 1) continue;
        std::vector<cld> c;
        for (const auto& q : f) c.emplace_back(to_long_double(q));
        const auto n = static_cast<long double>(c.size() - 1);
        for (cld z : aberth_roots(c)) {
            for (int it = 0; it < 5; ++it) {
                auto [val, d] = eval_with_derivative(c, z);
                if (d == cld(0)) break;
                z -= val / d;
            }
            auto [val, d] = eval_with_derivative(c, z);
            long double r = std::numeric_limits<long double>::infinity();
            if (d != cld(0)) r = n * (std::abs(val) + horner_error(c, z)) / std::abs(d);
            RootEnclosure e;
            e.value = {static_cast<double>(z.real()), static_cast<double>(z.imag())};
            e.radius = std::max(min_radius, static_cast<double>(r) * (1 + 1e-6));
            e.multiplicity = static_cast<int>(k) + 1;
            out.push_back(e);
        }
    }
    // Merge overlapping discs.
    bool merged = true;
    while (merged) {
        merged = false;
        for (std::size_t i = 0; i < out.size() && !merged; ++i)
            for (std::size_t j = i + 1; j < out.size() && !merged; ++j) {
                if (std::abs(out[i].value - out[j].value) > out[i].radius + out[j].radius) continue;
                const double mi = out[i].multiplicity, mj = out[j].multiplicity;
                const std::complex<double> c = (mi * out[i].value + mj * out[j].value) / (mi + mj);
                const double r = std::max(std::abs(c - out[i].value) + out[i].radius,
                                          std::abs(c - out[j].value) + out[j].radius);
                out[i] = {c, r, out[i].multiplicity + out[j].multiplicity};
                out.erase(out.begin() + static_cast<std::ptrdiff_t>(j));
                merged = true;
            }
    }
    std::sort(out.begin(), out.end(), [](const RootEnclosure& a, const RootEnclosure& b) {
        if (a.value.real() != b.value.real()) return a.value.real() < b.value.real();
        return a.value.imag() < b.value.imag();
    });
    return out;
}

} // namespace pfzero::algebra
