#pragma once

// Fast floating-point evaluation of polynomials in x, y.

#include "pfzero/algebra/multipoly.hpp"

#include <complex>
#include <vector>

namespace pfzero::numerics::detail {

class PlanePoly {
public:
    PlanePoly() = default;
    explicit PlanePoly(const algebra::MultiPoly& p) {
        for (const auto& [m, c] : p.terms()) terms_.push_back({m[algebra::Var::x], m[algebra::Var::y], c.get_d()});
    }

    template <class T>
    T operator()(T x, T y) const {
        T acc{};
        for (const auto& term : terms_) acc += term.c * ipow(x, term.a) * ipow(y, term.b);
        return acc;
    }

private:
    template <class T>
    static T ipow(T v, int n) {
        T r(1);
        for (; n > 0; --n) r *= v;
        return r;
    }
    struct Term {
        int a, b;
        double c;
    };
    std::vector<Term> terms_;
};

} // namespace pfzero::numerics::detail
