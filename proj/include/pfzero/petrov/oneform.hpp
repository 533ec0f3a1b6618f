#pragma once

#include "pfzero/algebra/multipoly.hpp"

#include <string>

namespace pfzero::petrov {

using algebra::MultiPoly;

/// P dx + Q dy.
struct OneForm {
    MultiPoly P;
    MultiPoly Q;

    int degree() const { return std::max(P.degree(), Q.degree()); }
    bool is_zero() const { return P.is_zero() && Q.is_zero(); }

    /// g with d(P dx + Q dy) = g dx^dy.
    MultiPoly exterior_derivative() const;

    OneForm& operator+=(const OneForm& o) {
        P += o.P;
        Q += o.Q;
        return *this;
    }
    friend OneForm operator+(OneForm a, const OneForm& b) { return a += b; }
    friend OneForm operator-(const OneForm& a, const OneForm& b) { return {a.P - b.P, a.Q - b.Q}; }
    friend OneForm operator*(const MultiPoly& f, const OneForm& w) { return {f * w.P, f * w.Q}; }
    friend bool operator==(const OneForm&, const OneForm&) = default;

    std::string to_string() const;
};

/// df.
OneForm differential(const MultiPoly& f);

} // namespace pfzero::petrov
