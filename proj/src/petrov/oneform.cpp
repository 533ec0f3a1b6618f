#include "pfzero/petrov/oneform.hpp"

namespace pfzero::petrov {

using algebra::Var;

MultiPoly OneForm::exterior_derivative() const { return Q.derive(Var::x) - P.derive(Var::y); }

std::string OneForm::to_string() const {
    std::string s;
    if (!P.is_zero()) s = "(" + P.to_string() + ")*dx";
    if (!Q.is_zero()) s += (s.empty() ? "" : " + ") + ("(" + Q.to_string() + ")*dy");
    return s.empty() ? "0" : s;
}

OneForm differential(const MultiPoly& f) { return {f.derive(Var::x), f.derive(Var::y)}; }

} // namespace pfzero::petrov
