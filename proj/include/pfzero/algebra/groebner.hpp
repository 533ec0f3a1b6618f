#pragma once

#include "pfzero/algebra/multipoly.hpp"

#include <optional>
#include <vector>

namespace pfzero::algebra {

/// Reduced Groebner basis under grevlex (x > y > t). Elements are monic and
/// sorted by descending leading monomial.
std::vector<MultiPoly> groebner_basis(std::vector<MultiPoly> generators);

/// Full reduction of p modulo a Groebner basis.
MultiPoly normal_form(const MultiPoly& p, const std::vector<MultiPoly>& basis);

/// Standard monomials in x, y of a zero-dimensional ideal, by ascending
/// degree with x-heavy monomials first inside a degree. Empty optional when the quotient is infinite-dimensional.
std::optional<std::vector<Monomial>> standard_monomials(const std::vector<MultiPoly>& basis);

/// Minimal generators of the leading-term ideal.
std::vector<Monomial> leading_term_generators(const std::vector<MultiPoly>& basis);

} // namespace pfzero::algebra
