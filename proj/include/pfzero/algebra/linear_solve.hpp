#pragma once

#include "pfzero/algebra/multipoly.hpp"

#include <utility>
#include <vector>

namespace pfzero::algebra {

/// Sparse rectangular system M u = v over Q.  Each row lists (column,
/// value) pairs; duplicates are summed.
struct SparseSystem {
    int cols = 0;
    std::vector<std::vector<std::pair<int, Rational>>> rows;
    std::vector<Rational> rhs;

    int add_row(std::vector<std::pair<int, Rational>> entries, Rational value);
};

struct LinearSolution {
    std::vector<Rational> values;
    int rank = 0;
    /// Columns that received no pivot (set to zero in `values`).
    std::vector<int> free_columns;
};

/// Fraction-free (Bareiss) elimination, columns processed in index order.
/// Rows are scaled to integers first; intermediate entries stay integral.
/// Free columns are set to zero.  Throws Inconsistent when no solution
/// exists.
LinearSolution exact_linear_solve(const SparseSystem& system);
LinearSolution exact_linear_solve(const std::vector<std::vector<Rational>>& m,
                                  const std::vector<Rational>& v);

/// Exact determinant via the same elimination.
Rational determinant(const std::vector<std::vector<Rational>>& m);

/// Rank of a dense rational matrix.
int matrix_rank(const std::vector<std::vector<Rational>>& m);

} // namespace pfzero::algebra
