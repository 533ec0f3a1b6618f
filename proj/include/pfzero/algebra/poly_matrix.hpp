#pragma once

#include "pfzero/algebra/multipoly.hpp"
#include "pfzero/algebra/ratfunc.hpp"

#include <optional>
#include <vector>

namespace pfzero::algebra {

/// Dense rectangular matrix of polynomials.
class PolyMatrix {
public:
    PolyMatrix() = default;
    PolyMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows * cols)) {}

    static PolyMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    MultiPoly& operator()(int i, int j) { return data_[static_cast<std::size_t>(i * cols_ + j)]; }
    const MultiPoly& operator()(int i, int j) const { return data_[static_cast<std::size_t>(i * cols_ + j)]; }

    std::vector<MultiPoly> row(int i) const;
    PolyMatrix derive(Var v) const;
    /// Maximal total degree over entries (-1 when all are zero).
    int max_degree() const;

    friend PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b);
    friend PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b);
    friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
    friend PolyMatrix operator*(const MultiPoly& s, const PolyMatrix& a);
    friend bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    int rows_ = 0, cols_ = 0;
    std::vector<MultiPoly> data_;
};

MultiPoly determinant(const PolyMatrix& m);

/// Rank over Q(t) of the given rows of polynomials in t (fraction-free
/// elimination over Q[t]).
int rank_over_rational_functions(const std::vector<std::vector<MultiPoly>>& rows);

/// Solve K X = R over Q(t) by Gaussian elimination on rational functions.
/// Throws DegenerateInput when K is singular.
std::vector<std::vector<RatFunc>> solve_over_rational_functions(const PolyMatrix& k, const PolyMatrix& r);

/// Solve sum_l w_l * rows[l] = target for w over Q(t).  The rows must be
/// linearly independent; returns nullopt if the target is outside their span.
std::optional<std::vector<RatFunc>> express_in_span(const std::vector<std::vector<MultiPoly>>& rows,
                                                    const std::vector<MultiPoly>& target);

} // namespace pfzero::algebra
