#include "pfzero/algebra/poly_matrix.hpp"

#include "pfzero/algebra/polyops.hpp"
#include "pfzero/errors.hpp"

#include <algorithm>
#include <optional>

namespace pfzero::algebra {

PolyMatrix PolyMatrix::identity(int n) {
    PolyMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = MultiPoly(1);
    return m;
}

std::vector<MultiPoly> PolyMatrix::row(int i) const {
    return {data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_};
}

PolyMatrix PolyMatrix::derive(Var v) const {
    PolyMatrix out(rows_, cols_);
    for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] = data_[k].derive(v);
    return out;
}

int PolyMatrix::max_degree() const {
    int d = -1;
    for (const auto& p : data_) d = std::max(d, p.degree());
    return d;
}

PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b) {
    PolyMatrix out = a;
    for (std::size_t k = 0; k < out.data_.size(); ++k) out.data_[k] += b.data_[k];
    return out;
}

PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b) {
    PolyMatrix out = a;
    for (std::size_t k = 0; k < out.data_.size(); ++k) out.data_[k] -= b.data_[k];
    return out;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.cols_ != b.rows_) throw Error(ErrorKind::DegenerateInput, "matrix dimension mismatch");
    PolyMatrix out(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
        for (int k = 0; k < a.cols_; ++k) {
            const MultiPoly& aik = a(i, k);
            if (aik.is_zero()) continue;
            for (int j = 0; j < b.cols_; ++j)
                if (!b(k, j).is_zero()) out(i, j) += aik * b(k, j);
        }
    return out;
}

PolyMatrix operator*(const MultiPoly& s, const PolyMatrix& a) {
    PolyMatrix out = a;
    for (auto& p : out.data_) p = s * p;
    return out;
}

MultiPoly determinant(const PolyMatrix& m) {
    std::vector<std::vector<MultiPoly>> rows;
    for (int i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));
    return determinant(std::move(rows));
}

int rank_over_rational_functions(const std::vector<std::vector<MultiPoly>>& input) {
    auto m = input;
    if (m.empty()) return 0;
    const std::size_t ncols = m.front().size();
    std::size_t rank = 0;
    MultiPoly prev(1);
    for (std::size_t c = 0; c < ncols && rank < m.size(); ++c) {
        std::size_t p = rank;
        while (p < m.size() && m[p][c].is_zero()) ++p;
        if (p == m.size()) continue;
        std::swap(m[rank], m[p]);
        for (std::size_t i = rank + 1; i < m.size(); ++i) {
            for (std::size_t j = c + 1; j < ncols; ++j)
                m[i][j] = divide_or_throw(m[rank][c] * m[i][j] - m[i][c] * m[rank][j], prev);
            m[i][c] = MultiPoly{};
        }
        prev = m[rank][c];
        ++rank;
    }
    return static_cast<int>(rank);
}

namespace {

// Gaussian elimination over Q(t) on an augmented matrix; returns the
// solution columns, or nullopt when the coefficient block is singular or the
// system inconsistent.
std::optional<std::vector<std::vector<RatFunc>>> gauss(std::vector<std::vector<RatFunc>> a, int n, int extra) {
    const int rows = static_cast<int>(a.size());
    std::vector<int> pivcol;
    int r = 0;
    for (int c = 0; c < n && r < rows; ++c) {
        int p = r;
        while (p < rows && a[static_cast<std::size_t>(p)][static_cast<std::size_t>(c)].is_zero()) ++p;
        if (p == rows) return std::nullopt;
        std::swap(a[static_cast<std::size_t>(r)], a[static_cast<std::size_t>(p)]);
        auto& pr = a[static_cast<std::size_t>(r)];
        const RatFunc inv = RatFunc(1) / pr[static_cast<std::size_t>(c)];
        for (auto& x : pr) x = x * inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r) continue;
            auto& ri = a[static_cast<std::size_t>(i)];
            const RatFunc f = ri[static_cast<std::size_t>(c)];
            if (f.is_zero()) continue;
            for (std::size_t j = static_cast<std::size_t>(c); j < ri.size(); ++j)
                if (!pr[j].is_zero()) ri[j] = ri[j] - f * pr[j];
        }
        pivcol.push_back(c);
        ++r;
    }
    if (r < n) return std::nullopt;
    for (int i = r; i < rows; ++i)
        for (int j = n; j < n + extra; ++j)
            if (!a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].is_zero()) return std::nullopt;
    std::vector<std::vector<RatFunc>> x(static_cast<std::size_t>(n), std::vector<RatFunc>(static_cast<std::size_t>(extra)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < extra; ++j)
            x[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                a[static_cast<std::size_t>(i)][static_cast<std::size_t>(n + j)];
    return x;
}

} // namespace

std::vector<std::vector<RatFunc>> solve_over_rational_functions(const PolyMatrix& k, const PolyMatrix& r) {
    const int n = k.rows();
    if (k.cols() != n || r.rows() != n) throw Error(ErrorKind::DegenerateInput, "dimension mismatch");
    std::vector<std::vector<RatFunc>> a(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) a[static_cast<std::size_t>(i)].emplace_back(k(i, j));
        for (int j = 0; j < r.cols(); ++j) a[static_cast<std::size_t>(i)].emplace_back(r(i, j));
    }
    auto x = gauss(std::move(a), n, r.cols());
    if (!x) throw Error(ErrorKind::DegenerateInput, "singular matrix over Q(t)");
    return *x;
}

std::optional<std::vector<RatFunc>> express_in_span(const std::vector<std::vector<MultiPoly>>& rows,
                                                    const std::vector<MultiPoly>& target) {
    // Unknowns w_l; equations indexed by the vector component.
    const int n = static_cast<int>(rows.size());
    const std::size_t comps = target.size();
    std::vector<std::vector<RatFunc>> a(comps);
    for (std::size_t c = 0; c < comps; ++c) {
        for (int l = 0; l < n; ++l) a[c].emplace_back(rows[static_cast<std::size_t>(l)][c]);
        a[c].emplace_back(target[c]);
    }
    auto x = gauss(std::move(a), n, 1);
    if (!x) return std::nullopt;
    std::vector<RatFunc> w;
    for (auto& v : *x) w.push_back(v.front());
    return w;
}

} // namespace pfzero::algebra
