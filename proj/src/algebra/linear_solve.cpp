#include "pfzero/algebra/linear_solve.hpp"

#include "pfzero/errors.hpp"

#include <algorithm>
#include <map>

namespace pfzero::algebra {

namespace {

using IntRow = std::vector<std::pair<int, Integer>>;

struct Elimination {
    std::vector<int> pivot_rows;    // row index for each pivot, in step order
    std::vector<int> pivot_cols;
    std::vector<IntRow> rows;       // final (possibly stale-scaled) rows
    std::vector<char> is_pivot;
    std::vector<Integer> row_scale; // integer row = scale * rational row
    int swaps_parity = 0;
};

IntRow to_integer_row(const std::vector<std::pair<int, Rational>>& entries, Integer& scale) {
    std::map<int, Rational> merged;
    for (const auto& [c, v] : entries) merged[c] += v;
    scale = 1;
    for (const auto& [c, v] : merged)
        if (v != 0) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), v.get_den_mpz_t());
    IntRow row;
    for (const auto& [c, v] : merged) {
        if (v == 0) continue;
        Rational s = v * scale;
        row.emplace_back(c, s.get_num());
    }
    return row;
}

void rescale(IntRow& row, const Integer& mul, const Integer& div) {
    if (mul == div) return;
    for (auto& [c, v] : row) {
        v *= mul;
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), div.get_mpz_t());
    }
}

// (pv * row - f * piv) / prev, merging sorted rows.
IntRow combine(const IntRow& row, const Integer& pv, const IntRow& piv, const Integer& f, const Integer& prev) {
    IntRow out;
    out.reserve(row.size() + piv.size());
    std::size_t i = 0, j = 0;
    Integer tmp;
    while (i < row.size() || j < piv.size()) {
        int c;
        if (j == piv.size() || (i < row.size() && row[i].first < piv[j].first)) {
            c = row[i].first;
            tmp = pv * row[i].second;
            ++i;
        } else if (i == row.size() || piv[j].first < row[i].first) {
            c = piv[j].first;
            tmp = -f * piv[j].second;
            ++j;
        } else {
            c = row[i].first;
            tmp = pv * row[i].second - f * piv[j].second;
            ++i;
            ++j;
        }
        if (tmp == 0) continue;
        mpz_divexact(tmp.get_mpz_t(), tmp.get_mpz_t(), prev.get_mpz_t());
        out.emplace_back(c, tmp);
    }
    return out;
}

// Eliminates over columns [0, ncols); entries at column >= ncols ride along.
Elimination eliminate(std::vector<IntRow> rows, int ncols) {
    Elimination e;
    const std::size_t nrows = rows.size();
    e.is_pivot.assign(nrows, 0);
    std::vector<std::size_t> synced(nrows, 0); // step index the row is scaled to
    std::vector<Integer> pivots{Integer(1)};   // p_0 = 1, p_k = k-th pivot value

    auto sync = [&](std::size_t r) {
        const std::size_t k = pivots.size() - 1;
        if (synced[r] != k) {
            rescale(rows[r], pivots[k], pivots[synced[r]]);
            synced[r] = k;
        }
    };

    for (int c = 0; c < ncols; ++c) {
        std::size_t best = nrows;
        for (std::size_t r = 0; r < nrows; ++r) {
            if (e.is_pivot[r] || rows[r].empty() || rows[r].front().first != c) continue;
            if (best == nrows || rows[r].size() < rows[best].size()) best = r;
        }
        if (best == nrows) continue;
        sync(best);
        const Integer pv = rows[best].front().second;
        const Integer prev = pivots.back();
        for (std::size_t r = 0; r < nrows; ++r) {
            if (r == best || e.is_pivot[r] || rows[r].empty() || rows[r].front().first != c) continue;
            sync(r);
            const Integer f = rows[r].front().second;
            rows[r] = combine(rows[r], pv, rows[best], f, prev);
            synced[r] = pivots.size();
        }
        e.is_pivot[best] = 1;
        e.pivot_rows.push_back(static_cast<int>(best));
        e.pivot_cols.push_back(c);
        pivots.push_back(pv);
    }
    e.rows = std::move(rows);
    // Parity of the permutation taking pivot order to natural row order.
    std::vector<int> perm = e.pivot_rows;
    for (std::size_t i = 0; i < perm.size(); ++i)
        for (std::size_t j = i + 1; j < perm.size(); ++j)
            if (perm[i] > perm[j]) e.swaps_parity ^= 1;
    return e;
}

} // namespace

int SparseSystem::add_row(std::vector<std::pair<int, Rational>> entries, Rational value) {
    rows.push_back(std::move(entries));
    rhs.push_back(std::move(value));
    return static_cast<int>(rows.size()) - 1;
}

LinearSolution exact_linear_solve(const SparseSystem& system) {
    const int n = system.cols;
    std::vector<IntRow> rows;
    rows.reserve(system.rows.size());
    for (std::size_t i = 0; i < system.rows.size(); ++i) {
        auto entries = system.rows[i];
        for (const auto& [c, v] : entries)
            if (c < 0 || c >= n) throw Error(ErrorKind::DegenerateInput, "column index out of range");
        if (system.rhs[i] != 0) entries.emplace_back(n, system.rhs[i]);
        Integer scale;
        rows.push_back(to_integer_row(entries, scale));
    }
    Elimination e = eliminate(std::move(rows), n);
    for (std::size_t r = 0; r < e.rows.size(); ++r) {
        if (e.is_pivot[r] || e.rows[r].empty()) continue;
        // A non-pivot row has been reduced past every coefficient column.
        throw Error(ErrorKind::Inconsistent, "linear system has no solution");
    }

    LinearSolution sol;
    sol.values.assign(static_cast<std::size_t>(n), Rational(0));
    sol.rank = static_cast<int>(e.pivot_rows.size());
    std::vector<char> pivot_col(static_cast<std::size_t>(n), 0);
    for (int c : e.pivot_cols) pivot_col[static_cast<std::size_t>(c)] = 1;
    for (int c = 0; c < n; ++c)
        if (!pivot_col[static_cast<std::size_t>(c)]) sol.free_columns.push_back(c);

    for (std::size_t k = e.pivot_rows.size(); k-- > 0;) {
        const IntRow& row = e.rows[static_cast<std::size_t>(e.pivot_rows[k])];
        const int c = e.pivot_cols[k];
        Rational acc(0);
        Rational lead(0);
        for (const auto& [col, v] : row) {
            if (col == c) lead = Rational(v);
            else if (col == n) acc += Rational(v);
            else acc -= Rational(v) * sol.values[static_cast<std::size_t>(col)];
        }
        sol.values[static_cast<std::size_t>(c)] = acc / lead;
    }
    return sol;
}

LinearSolution exact_linear_solve(const std::vector<std::vector<Rational>>& m, const std::vector<Rational>& v) {
    if (m.size() != v.size()) throw Error(ErrorKind::DegenerateInput, "row count mismatch");
    SparseSystem s;
    s.cols = m.empty() ? 0 : static_cast<int>(m.front().size());
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (static_cast<int>(m[i].size()) != s.cols) throw Error(ErrorKind::DegenerateInput, "matrix is not rectangular");
        std::vector<std::pair<int, Rational>> row;
        for (int j = 0; j < s.cols; ++j)
            if (m[i][static_cast<std::size_t>(j)] != 0) row.emplace_back(j, m[i][static_cast<std::size_t>(j)]);
        s.add_row(std::move(row), v[i]);
    }
    return exact_linear_solve(s);
}

Rational determinant(const std::vector<std::vector<Rational>>& m) {
    const std::size_t n = m.size();
    std::vector<IntRow> rows;
    Rational scale_total(1);
    for (const auto& r : m) {
        if (r.size() != n) throw Error(ErrorKind::DegenerateInput, "determinant of a non-square matrix");
        std::vector<std::pair<int, Rational>> entries;
        for (std::size_t j = 0; j < n; ++j)
            if (r[j] != 0) entries.emplace_back(static_cast<int>(j), r[j]);
        Integer scale;
        rows.push_back(to_integer_row(entries, scale));
        scale_total *= Rational(scale);
    }
    if (n == 0) return Rational(1);
    Elimination e = eliminate(std::move(rows), static_cast<int>(n));
    if (e.pivot_rows.size() != n) return Rational(0);
    // The last pivot of a full-rank Bareiss run is the determinant of the
    // row-permuted integer matrix.
    const IntRow& last = e.rows[static_cast<std::size_t>(e.pivot_rows.back())];
    // The last pivot row was synced when chosen, so its leading entry is p_n.
    Rational det(last.front().second);
    if (e.swaps_parity) det = -det;
    return det / scale_total;
}

int matrix_rank(const std::vector<std::vector<Rational>>& m) {
    if (m.empty()) return 0;
    std::vector<IntRow> rows;
    const int n = static_cast<int>(m.front().size());
    for (const auto& r : m) {
        std::vector<std::pair<int, Rational>> entries;
        for (int j = 0; j < n; ++j)
            if (r[static_cast<std::size_t>(j)] != 0) entries.emplace_back(j, r[static_cast<std::size_t>(j)]);
        Integer scale;
        rows.push_back(to_integer_row(entries, scale));
    }
    return static_cast<int>(eliminate(std::move(rows), n).pivot_rows.size());
}

} // namespace pfzero::algebra
