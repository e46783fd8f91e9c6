// Copyright 2026 The dsl Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Exact linear algebra over Q. Matrices are stored densely but elimination
// runs on sparse rows: the systems assembled elsewhere in the library are
// overwhelmingly sparse (monomial maps, short Lie expansions).

#ifndef DSL_LINALG_HPP
#define DSL_LINALG_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace dsl {

using Vector = std::vector<Rational>;

class QMatrix {
public:
    QMatrix() = default;
    QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}
    QMatrix(std::initializer_list<std::initializer_list<Rational>> init) {
        rows_ = init.size();
        cols_ = rows_ ? init.begin()->size() : 0;
        entries_.reserve(rows_ * cols_);
        for (const auto& row : init) {
            if (row.size() != cols_) throw std::invalid_argument("QMatrix: ragged initializer");
            entries_.insert(entries_.end(), row.begin(), row.end());
        }
    }

    /// Matrix whose columns are the given vectors (all of length `rows`).
    static QMatrix from_columns(std::size_t rows, const std::vector<Vector>& columns) {
        QMatrix m(rows, columns.size());
        for (std::size_t j = 0; j < columns.size(); ++j) {
            if (columns[j].size() != rows) throw std::invalid_argument("QMatrix: column length mismatch");
            for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
        }
        return m;
    }
    static QMatrix from_rows(std::size_t cols, const std::vector<Vector>& rows) {
        QMatrix m(rows.size(), cols);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != cols) throw std::invalid_argument("QMatrix: row length mismatch");
            for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }
    static QMatrix identity(std::size_t n) {
        QMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    [[nodiscard]] std::size_t rows() const { return rows_; }
    [[nodiscard]] std::size_t cols() const { return cols_; }
    Rational& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    [[nodiscard]] Vector apply(const Vector& x) const {
        if (x.size() != cols_) throw std::invalid_argument("QMatrix::apply: length mismatch");
        Vector y(rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if (!entries_[i * cols_ + j].is_zero() && !x[j].is_zero()) y[i] += entries_[i * cols_ + j] * x[j];
        return y;
    }

    friend bool operator==(const QMatrix&, const QMatrix&) = default;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rational> entries_;
};

namespace detail {

using SparseRow = std::vector<std::pair<std::size_t, Rational>>;

// row <- row - factor * pivot, both sorted by column.
inline SparseRow axpy(const SparseRow& row, const Rational& factor, const SparseRow& pivot) {
    SparseRow out;
    out.reserve(row.size() + pivot.size());
    std::size_t i = 0, j = 0;
    while (i < row.size() || j < pivot.size()) {
        if (j == pivot.size() || (i < row.size() && row[i].first < pivot[j].first)) {
            out.push_back(row[i++]);
        } else if (i == row.size() || pivot[j].first < row[i].first) {
            out.emplace_back(pivot[j].first, -(factor * pivot[j].second));
            ++j;
        } else {
            Rational v = row[i].second - factor * pivot[j].second;
            if (!v.is_zero()) out.emplace_back(row[i].first, std::move(v));
            ++i, ++j;
        }
    }
    return out;
}

inline const Rational* find(const SparseRow& row, std::size_t col) {
    auto it = std::lower_bound(row.begin(), row.end(), col,
                               [](const auto& e, std::size_t c) { return e.first < c; });
    return (it != row.end() && it->first == col) ? &it->second : nullptr;
}

}  // namespace detail

/// Reduced row-echelon form of a matrix: the nonzero rows (sparse, leading
/// entry 1) and their pivot columns, in increasing pivot order.
struct Echelon {
    std::size_t cols = 0;
    std::vector<std::size_t> pivots;
    std::vector<detail::SparseRow> rows;

    [[nodiscard]] std::size_t rank() const { return pivots.size(); }
};

/// Gaussian elimination to RREF. Pivot for each column: the candidate entry
/// with the smallest combined bit length, ties broken by lowest row index.
namespace detail {

// Forward elimination on sparse rows (each sorted by column, no zeros).
inline Echelon eliminate(std::vector<SparseRow> rows, std::size_t cols) {

    // Buckets of row indices keyed by leading column.
    std::map<std::size_t, std::vector<std::size_t>> by_lead;
    for (std::size_t i = 0; i < rows.size(); ++i)
        if (!rows[i].empty()) by_lead[rows[i].front().first].push_back(i);

    Echelon out;
    out.cols = cols;
    while (!by_lead.empty()) {
        auto node = by_lead.begin();
        std::size_t col = node->first;
        std::vector<std::size_t> cand = std::move(node->second);
        by_lead.erase(node);
        std::sort(cand.begin(), cand.end());
        std::size_t best = cand.front();
        for (std::size_t i : cand)
            if (rows[i].front().second.bit_length() < rows[best].front().second.bit_length()) best = i;
        const SparseRow& piv = rows[best];
        for (std::size_t i : cand) {
            if (i == best) continue;
            Rational factor = rows[i].front().second / piv.front().second;
            rows[i] = detail::axpy(rows[i], factor, piv);
            if (!rows[i].empty()) by_lead[rows[i].front().first].push_back(i);
        }
        out.pivots.push_back(col);
        out.rows.push_back(piv);
    }
    return out;
}

}  // namespace detail

inline Echelon rref(const QMatrix& m) {
    using detail::SparseRow;
    std::vector<SparseRow> rows;
    rows.reserve(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        SparseRow r;
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (!m(i, j).is_zero()) r.emplace_back(j, m(i, j));
        rows.push_back(std::move(r));
    }
    Echelon out = detail::eliminate(std::move(rows), m.cols());

    // Normalize and back-substitute.
    for (auto& r : out.rows) {
        Rational inv = Rational(1) / r.front().second;
        for (auto& e : r) e.second *= inv;
    }
    for (std::size_t k = out.rows.size(); k-- > 0;) {
        for (std::size_t i = 0; i < k; ++i) {
            const Rational* v = detail::find(out.rows[i], out.pivots[k]);
            if (v) {
                Rational factor = *v;
                out.rows[i] = detail::axpy(out.rows[i], factor, out.rows[k]);
            }
        }
    }
    return out;
}

inline std::size_t rank(const QMatrix& m) { return rref(m).rank(); }

/// Rank of the matrix whose rows are the given sparse vectors (sorted by
/// index, no stored zeros) of length `cols`. Equivalently the rank of the
/// matrix having them as columns.
inline std::size_t sparse_rank(std::vector<detail::SparseRow> rows, std::size_t cols) {
    for (const auto& r : rows)
        for (std::size_t k = 0; k < r.size(); ++k)
            if (r[k].first >= cols || r[k].second.is_zero() || (k && r[k - 1].first >= r[k].first))
                throw std::invalid_argument("sparse_rank: malformed row");
    return detail::eliminate(std::move(rows), cols).rank();
}

/// A linear subspace of Q^ambient_dim, stored as its canonical RREF basis.
class Subspace {
public:
    explicit Subspace(std::size_t ambient_dim = 0) : ambient_(ambient_dim) {}

    static Subspace span(std::size_t ambient_dim, const std::vector<Vector>& vectors) {
        Subspace s(ambient_dim);
        if (vectors.empty()) return s;
        Echelon e = rref(QMatrix::from_rows(ambient_dim, vectors));
        for (const auto& r : e.rows) s.basis_.push_back(densify(r, ambient_dim));
        return s;
    }
    static Subspace full(std::size_t ambient_dim) {
        std::vector<Vector> vs;
        for (std::size_t i = 0; i < ambient_dim; ++i) {
            Vector v(ambient_dim);
            v[i] = 1;
            vs.push_back(std::move(v));
        }
        return span(ambient_dim, vs);
    }

    [[nodiscard]] std::size_t ambient_dim() const { return ambient_; }
    [[nodiscard]] std::size_t dim() const { return basis_.size(); }
    [[nodiscard]] const std::vector<Vector>& basis() const { return basis_; }

    [[nodiscard]] bool contains_vector(const Vector& v) const {
        if (v.size() != ambient_) throw std::invalid_argument("Subspace: dimension mismatch");
        auto stacked = basis_;
        stacked.push_back(v);
        return rank(QMatrix::from_rows(ambient_, stacked)) == dim();
    }

    friend bool operator==(const Subspace&, const Subspace&) = default;

    static Vector densify(const detail::SparseRow& r, std::size_t n) {
        Vector v(n);
        for (const auto& [j, x] : r) v[j] = x;
        return v;
    }

private:
    std::size_t ambient_;
    std::vector<Vector> basis_;
};

inline Subspace nullspace(const QMatrix& m) {
    Echelon e = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : e.pivots) is_pivot[p] = true;
    std::vector<Vector> vecs;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        Vector v(m.cols());
        v[f] = 1;
        for (std::size_t k = 0; k < e.rows.size(); ++k)
            if (const Rational* x = detail::find(e.rows[k], f)) v[e.pivots[k]] = -*x;
        vecs.push_back(std::move(v));
    }
    return Subspace::span(m.cols(), vecs);
}

/// Some x with m x = b: free variables set to zero. nullopt when inconsistent.
inline std::optional<Vector> solve(const QMatrix& m, const Vector& b) {
    if (b.size() != m.rows()) throw std::invalid_argument("solve: rhs length mismatch");
    QMatrix aug(m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
        aug(i, m.cols()) = b[i];
    }
    Echelon e = rref(aug);
    Vector x(m.cols());
    for (std::size_t k = 0; k < e.rows.size(); ++k) {
        if (e.pivots[k] == m.cols()) return std::nullopt;
        if (const Rational* v = detail::find(e.rows[k], m.cols())) x[e.pivots[k]] = *v;
    }
    return x;
}

/// b ⊆ a.
inline bool subspace_contains(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim()) throw std::invalid_argument("subspace_contains: dimension mismatch");
    if (b.dim() == 0) return true;
    auto stacked = a.basis();
    stacked.insert(stacked.end(), b.basis().begin(), b.basis().end());
    return rank(QMatrix::from_rows(a.ambient_dim(), stacked)) == a.dim();
}

inline bool subspace_equal(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim()) throw std::invalid_argument("subspace_equal: dimension mismatch");
    return a.dim() == b.dim() && subspace_contains(a, b);
}

}  // namespace dsl

#endif  // DSL_LINALG_HPP
