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

// The representation rho_DT of V into 3x3 matrices over V^ ⊗ V^, its
// commutants, rank checks of three exact complexes, and the factorization
// a = h(γ + xc), b = h(γ + cx), x + z = h x h^{-1}.
//
// In a BiSeries the left word is in e-letters (e0 = 0, e1 = 1) and the right
// word in f-letters (f0 = 0, f1 = 1).

#ifndef DSL_MATRIX_REP_HPP
#define DSL_MATRIX_REP_HPP

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <vector>

#include "lie.hpp"
#include "linalg.hpp"
#include "series.hpp"
#include "shuffle.hpp"
#include "tensor.hpp"

namespace dsl {

namespace bi {

inline BiSeries e(int i) { return BiSeries::monomial(Word{i}, Word()); }
inline BiSeries f(int i) { return BiSeries::monomial(Word(), Word{i}); }
inline BiSeries scalar(const Rational& c) { return BiSeries::monomial(Word(), Word(), c); }
/// f_inf = -f0 - f1.
inline BiSeries f_inf() { return -f(0) - f(1); }

/// Basis monomials of total degree d: e-word length first, then e-word,
/// then f-word.
inline std::vector<WordPair> basis(int d) {
    std::vector<WordPair> out;
    for (int k = 0; k <= d; ++k)
        for (const auto& l : all_words(2, static_cast<std::size_t>(k)))
            for (const auto& r : all_words(2, static_cast<std::size_t>(d - k))) out.push_back({l, r});
    return out;
}

/// (d + 1) 2^d.
inline std::size_t dim(int d) { return static_cast<std::size_t>(d + 1) << d; }

/// Embeds a series in e-letters (left) or f-letters (right).
inline BiSeries from_left(const Series& a) { return BiSeries::left(a); }
inline BiSeries from_right(const Series& a) { return BiSeries::right(a); }

}  // namespace bi

/// 3x3 matrix over BiSeries, row-major.
class Mat3 {
public:
    Mat3() = default;
    explicit Mat3(std::array<BiSeries, 9> entries) : m_(std::move(entries)) {}

    static Mat3 identity() {
        Mat3 m;
        for (int i = 0; i < 3; ++i) m(i, i) = bi::scalar(1);
        return m;
    }
    static Mat3 unit(int r, int c, const BiSeries& v) {
        Mat3 m;
        m(r, c) = v;
        return m;
    }

    BiSeries& operator()(int r, int c) { return m_[static_cast<std::size_t>(3 * r + c)]; }
    const BiSeries& operator()(int r, int c) const { return m_[static_cast<std::size_t>(3 * r + c)]; }

    [[nodiscard]] bool is_zero() const {
        for (const auto& x : m_)
            if (!x.is_zero()) return false;
        return true;
    }
    [[nodiscard]] Mat3 truncated(int n) const {
        Mat3 out;
        for (std::size_t i = 0; i < 9; ++i) out.m_[i] = m_[i].truncated(n);
        return out;
    }

    friend Mat3 operator+(const Mat3& a, const Mat3& b) {
        Mat3 out;
        for (std::size_t i = 0; i < 9; ++i) out.m_[i] = a.m_[i] + b.m_[i];
        return out;
    }
    friend Mat3 operator-(const Mat3& a, const Mat3& b) {
        Mat3 out;
        for (std::size_t i = 0; i < 9; ++i) out.m_[i] = a.m_[i] - b.m_[i];
        return out;
    }
    friend Mat3 operator*(const Rational& c, const Mat3& a) {
        Mat3 out;
        for (std::size_t i = 0; i < 9; ++i) out.m_[i] = c * a.m_[i];
        return out;
    }
    /// Scalar multiplication by a BiSeries on the left: s·A.
    friend Mat3 operator*(const BiSeries& s, const Mat3& a) {
        Mat3 out;
        for (std::size_t i = 0; i < 9; ++i) out.m_[i] = s * a.m_[i];
        return out;
    }
    friend Mat3 operator*(const Mat3& a, const Mat3& b) {
        Mat3 out;
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c) {
                BiSeries s;
                for (int k = 0; k < 3; ++k)
                    if (!a(r, k).is_zero() && !b(k, c).is_zero()) s += a(r, k) * b(k, c);
                out(r, c) = s;
            }
        return out;
    }
    friend bool operator==(const Mat3& a, const Mat3& b) { return a.m_ == b.m_; }

private:
    std::array<BiSeries, 9> m_;
};

inline Mat3 commutator(const Mat3& a, const Mat3& b) { return a * b - b * a; }

using Column3 = std::array<BiSeries, 3>;
using Row3 = std::array<BiSeries, 3>;

inline Column3 mul(const Mat3& m, const Column3& v) {
    Column3 out;
    for (int r = 0; r < 3; ++r)
        for (int k = 0; k < 3; ++k) out[r] += m(r, k) * v[k];
    return out;
}
inline Row3 mul(const Row3& v, const Mat3& m) {
    Row3 out;
    for (int c = 0; c < 3; ++c)
        for (int k = 0; k < 3; ++k) out[c] += v[k] * m(k, c);
    return out;
}
inline BiSeries dot(const Row3& r, const Column3& c) {
    BiSeries s;
    for (int k = 0; k < 3; ++k) s += r[k] * c[k];
    return s;
}
inline Mat3 outer(const Column3& c, const Row3& r) {
    Mat3 m;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m(i, j) = c[i] * r[j];
    return m;
}

/// The constants of the representation.
struct DTConstants {
    Mat3 rho0, rho1;
    Column3 col_dt, c_dt;
    Row3 row_dt, r_dt;

    static const DTConstants& get() {
        static const DTConstants k = [] {
            DTConstants d;
            using namespace bi;
            d.rho0(0, 0) = e(0);
            d.rho0(1, 0) = e(1);
            d.rho0(1, 1) = f(0);
            d.rho0(1, 2) = -e(1);
            d.rho0(2, 2) = e(0);
            d.col_dt = {scalar(1), scalar(-1), BiSeries()};
            d.row_dt = {e(1), -f(1), BiSeries()};
            d.rho1 = outer(d.col_dt, d.row_dt);
            d.c_dt = {f(1), e(1), -e(0) - f_inf()};
            d.r_dt = {BiSeries(), BiSeries(), scalar(1)};
            return d;
        }();
        return k;
    }
};

/// rho_DT(a): the algebra morphism e0 -> rho0, e1 -> rho1.
inline Mat3 rho_dt(const Series& a) {
    if (!(a.alphabet() == Alphabet::e())) throw std::invalid_argument("rho_dt: alphabet must be {e0,e1}");
    const auto& k = DTConstants::get();
    std::unordered_map<Word, Mat3> memo;
    memo.emplace(Word(), Mat3::identity());
    Mat3 out;
    for (const auto& [w, c] : a.sorted_terms()) {
        for (std::size_t len = 1; len <= w.size(); ++len) {
            Word prefix = w.substr(0, len);
            if (memo.count(prefix)) continue;
            memo.emplace(prefix, memo.at(w.substr(0, len - 1)) * (w[len - 1] == 0 ? k.rho0 : k.rho1));
        }
        out = out + c * memo.at(w);
    }
    return out.truncated(a.max_degree());
}

/// row_DT · rho0^{n-1} · col_DT.
inline BiSeries delta_rho(int n) {
    if (n < 1) throw std::invalid_argument("delta_rho: n must be >= 1");
    const auto& k = DTConstants::get();
    Row3 r = k.row_dt;
    for (int i = 1; i < n; ++i) r = mul(r, k.rho0);
    return dot(r, k.col_dt);
}

/// Ad_{e1} on the W-basis: v e1 -> e1 v (and 1 -> 1).
inline Word ad_e1_word(const Word& w) {
    if (w.empty()) return w;
    if (w.back() != 1) throw std::invalid_argument("ad_e1: word does not end in e1");
    return Word{1} + w.substr(0, w.size() - 1);
}

/// (Ad_{e1} ⊗ Ad_{e1}) Δ^W(y_n), left factor in e-letters, right in f-letters.
inline BiSeries delta_w_rl(int n) {
    if (n < 1) throw std::invalid_argument("delta_w_rl: n must be >= 1");
    WTensor d = delta_w(Series::monomial(Alphabet::e(), y_word(n)));
    BiSeries out;
    for (const auto& [p, c] : d.terms()) out.add_term({ad_e1_word(p.left), ad_e1_word(p.right)}, c);
    return out;
}

/// Coordinates of homogeneous BiSeries / matrices in the monomial basis.
class BiCoords {
public:
    explicit BiCoords(int degree) : degree_(degree), basis_(bi::basis(degree)) {
        for (std::size_t i = 0; i < basis_.size(); ++i) index_.emplace(basis_[i], i);
    }
    [[nodiscard]] int degree() const { return degree_; }
    [[nodiscard]] std::size_t size() const { return basis_.size(); }
    [[nodiscard]] const std::vector<WordPair>& basis() const { return basis_; }

    [[nodiscard]] Vector of(const BiSeries& s) const {
        Vector v(basis_.size());
        for (const auto& [p, c] : s.terms()) {
            auto it = index_.find(p);
            if (it == index_.end()) throw std::invalid_argument("BiCoords: term of the wrong degree");
            v[it->second] = c;
        }
        return v;
    }
    /// Entries in row-major order, each block in monomial order.
    [[nodiscard]] Vector of(const Mat3& m) const {
        Vector v;
        v.reserve(9 * basis_.size());
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c) {
                Vector e = of(m(r, c));
                v.insert(v.end(), e.begin(), e.end());
            }
        return v;
    }
    [[nodiscard]] BiSeries element(const Vector& v, std::size_t offset = 0) const {
        BiSeries s;
        for (std::size_t i = 0; i < basis_.size(); ++i)
            if (!v[offset + i].is_zero()) s.add_term(basis_[i], v[offset + i]);
        return s;
    }
    [[nodiscard]] Mat3 matrix(const Vector& v) const {
        Mat3 m;
        for (int k = 0; k < 9; ++k) m(k / 3, k % 3) = element(v, static_cast<std::size_t>(k) * basis_.size());
        return m;
    }

private:
    int degree_;
    std::vector<WordPair> basis_;
    std::unordered_map<WordPair, std::size_t> index_;
};

namespace detail {

// Matrix from columns given as sparse (row label -> value) maps.
template <class Key>
QMatrix assemble(const std::vector<std::map<Key, Rational>>& cols) {
    std::map<Key, std::size_t> order;
    for (const auto& c : cols)
        for (const auto& [k, v] : c) order.emplace(k, 0);
    std::size_t i = 0;
    for (auto& [k, idx] : order) idx = i++;
    QMatrix m(order.size(), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (const auto& [k, v] : cols[j]) m(order.at(k), j) = v;
    return m;
}

}  // namespace detail

/// Commutant slice at matrix-entry degree d: all A with homogeneous entries
/// of degree d and [A, c] = 0 for every constraint c.
struct CommutantResult {
    std::size_t dim = 0;
    Subspace space;
};

inline CommutantResult commutant_dimension(const std::vector<Mat3>& constraints, int d) {
    if (d < 0) throw std::invalid_argument("commutant_dimension: negative degree");
    BiCoords coords(d);
    using Key = std::tuple<std::size_t, int, WordPair>;
    std::vector<std::map<Key, Rational>> cols;
    for (int entry = 0; entry < 9; ++entry)
        for (const auto& p : coords.basis()) {
            Mat3 a = Mat3::unit(entry / 3, entry % 3, BiSeries::monomial(p.left, p.right));
            std::map<Key, Rational> col;
            for (std::size_t k = 0; k < constraints.size(); ++k) {
                Mat3 br = commutator(a, constraints[k]);
                for (int e = 0; e < 9; ++e)
                    for (const auto& [q, c] : br(e / 3, e % 3).terms()) col[{k, e, q}] += c;
            }
            std::erase_if(col, [](const auto& x) { return x.second.is_zero(); });
            cols.push_back(std::move(col));
        }
    QMatrix m = detail::assemble(cols);
    if (m.rows() == 0) m = QMatrix(0, cols.size());
    Subspace s = nullspace(m);
    return {s.dim(), s};
}

/// The commuting polynomial phi(e1, f1) = sum phi_ij e1^i f1^j, given as a
/// BiSeries with left words in e1 only and right words in f1 only.
inline bool is_e1_f1_polynomial(const BiSeries& phi) {
    for (const auto& [p, c] : phi.terms()) {
        for (std::size_t i = 0; i < p.left.size(); ++i)
            if (p.left[i] != 1) return false;
        for (std::size_t i = 0; i < p.right.size(); ++i)
            if (p.right[i] != 1) return false;
    }
    return true;
}

/// M(phi, m) = phi(e1,f1) I3 + (f1 0; e1 0; 0 1) m (1 1 0; 0 0 1)
/// with m = (alpha gamma; beta delta).
inline Mat3 m_param(const BiSeries& phi, const std::array<BiSeries, 4>& m) {
    if (!is_e1_f1_polynomial(phi)) throw std::invalid_argument("m_param: phi must be a polynomial in e1, f1");
    const BiSeries& alpha = m[0];
    const BiSeries& gamma = m[1];
    const BiSeries& beta = m[2];
    const BiSeries& delta = m[3];
    BiSeries f1 = bi::f(1), e1 = bi::e(1);
    Mat3 out = phi * Mat3::identity();
    out(0, 0) += f1 * alpha;
    out(0, 1) += f1 * alpha;
    out(0, 2) += f1 * gamma;
    out(1, 0) += e1 * alpha;
    out(1, 1) += e1 * alpha;
    out(1, 2) += e1 * gamma;
    out(2, 0) += beta;
    out(2, 1) += beta;
    out(2, 2) += delta;
    return out;
}

/// Degree-d slice of the M(phi, m) family, as a subspace of matrix coordinates.
inline Subspace m_param_slice(int d) {
    BiCoords coords(d);
    std::vector<Vector> gens;
    for (int i = 0; i <= d; ++i)
        gens.push_back(coords.of(m_param(BiSeries::monomial(Word::repeat(1, static_cast<std::size_t>(i)),
                                                            Word::repeat(1, static_cast<std::size_t>(d - i))),
                                         {})));
    auto add = [&](int slot, int deg) {
        if (deg < 0) return;
        for (const auto& p : bi::basis(deg)) {
            std::array<BiSeries, 4> m;
            m[static_cast<std::size_t>(slot)] = BiSeries::monomial(p.left, p.right);
            gens.push_back(coords.of(m_param(BiSeries(), m)));
        }
    };
    add(0, d - 1);  // alpha
    add(1, d - 1);  // gamma
    add(2, d);      // beta
    add(3, d);      // delta
    return Subspace::span(9 * coords.size(), gens);
}

inline std::size_t m_param_slice_dimension(int d) {
    return static_cast<std::size_t>(d + 1) + (d >= 1 ? 2 * bi::dim(d - 1) : 0) + 2 * bi::dim(d);
}

/// Basis of the degree-d part of C_V(e0) = k[e0] ⊗ V as BiSeries monomials.
inline std::vector<BiSeries> cv_e0_monomials(int d) {
    std::vector<BiSeries> out;
    for (int k = 0; k <= d; ++k)
        for (const auto& r : all_words(2, static_cast<std::size_t>(d - k)))
            out.push_back(BiSeries::monomial(Word::repeat(0, static_cast<std::size_t>(k)), r));
    return out;
}

inline Subspace cv_e0_basis(int d) {
    if (d < 0) throw std::invalid_argument("cv_e0_basis: negative degree");
    BiCoords coords(d);
    std::vector<Vector> v;
    for (const auto& m : cv_e0_monomials(d)) v.push_back(coords.of(m));
    return Subspace::span(coords.size(), v);
}

/// Brute-force centralizer of e0 in the degree-d part of V^ ⊗ V^.
inline Subspace centralizer_e0(int d) {
    BiCoords coords(d);
    BiSeries e0 = bi::e(0);
    std::vector<std::map<WordPair, Rational>> cols;
    for (const auto& p : coords.basis()) {
        BiSeries x = BiSeries::monomial(p.left, p.right);
        BiSeries br = e0 * x - x * e0;
        cols.emplace_back(br.terms().begin(), br.terms().end());
    }
    QMatrix m = detail::assemble(cols);
    if (m.rows() == 0) m = QMatrix(0, cols.size());
    return nullspace(m);
}

/// Degree-d slice of k I3 + C_DT · C_V(e0) · R_DT.
inline Subspace rho_dt_commutant_slice(int d) {
    BiCoords coords(d);
    const auto& k = DTConstants::get();
    std::vector<Vector> gens;
    if (d == 0) gens.push_back(coords.of(Mat3::identity()));
    if (d >= 1)
        for (const auto& a : cv_e0_monomials(d - 1)) {
            Column3 ca{k.c_dt[0] * a, k.c_dt[1] * a, k.c_dt[2] * a};
            gens.push_back(coords.of(outer(ca, k.r_dt)));
        }
    return Subspace::span(9 * coords.size(), gens);
}

/// Rank data of a two-map complex A -> B -> C at one degree.
struct ExactnessReport {
    std::string which;
    int degree = 0;
    std::size_t dim_source = 0, dim_middle = 0, dim_target = 0;
    std::size_t rank_first = 0, rank_second = 0;
    std::size_t dim_ker_second = 0, dim_im_first = 0;
    bool is_complex = false;
    bool exact = false;
};

namespace detail {

// Sparse column of a linear map, in target coordinates (sorted, no zeros).
using SparseCol = SparseRow;

inline SparseCol to_sparse(std::map<std::size_t, Rational> m) {
    SparseCol out;
    for (auto& [k, v] : m)
        if (!v.is_zero()) out.emplace_back(k, std::move(v));
    return out;
}

// A map given by its columns; `rows` is the target dimension.
struct SparseMap {
    std::size_t rows = 0;
    std::vector<SparseCol> cols;
};

inline ExactnessReport finish(std::string which, int n, const SparseMap& first, const SparseMap& second) {
    ExactnessReport r;
    r.which = std::move(which);
    r.degree = n;
    r.dim_source = first.cols.size();
    r.dim_middle = first.rows;
    r.dim_target = second.rows;
    if (second.cols.size() != first.rows) throw std::logic_error("exactness: middle dimensions disagree");
    r.rank_first = sparse_rank(first.cols, first.rows);
    r.rank_second = sparse_rank(second.cols, second.rows);
    r.dim_im_first = r.rank_first;
    r.dim_ker_second = second.cols.size() - r.rank_second;
    r.is_complex = true;
    for (const auto& c : first.cols) {
        std::map<std::size_t, Rational> acc;
        for (const auto& [k, v] : c)
            for (const auto& [i, w] : second.cols[k]) acc[i] += v * w;
        if (!to_sparse(std::move(acc)).empty()) {
            r.is_complex = false;
            break;
        }
    }
    r.exact = r.is_complex && r.dim_ker_second == r.dim_im_first;
    return r;
}

// Sparse coordinates of homogeneous BiSeries blocks laid side by side.
class BlockCoords {
public:
    explicit BlockCoords(const BiCoords& c) : coords_(c) {
        for (std::size_t i = 0; i < c.size(); ++i) index_.emplace(c.basis()[i], i);
    }
    void add(std::map<std::size_t, Rational>& into, const BiSeries& s, std::size_t block) const {
        for (const auto& [p, v] : s.terms()) into[block * coords_.size() + index_.at(p)] += v;
    }
    [[nodiscard]] std::size_t size() const { return coords_.size(); }

private:
    const BiCoords& coords_;
    std::unordered_map<WordPair, std::size_t> index_;
};

// V^ -> V^2 -> V^ with x -> (f1 x, e1 x), (u, v) -> e1 u - f1 v.
inline ExactnessReport e1f1(int n) {
    BiCoords src(n - 1), mid(n), tgt(n + 1);
    BlockCoords m(mid), t(tgt);
    SparseMap first{2 * mid.size(), {}}, second{tgt.size(), {}};
    for (const auto& p : src.basis()) {
        BiSeries x = BiSeries::monomial(p.left, p.right);
        std::map<std::size_t, Rational> col;
        m.add(col, bi::f(1) * x, 0);
        m.add(col, bi::e(1) * x, 1);
        first.cols.push_back(to_sparse(std::move(col)));
    }
    for (int half = 0; half < 2; ++half)
        for (const auto& p : mid.basis()) {
            BiSeries x = BiSeries::monomial(p.left, p.right);
            std::map<std::size_t, Rational> col;
            t.add(col, half == 0 ? bi::e(1) * x : -(bi::f(1) * x), 0);
            second.cols.push_back(to_sparse(std::move(col)));
        }
    return finish("e1f1", n, first, second);
}

// k[[e0,f_inf]] ⊕ V^ -> V^2 -> V^ with
// (phi, g) -> (phi + g s, phi + s g), (u, v) -> s u - v s, s = e0 + f_inf.
inline ExactnessReport e0finf(int n) {
    BiCoords src(n - 1), mid(n), tgt(n + 1);
    BlockCoords m(mid), t(tgt);
    BiSeries s = bi::e(0) + bi::f_inf();
    SparseMap first{2 * mid.size(), {}}, second{tgt.size(), {}};
    for (int i = 0; i <= n; ++i) {
        BiSeries phi = bi::scalar(1);
        for (int k = 0; k < i; ++k) phi = phi * bi::e(0);
        for (int k = i; k < n; ++k) phi = phi * bi::f_inf();
        std::map<std::size_t, Rational> col;
        m.add(col, phi, 0);
        m.add(col, phi, 1);
        first.cols.push_back(to_sparse(std::move(col)));
    }
    for (const auto& p : src.basis()) {
        BiSeries g = BiSeries::monomial(p.left, p.right);
        std::map<std::size_t, Rational> col;
        m.add(col, g * s, 0);
        m.add(col, s * g, 1);
        first.cols.push_back(to_sparse(std::move(col)));
    }
    for (int half = 0; half < 2; ++half)
        for (const auto& p : mid.basis()) {
            BiSeries x = BiSeries::monomial(p.left, p.right);
            std::map<std::size_t, Rational> col;
            t.add(col, half == 0 ? s * x : -(x * s), 0);
            second.cols.push_back(to_sparse(std::move(col)));
        }
    return finish("e0finf", n, first, second);
}

// Q<x,y>[n-1] ⊕ lie[n] -> Q<x,y>[n]^2 ⊕ lie[n+1] -> Q<x,y>[n+1] with
// (c, u) -> (xc + u, cx + u, [u, x]), (a, b, z) -> ax - xb - z.
inline ExactnessReport appendix_b(int n) {
    const Alphabet& xy = Alphabet::xy();
    Series x = Series::letter(xy, 0);
    auto words_n = all_words(2, static_cast<std::size_t>(n));
    auto words_n1 = all_words(2, static_cast<std::size_t>(n + 1));
    std::map<Word, std::size_t> idx_n, idx_n1;
    for (std::size_t i = 0; i < words_n.size(); ++i) idx_n.emplace(words_n[i], i);
    for (std::size_t i = 0; i < words_n1.size(); ++i) idx_n1.emplace(words_n1[i], i);
    auto lie_n = lyndon_basis(xy, n);
    auto lie_n1 = lyndon_basis(xy, n + 1);
    std::size_t wn = words_n.size();
    auto add_words = [](std::map<std::size_t, Rational>& col, const Series& s, const std::map<Word, std::size_t>& idx,
                        std::size_t offset) {
        for (const auto& [w, c] : s.terms()) col[offset + idx.at(w)] += c;
    };
    SparseMap first{2 * wn + lie_n1->size(), {}}, second{words_n1.size(), {}};
    auto mid_col = [&](const Series& a, const Series& b, const Series& z) {
        std::map<std::size_t, Rational> col;
        add_words(col, a, idx_n, 0);
        add_words(col, b, idx_n, wn);
        if (!z.is_zero()) {
            Vector zc = lie_n1->to_coords(z);
            for (std::size_t i = 0; i < zc.size(); ++i) col[2 * wn + i] += zc[i];
        }
        return to_sparse(std::move(col));
    };
    Series zero(xy);
    for (const auto& w : all_words(2, static_cast<std::size_t>(n - 1))) {
        Series c = Series::monomial(xy, w);
        first.cols.push_back(mid_col(x * c, c * x, zero));
    }
    for (const auto& e : lie_n->entries())
        first.cols.push_back(mid_col(e.expansion, e.expansion, lie_bracket(e.expansion, x)));
    auto tgt_col = [&](const Series& s) {
        std::map<std::size_t, Rational> col;
        add_words(col, s, idx_n1, 0);
        return to_sparse(std::move(col));
    };
    for (const auto& w : words_n) second.cols.push_back(tgt_col(Series::monomial(xy, w) * x));
    for (const auto& w : words_n) second.cols.push_back(tgt_col(-(x * Series::monomial(xy, w))));
    for (const auto& e : lie_n1->entries()) second.cols.push_back(tgt_col(-e.expansion));
    return finish("appendixB", n, first, second);
}

}  // namespace detail

/// which ∈ {"e1f1", "e0finf", "appendixB"}; n >= 1.
inline ExactnessReport exactness_check(const std::string& which, int n) {
    if (n < 1) throw std::invalid_argument("exactness_check: degree must be >= 1");
    if (which == "e1f1") return detail::e1f1(n);
    if (which == "e0finf") return detail::e0finf(n);
    if (which == "appendixB") return detail::appendix_b(n);
    throw std::invalid_argument("exactness_check: unknown complex '" + which + "'");
}

/// Output of torsor_factor.
struct TorsorFactor {
    Series h;
    Rational gamma;
    Series c;
};

/// Checks a = h(γ + xc), b = h(γ + cx), x + z = h x h^{-1} up to order n.
inline bool torsor_identities_hold(const Series& a, const Series& b, const Series& z, const TorsorFactor& t, int n) {
    const Alphabet& xy = a.alphabet();
    Series x = Series::letter(xy, 0, n);
    Series g = Series::constant(xy, t.gamma, n);
    Series ht = truncate(promote(t.h, std::max(t.h.max_degree(), n)), n);
    Series c = promote(t.c, std::max(t.c.max_degree(), n));
    bool ok = truncate(a, n) == ht * (g + x * c);
    ok = ok && truncate(b, n) == ht * (g + c * x);
    ok = ok && (x + truncate(promote(z, std::max(z.max_degree(), n)), n)) == ht * x * inverse(ht);
    return ok;
}

/// Degree-by-degree normalization of (a, b): at step n, a[n] = xc + u and
/// b[n] = cx + u are solved for c of degree n-1 and Lie u of degree n, then
/// (a, b) <- (exp(-u) a (1 - xc), exp(-u) b (1 - cx)). nullopt when the
/// precondition a x = (x + z) b fails through degree N+1.
inline std::optional<TorsorFactor> torsor_factor(const Series& a_in, const Series& b_in, const Series& z_in, int n) {
    const Alphabet& xy = Alphabet::xy();
    if (n < 1) throw std::invalid_argument("torsor_factor: N must be >= 1");
    if (!(a_in.alphabet() == xy) || !(b_in.alphabet() == xy) || !(z_in.alphabet() == xy))
        throw std::invalid_argument("torsor_factor: alphabet must be {x,y}");
    if (a_in.max_degree() < n || b_in.max_degree() < n) throw std::invalid_argument("torsor_factor: a, b known below order N");
    if (!is_lie_series(z_in) || (z_in.max_degree() >= 1 && !graded_component(z_in, 1).is_zero()))
        throw std::invalid_argument("torsor_factor: z must be Lie of degree >= 2");
    Series x = Series::letter(xy, 0);
    Series a = truncate(a_in, n), b = truncate(b_in, n);
    Series z = z_in.max_degree() >= n + 1 ? truncate(z_in, n + 1) : promote(z_in, n + 1);
    if (!(promote(a, n + 1) * x == (x + z) * promote(b, n + 1))) return std::nullopt;
    Rational gamma = a.constant_term();
    if (gamma.is_zero() || gamma != b.constant_term()) return std::nullopt;
    a = (Rational(1) / gamma) * a;
    b = (Rational(1) / gamma) * b;

    Series hacc = Series::one(xy, n);  // product of exp(-u)
    Series racc = Series::one(xy, n);  // product of (1 - xc) on the right
    for (int d = 1; d <= n; ++d) {
        Series ad = graded_component(a, d), bd = graded_component(b, d);
        if (ad.is_zero() && bd.is_zero()) continue;
        auto cw = all_words(2, static_cast<std::size_t>(d - 1));
        auto lie = lyndon_basis(xy, d);
        // Unknowns: c coordinates, then u Lyndon coordinates; equations: a
        // block then b block, stacked through a doubled alphabet of labels.
        using Key = std::pair<int, Word>;
        std::vector<std::map<Key, Rational>> cols;
        auto column = [](const Series& pa, const Series& pb) {
            std::map<Key, Rational> col;
            for (const auto& [w, c] : pa.terms()) col[{0, w}] += c;
            for (const auto& [w, c] : pb.terms()) col[{1, w}] += c;
            std::erase_if(col, [](const auto& t) { return t.second.is_zero(); });
            return col;
        };
        for (const auto& w : cw) {
            Series c = Series::monomial(xy, w);
            cols.push_back(column(x * c, c * x));
        }
        for (const auto& e : lie->entries()) cols.push_back(column(e.expansion, e.expansion));
        std::map<Key, Rational> rhs = column(ad, bd);
        std::map<Key, std::size_t> rows;
        for (const auto& col : cols)
            for (const auto& [k, v] : col) rows.emplace(k, 0);
        for (const auto& [k, v] : rhs) rows.emplace(k, 0);
        std::size_t i = 0;
        for (auto& [k, idx] : rows) idx = i++;
        QMatrix m(rows.size(), cols.size());
        for (std::size_t j = 0; j < cols.size(); ++j)
            for (const auto& [k, v] : cols[j]) m(rows.at(k), j) = v;
        Vector rv(rows.size());
        for (const auto& [k, v] : rhs) rv[rows.at(k)] = v;
        auto sol = solve(m, rv);
        if (!sol) return std::nullopt;
        Series c(xy, n), u(xy, n);
        for (std::size_t k = 0; k < cw.size(); ++k) c.add_term(cw[k], (*sol)[k]);
        for (std::size_t k = 0; k < lie->size(); ++k)
            if (!(*sol)[cw.size() + k].is_zero()) u += (*sol)[cw.size() + k] * (*lie)[k].expansion;
        Series left = dsl::exp(truncate(-u, n));
        Series ra = Series::one(xy, n) - x * c, rb = Series::one(xy, n) - c * x;
        a = left * a * ra;
        b = left * b * rb;
        hacc = left * hacc;
        racc = racc * ra;
    }
    // a / gamma = hacc^{-1} racc^{-1}, so gamma + xc = gamma racc^{-1}.
    Series h = inverse(hacc);
    Series right = gamma * inverse(racc);
    Series c(xy, n);
    for (const auto& [w, v] : right.terms()) {
        if (w.empty()) continue;
        if (w[0] != 0) return std::nullopt;
        c.add_term(w.substr(1), v);
    }
    TorsorFactor out{h, gamma, truncate(c, n - 1)};
    if (!torsor_identities_hold(a_in, b_in, z, out, n)) return std::nullopt;
    return out;
}

}  // namespace dsl

#endif  // DSL_MATRIX_REP_HPP
