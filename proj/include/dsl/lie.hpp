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

// Free Lie algebras: Lyndon bases, Lie recognition, Lie and Ihara brackets.

#ifndef DSL_LIE_HPP
#define DSL_LIE_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "linalg.hpp"
#include "rational.hpp"
#include "series.hpp"
#include "word.hpp"

namespace dsl {

/// w is Lyndon iff it is strictly smaller than each of its proper suffixes.
inline bool is_lyndon(const Word& w) {
    if (w.empty()) return false;
    for (std::size_t i = 1; i < w.size(); ++i)
        if (!lex_less(w, w.substr(i))) return false;
    return true;
}

/// Lyndon words of length exactly n over k letters, in lexicographic order
/// (Duval's algorithm).
inline std::vector<Word> lyndon_words(std::size_t k, std::size_t n) {
    std::vector<Word> out;
    if (n == 0 || k == 0) return out;
    std::vector<int> w{-1};
    while (!w.empty()) {
        ++w.back();
        std::size_t m = w.size();
        if (m == n) {
            Word word;
            for (int l : w) word.push_back(l);
            out.push_back(std::move(word));
        }
        while (w.size() < n) w.push_back(w[w.size() - m]);
        while (!w.empty() && w.back() == static_cast<int>(k) - 1) w.pop_back();
    }
    return out;
}

/// Standard factorization w = uv, v the longest proper Lyndon suffix.
inline std::pair<Word, Word> standard_factorization(const Word& w) {
    for (std::size_t i = 1; i < w.size(); ++i) {
        Word v = w.substr(i);
        if (is_lyndon(v)) return {w.substr(0, i), v};
    }
    throw std::invalid_argument("standard_factorization: word of length < 2");
}

inline Series lie_bracket(const Series& a, const Series& b) { return a * b - b * a; }

struct LyndonEntry {
    Word word;
    std::string bracketing;  // e.g. "[e0,[e0,e1]]"
    Series expansion;
};

/// Lyndon basis of the degree-n component of the free Lie algebra.
class LyndonBasis {
public:
    LyndonBasis(const Alphabet& alphabet, int degree) : alphabet_(alphabet), degree_(degree) {
        if (degree < 1) throw std::invalid_argument("LyndonBasis: degree must be >= 1");
        std::map<Word, std::pair<std::string, Series>> memo;
        for (auto& w : lyndon_words(alphabet.size(), static_cast<std::size_t>(degree))) {
            auto [br, ex] = expand(w, memo);
            index_.emplace(w.raw(), entries_.size());
            entries_.push_back({w, br, ex});
        }
    }

    [[nodiscard]] const Alphabet& alphabet() const { return alphabet_; }
    [[nodiscard]] int degree() const { return degree_; }
    [[nodiscard]] std::size_t size() const { return entries_.size(); }
    [[nodiscard]] const std::vector<LyndonEntry>& entries() const { return entries_; }
    [[nodiscard]] const LyndonEntry& operator[](std::size_t i) const { return entries_[i]; }

    /// Index of a Lyndon word, or -1.
    [[nodiscard]] long index_of(const Word& w) const {
        auto it = index_.find(w.raw());
        return it == index_.end() ? -1 : static_cast<long>(it->second);
    }

    /// The Lie element with the given coordinates.
    [[nodiscard]] Series from_coords(const Vector& v) const {
        if (v.size() != entries_.size()) throw std::invalid_argument("from_coords: length mismatch");
        Series out(alphabet_);
        for (std::size_t i = 0; i < v.size(); ++i)
            if (!v[i].is_zero()) out += v[i] * entries_[i].expansion;
        return out;
    }

    /// Coordinates of a homogeneous Lie element. Each expansion is the Lyndon
    /// word itself plus lexicographically larger words, so the system is
    /// triangular. Throws std::domain_error unless a lies in the span.
    [[nodiscard]] Vector to_coords(const Series& a) const {
        if (!(a.alphabet() == alphabet_)) throw std::invalid_argument("to_coords: alphabet mismatch");
        if (!a.is_homogeneous(degree_)) throw std::domain_error("to_coords: not homogeneous of the basis degree");
        Vector v(entries_.size());
        Series rem = promote(a, std::max(a.max_degree(), kPolynomialCap));
        for (std::size_t i = 0; i < entries_.size(); ++i) {
            Rational c = rem.coeff(entries_[i].word);
            if (c.is_zero()) continue;
            v[i] = c;
            rem -= c * entries_[i].expansion;
        }
        if (!rem.is_zero()) throw std::domain_error("to_coords: element is not in the Lie span");
        return v;
    }

private:
    std::pair<std::string, Series> expand(const Word& w, std::map<Word, std::pair<std::string, Series>>& memo) const {
        if (auto it = memo.find(w); it != memo.end()) return it->second;
        std::pair<std::string, Series> r{std::string(), Series(alphabet_)};
        if (w.size() == 1) {
            r = {alphabet_.name(w[0]), Series::letter(alphabet_, w[0])};
        } else {
            auto [u, v] = standard_factorization(w);
            auto pu = expand(u, memo);
            auto pv = expand(v, memo);
            r = {"[" + pu.first + "," + pv.first + "]", lie_bracket(pu.second, pv.second)};
        }
        memo.emplace(w, r);
        return r;
    }

    Alphabet alphabet_;
    int degree_;
    std::vector<LyndonEntry> entries_;
    std::map<std::string, std::size_t> index_;
};

/// Shared, lazily built Lyndon bases. Safe for concurrent readers.
inline std::shared_ptr<const LyndonBasis> lyndon_basis(const Alphabet& alphabet, int n) {
    static std::shared_mutex mutex;
    static std::map<std::pair<std::vector<std::string>, int>, std::shared_ptr<const LyndonBasis>> cache;
    auto key = std::make_pair(alphabet.letters(), n);
    {
        std::shared_lock lock(mutex);
        if (auto it = cache.find(key); it != cache.end()) return it->second;
    }
    auto basis = std::make_shared<const LyndonBasis>(alphabet, n);
    std::unique_lock lock(mutex);
    return cache.try_emplace(key, std::move(basis)).first->second;
}

/// Witt's formula: number of Lyndon words of length n over k letters.
inline std::size_t witt_dimension(std::size_t k, std::size_t n) {
    auto mobius = [](std::size_t m) {
        int mu = 1;
        for (std::size_t p = 2; p * p <= m; ++p) {
            if (m % p) continue;
            m /= p;
            if (m % p == 0) return 0;
            mu = -mu;
        }
        return m > 1 ? -mu : mu;
    };
    long long total = 0;
    for (std::size_t d = 1; d <= n; ++d) {
        if (n % d) continue;
        long long p = 1;
        for (std::size_t i = 0; i < n / d; ++i) p *= static_cast<long long>(k);
        total += mobius(d) * p;
    }
    return static_cast<std::size_t>(total / static_cast<long long>(n));
}

/// Dynkin idempotent: the left-normed bracketing [..[[w1,w2],w3],..,wn].
inline Series dynkin_map(const Series& a) {
    Series out(a.alphabet(), a.max_degree());
    for (const auto& [w, c] : a.terms()) {
        if (w.empty()) continue;
        Series t = Series::letter(a.alphabet(), w[0], a.max_degree());
        for (std::size_t i = 1; i < w.size(); ++i) t = lie_bracket(t, Series::letter(a.alphabet(), w[i], a.max_degree()));
        out += c * t;
    }
    return out;
}

/// True iff the homogeneous element a (degree >= 1) is a Lie polynomial,
/// i.e. its Dynkin image is deg(a)·a.
inline bool is_lie(const Series& a) {
    if (a.is_zero()) return true;
    int n = a.low_degree();
    if (!a.is_homogeneous(n)) throw std::invalid_argument("is_lie: input is not homogeneous");
    if (n < 1) return false;
    return dynkin_map(a) == Rational(n) * a;
}

/// Lie recognition component by component, for non-homogeneous input.
inline bool is_lie_series(const Series& a) {
    if (!a.constant_term().is_zero()) return false;
    for (int d = 1; d <= a.max_degree(); ++d) {
        Series c = graded_component(a, d);
        if (!c.is_zero() && !is_lie(c)) return false;
    }
    return true;
}

/// The derivation d_a of a 2-letter free algebra: letter0 -> 0, letter1 -> [letter1, a].
inline Series ihara_derivation(const Series& a, const Series& b) {
    if (a.alphabet().size() != 2) throw std::invalid_argument("ihara: 2-letter alphabet required");
    Series l1 = Series::letter(a.alphabet(), 1);
    return derivation_apply({Series(a.alphabet()), lie_bracket(l1, a)}, b);
}

/// <a,b> = [a,b] + d_a(b) - d_b(a).
inline Series ihara_bracket(const Series& a, const Series& b) {
    a.check_compatible(b);
    if (!is_lie_series(a) || !is_lie_series(b)) throw std::invalid_argument("ihara_bracket: non-Lie input");
    return lie_bracket(a, b) + ihara_derivation(a, b) - ihara_derivation(b, a);
}

/// Linear systems on word coordinates. Rows are the words occurring in any
/// column (or the target), in canonical order.
class WordSystem {
public:
    explicit WordSystem(std::vector<Series> columns) : columns_(std::move(columns)) {
        for (const auto& c : columns_) index_words(c);
    }

    [[nodiscard]] const std::vector<Series>& columns() const { return columns_; }

    [[nodiscard]] QMatrix matrix() const {
        auto rows = row_index(nullptr);
        QMatrix m(rows.size(), columns_.size());
        fill(m, rows);
        return m;
    }
    [[nodiscard]] std::size_t rank() const { return dsl::rank(matrix()); }
    /// Linear relations among the columns.
    [[nodiscard]] Subspace kernel() const { return nullspace(matrix()); }

    /// Coefficients x with sum x_j column_j = target, or nullopt.
    [[nodiscard]] std::optional<Vector> solve(const Series& target) const {
        auto rows = row_index(&target);
        QMatrix m(rows.size(), columns_.size());
        fill(m, rows);
        Vector b(rows.size());
        for (const auto& [w, c] : target.terms()) b[rows.at(w)] = c;
        return dsl::solve(m, b);
    }

private:
    void index_words(const Series& s) {
        for (const auto& [w, c] : s.terms()) words_.emplace(w, 0);
    }
    [[nodiscard]] std::map<Word, std::size_t> row_index(const Series* extra) const {
        std::map<Word, std::size_t> rows = words_;
        if (extra)
            for (const auto& [w, c] : extra->terms()) rows.emplace(w, 0);
        std::size_t i = 0;
        for (auto& [w, k] : rows) k = i++;
        return rows;
    }
    void fill(QMatrix& m, const std::map<Word, std::size_t>& rows) const {
        for (std::size_t j = 0; j < columns_.size(); ++j)
            for (const auto& [w, c] : columns_[j].terms()) m(rows.at(w), j) = c;
    }

    std::vector<Series> columns_;
    std::map<Word, std::size_t> words_;
};

/// Small random integer coefficients in [-2, 2], portable across standard
/// libraries (no std distributions).
inline Rational random_small(std::mt19937_64& rng) {
    return Rational(static_cast<long>(rng() % 5) - 2);
}

inline Series random_lie(const Alphabet& alphabet, int degree, std::mt19937_64& rng) {
    auto basis = lyndon_basis(alphabet, degree);
    Vector v(basis->size());
    for (auto& c : v) c = random_small(rng);
    return basis->from_coords(v);
}

}  // namespace dsl

#endif  // DSL_LIE_HPP
