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

#ifndef DSL_TENSOR_HPP
#define DSL_TENSOR_HPP

#include <algorithm>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <vector>

#include "rational.hpp"
#include "series.hpp"
#include "word.hpp"

namespace dsl {

/// Pair of words (left factor, right factor).
struct WordPair {
    Word left, right;

    [[nodiscard]] std::size_t degree() const { return left.size() + right.size(); }
    friend bool operator==(const WordPair&, const WordPair&) = default;
    // Canonical order: total degree, then left word, then right word.
    friend std::strong_ordering operator<=>(const WordPair& a, const WordPair& b) {
        if (a.degree() != b.degree()) return a.degree() <=> b.degree();
        if (auto c = a.left <=> b.left; c != 0) return c;
        return a.right <=> b.right;
    }
};

}  // namespace dsl

template <>
struct std::hash<dsl::WordPair> {
    std::size_t operator()(const dsl::WordPair& p) const noexcept {
        std::size_t h = std::hash<dsl::Word>{}(p.left);
        return h ^ (std::hash<dsl::Word>{}(p.right) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
    }
};

namespace dsl {

/// Element of the completed tensor square of a free algebra on two letters,
/// truncated in total degree. Left and right letters commute with each other,
/// so the product concatenates componentwise.
///
/// Used both for the target of the harmonic coproduct and for the ring
/// V^ ⊗ V^ in which e_i := e_i ⊗ 1 and f_i := 1 ⊗ e_i.
class TensorSeries {
public:
    using Terms = std::unordered_map<WordPair, Rational>;

    TensorSeries() = default;
    explicit TensorSeries(int max_degree) : max_degree_(max_degree) {}

    static TensorSeries one(int max_degree = kPolynomialCap) {
        TensorSeries t(max_degree);
        t.add_term({Word(), Word()}, 1);
        return t;
    }
    static TensorSeries monomial(const Word& l, const Word& r, const Rational& c = 1,
                                 int max_degree = kPolynomialCap) {
        TensorSeries t(max_degree);
        t.add_term({l, r}, c);
        return t;
    }
    /// a ⊗ b.
    static TensorSeries tensor(const Series& a, const Series& b) {
        TensorSeries t(std::min(a.max_degree(), b.max_degree()));
        for (const auto& [u, c] : a.terms())
            for (const auto& [v, d] : b.terms()) t.add_term({u, v}, c * d);
        return t;
    }
    /// a ⊗ 1 and 1 ⊗ a.
    static TensorSeries left(const Series& a) {
        TensorSeries t(a.max_degree());
        for (const auto& [u, c] : a.terms()) t.add_term({u, Word()}, c);
        return t;
    }
    static TensorSeries right(const Series& a) {
        TensorSeries t(a.max_degree());
        for (const auto& [u, c] : a.terms()) t.add_term({Word(), u}, c);
        return t;
    }

    [[nodiscard]] int max_degree() const { return max_degree_; }
    [[nodiscard]] const Terms& terms() const { return terms_; }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    [[nodiscard]] Rational coeff(const Word& l, const Word& r) const {
        auto it = terms_.find({l, r});
        return it == terms_.end() ? Rational() : it->second;
    }

    void add_term(const WordPair& p, const Rational& c) {
        if (c.is_zero() || static_cast<int>(p.degree()) > max_degree_) return;
        auto [it, inserted] = terms_.try_emplace(p, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    [[nodiscard]] std::vector<std::pair<WordPair, Rational>> sorted_terms() const {
        std::vector<std::pair<WordPair, Rational>> v(terms_.begin(), terms_.end());
        std::sort(v.begin(), v.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
        return v;
    }

    [[nodiscard]] TensorSeries truncated(int d) const {
        TensorSeries t(std::min(d, max_degree_));
        for (const auto& [p, c] : terms_) t.add_term(p, c);
        return t;
    }
    [[nodiscard]] TensorSeries graded_component(int d) const {
        TensorSeries t(max_degree_);
        for (const auto& [p, c] : terms_)
            if (static_cast<int>(p.degree()) == d) t.add_term(p, c);
        return t;
    }
    [[nodiscard]] bool is_homogeneous(int d) const {
        return std::all_of(terms_.begin(), terms_.end(),
                           [d](const auto& t) { return static_cast<int>(t.first.degree()) == d; });
    }

    /// Swap of the two tensor factors.
    [[nodiscard]] TensorSeries flipped() const {
        TensorSeries t(max_degree_);
        for (const auto& [p, c] : terms_) t.add_term({p.right, p.left}, c);
        return t;
    }

    TensorSeries& operator+=(const TensorSeries& o) {
        max_degree_ = std::min(max_degree_, o.max_degree_);
        std::erase_if(terms_, [n = max_degree_](const auto& t) { return static_cast<int>(t.first.degree()) > n; });
        for (const auto& [p, c] : o.terms_) add_term(p, c);
        return *this;
    }
    TensorSeries& operator-=(const TensorSeries& o) {
        max_degree_ = std::min(max_degree_, o.max_degree_);
        std::erase_if(terms_, [n = max_degree_](const auto& t) { return static_cast<int>(t.first.degree()) > n; });
        for (const auto& [p, c] : o.terms_) add_term(p, -c);
        return *this;
    }
    TensorSeries& operator*=(const Rational& c) {
        if (c.is_zero()) {
            terms_.clear();
        } else {
            for (auto& [p, v] : terms_) v *= c;
        }
        return *this;
    }
    friend TensorSeries operator+(TensorSeries a, const TensorSeries& b) { return a += b; }
    friend TensorSeries operator-(TensorSeries a, const TensorSeries& b) { return a -= b; }
    friend TensorSeries operator-(TensorSeries a) { return a *= Rational(-1); }
    friend TensorSeries operator*(const Rational& c, TensorSeries a) { return a *= c; }

    friend TensorSeries operator*(const TensorSeries& a, const TensorSeries& b) {
        int n = std::min(a.max_degree_, b.max_degree_);
        TensorSeries out(n);
        for (const auto& [pa, ca] : a.terms_) {
            int room = n - static_cast<int>(pa.degree());
            if (room < 0) continue;
            for (const auto& [pb, cb] : b.terms_)
                if (static_cast<int>(pb.degree()) <= room)
                    out.add_term({pa.left + pb.left, pa.right + pb.right}, ca * cb);
        }
        return out;
    }

    friend bool operator==(const TensorSeries& a, const TensorSeries& b) { return a.terms_ == b.terms_; }

private:
    int max_degree_ = kPolynomialCap;
    Terms terms_;
};

/// Element of the harmonic coproduct's target W^ ⊗ W^.
using WTensor = TensorSeries;
/// Element of V^ ⊗ V^ with e-letters on the left and f-letters on the right.
using BiSeries = TensorSeries;

}  // namespace dsl

#endif  // DSL_TENSOR_HPP
