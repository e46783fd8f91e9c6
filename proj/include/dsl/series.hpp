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

// Degree-truncated noncommutative power series with exact rational
// coefficients over a finite alphabet.
//
// Truncation travels with the value: every series records the order N up to
// which its coefficients are known, and any operation combining series of
// different orders returns the smaller one.

#ifndef DSL_SERIES_HPP
#define DSL_SERIES_HPP

#include <algorithm>
#include <cstddef>
#include <ostream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "rational.hpp"
#include "word.hpp"

namespace dsl {

/// Truncation order given to polynomials the library builds itself (letters,
/// Lyndon expansions, brackets of homogeneous elements). A polynomial of
/// degree d is represented exactly at any order >= d, so this is a cap rather
/// than an approximation.
inline constexpr int kPolynomialCap = 32;

class Series {
public:
    using Terms = std::unordered_map<Word, Rational>;

    explicit Series(Alphabet alphabet, int max_degree = kPolynomialCap)
        : alphabet_(std::move(alphabet)), max_degree_(max_degree) {
        if (max_degree < 0) throw std::invalid_argument("Series: negative truncation");
    }

    static Series constant(const Alphabet& a, const Rational& c, int max_degree = kPolynomialCap) {
        Series s(a, max_degree);
        s.add_term(Word(), c);
        return s;
    }
    static Series one(const Alphabet& a, int max_degree = kPolynomialCap) { return constant(a, 1, max_degree); }
    static Series letter(const Alphabet& a, int index, int max_degree = kPolynomialCap) {
        if (index < 0 || static_cast<std::size_t>(index) >= a.size())
            throw std::invalid_argument("Series::letter: index out of range");
        return monomial(a, Word{index}, 1, max_degree);
    }
    static Series monomial(const Alphabet& a, const Word& w, const Rational& c = 1,
                           int max_degree = kPolynomialCap) {
        Series s(a, max_degree);
        s.add_term(w, c);
        return s;
    }

    [[nodiscard]] const Alphabet& alphabet() const { return alphabet_; }
    [[nodiscard]] int max_degree() const { return max_degree_; }
    [[nodiscard]] const Terms& terms() const { return terms_; }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    [[nodiscard]] std::size_t size() const { return terms_.size(); }

    /// Coefficient pairing (a|w).
    [[nodiscard]] Rational coeff(const Word& w) const {
        if (static_cast<int>(w.size()) > max_degree_)
            throw std::out_of_range("Series::coeff: word beyond truncation order");
        auto it = terms_.find(w);
        return it == terms_.end() ? Rational() : it->second;
    }
    [[nodiscard]] Rational constant_term() const { return coeff(Word()); }

    /// Adds c·w; silently drops words beyond the truncation order.
    void add_term(const Word& w, const Rational& c) {
        if (c.is_zero() || static_cast<int>(w.size()) > max_degree_) return;
        check_word(w);
        auto [it, inserted] = terms_.try_emplace(w, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    /// Terms in canonical word order.
    [[nodiscard]] std::vector<std::pair<Word, Rational>> sorted_terms() const {
        std::vector<std::pair<Word, Rational>> v(terms_.begin(), terms_.end());
        std::sort(v.begin(), v.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
        return v;
    }

    /// Length of the shortest stored word, or -1 for zero.
    [[nodiscard]] int low_degree() const {
        int d = -1;
        for (const auto& [w, c] : terms_)
            if (d < 0 || static_cast<int>(w.size()) < d) d = static_cast<int>(w.size());
        return d;
    }
    [[nodiscard]] int high_degree() const {
        int d = -1;
        for (const auto& [w, c] : terms_) d = std::max(d, static_cast<int>(w.size()));
        return d;
    }
    [[nodiscard]] bool is_homogeneous(int d) const {
        return std::all_of(terms_.begin(), terms_.end(),
                           [d](const auto& t) { return static_cast<int>(t.first.size()) == d; });
    }

    Series& operator+=(const Series& o) {
        check_compatible(o);
        max_degree_ = std::min(max_degree_, o.max_degree_);
        drop_beyond_truncation();
        for (const auto& [w, c] : o.terms_) add_term(w, c);
        return *this;
    }
    Series& operator-=(const Series& o) {
        check_compatible(o);
        max_degree_ = std::min(max_degree_, o.max_degree_);
        drop_beyond_truncation();
        for (const auto& [w, c] : o.terms_) add_term(w, -c);
        return *this;
    }
    Series& operator*=(const Rational& c) {
        if (c.is_zero()) {
            terms_.clear();
        } else {
            for (auto& [w, v] : terms_) v *= c;
        }
        return *this;
    }

    friend Series operator+(Series a, const Series& b) { return a += b; }
    friend Series operator-(Series a, const Series& b) { return a -= b; }
    friend Series operator-(Series a) { return a *= Rational(-1); }
    friend Series operator*(const Rational& c, Series a) { return a *= c; }
    friend Series operator*(Series a, const Rational& c) { return a *= c; }

    friend Series operator*(const Series& a, const Series& b) {
        a.check_compatible(b);
        int n = std::min(a.max_degree_, b.max_degree_);
        Series out(a.alphabet_, n);
        auto bt = b.by_length();
        for (const auto& [wa, ca] : a.terms_) {
            int room = n - static_cast<int>(wa.size());
            if (room < 0) continue;
            for (const auto* t : bt) {
                if (static_cast<int>(t->first.size()) > room) break;
                out.add_term(wa + t->first, ca * t->second);
            }
        }
        return out;
    }

    /// Same coefficients (truncation orders may differ).
    friend bool operator==(const Series& a, const Series& b) {
        return a.alphabet_ == b.alphabet_ && a.terms_ == b.terms_;
    }

    void check_compatible(const Series& o) const {
        if (!(alphabet_ == o.alphabet_)) throw std::invalid_argument("Series: alphabet mismatch");
    }

private:
    void check_word(const Word& w) const {
        for (std::size_t i = 0; i < w.size(); ++i)
            if (w[i] < 0 || static_cast<std::size_t>(w[i]) >= alphabet_.size())
                throw std::invalid_argument("Series: letter outside alphabet");
    }
    void drop_beyond_truncation() {
        std::erase_if(terms_, [n = max_degree_](const auto& t) { return static_cast<int>(t.first.size()) > n; });
    }
    [[nodiscard]] std::vector<const Terms::value_type*> by_length() const {
        std::vector<const Terms::value_type*> v;
        v.reserve(terms_.size());
        for (const auto& t : terms_) v.push_back(&t);
        std::sort(v.begin(), v.end(), [](auto* x, auto* y) { return x->first.size() < y->first.size(); });
        return v;
    }

    Alphabet alphabet_;
    int max_degree_;
    Terms terms_;
};

/// Human-readable form, e.g. "1/2*e0e1 - 1/1*e1 (N=4)".
inline std::string to_string(const Series& a) {
    std::string out;
    for (const auto& [w, c] : a.sorted_terms()) {
        if (!out.empty()) out += " + ";
        out += c.str() + "*";
        if (w.empty()) out += "1";
        for (std::size_t i = 0; i < w.size(); ++i) out += a.alphabet().name(static_cast<std::size_t>(w[i]));
    }
    if (out.empty()) out = "0";
    return out + " (N=" + std::to_string(a.max_degree()) + ")";
}

inline std::ostream& operator<<(std::ostream& os, const Series& a) { return os << to_string(a); }

inline Series add(const Series& a, const Series& b) { return a + b; }
inline Series scale(const Rational& c, const Series& a) { return c * a; }
inline Series mul(const Series& a, const Series& b) { return a * b; }

inline Series graded_component(const Series& a, int d) {
    if (d < 0 || d > a.max_degree()) throw std::out_of_range("graded_component: degree beyond truncation");
    Series out(a.alphabet(), a.max_degree());
    for (const auto& [w, c] : a.terms())
        if (static_cast<int>(w.size()) == d) out.add_term(w, c);
    return out;
}

/// Truncates to order d; the result records d as its order.
inline Series truncate(const Series& a, int d) {
    if (d < 0 || d > a.max_degree()) throw std::out_of_range("truncate: degree beyond truncation");
    Series out(a.alphabet(), d);
    for (const auto& [w, c] : a.terms()) out.add_term(w, c);
    return out;
}

/// Re-labels a series with a higher truncation order, declaring the missing
/// components to be zero. Valid for polynomials, and wherever the caller
/// knows the unknown components cannot influence the result.
inline Series promote(const Series& a, int d) {
    if (d < a.max_degree()) throw std::invalid_argument("promote: lowering truncation, use truncate()");
    Series out(a.alphabet(), d);
    for (const auto& [w, c] : a.terms()) out.add_term(w, c);
    return out;
}

inline Series exp(const Series& a) {
    if (!a.constant_term().is_zero()) throw std::domain_error("exp: nonzero constant term");
    Series result = Series::one(a.alphabet(), a.max_degree());
    Series power = result;
    for (int k = 1; k <= a.max_degree(); ++k) {
        power = power * a;
        power *= Rational(1, k);
        if (power.is_zero()) break;
        result += power;
    }
    return result;
}

inline Series log(const Series& g) {
    if (g.constant_term() != Rational(1)) throw std::domain_error("log: constant term is not 1");
    Series x = g - Series::one(g.alphabet(), g.max_degree());
    Series result(g.alphabet(), g.max_degree());
    Series power = x;
    for (int k = 1; k <= g.max_degree() && !power.is_zero(); ++k) {
        result += Rational(k % 2 ? 1 : -1, k) * power;
        power = power * x;
    }
    return result;
}

inline Series inverse(const Series& g) {
    Rational c0 = g.constant_term();
    if (c0.is_zero()) throw std::domain_error("inverse: zero constant term");
    Rational inv = Rational(1) / c0;
    Series minus_x = Series::one(g.alphabet(), g.max_degree()) - inv * g;
    Series result = Series::one(g.alphabet(), g.max_degree());
    Series power = result;
    for (int k = 1; k <= g.max_degree(); ++k) {
        power = power * minus_x;
        if (power.is_zero()) break;
        result += power;
    }
    return inv * result;
}

/// Ad_g(a) = g a g^{-1}.
inline Series conjugate(const Series& g, const Series& a) { return g * a * inverse(g); }

/// The algebra morphism sending letter i of a's alphabet to images[i].
/// Images must share one target alphabet and have zero constant term.
inline Series substitute(const Series& a, const std::vector<Series>& images) {
    if (images.size() != a.alphabet().size()) throw std::invalid_argument("substitute: one image per letter required");
    const Alphabet& target = images.front().alphabet();
    int n = a.max_degree();
    for (const auto& img : images) {
        if (!(img.alphabet() == target)) throw std::invalid_argument("substitute: inconsistent image alphabets");
        if (!img.constant_term().is_zero()) throw std::invalid_argument("substitute: image with constant term");
        n = std::min(n, img.max_degree());
    }
    std::unordered_map<Word, Series> memo;
    memo.emplace(Word(), Series::one(target, n));
    // Prefix products, shortest first so every prefix is already cached.
    auto sorted = a.sorted_terms();
    Series out(target, n);
    for (const auto& [w, c] : sorted) {
        if (static_cast<int>(w.size()) > n) continue;
        for (std::size_t len = 1; len <= w.size(); ++len) {
            Word prefix = w.substr(0, len);
            if (memo.count(prefix)) continue;
            memo.emplace(prefix, memo.at(w.substr(0, len - 1)) * images[w[len - 1]]);
        }
        out += c * memo.at(w);
    }
    return out;
}

/// The derivation of a's algebra extending letter i -> rule[i], applied to a.
inline Series derivation_apply(const std::vector<Series>& rule, const Series& a) {
    if (rule.size() != a.alphabet().size()) throw std::invalid_argument("derivation_apply: one image per letter required");
    int shift = 0;
    int n_img = kPolynomialCap;
    for (const auto& r : rule) {
        a.check_compatible(r);
        n_img = std::min(n_img, r.max_degree());
        if (!r.is_zero()) shift = std::min(shift, r.low_degree() - 1);
    }
    int n = std::min(a.max_degree() + shift, std::max(n_img, 0));
    Series out(a.alphabet(), std::max(n, 0));
    for (const auto& [w, c] : a.terms()) {
        for (std::size_t i = 0; i < w.size(); ++i) {
            const Series& img = rule[w[i]];
            Word pre = w.substr(0, i), post = w.substr(i + 1);
            for (const auto& [u, d] : img.terms()) out.add_term(pre + u + post, c * d);
        }
    }
    return out;
}

}  // namespace dsl

#endif  // DSL_SERIES_HPP
