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

// Harmonic coproducts on W = Q ⊕ V e1 and M = V / V e0, and the graded
// components of the double shuffle Lie algebra dmr0.
//
// W is free on y_n = e0^{n-1} e1 and the coproduct is the algebra morphism
//     y_n -> y_n ⊗ 1 + 1 ⊗ y_n - sum_{n'+n''=n} y_{n'} ⊗ y_{n''}.
// M is represented through W: the class of w·1_M is the word w itself when w
// ends in e1, and 0 when it ends in e0.

#ifndef DSL_SHUFFLE_HPP
#define DSL_SHUFFLE_HPP

#include <cstddef>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "lie.hpp"
#include "linalg.hpp"
#include "series.hpp"
#include "tensor.hpp"

namespace dsl {

/// y_n = e0^{n-1} e1 as a word.
inline Word y_word(int n) {
    Word w = Word::repeat(0, static_cast<std::size_t>(n - 1));
    w.push_back(1);
    return w;
}

/// Representative in M-hat: drops every word ending in e0.
inline Series project_to_m(const Series& a) {
    Series out(a.alphabet(), a.max_degree());
    for (const auto& [w, c] : a.terms())
        if (w.empty() || w.back() == 1) out.add_term(w, c);
    return out;
}

inline bool is_w_element(const Series& a) {
    for (const auto& [w, c] : a.terms())
        if (!w.empty() && w.back() != 1) return false;
    return true;
}

/// (n_1, ..., n_k) with w = y_{n_1} ... y_{n_k}.
inline std::vector<int> w_factorize(const Word& w) {
    if (w.empty()) return {};
    if (w.back() != 1) throw std::invalid_argument("w_factorize: word does not end in e1");
    std::vector<int> out;
    int run = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        ++run;
        if (w[i] == 1) {
            out.push_back(run);
            run = 0;
        }
    }
    return out;
}

inline WTensor delta_w_generator(int n, int max_degree = kPolynomialCap) {
    WTensor t(max_degree);
    t.add_term({y_word(n), Word()}, 1);
    t.add_term({Word(), y_word(n)}, 1);
    for (int a = 1; a < n; ++a) t.add_term({y_word(a), y_word(n - a)}, -1);
    return t;
}

/// Harmonic coproduct of a W-element.
inline WTensor delta_w(const Series& a) {
    if (!is_w_element(a)) throw std::invalid_argument("delta_w: input is not supported on W");
    int n = a.max_degree();
    std::map<int, WTensor> gens;
    WTensor out(n);
    for (const auto& [w, c] : a.terms()) {
        WTensor prod = WTensor::one(n);
        for (int k : w_factorize(w)) {
            auto it = gens.find(k);
            if (it == gens.end()) it = gens.emplace(k, delta_w_generator(k, n)).first;
            prod = prod * it->second;
        }
        prod *= c;
        out += prod;
    }
    return out;
}

/// Coproduct on M through its W-representative.
inline WTensor delta_m(const Series& m) { return delta_w(project_to_m(m)); }

/// delta_m(m) - m ⊗ 1 - 1 ⊗ m; zero iff m is primitive.
inline WTensor primitivity_defect(const Series& m) {
    Series r = project_to_m(m);
    return delta_w(r) - WTensor::left(r) - WTensor::right(r);
}

inline bool is_m_primitive(const Series& m) {
    if (!m.constant_term().is_zero()) throw std::invalid_argument("is_m_primitive: nonzero constant term");
    return primitivity_defect(m).is_zero();
}

/// (a|e0^{n-1}e1)·e1^n/n for a homogeneous of degree n >= 2.
inline Series gamma_correction(const Series& a) {
    int n = a.low_degree();
    Series out(a.alphabet(), a.max_degree());
    if (n < 0) return out;
    if (!a.is_homogeneous(n) || n < 2) throw std::invalid_argument("gamma_correction: homogeneous degree >= 2 required");
    out.add_term(Word::repeat(1, static_cast<std::size_t>(n)), a.coeff(y_word(n)) / Rational(n));
    return out;
}

/// Defect vector of a candidate: the primitivity defect of its Γ-corrected
/// class in M, indexed by word pairs.
inline WTensor dmr_defect(const Series& a) { return primitivity_defect(project_to_m(a) + gamma_correction(a)); }

/// Degree-n component of dmr0 in Lyndon coordinates (n >= 2).
inline Subspace dmr0_component(int n) {
    if (n < 2) throw std::invalid_argument("dmr0_component: degree must be >= 2");
    auto basis = lyndon_basis(Alphabet::e(), n);
    std::vector<WTensor> defects;
    std::set<WordPair> keys;
    for (const auto& e : basis->entries()) {
        defects.push_back(dmr_defect(e.expansion));
        for (const auto& [p, c] : defects.back().terms()) keys.insert(p);
    }
    std::vector<WordPair> rows(keys.begin(), keys.end());
    std::size_t extra = (n == 2) ? 1 : 0;  // (a|e0e1) = 0
    QMatrix m(rows.size() + extra, basis->size());
    for (std::size_t j = 0; j < basis->size(); ++j) {
        for (std::size_t i = 0; i < rows.size(); ++i) m(i, j) = defects[j].coeff(rows[i].left, rows[i].right);
        if (extra) m(rows.size(), j) = (*basis)[j].expansion.coeff(Word{0, 1});
    }
    return nullspace(m);
}

/// Truncated univariate polynomial in t, coefficients by power.
using Polynomial = std::vector<Rational>;

inline Polynomial poly_mul(const Polynomial& a, const Polynomial& b, int n) {
    Polynomial out(static_cast<std::size_t>(n + 1));
    for (std::size_t i = 0; i < a.size() && static_cast<int>(i) <= n; ++i)
        for (std::size_t j = 0; j < b.size() && static_cast<int>(i + j) <= n; ++j) out[i + j] += a[i] * b[j];
    return out;
}

inline Polynomial poly_exp(const Polynomial& a, int n) {
    if (!a.empty() && !a[0].is_zero()) throw std::domain_error("poly_exp: nonzero constant term");
    Polynomial out(static_cast<std::size_t>(n + 1));
    out[0] = 1;
    Polynomial power = out;
    for (int k = 1; k <= n; ++k) {
        power = poly_mul(power, a, n);
        for (int i = 0; i <= n; ++i) out[i] += power[i] * inverse_factorial(static_cast<unsigned>(k));
    }
    return out;
}

inline Polynomial poly_inverse(const Polynomial& a, int n) {
    if (a.empty() || a[0].is_zero()) throw std::domain_error("poly_inverse: zero constant term");
    Polynomial out(static_cast<std::size_t>(n + 1));
    out[0] = Rational(1) / a[0];
    for (int k = 1; k <= n; ++k) {
        Rational s;
        for (int i = 1; i <= k && i < static_cast<int>(a.size()); ++i) s += a[i] * out[k - i];
        out[k] = -s / a[0];
    }
    return out;
}

/// p(-t).
inline Polynomial poly_negate_variable(Polynomial p) {
    for (std::size_t i = 1; i < p.size(); i += 2) p[i] = -p[i];
    return p;
}

/// Γ_g(t) = exp(sum_{n>=1} ((-1)^{n+1}/n) (g|e0^{n-1}e1) t^n), truncated at t^N.
inline Polynomial gamma_series(const Series& g, int n) {
    if (n > g.max_degree()) throw std::out_of_range("gamma_series: order beyond truncation");
    Polynomial log_part(static_cast<std::size_t>(n + 1));
    for (int k = 1; k <= n; ++k) log_part[k] = Rational(k % 2 ? 1 : -1, k) * g.coeff(y_word(k));
    return poly_exp(log_part, n);
}

}  // namespace dsl

#endif  // DSL_SHUFFLE_HPP
