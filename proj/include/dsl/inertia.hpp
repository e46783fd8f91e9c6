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

// Inertia: the push operator, inert Lie elements, the involution Theta at
// Lie and group level, and the group law of the twisted group G.
//
// e_inf = -e0 - e1. Statements in the generators (e0, e_inf) are carried out
// on the auxiliary alphabet {e0, einf} through an explicit change of basis.

#ifndef DSL_INERTIA_HPP
#define DSL_INERTIA_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include "lie.hpp"
#include "linalg.hpp"
#include "series.hpp"

namespace dsl {

namespace detail {

inline Series e_letter(int i, int n = kPolynomialCap) { return Series::letter(Alphabet::e(), i, n); }

}  // namespace detail

/// e_inf = -e0 - e1 in the (e0, e1) alphabet.
inline Series e_inf(int max_degree = kPolynomialCap) {
    return -detail::e_letter(0, max_degree) - detail::e_letter(1, max_degree);
}

/// e1 -> -e0 - einf.
inline Series to_einf(const Series& a) {
    const Alphabet& t = Alphabet::einf();
    Series y0 = Series::letter(t, 0);
    return substitute(a, {y0, -y0 - Series::letter(t, 1)});
}

/// einf -> -e0 - e1.
inline Series from_einf(const Series& b) {
    Series e0 = detail::e_letter(0);
    return substitute(b, {e0, e_inf()});
}

/// Rotation of the einf-exponent vector of a word in (e0, einf):
/// (a_0, ..., a_r) -> (a_r, a_0, ..., a_{r-1}).
inline Word push_word(const Word& w) {
    std::vector<std::size_t> runs{0};
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] == 0)
            runs.push_back(0);
        else
            ++runs.back();
    }
    std::rotate(runs.rbegin(), runs.rbegin() + 1, runs.rend());
    Word out;
    for (std::size_t k = 0; k < runs.size(); ++k) {
        if (k) out.push_back(0);
        for (std::size_t j = 0; j < runs[k]; ++j) out.push_back(1);
    }
    return out;
}

/// push on a series in (e0, einf).
inline Series push_einf(const Series& b) {
    Series out(b.alphabet(), b.max_degree());
    for (const auto& [w, c] : b.terms()) out.add_term(push_word(w), c);
    return out;
}

/// push on a series in (e0, e1).
inline Series push(const Series& a) { return from_einf(push_einf(to_einf(a))); }

/// Degree-n component of the inert Lie algebra, in Lyndon coordinates.
inline Subspace ginert_component(int n) {
    if (n < 2) throw std::invalid_argument("ginert_component: degree must be >= 2");
    auto basis = lyndon_basis(Alphabet::e(), n);
    std::vector<Series> cols;
    for (const auto& e : basis->entries()) cols.push_back(push(e.expansion) - e.expansion);
    return WordSystem(std::move(cols)).kernel();
}

/// a = a_inf·einf + a_0·e0 for a series in (e0, einf) with zero constant term.
inline std::pair<Series, Series> decompose_right(const Series& a) {
    if (!a.constant_term().is_zero()) throw std::invalid_argument("decompose_right: nonzero constant term");
    Series a_inf(a.alphabet(), a.max_degree()), a_0(a.alphabet(), a.max_degree());
    for (const auto& [w, c] : a.terms()) {
        Word prefix = w.substr(0, w.size() - 1);
        (w.back() == 1 ? a_inf : a_0).add_term(prefix, c);
    }
    return {a_inf, a_0};
}

/// b_a = sum_i ((-1)^i / i!) einf^i e0 d_inf^i(a_inf), returned in (e0, e1).
/// The sum runs over the einf-ending part a_inf of a = a_inf einf + a_0 e0:
/// this is the reading under which [a, e0] + [b_a, e_inf] = 0 holds on inert a.
inline Series b_of(const Series& a) {
    const Alphabet& t = Alphabet::einf();
    Series a_inf = decompose_right(to_einf(a)).first;
    std::vector<Series> d_inf{Series(t), Series::one(t)};
    Series y0 = Series::letter(t, 0), yi = Series::letter(t, 1);
    Series out(t, a.max_degree());
    Series lead = y0;  // einf^i e0
    Series deriv = a_inf;
    for (unsigned i = 0; !deriv.is_zero(); ++i) {
        Rational c = inverse_factorial(i);
        if (i % 2) c = -c;
        out += c * (lead * deriv);
        lead = yi * lead;
        deriv = promote(derivation_apply(d_inf, deriv), a_inf.max_degree());
    }
    return from_einf(out);
}

/// The Lie b with [a, e0] + [b, e_inf] = 0, or nullopt. a homogeneous Lie.
inline std::optional<Series> solve_b(const Series& a) {
    if (a.is_zero()) return Series(Alphabet::e());
    int n = a.low_degree();
    if (!a.is_homogeneous(n) || !is_lie(a)) throw std::invalid_argument("solve_b: homogeneous Lie input required");
    auto basis = lyndon_basis(Alphabet::e(), n);
    std::vector<Series> cols;
    for (const auto& e : basis->entries()) cols.push_back(lie_bracket(e.expansion, e_inf()));
    auto x = WordSystem(std::move(cols)).solve(-lie_bracket(a, detail::e_letter(0)));
    if (!x) return std::nullopt;
    return basis->from_coords(*x);
}

/// s_(0,inf): e0 -> e_inf, e1 -> e1.
inline Series swap_0_inf(const Series& a) { return substitute(a, {e_inf(), detail::e_letter(1)}); }

/// LieTheta(a) = s_(0,inf)(b_a), component by component. Throws
/// std::invalid_argument unless a is a push-invariant Lie element without
/// degree-0 or degree-1 part.
inline Series lie_theta(const Series& a) {
    if (!is_lie_series(a)) throw std::invalid_argument("lie_theta: input is not a Lie element");
    if (!(push(a) == a)) throw std::invalid_argument("lie_theta: input is not inert (push(a) != a)");
    Series out(a.alphabet(), a.max_degree());
    for (int d = 0; d <= a.max_degree(); ++d) {
        Series c = graded_component(a, d);
        if (c.is_zero()) continue;
        if (d < 2) throw std::invalid_argument("lie_theta: degree-1 part must vanish");
        out += swap_0_inf(b_of(c));
    }
    return out;
}

/// Element of the group G: constant term 1, group-like, (g|e0) = (g|e1) = 0.
class GroupElement {
public:
    explicit GroupElement(Series g) : g_(std::move(g)) {
        if (!(g_.alphabet() == Alphabet::e())) throw std::invalid_argument("GroupElement: alphabet must be {e0,e1}");
        if (g_.constant_term() != Rational(1)) throw std::invalid_argument("GroupElement: constant term is not 1");
        if (g_.max_degree() >= 1 && (!g_.coeff(Word{0}).is_zero() || !g_.coeff(Word{1}).is_zero()))
            throw std::invalid_argument("GroupElement: nonzero degree-1 part");
        if (!is_lie_series(dsl::log(g_))) throw std::invalid_argument("GroupElement: not group-like");
    }
    static GroupElement identity(int max_degree) { return GroupElement(Series::one(Alphabet::e(), max_degree)); }
    static GroupElement from_log(const Series& a) { return GroupElement(dsl::exp(a)); }

    [[nodiscard]] const Series& series() const { return g_; }
    [[nodiscard]] Series log() const { return dsl::log(g_); }
    [[nodiscard]] int max_degree() const { return g_.max_degree(); }

    friend bool operator==(const GroupElement& a, const GroupElement& b) { return a.g_ == b.g_; }

private:
    Series g_;
};

/// (g ⊛ h)(e0, e1) = h(g e0 g^{-1}, e1) · g.
inline GroupElement circledast(const GroupElement& g, const GroupElement& h) {
    const Series& gs = g.series();
    Series img0 = conjugate(gs, detail::e_letter(0, gs.max_degree()));
    return GroupElement(substitute(h.series(), {img0, detail::e_letter(1)}) * gs);
}

/// Ad_g(e0) + e1 + Ad_h(e_inf).
inline Series inertia_residual(const Series& g, const Series& h) {
    int n = std::min(g.max_degree(), h.max_degree());
    return conjugate(g, detail::e_letter(0, n)) + detail::e_letter(1) + conjugate(h, e_inf(n));
}

/// The h in G with Ad_g(e0) + e1 + Ad_h(e_inf) = 0, or nullopt. The identity
/// is solved through degree N+1 (Ad_g(e0) is known there from g at order N);
/// h is returned at order N.
inline std::optional<GroupElement> solve_h(const GroupElement& g) {
    int n = g.max_degree();
    Series gp = promote(g.series(), n + 1);
    Series target = conjugate(gp, detail::e_letter(0, n + 1)) + detail::e_letter(1);
    Series eta(Alphabet::e(), n + 1);
    for (int d = 2; d <= n; ++d) {
        Series r = graded_component(target + conjugate(dsl::exp(eta), e_inf(n + 1)), d + 1);
        if (r.is_zero()) continue;
        auto basis = lyndon_basis(Alphabet::e(), d);
        std::vector<Series> cols;
        for (const auto& e : basis->entries()) cols.push_back(lie_bracket(e.expansion, e_inf()));
        auto x = WordSystem(std::move(cols)).solve(-r);
        if (!x) return std::nullopt;
        eta += basis->from_coords(*x);
    }
    // Degrees 1..n+1 of the residual must now vanish (degree 1 and 2 hold
    // identically for a group element).
    if (!(target + conjugate(dsl::exp(eta), e_inf(n + 1))).is_zero()) return std::nullopt;
    return GroupElement::from_log(truncate(eta, n));
}

/// Theta(g) = s_(0,inf)(h_g), or nullopt when g is not inert.
inline std::optional<GroupElement> group_theta(const GroupElement& g) {
    auto h = solve_h(g);
    if (!h) return std::nullopt;
    return GroupElement(swap_0_inf(h->series()));
}

/// Random inert group element at order N. Degree by degree, a random inert
/// Lie component is corrected by a joint solve in (delta a_d, eta_d) so that
/// the inertia identity stays solvable. nullopt if a degree is infeasible.
inline std::optional<GroupElement> make_inert_group_element(std::uint64_t seed, int n) {
    if (n < 1) throw std::invalid_argument("make_inert_group_element: order must be >= 1");
    std::mt19937_64 rng(seed);
    const Alphabet& e = Alphabet::e();
    Series a(e, n + 1), eta(e, n + 1);
    for (int d = 2; d <= n; ++d) {
        auto basis = lyndon_basis(e, d);
        Subspace inert = ginert_component(d);
        Vector r(basis->size());
        for (const auto& v : inert.basis()) {
            Rational c = random_small(rng);
            for (std::size_t i = 0; i < r.size(); ++i) r[i] += c * v[i];
        }
        a += basis->from_coords(r);
        Series q = graded_component(
            inertia_residual(promote(dsl::exp(a), n + 1), promote(dsl::exp(eta), n + 1)), d + 1);
        if (q.is_zero()) continue;
        std::vector<Series> cols;
        for (const auto& en : basis->entries()) cols.push_back(lie_bracket(en.expansion, detail::e_letter(0)));
        for (const auto& en : basis->entries()) cols.push_back(lie_bracket(en.expansion, e_inf()));
        auto x = WordSystem(std::move(cols)).solve(-q);
        if (!x) return std::nullopt;
        Vector da(x->begin(), x->begin() + static_cast<long>(basis->size()));
        Vector de(x->begin() + static_cast<long>(basis->size()), x->end());
        a += basis->from_coords(da);
        eta += basis->from_coords(de);
    }
    return GroupElement::from_log(truncate(a, n));
}

/// dim Lie_{n+1} - rank of (u, v) -> [u, e0] + [v, e_inf] on Lie_n ⊕ Lie_n.
inline std::size_t inert_bracket_cokernel(int n) {
    auto basis = lyndon_basis(Alphabet::e(), n);
    std::vector<Series> cols;
    for (const auto& en : basis->entries()) cols.push_back(lie_bracket(en.expansion, detail::e_letter(0)));
    for (const auto& en : basis->entries()) cols.push_back(lie_bracket(en.expansion, e_inf()));
    return witt_dimension(2, static_cast<std::size_t>(n + 1)) - WordSystem(std::move(cols)).rank();
}

}  // namespace dsl

#endif  // DSL_INERTIA_HPP
