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

// The {x,y} presentation: the isomorphism i (x -> e0, y -> -e1), the map nu
// into tangential derivations, and special-derivation membership.

#ifndef DSL_KV_HPP
#define DSL_KV_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "inertia.hpp"
#include "lie.hpp"
#include "linalg.hpp"
#include "series.hpp"
#include "shuffle.hpp"

namespace dsl {

namespace detail {

inline const Alphabet& xy() { return Alphabet::xy(); }
inline Series x_letter(int n = kPolynomialCap) { return Series::letter(xy(), 0, n); }
inline Series y_letter(int n = kPolynomialCap) { return Series::letter(xy(), 1, n); }

inline void require_xy(const Series& f, const char* what) {
    if (!(f.alphabet() == xy())) throw std::invalid_argument(std::string(what) + ": alphabet must be {x,y}");
}

}  // namespace detail

/// x -> e0, y -> -e1.
inline Series iso_i(const Series& f) {
    detail::require_xy(f, "iso_i");
    return substitute(f, {Series::letter(Alphabet::e(), 0), -Series::letter(Alphabet::e(), 1)});
}

/// e0 -> x, e1 -> -y.
inline Series iso_i_inverse(const Series& a) {
    if (!(a.alphabet() == Alphabet::e())) throw std::invalid_argument("iso_i_inverse: alphabet must be {e0,e1}");
    return substitute(a, {detail::x_letter(), -detail::y_letter()});
}

/// alpha: x -> x, y -> -y.
inline Series kv_alpha(const Series& f) {
    detail::require_xy(f, "kv_alpha");
    return substitute(f, {detail::x_letter(), -detail::y_letter()});
}

/// beta: x -> -x-y, y -> y.
inline Series kv_beta(const Series& f) {
    detail::require_xy(f, "kv_beta");
    return substitute(f, {-detail::x_letter() - detail::y_letter(), detail::y_letter()});
}

/// Pullback of dmr0_component(n) through i, in {x,y}-Lyndon coordinates.
inline Subspace ds_component(int n) {
    Subspace dmr = dmr0_component(n);
    auto eb = lyndon_basis(Alphabet::e(), n);
    auto xb = lyndon_basis(detail::xy(), n);
    std::vector<Vector> v;
    for (const auto& b : dmr.basis()) v.push_back(xb->to_coords(iso_i_inverse(eb->from_coords(b))));
    return Subspace::span(xb->size(), v);
}

/// F = f(-x-y, y) with f = ftilde(x, -y), i.e. beta(alpha(ftilde)).
inline Series f_to_F(const Series& ftilde) { return kv_beta(kv_alpha(ftilde)); }

/// The derivation x -> image_x, y -> image_y; both of degree `degree` + 1.
struct TangentialDerivation {
    int degree = 0;
    Series image_x{Alphabet::xy()};
    Series image_y{Alphabet::xy()};

    [[nodiscard]] bool is_zero() const { return image_x.is_zero() && image_y.is_zero(); }
    [[nodiscard]] Series apply(const Series& f) const { return derivation_apply({image_x, image_y}, f); }
    friend bool operator==(const TangentialDerivation&, const TangentialDerivation&) = default;
};

/// [D1, D2] = D1 D2 - D2 D1, evaluated on the generators.
inline TangentialDerivation commutator(const TangentialDerivation& a, const TangentialDerivation& b) {
    TangentialDerivation out;
    out.degree = a.degree + b.degree;
    out.image_x = a.apply(b.image_x) - b.apply(a.image_x);
    out.image_y = a.apply(b.image_y) - b.apply(a.image_y);
    return out;
}

/// nu(ftilde): y -> [y, F], x -> -[y, F].
inline TangentialDerivation nu(const Series& ftilde) {
    detail::require_xy(ftilde, "nu");
    TangentialDerivation d;
    if (ftilde.is_zero()) return d;
    int n = ftilde.low_degree();
    if (!ftilde.is_homogeneous(n) || !is_lie(ftilde)) throw std::invalid_argument("nu: input must be homogeneous Lie");
    if (n < 2) throw std::invalid_argument("nu: degree must be >= 2");
    Series F = f_to_F(ftilde);
    d.degree = n;
    d.image_y = lie_bracket(detail::y_letter(), F);
    d.image_x = -d.image_y;
    return d;
}

namespace detail {

// Lie u of degree n with [letter, u] = target, or nullopt.
inline std::optional<Series> solve_bracket(const Series& letter, const Series& target, int n) {
    if (target.is_zero()) return Series(xy());
    if (n < 1 || !target.is_homogeneous(n + 1)) return std::nullopt;
    auto basis = lyndon_basis(xy(), n);
    std::vector<Series> cols;
    for (const auto& e : basis->entries()) cols.push_back(lie_bracket(letter, e.expansion));
    auto sol = WordSystem(cols).solve(target);
    if (!sol) return std::nullopt;
    return basis->from_coords(*sol);
}

}  // namespace detail

/// x -> [x,u], y -> [y,v] for Lie u, v, and x + y -> 0. For nu(ftilde) only
/// the first condition carries information.
inline bool is_sder(const TangentialDerivation& d) {
    if (d.is_zero()) return true;
    if (!(d.image_x + d.image_y).is_zero()) return false;
    return detail::solve_bracket(detail::x_letter(), d.image_x, d.degree).has_value() &&
           detail::solve_bracket(detail::y_letter(), d.image_y, d.degree).has_value();
}

/// The v with [x, alpha(ftilde)] + [-x-y, v] = 0, or nullopt.
inline std::optional<Series> inert_witness(const Series& ftilde) {
    detail::require_xy(ftilde, "inert_witness");
    if (ftilde.is_zero()) return Series(detail::xy());
    int n = ftilde.low_degree();
    if (!ftilde.is_homogeneous(n) || !is_lie(ftilde))
        throw std::invalid_argument("check_inert_equivalence: input must be homogeneous Lie");
    Series target = lie_bracket(detail::x_letter(), kv_alpha(ftilde));
    // [-x-y, v] = -[x, alpha f] is [x+y, v] = [x, alpha f].
    return detail::solve_bracket(detail::x_letter() + detail::y_letter(), target, n);
}

inline bool check_inert_equivalence(const Series& ftilde) { return inert_witness(ftilde).has_value(); }

/// Rank of nu on ds_component(n), with nu(f) flattened to its two images.
inline std::size_t nu_rank_on_ds(int n) {
    Subspace ds = ds_component(n);
    auto xb = lyndon_basis(detail::xy(), n);
    // The two images are stacked as one series over a tag alphabet: a leading
    // letter 0 marks image_x words, 1 marks image_y words.
    std::vector<Series> stacked;
    const Alphabet& tag = Alphabet::einf();
    for (const auto& b : ds.basis()) {
        TangentialDerivation d = nu(xb->from_coords(b));
        Series s(tag);
        for (const auto& [w, c] : d.image_x.terms()) s.add_term(Word{0} + w, c);
        for (const auto& [w, c] : d.image_y.terms()) s.add_term(Word{1} + w, c);
        stacked.push_back(std::move(s));
    }
    return WordSystem(stacked).rank();
}

/// nu applied to the Ihara bracket transported through i, against the
/// commutator of the images: which of nu<a,b> = +[nu a, nu b] and
/// nu<a,b> = -[nu a, nu b] hold.
struct NuBracketObservation {
    bool plus = false;
    bool minus = false;
};

inline Series ihara_bracket_xy(const Series& a, const Series& b) {
    return iso_i_inverse(ihara_bracket(iso_i(a), iso_i(b)));
}

inline NuBracketObservation nu_bracket_observation(const Series& a, const Series& b) {
    TangentialDerivation lhs = nu(ihara_bracket_xy(a, b));
    TangentialDerivation rhs = commutator(nu(a), nu(b));
    auto same = [](const TangentialDerivation& p, const TangentialDerivation& q, int s) {
        return (p.image_x - Rational(s) * q.image_x).is_zero() && (p.image_y - Rational(s) * q.image_y).is_zero();
    };
    return {same(lhs, rhs, 1), same(lhs, rhs, -1)};
}

}  // namespace dsl

#endif  // DSL_KV_HPP
