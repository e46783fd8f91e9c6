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

// Invariant suites behind `dsl verify`. Each returns a VerificationReport;
// randomized checks draw from a generator seeded by (seed, suite).

#ifndef DSL_SUITES_HPP
#define DSL_SUITES_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "inertia.hpp"
#include "kv.hpp"
#include "lie.hpp"
#include "matrix_rep.hpp"
#include "report.hpp"
#include "shuffle.hpp"

namespace dsl {

inline const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"push",   "theta",     "ihara",  "coassoc", "matrep",
                                                "exactness", "torsor", "kv"};
    return names;
}

namespace suites {

inline std::mt19937_64 rng_for(std::uint64_t seed, const std::string& suite) {
    std::uint64_t h = 1469598103934665603ull;
    for (char c : suite) h = (h ^ static_cast<unsigned char>(c)) * 1099511628211ull;
    return std::mt19937_64(seed ^ h);
}

inline std::vector<Series> elements(const Subspace& s, const Alphabet& a, int n) {
    std::vector<Series> out;
    for (const auto& v : s.basis()) out.push_back(lyndon_basis(a, n)->from_coords(v));
    return out;
}

inline Vector coords(const Series& a, int n) { return lyndon_basis(Alphabet::e(), n)->to_coords(graded_component(a, n)); }

inline VerificationReport push(int max_degree) {
    VerificationReport r("push");
    for (int n = 2; n <= max_degree; ++n) {
        Subspace d = dmr0_component(n);
        std::size_t fixed = 0;
        for (const auto& a : elements(d, Alphabet::e(), n)) fixed += push(a) == a;
        r.add("dmr0_push_invariant", n, d.dim(), fixed);
        r.check("dmr0_in_ginert", n, subspace_contains(ginert_component(n), d));
    }
    return r;
}

inline VerificationReport theta(int max_degree, std::uint64_t seed) {
    VerificationReport r("theta");
    for (int n = 3; n <= max_degree; ++n) {
        Subspace d = dmr0_component(n);
        std::vector<Vector> img;
        for (const auto& a : elements(d, Alphabet::e(), n)) img.push_back(coords(lie_theta(a), n));
        r.check("theta_preserves_dmr0", n, subspace_equal(Subspace::span(d.ambient_dim(), img), d));
        Subspace g = ginert_component(n);
        std::size_t inv = 0, ident = 0, agree = 0;
        for (const auto& a : elements(g, Alphabet::e(), n)) {
            inv += lie_theta(lie_theta(a)) == a;
            Series b = b_of(a);
            ident += (lie_bracket(a, detail::e_letter(0)) + lie_bracket(b, e_inf())).is_zero();
            auto s = solve_b(a);
            agree += s && *s == b;
        }
        r.add("theta_involution_on_ginert", n, g.dim(), inv);
        r.add("b_of_inertia_identity", n, g.dim(), ident);
        r.add("b_of_equals_solve_b", n, g.dim(), agree);
    }
    int N = std::min(max_degree, 6);
    if (N >= 3) {
        auto rng = rng_for(seed, "theta");
        std::size_t ok_inv = 0, ok_hom = 0, built = 0;
        for (int t = 0; t < 3; ++t) {
            auto g = make_inert_group_element(rng(), N), k = make_inert_group_element(rng(), N);
            if (!g || !k) continue;
            ++built;
            auto tg = group_theta(*g), tk = group_theta(*k), tgk = group_theta(circledast(*g, *k));
            if (!tg || !tk || !tgk) continue;
            auto ttg = group_theta(*tg);
            ok_inv += ttg && *ttg == *g;
            ok_hom += *tgk == circledast(*tg, *tk);
        }
        r.add("group_elements_built", N, 3, built);
        r.add("group_theta_involution", N, 3, ok_inv);
        r.add("group_theta_morphism", N, 3, ok_hom);
        Series br = lie_bracket(detail::e_letter(0), detail::e_letter(1));
        r.check("solve_h_rejects_exp_e0e1", N, !solve_h(GroupElement::from_log(truncate(br, N))).has_value());
    }
    return r;
}

inline VerificationReport ihara(int max_degree, std::uint64_t seed) {
    VerificationReport r("ihara");
    auto rng = rng_for(seed, "ihara");
    const Alphabet& e = Alphabet::e();
    std::size_t anti = 0, jacobi = 0, trials = 0;
    for (int t = 0; t < 100 && max_degree >= 3; ++t) {
        int total = 3 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_degree - 2));
        int p = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(total - 2));
        int q = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(total - p - 1));
        int s = total - p - q;
        Series a = random_lie(e, p, rng), b = random_lie(e, q, rng), c = random_lie(e, s, rng);
        ++trials;
        anti += (ihara_bracket(a, b) + ihara_bracket(b, a)).is_zero();
        Series j = ihara_bracket(a, ihara_bracket(b, c)) + ihara_bracket(b, ihara_bracket(c, a)) +
                   ihara_bracket(c, ihara_bracket(a, b));
        jacobi += j.is_zero();
    }
    r.add("antisymmetry", max_degree, trials, anti);
    r.add("jacobi", max_degree, trials, jacobi);
    for (int m = 3; m <= max_degree; ++m)
        for (int n = m; m + n <= max_degree; ++n) {
            auto am = elements(dmr0_component(m), e, m), an = elements(dmr0_component(n), e, n);
            if (am.empty() || an.empty()) continue;
            Subspace target = dmr0_component(m + n);
            std::size_t in = 0;
            for (const auto& a : am)
                for (const auto& b : an) {
                    Series br = ihara_bracket(a, b);
                    in += br.is_zero() || target.contains_vector(coords(br, m + n));
                }
            r.add("dmr0_bracket_closure", m + n, am.size() * an.size(), in);
        }
    return r;
}

namespace util {

using Triple = std::map<std::tuple<std::string, std::string, std::string>, Rational>;

inline Triple coassoc_side(const WTensor& t, bool left) {
    Triple out;
    for (const auto& [p, c] : t.terms()) {
        const Word& w = left ? p.left : p.right;
        for (const auto& [q, d] : delta_w(Series::monomial(Alphabet::e(), w)).terms()) {
            auto key = left ? std::make_tuple(q.left.raw(), q.right.raw(), p.right.raw())
                            : std::make_tuple(p.left.raw(), q.left.raw(), q.right.raw());
            out[key] += c * d;
        }
    }
    std::erase_if(out, [](const auto& x) { return x.second.is_zero(); });
    return out;
}

inline Series random_w(std::mt19937_64& rng, int n) {
    Series s(Alphabet::e(), n);
    s.add_term(Word(), random_small(rng));
    for (int d = 1; d <= n; ++d)
        for (const auto& w : all_words(2, static_cast<std::size_t>(d)))
            if (w.back() == 1 && rng() % 3 == 0) s.add_term(w, random_small(rng));
    return s;
}

}  // namespace util

inline VerificationReport coassoc(int max_degree, std::uint64_t seed) {
    VerificationReport r("coassoc");
    auto rng = rng_for(seed, "coassoc");
    for (int n = 1; n <= max_degree; ++n) {
        WTensor d = delta_w(Series::monomial(Alphabet::e(), y_word(n)));
        r.check("coassociative_on_y_n", n, util::coassoc_side(d, true) == util::coassoc_side(d, false));
        r.check("delta_rho_equals_delta_w_rl", n, delta_rho(n) == delta_w_rl(n));
    }
    std::size_t mult = 0, co = 0;
    const std::size_t trials = 10;
    for (std::size_t t = 0; t < trials; ++t) {
        int p = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_degree));
        Series a = util::random_w(rng, p), b = util::random_w(rng, std::max(max_degree - p, 0));
        // Both are polynomials of total degree <= max_degree.
        a = promote(a, max_degree);
        b = promote(b, max_degree);
        mult += delta_w(a * b) == delta_w(a) * delta_w(b);
        WTensor da = delta_w(a);
        co += util::coassoc_side(da, true) == util::coassoc_side(da, false);
    }
    r.add("multiplicative", max_degree, trials, mult);
    r.add("coassociative_random", max_degree, trials, co);
    if (max_degree >= 2) {
        auto rep = [](int l, int k) { return Word::repeat(l, static_cast<std::size_t>(k)); };
        BiSeries d = delta_rho(max_degree);
        bool shows_computed = !d.coeff(Word(), Word{1} + rep(0, max_degree - 1)).is_zero();
        bool shows_displayed = !d.coeff(Word(), Word{0} + rep(1, max_degree - 1)).is_zero();
        r.observe("delta_rho_f_side_term", max_degree,
                  std::string("computed value contains f1 f0^{n-1}: ") + (shows_computed ? "yes" : "no") +
                      "; contains the displayed f0 f1^{n-1}: " + (shows_displayed ? "yes" : "no"));
    }
    return r;
}

inline VerificationReport matrep(int max_degree) {
    VerificationReport r("matrep");
    const auto& k = DTConstants::get();
    int top = std::min(max_degree - 1, 3);
    for (int d = 0; d <= top; ++d) {
        auto c1 = commutant_dimension({k.rho1}, d);
        r.add("commutant_rho1_dim", d, m_param_slice_dimension(d), c1.dim);
        r.check("commutant_rho1_is_m_param", d, subspace_equal(c1.space, m_param_slice(d)));
        auto c2 = commutant_dimension({k.rho0, k.rho1}, d);
        Subspace want = rho_dt_commutant_slice(d);
        r.add("commutant_rho_dt_dim", d, want.dim(), c2.dim);
        r.check("commutant_rho_dt_is_param", d, subspace_equal(c2.space, want));
        r.check("cv_e0_is_centralizer", d, subspace_equal(cv_e0_basis(d), centralizer_e0(d)));
    }
    Row3 r0 = mul(k.r_dt, k.rho0), r1 = mul(k.r_dt, k.rho1);
    Column3 c0 = mul(k.rho0, k.c_dt), c1 = mul(k.rho1, k.c_dt);
    bool rel = true;
    for (int i = 0; i < 3; ++i)
        rel = rel && r0[i] == bi::e(0) * k.r_dt[i] && c0[i] == k.c_dt[i] * bi::e(0) && r1[i].is_zero() && c1[i].is_zero();
    r.check("r_c_relations", 1, rel);
    r.check("rc_is_minus_e0_plus_finf", 1, dot(k.r_dt, k.c_dt) == -(bi::e(0) + bi::f_inf()));
    return r;
}

inline VerificationReport exactness(int max_degree) {
    VerificationReport r("exactness");
    for (const char* which : {"e1f1", "e0finf", "appendixB"})
        for (int n = 1; n <= max_degree; ++n) {
            ExactnessReport e = exactness_check(which, n);
            r.check(std::string(which) + "_is_complex", n, e.is_complex);
            r.add(std::string(which) + "_ker_equals_im", n, e.dim_ker_second, e.dim_im_first);
        }
    return r;
}

inline VerificationReport torsor(int max_degree, std::uint64_t seed) {
    VerificationReport r("torsor");
    auto rng = rng_for(seed, "torsor");
    const Alphabet& xy = Alphabet::xy();
    int n = std::min(max_degree, 6);
    Series x = Series::letter(xy, 0, n + 1);
    const std::size_t trials = 20;
    std::size_t ok = 0, lie = 0;
    for (std::size_t t = 0; t < trials; ++t) {
        Series lg(xy, n + 1);
        for (int d = 1; d <= n + 1; ++d) lg += random_lie(xy, d, rng);
        Series h = dsl::exp(truncate(lg, n + 1));
        Rational gamma = random_small(rng);
        if (gamma.is_zero()) gamma = 3;
        Series c(xy, n + 1);
        for (int d = 0; d < n; ++d)
            for (const auto& w : all_words(2, static_cast<std::size_t>(d)))
                if (rng() % 2) c.add_term(w, random_small(rng));
        Series g = Series::constant(xy, gamma, n + 1);
        Series a = h * (g + x * c), b = h * (g + c * x);
        Series z = h * x * inverse(h) - x;
        auto f = torsor_factor(truncate(a, n), truncate(b, n), z, n);
        if (!f) continue;
        ok += torsor_identities_hold(a, b, z, *f, n);
        lie += is_lie_series(dsl::log(f->h));
    }
    r.add("identities_hold", n, trials, ok);
    r.add("log_h_is_lie", n, trials, lie);
    Series one = Series::one(xy, n);
    r.check("rejects_bad_precondition", n,
            !torsor_factor(one, one + Series::letter(xy, 1, n), Series(xy, n + 1), n).has_value());
    return r;
}

inline VerificationReport kv(int max_degree, std::uint64_t seed) {
    VerificationReport r("kv");
    auto rng = rng_for(seed, "kv");
    const Alphabet& xy = Alphabet::xy();
    for (int n = 2; n <= std::min(max_degree, 6); ++n) {
        auto inert = elements(ginert_component(n), Alphabet::e(), n);
        const std::size_t trials = 50;
        std::size_t agree = 0;
        for (std::size_t t = 0; t < trials; ++t) {
            Series f(xy);
            if (t % 2 == 0 || inert.empty()) {
                f = random_lie(xy, n, rng);
            } else {
                Series a(Alphabet::e());
                for (const auto& v : inert) a += random_small(rng) * v;
                f = iso_i_inverse(a);
            }
            agree += check_inert_equivalence(f) == (push(iso_i(f)) == iso_i(f));
        }
        r.add("inert_equivalence_matches_push", n, trials, agree);
    }
    for (int n = 2; n <= max_degree; ++n) {
        auto ds = elements(ds_component(n), xy, n);
        r.add("nu_rank_on_ds", n, ds.size(), nu_rank_on_ds(n));
        std::size_t sder = 0;
        for (const auto& f : ds) sder += is_sder(nu(f));
        r.add("nu_ds_is_sder_surrogate", n, ds.size(), sder);
    }
    std::size_t pairs = 0, plus = 0;
    for (int m = 3; m <= max_degree; ++m)
        for (int n = m; m + n <= max_degree; ++n) {
            auto am = elements(ginert_component(m), Alphabet::e(), m), an = elements(ginert_component(n), Alphabet::e(), n);
            for (const auto& a : am)
                for (const auto& b : an) {
                    Series fa = iso_i_inverse(a), fb = iso_i_inverse(b);
                    if (ihara_bracket_xy(fa, fb).is_zero()) continue;
                    ++pairs;
                    plus += nu_bracket_observation(fa, fb).plus;
                }
        }
    r.observe("nu_ihara_morphism_on_inert_pairs", max_degree,
              std::to_string(plus) + " of " + std::to_string(pairs) +
                  " basis pairs with nonzero bracket satisfy nu<a,b> = [nu a, nu b]");
    return r;
}

}  // namespace suites

/// Runs one suite by name, or every suite for "all".
inline VerificationReport run_suite(const std::string& name, int max_degree, std::uint64_t seed) {
    if (max_degree < 2) throw std::invalid_argument("verify: max-degree must be >= 2");
    if (name == "push") return suites::push(max_degree);
    if (name == "theta") return suites::theta(max_degree, seed);
    if (name == "ihara") return suites::ihara(max_degree, seed);
    if (name == "coassoc") return suites::coassoc(max_degree, seed);
    if (name == "matrep") return suites::matrep(max_degree);
    if (name == "exactness") return suites::exactness(max_degree);
    if (name == "torsor") return suites::torsor(max_degree, seed);
    if (name == "kv") return suites::kv(max_degree, seed);
    if (name == "all") {
        VerificationReport all("all");
        for (const auto& s : suite_names()) all.merge(run_suite(s, max_degree, seed));
        return all;
    }
    throw std::invalid_argument("verify: unknown suite '" + name + "'");
}

}  // namespace dsl

#endif  // DSL_SUITES_HPP
