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

#include <gtest/gtest.h>

#include <random>

#include "dsl/shuffle.hpp"

using namespace dsl;

namespace {

const Alphabet& E = Alphabet::e();
Series e0() { return Series::letter(E, 0); }
Series e1() { return Series::letter(E, 1); }
Series w(std::initializer_list<int> letters, Rational c = 1) { return Series::monomial(E, Word(letters), c); }

// Oracle for the coproduct of a single word: expand the product of generator
// images by brute force over all choices, without memoization.
WTensor word_coproduct(const Word& word) {
    WTensor acc = WTensor::one();
    for (int n : w_factorize(word)) {
        WTensor g;
        g.add_term({y_word(n), Word()}, 1);
        g.add_term({Word(), y_word(n)}, 1);
        for (int a = 1; a < n; ++a) g.add_term({y_word(a), y_word(n - a)}, -1);
        WTensor next;
        for (const auto& [p, c] : acc.terms())
            for (const auto& [q, d] : g.terms()) next.add_term({p.left + q.left, p.right + q.right}, c * d);
        acc = next;
    }
    return acc;
}

// Triple tensors as maps from (u, v, w) to coefficients.
using Triple = std::map<std::tuple<std::string, std::string, std::string>, Rational>;

Triple left_coassoc(const WTensor& t) {
    Triple out;
    for (const auto& [p, c] : t.terms())
        for (const auto& [q, d] : word_coproduct(p.left).terms()) out[{q.left.raw(), q.right.raw(), p.right.raw()}] += c * d;
    std::erase_if(out, [](const auto& x) { return x.second.is_zero(); });
    return out;
}

Triple right_coassoc(const WTensor& t) {
    Triple out;
    for (const auto& [p, c] : t.terms())
        for (const auto& [q, d] : word_coproduct(p.right).terms()) out[{p.left.raw(), q.left.raw(), q.right.raw()}] += c * d;
    std::erase_if(out, [](const auto& x) { return x.second.is_zero(); });
    return out;
}

Series random_w(std::mt19937_64& rng, int n) {
    Series s(E, n);
    s.add_term(Word(), random_small(rng));
    for (int d = 1; d <= n; ++d)
        for (const auto& word : all_words(2, static_cast<std::size_t>(d)))
            if (word.back() == 1 && rng() % 3 == 0) s.add_term(word, random_small(rng));
    return s;
}

}  // namespace

TEST(ProjectToM, Examples) {
    EXPECT_EQ(project_to_m(w({0, 1}) - w({1, 0})), w({0, 1}));
    EXPECT_EQ(project_to_m(Series::one(E)), Series::one(E));
    EXPECT_TRUE(project_to_m(e0()).is_zero());
}

TEST(WFactorize, Examples) {
    EXPECT_EQ(w_factorize(Word{1}), (std::vector<int>{1}));
    EXPECT_EQ(w_factorize(Word{0, 1, 1}), (std::vector<int>{2, 1}));
    EXPECT_EQ(w_factorize(Word{0, 0, 1}), (std::vector<int>{3}));
    EXPECT_THROW(w_factorize(Word{1, 0}), std::invalid_argument);
}

TEST(DeltaW, Generators) {
    WTensor d1 = delta_w(e1());
    WTensor want1 = WTensor::monomial(Word{1}, Word()) + WTensor::monomial(Word(), Word{1});
    EXPECT_EQ(d1, want1);
    WTensor d2 = delta_w(w({0, 1}));
    WTensor want2 = WTensor::monomial(Word{0, 1}, Word()) + WTensor::monomial(Word(), Word{0, 1}) -
                    WTensor::monomial(Word{1}, Word{1});
    EXPECT_EQ(d2, want2);
    EXPECT_EQ(delta_w(Series::one(E)), WTensor::one());
    EXPECT_THROW(delta_w(e0()), std::invalid_argument);
    // Inherited by delta_m through the representative.
    EXPECT_EQ(delta_m(w({0, 1}) - w({1, 0})), want2);
}

TEST(DeltaW, MatchesBruteForce) {
    for (int n = 1; n <= 6; ++n)
        for (const auto& word : all_words(2, static_cast<std::size_t>(n)))
            if (word.back() == 1) {
                EXPECT_EQ(delta_w(Series::monomial(E, word)), word_coproduct(word));
            }
}

TEST(DeltaW, CoassociativeAndMultiplicative) {
    for (int n = 1; n <= 6; ++n) {
        WTensor d = delta_w(Series::monomial(E, y_word(n)));
        EXPECT_EQ(left_coassoc(d), right_coassoc(d));
    }
    std::mt19937_64 rng(5);
    for (int t = 0; t < 10; ++t) {
        Series a = random_w(rng, 6), b = random_w(rng, 3);
        EXPECT_EQ(left_coassoc(delta_w(a)), right_coassoc(delta_w(a)));
        Series ab = a * b;
        EXPECT_EQ(delta_w(ab), delta_w(a) * delta_w(b));
    }
}

TEST(Primitivity, Examples) {
    EXPECT_TRUE(is_m_primitive(e1()));
    EXPECT_FALSE(is_m_primitive(w({0, 1})));
    EXPECT_TRUE(is_m_primitive(w({0, 1}) + w({1, 1}, Rational(1, 2))));
    EXPECT_THROW(is_m_primitive(Series::one(E)), std::invalid_argument);
}

TEST(GammaCorrection, Examples) {
    Series br = lie_bracket(e0(), e1());
    EXPECT_EQ(gamma_correction(br), w({1, 1}, Rational(1, 2)));
    EXPECT_TRUE(gamma_correction(lie_bracket(e1(), lie_bracket(e1(), e0()))).is_zero());
    EXPECT_TRUE(gamma_correction(lie_bracket(e1(), br)).is_zero());
    EXPECT_TRUE(gamma_correction(Series(E)).is_zero());
}

TEST(Dmr0, SmallDimensions) {
    EXPECT_EQ(dmr0_component(2).dim(), 0u);
    EXPECT_EQ(dmr0_component(3).dim(), 1u);
    EXPECT_EQ(dmr0_component(4).dim(), 0u);
    EXPECT_THROW(dmr0_component(1), std::invalid_argument);
    // [e0,e1] passes the primitivity part; only (a|e0e1) = 0 excludes it.
    EXPECT_TRUE(dmr_defect(lie_bracket(e0(), e1())).is_zero());
}

TEST(Dmr0, DegreeThreeGenerator) {
    // The unique line in degree 3 is spanned by [e0,[e0,e1]] - [[e0,e1],e1],
    // up to scale.
    auto s = dmr0_component(3);
    ASSERT_EQ(s.dim(), 1u);
    Series a = lyndon_basis(E, 3)->from_coords(s.basis()[0]);
    Series br = lie_bracket(e0(), e1());
    Series want = lie_bracket(e0(), br) - lie_bracket(br, e1());
    Series diff = Rational(a.coeff(Word{0, 0, 1})) * want - a;
    EXPECT_TRUE(diff.is_zero());
}

TEST(GammaSeries, Examples) {
    EXPECT_EQ(gamma_series(Series::one(E), 3), (Polynomial{1, 0, 0, 0}));
    Series g = dsl::exp(truncate(lie_bracket(e0(), e1()), 2));
    EXPECT_EQ(gamma_series(g, 2), (Polynomial{1, 0, Rational(-1, 2)}));
    Series h = dsl::exp(truncate(lie_bracket(e1(), lie_bracket(e1(), e0())), 4));
    EXPECT_EQ(gamma_series(h, 4), (Polynomial{1, 0, 0, 0, 0}));
    EXPECT_THROW(gamma_series(truncate(g, 1), 2), std::out_of_range);
}

TEST(Polynomial, Inverse) {
    Polynomial p{1, 2, -3};
    EXPECT_EQ(poly_mul(p, poly_inverse(p, 5), 5), (Polynomial{1, 0, 0, 0, 0, 0}));
    EXPECT_EQ(poly_negate_variable(p), (Polynomial{1, -2, -3}));
}
