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

#include "dsl/series.hpp"

using namespace dsl;

namespace {

const Alphabet& E = Alphabet::e();
const Alphabet& EI = Alphabet::einf();

Series e0(int n = kPolynomialCap) { return Series::letter(E, 0, n); }
Series e1(int n = kPolynomialCap) { return Series::letter(E, 1, n); }
Series one(int n = kPolynomialCap) { return Series::one(E, n); }
Series w(std::initializer_list<int> letters, Rational c = 1, int n = kPolynomialCap) {
    return Series::monomial(E, Word(letters), c, n);
}

Series random_series(std::mt19937_64& rng, int n, bool zero_constant) {
    Series s(E, n);
    for (int d = zero_constant ? 1 : 0; d <= n; ++d)
        for (const auto& word : all_words(2, static_cast<std::size_t>(d)))
            if (rng() % 3 == 0) s.add_term(word, Rational(static_cast<long>(rng() % 5) - 2));
    return s;
}

}  // namespace

TEST(Series, RingOperations) {
    EXPECT_EQ(e0() * e1(), w({0, 1}));
    EXPECT_EQ(mul(one(2) + e0(2), one(2) - e0(2)), one() - w({0, 0}));
    EXPECT_TRUE(scale(0, e0() + w({1, 1})).is_zero());
    EXPECT_THROW(e0() + Series::letter(EI, 0), std::invalid_argument);
}

TEST(Series, TruncationTravelsWithValues) {
    Series a = e0(2) + one(2);
    Series b = e1(5);
    Series p = a * b * b * b;
    EXPECT_EQ(p.max_degree(), 2);
    EXPECT_EQ(p.high_degree(), -1);
    Series s = e0(3) + e1(1);
    EXPECT_EQ(s.max_degree(), 1);
    EXPECT_THROW((void)s.coeff(Word{0, 1}), std::out_of_range);
}

TEST(Series, Coefficients) {
    EXPECT_EQ((w({0, 1}) - w({1, 0})).coeff(Word{0, 1}), Rational(1));
    EXPECT_EQ(one().coeff(Word()), Rational(1));
    EXPECT_EQ(dsl::exp(e0(3)).coeff(Word{0, 0, 0}), Rational(1, 6));
}

TEST(Series, ExpLog) {
    EXPECT_EQ(dsl::exp(Series(E, 4)), one());
    EXPECT_TRUE(dsl::log(one(4)).is_zero());
    EXPECT_EQ(dsl::exp(e0(2)), one() + e0() + w({0, 0}, Rational(1, 2)));
    EXPECT_THROW(dsl::exp(one(3)), std::domain_error);
    EXPECT_THROW(dsl::log(e0(3)), std::domain_error);
    std::mt19937_64 rng(7);
    for (int t = 0; t < 10; ++t) {
        Series a = random_series(rng, 5, true);
        EXPECT_EQ(dsl::log(dsl::exp(a)), a);
        Series g = one(5) + a;
        EXPECT_EQ(dsl::exp(dsl::log(g)), g);
    }
}

TEST(Series, Inverse) {
    EXPECT_EQ(inverse(one(3)), one());
    EXPECT_EQ(inverse(one(2) + e0(2)), one() - e0() + w({0, 0}));
    EXPECT_EQ(inverse(Series::constant(E, 2, 3)), Series::constant(E, Rational(1, 2)));
    EXPECT_THROW(inverse(e0(3)), std::domain_error);
    std::mt19937_64 rng(8);
    for (int t = 0; t < 10; ++t) {
        Series g = one(5) + random_series(rng, 5, true);
        EXPECT_EQ(g * inverse(g), one(5));
    }
}

TEST(Series, Substitute) {
    EXPECT_EQ(substitute(w({0, 1}), {e0(), e1()}), w({0, 1}));
    Series einf_image = -Series::letter(EI, 0) - Series::letter(EI, 1);
    EXPECT_EQ(substitute(e1(), {Series::letter(EI, 0), einf_image}), einf_image);
    // e0 -> -e0-e1 (= e_inf), e1 -> e1.
    EXPECT_EQ(substitute(w({0, 1}), {-e0() - e1(), e1()}), (-e0() - e1()) * e1());
    EXPECT_THROW(substitute(e0(), {one(), e1()}), std::invalid_argument);
    EXPECT_THROW(substitute(e0(), {e0(), Series::letter(EI, 1)}), std::invalid_argument);
}

TEST(Series, SubstituteIsMultiplicativeAndBasisChangeRoundTrips) {
    std::mt19937_64 rng(9);
    std::vector<Series> to_einf{Series::letter(EI, 0), -Series::letter(EI, 0) - Series::letter(EI, 1)};
    std::vector<Series> from_einf{e0(), -e0() - e1()};
    for (int t = 0; t < 10; ++t) {
        Series a = random_series(rng, 4, false), b = random_series(rng, 4, false);
        EXPECT_EQ(substitute(a * b, to_einf), substitute(a, to_einf) * substitute(b, to_einf));
        EXPECT_EQ(substitute(substitute(a, to_einf), from_einf), a);
    }
}

TEST(Series, Derivations) {
    Series ei0 = Series::letter(EI, 0), eii = Series::letter(EI, 1);
    std::vector<Series> dinf{Series(EI), Series::one(EI)};
    EXPECT_EQ(derivation_apply(dinf, eii * ei0), ei0);
    EXPECT_EQ(derivation_apply(dinf, eii * eii), 2 * eii);
    // d_{e0}: e0 -> 0, e1 -> [e1, e0].
    EXPECT_EQ(derivation_apply({Series(E), e1() * e0() - e0() * e1()}, e1()), w({1, 0}) - w({0, 1}));
}

TEST(Series, LeibnizRule) {
    std::mt19937_64 rng(10);
    for (int t = 0; t < 10; ++t) {
        Series a = random_series(rng, 5, false), b = random_series(rng, 5, false);
        std::vector<Series> rule{random_series(rng, 5, true), random_series(rng, 5, true)};
        auto d = [&](const Series& s) { return derivation_apply(rule, s); };
        Series lhs = d(a * b), rhs = d(a) * b + a * d(b);
        EXPECT_EQ(lhs.max_degree(), rhs.max_degree());
        EXPECT_EQ(lhs, rhs);
    }
}

TEST(Series, AssociativeAndUnital) {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 10; ++t) {
        Series a = random_series(rng, 5, false), b = random_series(rng, 5, false), c = random_series(rng, 5, false);
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * one(), a);
        EXPECT_EQ(one() * a, a);
    }
}

TEST(Series, Conjugate) {
    Series a = w({0, 1}) + e1();
    EXPECT_EQ(conjugate(one(), a), a);
    EXPECT_EQ(conjugate(dsl::exp(e1(2)), e0(2)), e0() + w({1, 0}) - w({0, 1}));
    EXPECT_EQ(conjugate(one(3) + e0(3) + w({1, 1}, 3, 3), one(3)), one());
}

TEST(Series, GradedComponentsAndTruncation) {
    Series a = one() + e0() + w({0, 1});
    EXPECT_EQ(graded_component(a, 2), w({0, 1}));
    EXPECT_EQ(truncate(a, 0), one());
    EXPECT_EQ(truncate(a, 0).max_degree(), 0);
    EXPECT_EQ(graded_component(dsl::exp(e0(3)), 3), w({0, 0, 0}, Rational(1, 6)));
    EXPECT_THROW(graded_component(e0(2), 3), std::out_of_range);
    EXPECT_THROW(truncate(e0(2), 3), std::out_of_range);
}
