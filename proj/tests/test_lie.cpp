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
#include <set>

#include "dsl/lie.hpp"

using namespace dsl;

namespace {

const Alphabet& E = Alphabet::e();
Series e0() { return Series::letter(E, 0); }
Series e1() { return Series::letter(E, 1); }
Series w(std::initializer_list<int> letters, Rational c = 1) { return Series::monomial(E, Word(letters), c); }

// Lyndon words by brute force: strictly smaller than every rotation.
std::set<std::string> brute_lyndon(std::size_t k, std::size_t n) {
    std::set<std::string> out;
    for (const auto& word : all_words(k, n)) {
        bool ok = true;
        for (std::size_t i = 1; i < n && ok; ++i) {
            Word rot = word.substr(i) + word.substr(0, i);
            ok = lex_less(word, rot);
        }
        if (ok) out.insert(word.digits());
    }
    return out;
}

}  // namespace

TEST(Lyndon, SmallBases) {
    auto b1 = lyndon_basis(E, 1);
    ASSERT_EQ(b1->size(), 2u);
    EXPECT_EQ((*b1)[0].expansion, e0());
    EXPECT_EQ((*b1)[1].expansion, e1());
    auto b2 = lyndon_basis(E, 2);
    ASSERT_EQ(b2->size(), 1u);
    EXPECT_EQ((*b2)[0].word, (Word{0, 1}));
    EXPECT_EQ((*b2)[0].bracketing, "[e0,e1]");
    EXPECT_EQ((*b2)[0].expansion, w({0, 1}) - w({1, 0}));
    EXPECT_EQ(lyndon_basis(E, 3)->size(), 2u);
    EXPECT_THROW(LyndonBasis(E, 0), std::invalid_argument);
}

TEST(Lyndon, MatchesBruteForceAndWitt) {
    for (std::size_t n = 1; n <= 10; ++n) {
        auto words = lyndon_words(2, n);
        std::set<std::string> got;
        for (const auto& x : words) got.insert(x.digits());
        EXPECT_EQ(got.size(), words.size());
        EXPECT_EQ(got, brute_lyndon(2, n)) << n;
        EXPECT_EQ(words.size(), witt_dimension(2, n)) << n;
        EXPECT_EQ(lyndon_basis(E, static_cast<int>(n))->size(), witt_dimension(2, n));
    }
    for (std::size_t n = 1; n <= 5; ++n) EXPECT_EQ(lyndon_words(4, n).size(), witt_dimension(4, n));
}

TEST(Lyndon, ExpansionsAreLie) {
    for (int n = 1; n <= 8; ++n)
        for (const auto& e : lyndon_basis(E, n)->entries()) EXPECT_TRUE(is_lie(e.expansion)) << e.bracketing;
}

TEST(IsLie, Examples) {
    EXPECT_TRUE(is_lie(w({0, 1}) - w({1, 0})));
    EXPECT_FALSE(is_lie(w({0, 1})));
    EXPECT_TRUE(is_lie(e0()));
    EXPECT_TRUE(is_lie(Series(E)));
    EXPECT_THROW(is_lie(e0() + w({0, 1})), std::invalid_argument);
}

TEST(LieBracket, Examples) {
    EXPECT_TRUE(lie_bracket(e0(), e0()).is_zero());
    EXPECT_EQ(lie_bracket(e0(), e1()), w({0, 1}) - w({1, 0}));
    EXPECT_EQ(lie_bracket(lie_bracket(e0(), e1()), e1()), w({0, 1, 1}) - 2 * w({1, 0, 1}) + w({1, 1, 0}));
}

TEST(Coords, RoundTrip) {
    auto b2 = lyndon_basis(E, 2);
    EXPECT_EQ(b2->to_coords(lie_bracket(e0(), e1())), (Vector{1}));
    auto b4 = lyndon_basis(E, 4);
    EXPECT_TRUE(b4->from_coords(Vector(b4->size())).is_zero());
    std::mt19937_64 rng(3);
    for (int t = 0; t < 20; ++t) {
        Vector v(b4->size());
        for (auto& c : v) c = random_small(rng);
        EXPECT_EQ(b4->to_coords(b4->from_coords(v)), v);
    }
    EXPECT_THROW(b2->to_coords(w({0, 1})), std::domain_error);
    EXPECT_THROW(b2->to_coords(e0()), std::domain_error);
}

TEST(Ihara, Examples) {
    EXPECT_TRUE(ihara_bracket(e0(), e1()).is_zero());
    Series a = lie_bracket(e0(), lie_bracket(e0(), e1()));
    EXPECT_TRUE(ihara_bracket(a, a).is_zero());
    EXPECT_TRUE(ihara_bracket(lie_bracket(e0(), e1()), e1()).is_zero());
    EXPECT_THROW(ihara_bracket(w({0, 1}), e1()), std::invalid_argument);
}

TEST(Ihara, LieAlgebraAxioms) {
    std::mt19937_64 rng(2026);
    for (int t = 0; t < 40; ++t) {
        int da = 2 + static_cast<int>(rng() % 2), db = 2 + static_cast<int>(rng() % 2);
        int dc = 1 + static_cast<int>(rng() % 2);
        Series a = random_lie(E, da, rng), b = random_lie(E, db, rng), c = random_lie(E, dc, rng);
        Series ab = ihara_bracket(a, b);
        EXPECT_EQ(ab, -ihara_bracket(b, a));
        EXPECT_TRUE(is_lie(ab));
        Series jac = ihara_bracket(a, ihara_bracket(b, c)) + ihara_bracket(b, ihara_bracket(c, a)) +
                     ihara_bracket(c, ihara_bracket(a, b));
        EXPECT_TRUE(jac.is_zero());
        Series lin = ihara_bracket(a + 2 * c, b) - ihara_bracket(a, b) - 2 * ihara_bracket(c, b);
        EXPECT_TRUE(lin.is_zero());
    }
}
