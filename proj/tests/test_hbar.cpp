/* Copyright 2026 The mtomega Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ========================================================================= */
#include <gtest/gtest.h>

#include <random>

#include "mtomega/hbar.hpp"
#include "mtomega/hbar_oracle.hpp"

using namespace mtomega;

namespace {

HbarSum E(std::initializer_list<int> ks, int hbar = 0, Rational c = 1) {
    return HbarSum(ExtendedIndex(ks), hbar, c);
}

// All extended indices of the given weight (1hat counted as 1).
std::vector<ExtendedIndex> extended_of_weight(int weight) {
    std::vector<ExtendedIndex> out;
    if (weight == 0) return {ExtendedIndex()};
    for (int first = 0; first <= weight; ++first) {
        if (first == 0 && weight < 1) continue;
        int w = first == kHat ? 1 : first;
        if (w > weight) continue;
        for (const auto& rest : extended_of_weight(weight - w)) out.push_back(rest.prepended(first));
    }
    return out;
}

}  // namespace

TEST(HbarShuffle, E1Square) {
    HbarSum e1 = HbarSum::e(1);
    EXPECT_EQ(shuffle_hbar(e1, e1), E({1, 1}) + E({1, kHat}));
    EXPECT_EQ(raw::shuffle_hbar_raw(e1, e1), E({1, 1}) + E({1, kHat}));
}

TEST(HbarShuffle, RawExpansionOfE1Square) {
    raw::RawSum s = raw::shuffle(raw::expand(HbarSum::e(1)), raw::expand(HbarSum::e(1)));
    raw::RawSum expect;
    raw::add_to(expect, 0, "abab", 2);
    raw::add_to(expect, 1, "abb", 1);
    raw::add_to(expect, 1, "bab", 2);
    raw::add_to(expect, 2, "bb", 1);
    EXPECT_EQ(s, expect);
}

TEST(HbarShuffle, Unit) {
    EXPECT_EQ(shuffle_hbar(HbarSum::e(kHat), HbarSum::one()), HbarSum::e(kHat));
    EXPECT_EQ(shuffle_hbar(HbarSum::one(), E({2, 1})), E({2, 1}));
}

TEST(HbarShuffle, AgreesWithRawOracle) {
    for (int w1 = 1; w1 <= 3; ++w1)
        for (int w2 = 1; w1 + w2 <= 5; ++w2)
            for (const auto& u : extended_of_weight(w1))
                for (const auto& v : extended_of_weight(w2)) {
                    HbarSum a(u), b(v);
                    EXPECT_EQ(shuffle_hbar(a, b), raw::shuffle_hbar_raw(a, b))
                        << u.to_string() << " " << v.to_string();
                }
}

TEST(HbarShuffle, E2WithE1hat) {
    HbarSum r = shuffle_hbar(HbarSum::e(2), HbarSum::e(kHat));
    EXPECT_EQ(r, raw::shuffle_hbar_raw(HbarSum::e(2), HbarSum::e(kHat)));
    EXPECT_FALSE(r.is_zero());
}

TEST(HbarShuffle, CommutativeAssociative) {
    std::mt19937 rng(5);
    std::vector<HbarSum> mons;
    for (int w = 1; w <= 2; ++w)
        for (const auto& k : extended_of_weight(w))
            for (int h = 0; h <= 2; ++h) mons.emplace_back(k, h, Rational(1 + h));
    std::uniform_int_distribution<std::size_t> pick(0, mons.size() - 1);
    for (int t = 0; t < 30; ++t) {
        HbarSum a = mons[pick(rng)] + mons[pick(rng)];
        HbarSum b = mons[pick(rng)];
        HbarSum c = mons[pick(rng)] - mons[pick(rng)];
        EXPECT_EQ(shuffle_hbar(a, b), shuffle_hbar(b, a));
        EXPECT_EQ(shuffle_hbar(shuffle_hbar(a, b), c), shuffle_hbar(a, shuffle_hbar(b, c)));
    }
}

TEST(HbarShuffle, OracleRejectsNonClosedInput) {
    raw::RawSum s;
    raw::add_to(s, 0, "aba", 1);
    EXPECT_THROW(raw::to_ebasis(s), InternalClosureError);
    raw::RawSum t;
    raw::add_to(t, 0, "b", 1);
    EXPECT_THROW(raw::to_ebasis(t), InternalClosureError);
}

TEST(AMult, Rules) {
    EXPECT_EQ(a_mult(1, HbarSum::e(kHat)), E({2}) - E({kHat}, 1));
    EXPECT_EQ(a_mult(1, HbarSum::e(1)), E({2}));
    EXPECT_EQ(a_mult(2, E({1, 1})), E({3, 1}));
    EXPECT_THROW(a_mult(1, HbarSum::one()), EmptyWordError);
    EXPECT_EQ(a_mult(0, HbarSum::one()), HbarSum::one());
}

TEST(AMult, MatchesRawLetters) {
    for (int w = 1; w <= 4; ++w)
        for (const auto& k : extended_of_weight(w)) {
            raw::RawSum s;
            for (const auto& [hw, c] : raw::expand(HbarSum(k))) raw::add_to(s, hw.first, "a" + hw.second, c);
            EXPECT_EQ(a_mult(1, HbarSum(k)), raw::to_ebasis(s)) << k.to_string();
        }
}

TEST(Rho, Examples) {
    EXPECT_TRUE(rho(E({2}, 1)).is_zero());
    EXPECT_EQ(rho(E({kHat, 2})), WordSum(Word::parse("x1x0x1")));
    EXPECT_EQ(rho(shuffle_hbar(HbarSum::e(1), HbarSum::e(1))), WordSum(Word::parse("x1x1"), 2));
}

TEST(Rho, IsShuffleHomomorphism) {
    for (int w1 = 1; w1 <= 5; ++w1)
        for (int w2 = 1; w1 + w2 <= 6; ++w2)
            for (const auto& u : extended_of_weight(w1))
                for (const auto& v : extended_of_weight(w2)) {
                    HbarSum a(u), b(v);
                    EXPECT_EQ(rho(shuffle_hbar(a, b)), shuffle(rho(a), rho(b)))
                        << u.to_string() << " " << v.to_string();
                }
}

TEST(Rho, LeftMultiplication) {
    for (int w = 1; w <= 4; ++w)
        for (const auto& k : extended_of_weight(w)) {
            HbarSum u(k);
            EXPECT_EQ(rho(a_mult(1, u)), rho(u).left_multiplied(Word::parse("x0")));
        }
}
