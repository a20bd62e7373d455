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

#include <algorithm>
#include <functional>

#include "mtomega/modular.hpp"

using namespace mtomega;

namespace {

// Exact rational sums by enumeration, reduced at the end.
Rational exact_hsum(const Index& k, long p) {
    Rational total = 0;
    std::vector<long> m(k.length());
    std::function<void(std::size_t, long, Rational)> rec = [&](std::size_t a, long below, Rational acc) {
        if (a == k.length()) {
            total += acc;
            return;
        }
        for (long x = 1; x < below; ++x) rec(a + 1, x, acc / Rational(ipow(Integer(x), static_cast<unsigned long>(k[a]))));
    };
    rec(0, p, Rational(1));
    return total;
}

Rational exact_omega(const Index& k, long n) {
    Rational total = 0;
    std::function<void(std::size_t, long, Rational)> rec = [&](std::size_t a, long left, Rational acc) {
        if (a + 1 == k.length()) {
            if (left >= 1) total += acc / Rational(ipow(Integer(left), static_cast<unsigned long>(k[a])));
            return;
        }
        for (long x = 1; x < left; ++x) rec(a + 1, left - x, acc / Rational(ipow(Integer(x), static_cast<unsigned long>(k[a]))));
    };
    rec(0, n, Rational(1));
    return total;
}

// B_n as exact rationals through the same recurrence-free route: Akiyama-Tanigawa.
Rational exact_bernoulli(int n) {
    std::vector<Rational> a(static_cast<std::size_t>(n) + 1);
    for (int m = 0; m <= n; ++m) {
        a[static_cast<std::size_t>(m)] = frac(1, m + 1);
        for (int j = m; j >= 1; --j)
            a[static_cast<std::size_t>(j - 1)] = Rational(j) * (a[static_cast<std::size_t>(j - 1)] - a[static_cast<std::size_t>(j)]);
    }
    Rational b = a[0];  // this convention gives B_1 = +1/2
    if (n == 1) b = -b;
    return b;
}

}  // namespace

TEST(Primes, Helpers) {
    EXPECT_TRUE(is_prime(397));
    EXPECT_FALSE(is_prime(399));
    EXPECT_EQ(primes_between(10, 20), (std::vector<std::int64_t>{11, 13, 17, 19}));
    EXPECT_EQ(primes_above(11, 3), (std::vector<std::int64_t>{13, 17, 19}));
    EXPECT_EQ(mod_inv(3, 7), 5);
    EXPECT_EQ(rational_mod(frac(17, 32), 5), 1);
    EXPECT_THROW(rational_mod(frac(1, 10), 5), DenominatorError);
}

TEST(Hsum, Examples) {
    EXPECT_EQ(hsum_mod(Index{1}, 5).value, 0);
    EXPECT_EQ(hsum_mod(Index{2, 1}, 5).value, 1);
    EXPECT_EQ(hsum_mod(Index{1, 1}, 3).value, 2);
    EXPECT_THROW(hsum_mod(Index{1}, 9), RangeError);
}

TEST(Hsum, MatchesExactSums) {
    for (long p : {5L, 7L, 11L, 13L})
        for (int wt = 1; wt <= 5; ++wt)
            for (const auto& k : compositions(wt)) {
                if (static_cast<long>(k.length()) >= p) continue;
                EXPECT_EQ(hsum_mod(k, p).value, rational_mod(exact_hsum(k, p), p)) << k.to_string() << " p=" << p;
            }
}

TEST(OmegaMod, Examples) {
    EXPECT_EQ(omega_mod(Index{2, 1}, 5).value, 0);
    EXPECT_EQ(omega_mod(Index{1, 1, 1}, 5).value, 3);
    EXPECT_EQ(omega_mod(Index{1, 1}, 7).value, 0);
    EXPECT_EQ(exact_omega(Index{1, 1, 1}, 5), frac(7, 4));
    EXPECT_THROW(omega_mod(Index{3}, 5), LengthError);
}

TEST(OmegaMod, MatchesExactSums) {
    for (long p : {5L, 7L, 11L, 13L})
        for (int wt = 2; wt <= 6; ++wt)
            for (const auto& k : compositions(wt, 2))
                EXPECT_EQ(omega_mod(k, p).value, rational_mod(exact_omega(k, p), p)) << k.to_string() << " p=" << p;
}

TEST(OmegaMod, PermutationSymmetry) {
    for (long p : {7L, 23L, 101L})
        for (int wt = 2; wt <= 6; ++wt)
            for (const auto& k : compositions(wt, 2))
                EXPECT_EQ(omega_mod(k, p), omega_mod(k.sorted_descending(), p));
}

TEST(OmegaMod, KamanoConsistency) {
    for (long p : {11L, 13L, 29L, 53L})
        for (int wt = 2; wt <= 7; ++wt)
            for (const auto& k : compositions(wt, 2)) {
                std::int64_t z = zeta_word_mod(mt_word(k), p).value;
                std::int64_t expect = (k[k.length() - 1] % 2 == 0) ? z : mod_reduce(-z, p);
                EXPECT_EQ(omega_mod(k, p).value, expect) << k.to_string() << " p=" << p;
            }
}

TEST(ZetaWordMod, Examples) {
    EXPECT_EQ(zeta_word_mod(mt_word(Index{2, 1}), 5).value, hsum_mod(Index{3}, 5).value);
    EXPECT_EQ(zeta_word_mod(mt_word(Index{2, 1}), 5).value, 0);
    EXPECT_EQ(zeta_word_mod(WordSum(Word::parse("x0x1x1"), 2), 5).value, 2);
    EXPECT_EQ(zeta_word_mod(WordSum(), 11).value, 0);
    EXPECT_THROW(zeta_word_mod(WordSum(Word::parse("x1"), frac(1, 5)), 5), DenominatorError);
}

TEST(Bernoulli, Examples) {
    EXPECT_EQ(bern_div_mod(2, 5).value, 0);
    EXPECT_EQ(bern_div_mod(3, 5).value, 2);
    EXPECT_EQ(bern_div_mod(3, 7).value, 1);
    EXPECT_THROW(bern_div_mod(4, 5), RangeError);
    EXPECT_THROW(bern_div_mod(6, 7), RangeError);
    EXPECT_THROW(bern_div_mod(1, 11), RangeError);
}

TEST(Bernoulli, MatchesExactValues) {
    for (long p : {7L, 11L, 13L, 31L}) {
        BernoulliModP b(p);
        for (int n = 0; n + 2 <= p; ++n) EXPECT_EQ(b[static_cast<std::size_t>(n)], rational_mod(exact_bernoulli(n), p));
    }
}

TEST(Specials, OnesAgainstBernoulli) {
    for (int k = 2; k <= 6; ++k)
        for (auto p : primes_between(k + 2, 200)) {
            std::int64_t rhs = mod_reduce(-Integer(factorial(k) % Integer(static_cast<long>(p))).get_si() * bern_div_mod(k, p).value, p);
            EXPECT_EQ(omega_mod(repeated(1, k), p).value, rhs) << k << " " << p;
        }
}

TEST(ResidueTable, Examples) {
    auto t = residue_table({Index{2, 1}}, {5, 7, 11});
    EXPECT_EQ(t.values, (std::vector<std::vector<std::int64_t>>{{0, 0, 0}}));
    auto t2 = residue_table({Index{1, 1, 1}}, {5});
    EXPECT_EQ(t2.values[0], (std::vector<std::int64_t>{3}));
    auto t3 = residue_table({}, {5});
    EXPECT_TRUE(t3.values.empty());
    auto t4 = residue_table({Index{1, 1, 1}, WordSum(Word::parse("x0x1"), frac(1, 7))}, {5, 7, 11});
    EXPECT_EQ(t4.primes, (std::vector<std::int64_t>{5, 11}));
    EXPECT_EQ(t4.dropped_primes, (std::vector<std::int64_t>{7}));
    EXPECT_EQ(t.to_csv(), "index,5,7,11\n2.1,0,0,0\n");
}
