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

#include "mtomega/lattice.hpp"
#include "mtomega/pslq.hpp"

using namespace mtomega;

namespace {

IntMat mat(std::vector<std::vector<long>> rows) {
    IntMat out;
    for (auto& r : rows) {
        IntVec v;
        for (long x : r) v.emplace_back(x);
        out.push_back(v);
    }
    return out;
}

// Rows of `b` (full rank, square) span integer vector v iff the solution of
// c b = v is integral.
bool in_lattice(const IntMat& b, const IntVec& v) {
    const std::size_t n = b.size();
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n + 1));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) m[i][j] = b[j][i];
        m[i][n] = v[i];
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (m[p][c] == 0) ++p;
        std::swap(m[p], m[c]);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || m[i][c] == 0) continue;
            Rational f = m[i][c] / m[c][c];
            for (std::size_t j = c; j <= n; ++j) m[i][j] -= f * m[c][j];
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        Rational x = m[i][n] / m[i][i];
        if (x.get_den() != 1) return false;
    }
    return true;
}

Integer det(IntMat a) {
    const std::size_t n = a.size();
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m[i][j] = a[i][j];
    Rational d = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m[p][c] == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            std::swap(m[p], m[c]);
            d = -d;
        }
        d *= m[c][c];
        for (std::size_t i = c + 1; i < n; ++i) {
            Rational f = m[i][c] / m[c][c];
            for (std::size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
        }
    }
    return d.get_num();
}

IntMat random_matrix(std::mt19937& rng, std::size_t n, long bound) {
    std::uniform_int_distribution<long> dist(-bound, bound);
    IntMat m;
    do {
        m.assign(n, IntVec(n));
        for (auto& r : m)
            for (auto& x : r) x = dist(rng);
    } while (det(m) == 0);
    return m;
}

BigReal real(const BigFloat& v, int digits) { return {v, digits}; }

}  // namespace

TEST(Lll, Examples) {
    EXPECT_EQ(lll_reduce(mat({{1, 0}, {0, 1}})), mat({{1, 0}, {0, 1}}));
    IntMat in = mat({{1, 1, 1}, {-1, 0, 2}, {3, 5, 6}});
    IntMat out = lll_reduce(in);
    EXPECT_TRUE(same_lattice(in, out));
    for (const auto& v : out) EXPECT_LE(height(v), 2);
    IntMat two = lll_reduce(mat({{2, 0}, {1, 1}}));
    EXPECT_TRUE(same_lattice(two, mat({{1, 1}, {-1, 1}})));
    for (const auto& v : two) EXPECT_EQ(dot(v, v), 2);
    EXPECT_THROW(lll_reduce(mat({{1, 2}, {2, 4}})), DependentInputError);
    EXPECT_THROW(lll_reduce(mat({{0, 0}, {1, 4}})), DependentInputError);
}

TEST(Lll, FirstVectorAgainstEnumeration) {
    // shortest nonzero vector by enumeration of a box, compared with the
    // LLL guarantee |b_1|^2 <= 2^{n-1} lambda_1^2
    IntMat in = mat({{1, 1, 1}, {-1, 0, 2}, {3, 5, 6}});
    Integer shortest = -1;
    for (long a = -3; a <= 3; ++a)
        for (long b = -3; b <= 3; ++b)
            for (long c = -3; c <= 3; ++c) {
                IntVec v{a, b, c};
                if (is_zero_vector(v) || !in_lattice(in, v)) continue;
                if (shortest < 0 || dot(v, v) < shortest) shortest = dot(v, v);
            }
    IntMat out = lll_reduce(in);
    EXPECT_LE(dot(out[0], out[0]), 4 * shortest);
    for (const auto& v : out) EXPECT_TRUE(in_lattice(in, v));
}

TEST(Lll, RandomProperties) {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = 2 + static_cast<std::size_t>(trial % 5);
        IntMat in = random_matrix(rng, n, 50);
        IntMat out = lll_reduce(in);
        EXPECT_TRUE(is_lll_reduced(out));
        EXPECT_TRUE(same_lattice(in, out));
        EXPECT_EQ(abs(det(in)), abs(det(out)));
        EXPECT_EQ(lll_reduce(in), out);  // deterministic
    }
}

TEST(Lll, NonSquareBasis) {
    IntMat in = mat({{1, 0, 0, 1000}, {0, 1, 0, 1731}, {0, 0, 1, 2218}});
    IntMat out = lll_reduce(in);
    EXPECT_TRUE(is_lll_reduced(out));
    EXPECT_TRUE(same_lattice(in, out));
}

TEST(Hnf, InvariantUnderUnimodularMoves) {
    std::mt19937 rng(11);
    std::uniform_int_distribution<long> small(-3, 3);
    for (int trial = 0; trial < 30; ++trial) {
        IntMat a = random_matrix(rng, 4, 20);
        IntMat b = a;
        for (int step = 0; step < 10; ++step) {
            std::size_t i = rng() % 4, j = rng() % 4;
            if (i == j) continue;
            long t = small(rng);
            for (std::size_t c = 0; c < 4; ++c) b[i][c] += t * b[j][c];
            if (step % 3 == 0) std::swap(b[i], b[j]);
        }
        EXPECT_EQ(hnf(a), hnf(b));
        IntMat h = hnf(a);
        for (std::size_t r = 0; r < h.size(); ++r) {
            EXPECT_GT(h[r][r], 0);
            for (std::size_t i = 0; i < r; ++i) {
                EXPECT_GE(h[i][r], 0);
                EXPECT_LT(h[i][r], h[r][r]);
            }
        }
    }
    EXPECT_EQ(hnf(mat({{2, 4}, {1, 2}})), mat({{1, 2}}));
}

TEST(Congruence, IntersectionHasIndexP) {
    IntMat b = identity_lattice(4);
    std::vector<long> v{3, 0, 5, 1};
    intersect_congruence(b, v, 7);
    EXPECT_EQ(abs(det(b)), 7);
    for (const auto& row : b) {
        Integer s = 0;
        for (std::size_t i = 0; i < 4; ++i) s += row[i] * v[i];
        EXPECT_EQ(s % 7, 0);
    }
    // a box vector lies in the lattice exactly when it satisfies the congruence
    for (long a = -2; a <= 2; ++a)
        for (long x = -1; x <= 1; ++x)
            for (long c = -2; c <= 2; ++c)
                for (long d = -2; d <= 2; ++d)
                    EXPECT_EQ(in_lattice(b, IntVec{a, x, c, d}), (3 * a + 5 * c + d) % 7 == 0);
    IntMat unchanged = identity_lattice(3);
    intersect_congruence(unchanged, {0, 0, 0}, 5);
    EXPECT_EQ(unchanged, identity_lattice(3));
}

TEST(Congruence, HiddenRelationSurvivesManyPrimes) {
    // residues (x, y, x + y) with random x, y share only the relation (1, 1, -1)
    IntMat b = identity_lattice(3);
    std::mt19937 rng(3);
    for (long p : {101L, 103L, 107L, 109L, 113L, 127L, 131L, 137L}) {
        long x = static_cast<long>(rng() % static_cast<unsigned long>(p)), y = static_cast<long>(rng() % static_cast<unsigned long>(p));
        intersect_congruence(b, {x, y, (x + y) % p}, p);
        b = lll_reduce(b);
    }
    EXPECT_EQ(make_primitive(b[0]), (IntVec{1, 1, -1}));
    EXPECT_GT(height(b[1]), 1000);
}

TEST(RationalKernel, MatchesConstraints) {
    RationalKernel k(4);
    EXPECT_TRUE(k.add_row({1, 2, 0, -1}));
    EXPECT_TRUE(k.add_row({0, 1, 1, 1}));
    EXPECT_FALSE(k.add_row({2, 5, 1, -1}));
    EXPECT_EQ(k.rank(), 2u);
    IntMat ker = k.kernel();
    ASSERT_EQ(ker.size(), 2u);
    for (const auto& v : ker) {
        EXPECT_EQ(v[0] + 2 * v[1] - v[3], 0);
        EXPECT_EQ(v[1] + v[2] + v[3], 0);
    }
    RationalKernel frac_rows(2);
    frac_rows.add_row({frac(1, 2), frac(-1, 3)});
    EXPECT_EQ(frac_rows.kernel(), (IntMat{IntVec{2, 3}}));
}

TEST(Pslq, Examples) {
    const int d = 40, full = 60;
    MzvEvaluator ev(full);
    BigReal z3 = real(ev.zeta(Word::y(3)), full), z21 = real(ev.zeta(word_of_index(Index{2, 1})), full);
    auto r = pslq({z3, z21}, d);
    ASSERT_TRUE(r.has_value());
    EXPECT_EQ(*r, (IntVec{1, -1}));

    const mpfr_prec_t prec = bits_for_digits(full + 10);
    BigFloat phi = (BigFloat(1, prec) + BigFloat(5, prec).sqrt()) / BigFloat(2, prec);
    auto g = pslq({real(BigFloat(1, prec), full), real(phi, full), real(phi * phi, full)}, d);
    ASSERT_TRUE(g.has_value());
    EXPECT_EQ(*g, (IntVec{1, 1, -1}));

    PslqOptions opt;
    opt.max_height = 1000;
    EXPECT_FALSE(pslq({real(BigFloat(1, prec), full), real(BigFloat::pi(prec), full)}, d, opt).has_value());
    EXPECT_THROW(pslq({real(phi, 20), real(phi, 20)}, d), PrecisionError);
}

TEST(Pslq, ScalingInvariance) {
    const int d = 40, full = 60;
    const mpfr_prec_t prec = bits_for_digits(full + 10);
    BigFloat l2 = BigFloat(2, prec).log(), l3 = BigFloat(3, prec).log(), l6 = BigFloat(6, prec).log();
    auto a = pslq({real(l2, full), real(l3, full), real(l6, full)}, d);
    ASSERT_TRUE(a.has_value());
    EXPECT_EQ(*a, (IntVec{1, 1, -1}));
    const Rational s = frac(3, 7);
    auto b = pslq({real(l2 * s, full), real(l3 * s, full), real(l6 * s, full)}, d);
    ASSERT_TRUE(b.has_value());
    EXPECT_EQ(*a, *b);
}

TEST(Pslq, PlantedRelations) {
    const int d = 50, full = 75;
    const mpfr_prec_t prec = bits_for_digits(full + 10);
    std::mt19937 rng(5);
    std::uniform_int_distribution<long> coef(-20, 20);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<BigFloat> xs;
        for (int i = 0; i < 4; ++i) xs.push_back(BigFloat(static_cast<long>(i + 2 + trial), prec).sqrt().log());
        IntVec c(5);
        BigFloat last(prec);
        for (int i = 0; i < 4; ++i) {
            c[static_cast<std::size_t>(i)] = coef(rng);
            last += xs[static_cast<std::size_t>(i)] * BigFloat(c[static_cast<std::size_t>(i)], prec);
        }
        c[4] = -1;
        xs.push_back(last);
        std::vector<BigReal> in;
        for (auto& x : xs) in.push_back(real(x, full));
        auto r = pslq(in, d);
        ASSERT_TRUE(r.has_value()) << trial;
        // logs of square roots of consecutive integers can carry their own
        // small relations; accept any verified short relation
        EXPECT_LE(height(*r), 20 * 4);
        EXPECT_LT(detail::relation_residual(xs, *r).log10_abs(), -full + 5);
    }
}
