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
// Integer lattices: integral LLL reduction, Hermite normal form, congruence
// sublattices and exact rational kernels.

#ifndef MTOMEGA_LATTICE_HPP
#define MTOMEGA_LATTICE_HPP

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "mtomega/errors.hpp"
#include "mtomega/rational.hpp"

namespace mtomega {

using IntVec = std::vector<Integer>;
using IntMat = std::vector<IntVec>;

inline Integer dot(const IntVec& a, const IntVec& b) {
    Integer s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) mpz_addmul(s.get_mpz_t(), a[i].get_mpz_t(), b[i].get_mpz_t());
    return s;
}

// max_i |a_i|
inline Integer height(const IntVec& a) {
    Integer h = 0;
    for (const auto& x : a)
        if (abs(x) > h) h = abs(x);
    return h;
}

inline bool is_zero_vector(const IntVec& a) {
    return std::all_of(a.begin(), a.end(), [](const Integer& x) { return x == 0; });
}

// Divide by the gcd of the entries and make the first nonzero entry positive.
inline IntVec make_primitive(IntVec a) {
    Integer g = 0;
    for (const auto& x : a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 0) return a;
    auto first = std::find_if(a.begin(), a.end(), [](const Integer& x) { return x != 0; });
    if (*first < 0) g = -g;
    for (auto& x : a) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    return a;
}

namespace detail {

// Nearest integer to a / b for b > 0, ties rounded up.
inline Integer round_div(const Integer& a, const Integer& b) {
    Integer num = 2 * a + b, den = 2 * b, q;
    mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
}

}  // namespace detail

// LLL with delta = 3/4 on the rows of `basis`, in the integral formulation
// (all Gram-Schmidt data kept as exact integers d_i and lambda_ij).
inline IntMat lll_reduce(IntMat b) {
    const std::size_t n = b.size();
    if (n == 0) return b;
    // D[i + 1] = Gram determinant of the first i + 1 rows; D[0] = 1
    std::vector<Integer> D(n + 1, 0);
    std::vector<std::vector<Integer>> lam(n, std::vector<Integer>(n, 0));
    D[0] = 1;
    D[1] = dot(b[0], b[0]);
    if (D[1] == 0) throw DependentInputError("lll_reduce: zero vector in input");

    auto red = [&](std::size_t k, std::size_t l) {
        if (2 * abs(lam[k][l]) <= D[l + 1]) return;
        Integer q = detail::round_div(lam[k][l], D[l + 1]);
        for (std::size_t i = 0; i < b[k].size(); ++i) mpz_submul(b[k][i].get_mpz_t(), q.get_mpz_t(), b[l][i].get_mpz_t());
        lam[k][l] -= q * D[l + 1];
        for (std::size_t i = 0; i < l; ++i) lam[k][i] -= q * lam[l][i];
    };

    std::size_t kmax = 0;
    auto swap_rows = [&](std::size_t k) {
        std::swap(b[k], b[k - 1]);
        for (std::size_t j = 0; j + 1 < k; ++j) std::swap(lam[k][j], lam[k - 1][j]);
        const Integer l = lam[k][k - 1];
        const Integer B = (D[k - 1] * D[k + 1] + l * l) / D[k];
        for (std::size_t i = k + 1; i <= kmax; ++i) {
            const Integer t = lam[i][k];
            lam[i][k] = (D[k + 1] * lam[i][k - 1] - l * t) / D[k];
            lam[i][k - 1] = (B * t + l * lam[i][k]) / D[k + 1];
        }
        D[k] = B;
    };

    std::size_t k = 1;
    while (k < n) {
        if (k > kmax) {
            kmax = k;
            for (std::size_t j = 0; j <= k; ++j) {
                Integer u = dot(b[k], b[j]);
                for (std::size_t i = 0; i < j; ++i) u = (D[i + 1] * u - lam[k][i] * lam[j][i]) / D[i];
                if (j < k)
                    lam[k][j] = u;
                else
                    D[k + 1] = u;
            }
            if (D[k + 1] == 0) throw DependentInputError("lll_reduce: input vectors are linearly dependent");
        }
        red(k, k - 1);
        if (4 * D[k + 1] * D[k - 1] < 3 * D[k] * D[k] - 4 * lam[k][k - 1] * lam[k][k - 1]) {
            swap_rows(k);
            if (k > 1) --k;
            continue;
        }
        for (std::size_t l = k - 1; l-- > 0;) red(k, l);
        ++k;
    }
    return b;
}

// Lovasz condition at delta = 3/4 and size reduction, checked with exact
// rational Gram-Schmidt.
inline bool is_lll_reduced(const IntMat& b) {
    const std::size_t n = b.size();
    if (n == 0) return true;
    const std::size_t d = b[0].size();
    std::vector<std::vector<Rational>> bs(n, std::vector<Rational>(d));
    std::vector<Rational> norm(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t t = 0; t < d; ++t) bs[i][t] = b[i][t];
        for (std::size_t j = 0; j < i; ++j) {
            Rational num = 0;
            for (std::size_t t = 0; t < d; ++t) num += Rational(b[i][t]) * bs[j][t];
            Rational mu = num / norm[j];
            if (abs(mu) > frac(1, 2)) return false;
            for (std::size_t t = 0; t < d; ++t) bs[i][t] -= mu * bs[j][t];
        }
        norm[i] = 0;
        for (std::size_t t = 0; t < d; ++t) norm[i] += bs[i][t] * bs[i][t];
    }
    for (std::size_t i = 1; i < n; ++i) {
        Rational num = 0;
        for (std::size_t t = 0; t < d; ++t) num += Rational(b[i][t]) * bs[i - 1][t];
        Rational mu = num / norm[i - 1];
        if (norm[i] < (frac(3, 4) - mu * mu) * norm[i - 1]) return false;
    }
    return true;
}

// Row-style Hermite normal form of the lattice spanned by the rows; zero rows
// are dropped, pivots are positive and entries above a pivot lie in [0, pivot).
inline IntMat hnf(IntMat a) {
    if (a.empty()) return a;
    const std::size_t m = a.size(), d = a[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < d && r < m; ++c) {
        for (std::size_t i = r + 1; i < m; ++i) {
            if (a[i][c] == 0) continue;
            Integer g, u, v;
            mpz_gcdext(g.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t(), a[r][c].get_mpz_t(), a[i][c].get_mpz_t());
            const Integer x = a[r][c] / g, y = a[i][c] / g;
            for (std::size_t t = c; t < d; ++t) {
                const Integer p = a[r][t], q = a[i][t];
                a[r][t] = u * p + v * q;
                a[i][t] = y * p - x * q;
            }
        }
        if (a[r][c] == 0) continue;
        if (a[r][c] < 0)
            for (std::size_t t = c; t < d; ++t) a[r][t] = -a[r][t];
        for (std::size_t i = 0; i < r; ++i) {
            Integer q;
            mpz_fdiv_q(q.get_mpz_t(), a[i][c].get_mpz_t(), a[r][c].get_mpz_t());
            if (q != 0)
                for (std::size_t t = c; t < d; ++t) a[i][t] -= q * a[r][t];
        }
        ++r;
    }
    a.resize(r);
    return a;
}

inline bool same_lattice(const IntMat& a, const IntMat& b) { return hnf(a) == hnf(b); }

inline IntMat identity_lattice(std::size_t d) {
    IntMat b(d, IntVec(d, 0));
    for (std::size_t i = 0; i < d; ++i) b[i][i] = 1;
    return b;
}

// Replace the basis of L by a basis of {a in L : a . v == 0 (mod p)}, where
// v holds residues mod p. The first row with nonzero residue is the pivot:
// the other rows are shifted into the kernel and the pivot is multiplied by p.
inline void intersect_congruence(IntMat& basis, const std::vector<long>& v, long p) {
    const std::size_t n = basis.size();
    std::vector<long> s(n, 0);
    for (std::size_t j = 0; j < n; ++j) {
        Integer acc = 0;
        for (std::size_t i = 0; i < v.size(); ++i) acc += basis[j][i] * v[i];
        Integer rmod;
        mpz_fdiv_r_ui(rmod.get_mpz_t(), acc.get_mpz_t(), static_cast<unsigned long>(p));
        s[j] = rmod.get_si();
    }
    std::size_t j0 = n;
    for (std::size_t j = 0; j < n; ++j)
        if (s[j] != 0) {
            j0 = j;
            break;
        }
    if (j0 == n) return;
    Integer inv, sj0(s[j0]), pp(p);
    mpz_invert(inv.get_mpz_t(), sj0.get_mpz_t(), pp.get_mpz_t());
    for (std::size_t j = 0; j < n; ++j) {
        if (j == j0 || s[j] == 0) continue;
        Integer t = (Integer(s[j]) * inv) % pp;
        for (std::size_t i = 0; i < basis[j].size(); ++i) basis[j][i] -= t * basis[j0][i];
    }
    for (auto& x : basis[j0]) x *= p;
}

// ---------------------------------------------------------------------------
// Exact rational row reduction with incremental row insertion.

class RationalKernel {
public:
    explicit RationalKernel(std::size_t columns) : d_(columns) {}

    std::size_t columns() const { return d_; }
    std::size_t rank() const { return rows_.size(); }

    // Add a constraint row; returns true when it raised the rank.
    bool add_row(std::vector<Rational> row) {
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            const Rational& f = row[pivots_[r]];
            if (f == 0) continue;
            const Rational c = f;
            for (std::size_t t = 0; t < d_; ++t)
                if (rows_[r][t] != 0) row[t] -= c * rows_[r][t];
        }
        std::size_t piv = d_;
        for (std::size_t t = 0; t < d_; ++t)
            if (row[t] != 0) {
                piv = t;
                break;
            }
        if (piv == d_) return false;
        const Rational inv = 1 / row[piv];
        for (auto& x : row) x *= inv;
        for (auto& other : rows_) {
            const Rational c = other[piv];
            if (c == 0) continue;
            for (std::size_t t = 0; t < d_; ++t)
                if (row[t] != 0) other[t] -= c * row[t];
        }
        rows_.push_back(std::move(row));
        pivots_.push_back(piv);
        return true;
    }

    // Primitive integer basis of the right kernel, one vector per free column.
    IntMat kernel() const {
        std::vector<bool> is_pivot(d_, false);
        for (auto p : pivots_) is_pivot[p] = true;
        IntMat out;
        for (std::size_t f = 0; f < d_; ++f) {
            if (is_pivot[f]) continue;
            std::vector<Rational> v(d_, 0);
            v[f] = 1;
            for (std::size_t r = 0; r < rows_.size(); ++r) v[pivots_[r]] = -rows_[r][f];
            out.push_back(make_primitive(primitive_integer_vector(v)));
        }
        return out;
    }

private:
    std::size_t d_;
    std::vector<std::vector<Rational>> rows_;
    std::vector<std::size_t> pivots_;
};

}  // namespace mtomega

#endif  // MTOMEGA_LATTICE_HPP
