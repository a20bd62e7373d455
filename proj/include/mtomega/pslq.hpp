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
// PSLQ integer relation detection over MPFR reals.

#ifndef MTOMEGA_PSLQ_HPP
#define MTOMEGA_PSLQ_HPP

#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "mtomega/bigfloat.hpp"
#include "mtomega/errors.hpp"
#include "mtomega/lattice.hpp"
#include "mtomega/numeric.hpp"

namespace mtomega {

struct PslqOptions {
    Integer max_height = 1024;
    long max_iterations = 100000;
};

namespace detail {

// |sum a_i x_i| at the precision of the inputs
inline BigFloat relation_residual(const std::vector<BigFloat>& xs, const IntVec& a) {
    BigFloat s(xs[0].precision());
    for (std::size_t i = 0; i < xs.size(); ++i)
        if (a[i] != 0) s += xs[i] * BigFloat(a[i], xs[i].precision());
    return s.abs();
}

// Core PSLQ (Ferguson-Bailey) on values rounded to `digits` digits. Returns
// the first column of B that zeroes the y-vector, or nothing once the proven
// lower bound on relation norms exceeds the height bound.
inline std::optional<IntVec> pslq_core(const std::vector<BigFloat>& in, int digits, const PslqOptions& opt) {
    const std::size_t n = in.size();
    const mpfr_prec_t prec = bits_for_digits(digits + 10);
    std::vector<BigFloat> x;
    for (const auto& v : in) {
        BigFloat t(prec);
        mpfr_set(t.get(), v.get(), MPFR_RNDN);
        x.push_back(std::move(t));
    }
    const BigFloat gamma = (BigFloat(4, prec) / BigFloat(3, prec)).sqrt();
    const double eps_log10 = -digits + 5.0;

    std::vector<BigFloat> s(n, BigFloat(prec));
    {
        BigFloat acc(prec);
        for (std::size_t j = n; j-- > 0;) {
            acc += x[j] * x[j];
            s[j] = acc.sqrt();
        }
    }
    if (s[0].is_zero()) throw PrecisionError("pslq: all inputs vanish");
    const BigFloat t0 = s[0];
    std::vector<BigFloat> y(n, BigFloat(prec));
    for (std::size_t j = 0; j < n; ++j) {
        y[j] = x[j] / t0;
        s[j] /= t0;
    }
    // an exactly zero input is a relation on its own
    for (std::size_t j = 0; j < n; ++j)
        if (y[j].log10_abs() < eps_log10) {
            IntVec a(n, 0);
            a[j] = 1;
            return a;
        }

    std::vector<std::vector<BigFloat>> H(n, std::vector<BigFloat>(n - 1, BigFloat(prec)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j + 1 < n && j <= i; ++j) {
            if (i == j)
                H[i][j] = s[j + 1] / s[j];
            else
                H[i][j] = -(y[i] * y[j]) / (s[j] * s[j + 1]);
        }
    IntMat A = identity_lattice(n), B = identity_lattice(n);

    auto reduce = [&](std::size_t from) {
        for (std::size_t i = from; i < n; ++i)
            for (std::size_t j = std::min(i, n - 1); j-- > 0;) {
                if (H[j][j].is_zero()) continue;
                const Integer t = (H[i][j] / H[j][j]).round().to_integer();
                if (t == 0) continue;
                const BigFloat tf(t, prec);
                y[j] += tf * y[i];
                for (std::size_t k = 0; k <= j; ++k) H[i][k] -= tf * H[j][k];
                for (std::size_t k = 0; k < n; ++k) {
                    A[i][k] -= t * A[j][k];
                    B[k][j] += t * B[k][i];
                }
            }
    };
    reduce(1);

    for (long iter = 0; iter < opt.max_iterations; ++iter) {
        // pick m maximizing gamma^{m+1} |H_mm|
        std::size_t m = 0;
        BigFloat best(prec), g = gamma;
        for (std::size_t i = 0; i + 1 < n; ++i) {
            BigFloat v = g * H[i][i].abs();
            if (v > best) {
                best = v;
                m = i;
            }
            g *= gamma;
        }
        std::swap(y[m], y[m + 1]);
        std::swap(H[m], H[m + 1]);
        std::swap(A[m], A[m + 1]);
        for (std::size_t k = 0; k < n; ++k) std::swap(B[k][m], B[k][m + 1]);
        if (m + 2 < n) {
            const BigFloat a = H[m][m], b = H[m][m + 1];
            const BigFloat t = (a * a + b * b).sqrt();
            const BigFloat c1 = a / t, c2 = b / t;
            for (std::size_t i = m; i < n; ++i) {
                const BigFloat t3 = H[i][m], t4 = H[i][m + 1];
                H[i][m] = c1 * t3 + c2 * t4;
                H[i][m + 1] = c1 * t4 - c2 * t3;
            }
        }
        reduce(m + 1);

        for (std::size_t j = 0; j < n; ++j) {
            if (y[j].log10_abs() >= eps_log10) continue;
            IntVec a(n);
            for (std::size_t k = 0; k < n; ++k) a[k] = B[k][j];
            if (is_zero_vector(a)) continue;
            return make_primitive(a);
        }
        // any relation has norm >= 1 / max |H_jj|
        BigFloat hmax(prec);
        for (std::size_t j = 0; j + 1 < n; ++j)
            if (H[j][j].abs() > hmax) hmax = H[j][j].abs();
        if (hmax.is_zero()) return std::nullopt;
        const double bound = 1.0 / hmax.to_double();
        if (bound > opt.max_height.get_d() * std::sqrt(static_cast<double>(n))) return std::nullopt;
        // entries of A beyond the working precision are meaningless
        for (const auto& row : A)
            if (height(row).get_d() > std::pow(10.0, digits / 2.0)) return std::nullopt;
    }
    return std::nullopt;
}

}  // namespace detail

// Integer relation search: a primitive a with |sum a_i x_i| < 10^{-digits/2}
// and height <= max_height, or nothing. The search runs on the values rounded
// to `digits` digits; a candidate is accepted only if it also vanishes to
// 1.5 * digits digits on the full inputs, which must therefore be certified
// to at least 1.5 * digits.
inline std::optional<IntVec> pslq(const std::vector<BigReal>& xs, int digits, const PslqOptions& opt = {}) {
    if (xs.size() < 2) throw RangeError("pslq needs at least two values");
    if (digits < 10) throw PrecisionError("pslq needs at least 10 digits");
    const int verify = (3 * digits + 1) / 2;
    for (const auto& x : xs)
        if (x.certified_digits < verify)
            throw PrecisionError("pslq input certified to " + std::to_string(x.certified_digits) + " digits, need " +
                                 std::to_string(verify));
    std::vector<BigFloat> full;
    for (const auto& x : xs) full.push_back(x.value);
    auto a = detail::pslq_core(full, digits, opt);
    if (!a) return std::nullopt;
    if (height(*a) > opt.max_height) return std::nullopt;
    // the residual may carry log10(sum |a_i x_i|) digits of cancellation
    double scale = 0;
    for (std::size_t i = 0; i < full.size(); ++i)
        scale = std::max(scale, std::log10(std::fabs((*a)[i].get_d()) + 1.0) + std::max(0.0, full[i].log10_abs()));
    if (detail::relation_residual(full, *a).log10_abs() > -verify + scale + 2) return std::nullopt;
    return a;
}

}  // namespace mtomega

#endif  // MTOMEGA_PSLQ_HPP
