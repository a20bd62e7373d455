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
// Exact rational helpers on top of GMP.

#ifndef MTOMEGA_RATIONAL_HPP
#define MTOMEGA_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "errors.hpp"

namespace mtomega {

using Integer = mpz_class;
using Rational = mpq_class;

// Always "p/q", also for integers ("3/1"), never a decimal point.
inline std::string to_pq_string(const Rational& x) {
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

// Accepts "p/q", "p" and a leading sign.
inline Rational parse_rational(const std::string& s) {
    Rational r;
    if (s.empty() || r.set_str(s, 10) != 0 || r.get_den() == 0)
        throw ParseError("bad rational '" + s + "'");
    r.canonicalize();
    return r;
}

// Canonical p/q from machine integers.
inline Rational frac(long p, long q) {
    if (q == 0) throw DivisionByZero("zero denominator");
    Rational r{Integer(p), Integer(q)};
    r.canonicalize();
    return r;
}

inline Integer binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

inline Integer factorial(long n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

inline Integer ipow(const Integer& b, unsigned long e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

inline Rational rpow(const Rational& b, unsigned long e) {
    Rational r(1);
    for (unsigned long i = 0; i < e; ++i) r *= b;
    return r;
}

inline Integer lcm_of_denominators(const std::vector<Rational>& xs) {
    Integer l = 1;
    for (const auto& x : xs) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den().get_mpz_t());
    return l;
}

// Scale a rational vector to a primitive integer vector whose first
// nonzero entry is positive.
inline std::vector<Integer> primitive_integer_vector(const std::vector<Rational>& xs) {
    Integer l = lcm_of_denominators(xs);
    std::vector<Integer> out;
    out.reserve(xs.size());
    Integer g = 0;
    for (const auto& x : xs) {
        Integer v = x.get_num() * (l / x.get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        out.push_back(v);
    }
    if (g == 0) return out;
    int sign = 0;
    for (const auto& v : out) {
        if (v != 0) {
            sign = sgn(v);
            break;
        }
    }
    for (auto& v : out) v = v / g * sign;
    return out;
}

}  // namespace mtomega

#endif  // MTOMEGA_RATIONAL_HPP
