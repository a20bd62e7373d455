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
// MPFR-backed real and complex floating point values.

#ifndef MTOMEGA_BIGFLOAT_HPP
#define MTOMEGA_BIGFLOAT_HPP

#include <mpfr.h>

#include <climits>
#include <cmath>
#include <string>
#include <utility>

#include "mtomega/errors.hpp"
#include "mtomega/rational.hpp"

namespace mtomega {

// Thin RAII wrapper over mpfr_t. Every value carries its own precision;
// binary operations produce the larger of the two operand precisions.
class BigFloat {
public:
    explicit BigFloat(mpfr_prec_t prec = 256) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }
    BigFloat(long x, mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_si(v_, x, MPFR_RNDN); }
    BigFloat(const Rational& x, mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_q(v_, x.get_mpq_t(), MPFR_RNDN); }
    BigFloat(const Integer& x, mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_z(v_, x.get_mpz_t(), MPFR_RNDN); }
    BigFloat(const BigFloat& o) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    BigFloat(BigFloat&& o) noexcept {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_swap(v_, o.v_);
    }
    BigFloat& operator=(const BigFloat& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    BigFloat& operator=(BigFloat&& o) noexcept {
        mpfr_swap(v_, o.v_);
        return *this;
    }
    ~BigFloat() { mpfr_clear(v_); }

    mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
    mpfr_ptr get() { return v_; }
    mpfr_srcptr get() const { return v_; }

    static BigFloat pi(mpfr_prec_t prec) {
        BigFloat r(prec);
        mpfr_const_pi(r.v_, MPFR_RNDN);
        return r;
    }
    static BigFloat zeta(unsigned long s, mpfr_prec_t prec) {
        BigFloat r(prec);
        mpfr_zeta_ui(r.v_, s, MPFR_RNDN);
        return r;
    }
    // 2^e
    static BigFloat exp2(long e, mpfr_prec_t prec) {
        BigFloat r(1, prec);
        mpfr_mul_2si(r.v_, r.v_, e, MPFR_RNDN);
        return r;
    }

    BigFloat& operator+=(const BigFloat& o) {
        widen(o);
        mpfr_add(v_, v_, o.v_, MPFR_RNDN);
        return *this;
    }
    BigFloat& operator-=(const BigFloat& o) {
        widen(o);
        mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
        return *this;
    }
    BigFloat& operator*=(const BigFloat& o) {
        widen(o);
        mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
        return *this;
    }
    BigFloat& operator/=(const BigFloat& o) {
        widen(o);
        mpfr_div(v_, v_, o.v_, MPFR_RNDN);
        return *this;
    }
    BigFloat& operator*=(const Rational& q) {
        mpfr_mul_q(v_, v_, q.get_mpq_t(), MPFR_RNDN);
        return *this;
    }
    BigFloat& operator*=(long x) {
        mpfr_mul_si(v_, v_, x, MPFR_RNDN);
        return *this;
    }
    BigFloat& operator/=(long x) {
        mpfr_div_si(v_, v_, x, MPFR_RNDN);
        return *this;
    }

    friend BigFloat operator+(BigFloat a, const BigFloat& b) { return a += b; }
    friend BigFloat operator-(BigFloat a, const BigFloat& b) { return a -= b; }
    friend BigFloat operator*(BigFloat a, const BigFloat& b) { return a *= b; }
    friend BigFloat operator/(BigFloat a, const BigFloat& b) { return a /= b; }
    friend BigFloat operator*(BigFloat a, const Rational& q) { return a *= q; }
    friend BigFloat operator*(BigFloat a, long x) { return a *= x; }
    BigFloat operator-() const {
        BigFloat r(*this);
        mpfr_neg(r.v_, r.v_, MPFR_RNDN);
        return r;
    }

    friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_less_p(a.v_, b.v_); }
    friend bool operator>(const BigFloat& a, const BigFloat& b) { return mpfr_greater_p(a.v_, b.v_); }
    friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.v_, b.v_); }

    bool is_zero() const { return mpfr_zero_p(v_); }
    int sign() const { return mpfr_sgn(v_); }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    long exponent() const { return is_zero() ? LONG_MIN : static_cast<long>(mpfr_get_exp(v_)); }

    BigFloat abs() const {
        BigFloat r(*this);
        mpfr_abs(r.v_, r.v_, MPFR_RNDN);
        return r;
    }
    BigFloat sqrt() const { return apply(mpfr_sqrt); }
    BigFloat sin() const { return apply(mpfr_sin); }
    BigFloat cos() const { return apply(mpfr_cos); }
    BigFloat log() const { return apply(mpfr_log); }
    BigFloat exp() const { return apply(mpfr_exp); }
    BigFloat round() const {
        BigFloat r(precision());
        mpfr_round(r.v_, v_);
        return r;
    }
    BigFloat pow(unsigned long e) const {
        BigFloat r(precision());
        mpfr_pow_ui(r.v_, v_, e, MPFR_RNDN);
        return r;
    }
    // log10 |x|, or a large negative number for zero
    double log10_abs() const {
        if (is_zero()) return -1e9;
        long e = 0;
        double m = mpfr_get_d_2exp(&e, v_, MPFR_RNDN);
        return std::log10(std::fabs(m)) + static_cast<double>(e) * std::log10(2.0);
    }

    Integer to_integer() const {
        Integer z;
        mpfr_get_z(z.get_mpz_t(), v_, MPFR_RNDN);
        return z;
    }

    // Scientific notation with `digits` significant digits.
    std::string to_string(int digits) const {
        if (digits < 1) digits = 1;
        char* buf = nullptr;
        mpfr_asprintf(&buf, "%.*Re", digits - 1, v_);
        std::string s(buf);
        mpfr_free_str(buf);
        return s;
    }

    // Fixed notation with `decimals` digits after the point.
    std::string to_fixed(int decimals) const {
        char* buf = nullptr;
        mpfr_asprintf(&buf, "%.*Rf", decimals, v_);
        std::string s(buf);
        mpfr_free_str(buf);
        return s;
    }

    static BigFloat parse(const std::string& s, mpfr_prec_t prec) {
        BigFloat r(prec);
        if (mpfr_set_str(r.v_, s.c_str(), 10, MPFR_RNDN) != 0) throw ParseError("not a decimal number: " + s);
        return r;
    }

private:
    void widen(const BigFloat& o) {
        if (mpfr_get_prec(o.v_) > mpfr_get_prec(v_)) mpfr_prec_round(v_, mpfr_get_prec(o.v_), MPFR_RNDN);
    }
    template <class F>
    BigFloat apply(F f) const {
        BigFloat r(precision());
        f(r.v_, v_, MPFR_RNDN);
        return r;
    }

    mpfr_t v_;
};

struct BigComplex {
    BigFloat re;
    BigFloat im;

    explicit BigComplex(mpfr_prec_t prec = 256) : re(prec), im(prec) {}
    BigComplex(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {}

    // cos t + i sin t
    static BigComplex expi(const BigFloat& t) { return {t.cos(), t.sin()}; }

    BigComplex& operator+=(const BigComplex& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    BigComplex& operator-=(const BigComplex& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    friend BigComplex operator+(BigComplex a, const BigComplex& b) { return a += b; }
    friend BigComplex operator-(BigComplex a, const BigComplex& b) { return a -= b; }
    friend BigComplex operator*(const BigComplex& a, const BigComplex& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    BigComplex& operator*=(const BigComplex& o) { return *this = *this * o; }
    BigComplex& operator*=(const BigFloat& x) {
        re *= x;
        im *= x;
        return *this;
    }

    BigFloat abs() const { return (re * re + im * im).sqrt(); }
};

}  // namespace mtomega

#endif  // MTOMEGA_BIGFLOAT_HPP
