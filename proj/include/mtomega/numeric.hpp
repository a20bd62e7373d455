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
// Numerical multiple zeta, Mordell-Tornheim, symmetric and limit omega values,
// and floating point evaluation of omega_n at e^{2 pi i / n}.

#ifndef MTOMEGA_NUMERIC_HPP
#define MTOMEGA_NUMERIC_HPP

#include <algorithm>
#include <cmath>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "mtomega/bigfloat.hpp"
#include "mtomega/errors.hpp"
#include "mtomega/index.hpp"
#include "mtomega/words.hpp"

namespace mtomega {

inline constexpr int kGuardDigits = 15;
// Extra internal digits reserved for coefficient growth in linear combinations.
inline constexpr int kHeadroomDigits = 10;

inline mpfr_prec_t bits_for_digits(int digits) {
    return static_cast<mpfr_prec_t>(std::ceil(digits * 3.3219280948873623)) + 8;
}

struct BigReal {
    BigFloat value;
    int certified_digits = 0;

    // Scientific notation with the certified number of significant digits.
    std::string to_string() const { return value.to_string(certified_digits); }
};

// ---------------------------------------------------------------------------
// Multiple zeta values by Hoelder convolution at 1/2.
//
// For an admissible word c_1 ... c_n read from the upper end of the iterated
// integral, zeta(w) = sum_j Li(cbar_j ... cbar_1)(1/2) Li(c_{j+1} ... c_n)(1/2)
// with cbar swapping x0 and x1. Each factor is a multiple polylogarithm series
// at 1/2, so all series converge like 2^{-m}.

class MzvEvaluator {
public:
    explicit MzvEvaluator(int digits)
        : digits_(digits),
          internal_(digits + kGuardDigits + kHeadroomDigits),
          prec_(bits_for_digits(internal_)) {
        if (digits < 1) throw PrecisionError("requested digits must be positive");
    }

    int digits() const { return digits_; }
    mpfr_prec_t precision() const { return prec_; }

    BigFloat zeta(const Word& w) {
        if (w.empty()) return BigFloat(1, prec_);
        if (!w.in_h0()) throw NotAdmissibleError("word " + w.to_string() + " is not admissible");
        auto it = zeta_memo_.find(w.letters());
        if (it != zeta_memo_.end()) return it->second;
        const std::string& c = w.letters();
        const std::size_t n = c.size();
        BigFloat total(prec_);
        for (std::size_t j = 0; j <= n; ++j) {
            std::string upper;
            for (std::size_t i = j; i-- > 0;) upper += c[i] == '0' ? '1' : '0';
            total += li_half(upper) * li_half(c.substr(j));
        }
        return zeta_memo_.emplace(c, std::move(total)).first->second;
    }

    BigFloat operator()(const WordSum& u) {
        Rational l1 = 0;
        std::size_t longest = 0;
        for (const auto& [w, c] : u) {
            l1 += abs(c);
            longest = std::max(longest, w.size());
        }
        // each Li factor at 1/2 lies in [0, 1); the truncation error per factor
        // is below 10^{-internal}, so the sum loses at most log10(2 l1 (n + 1))
        const double loss = std::log10(2.0 * (l1.get_d() + 1.0) * static_cast<double>(longest + 1));
        if (loss > kHeadroomDigits)
            throw PrecisionError("coefficients too large for the reserved headroom");
        BigFloat total(prec_);
        for (const auto& [w, c] : u) total += zeta(w) * c;
        return total;
    }

private:
    // Li_{s_1,...,s_d}(1/2) for a word ending in x1 (the empty word gives 1).
    const BigFloat& li_half(const std::string& letters) {
        auto it = li_memo_.find(letters);
        if (it != li_memo_.end()) return it->second;
        std::vector<int> s;
        int run = 0;
        for (char ch : letters) {
            ++run;
            if (ch == '1') {
                s.push_back(run);
                run = 0;
            }
        }
        BigFloat value(1, prec_);
        if (!s.empty()) {
            const int M = terms_for_depth(static_cast<int>(s.size()));
            ensure_tables(M, *std::max_element(s.begin(), s.end()));
            // inner[m] = sum over m > m_{a+1} > ... > m_d of the deeper terms
            std::vector<BigFloat> inner(static_cast<std::size_t>(M) + 1, BigFloat(1, prec_));
            for (std::size_t a = s.size(); a-- > 1;) {
                std::vector<BigFloat> next(static_cast<std::size_t>(M) + 1, BigFloat(prec_));
                BigFloat acc(prec_);
                for (int m = 1; m <= M; ++m) {
                    next[static_cast<std::size_t>(m)] = acc;
                    acc += inv_pow(s[a], m) * inner[static_cast<std::size_t>(m)];
                }
                inner = std::move(next);
            }
            value = BigFloat(prec_);
            for (int m = 1; m <= M; ++m)
                value += inv_pow(s[0], m) * inner[static_cast<std::size_t>(m)] * half_pow_[static_cast<std::size_t>(m)];
        }
        return li_memo_.emplace(letters, std::move(value)).first->second;
    }

    // Smallest M with 2^{1-M} (2 + ln M)^{d-1} < 10^{-internal}.
    int terms_for_depth(int d) {
        auto it = terms_.find(d);
        if (it != terms_.end()) return it->second;
        const double target = -internal_ * std::log2(10.0);
        int M = 8;
        while (1.0 - M + (d - 1) * std::log2(2.0 + std::log(static_cast<double>(M))) >= target) ++M;
        return terms_[d] = M;
    }

    void ensure_tables(int M, int smax) {
        if (static_cast<int>(half_pow_.size()) <= M) {
            half_pow_.assign(static_cast<std::size_t>(M) + 1, BigFloat(prec_));
            for (int m = 0; m <= M; ++m) half_pow_[static_cast<std::size_t>(m)] = BigFloat::exp2(-m, prec_);
            inv_pow_.clear();
        }
        while (static_cast<int>(inv_pow_.size()) <= smax) {
            const unsigned long s = inv_pow_.size();
            std::vector<BigFloat> row(half_pow_.size(), BigFloat(prec_));
            for (std::size_t m = 1; m < row.size(); ++m) {
                BigFloat one(1, prec_);
                row[m] = one / BigFloat(static_cast<long>(m), prec_).pow(s);
            }
            inv_pow_.push_back(std::move(row));
        }
    }

    const BigFloat& inv_pow(int s, int m) const {
        return inv_pow_[static_cast<std::size_t>(s)][static_cast<std::size_t>(m)];
    }

    int digits_;
    int internal_;
    mpfr_prec_t prec_;
    std::map<int, int> terms_;
    std::vector<BigFloat> half_pow_;
    std::vector<std::vector<BigFloat>> inv_pow_;
    std::map<std::string, BigFloat> li_memo_;
    std::map<std::string, BigFloat> zeta_memo_;
};

inline BigReal mzv_num(const WordSum& u, int digits) {
    MzvEvaluator ev(digits);
    return {ev(u), digits};
}

inline BigReal mzv_num(const Word& w, int digits) { return mzv_num(WordSum(w), digits); }

// ---------------------------------------------------------------------------
// Values built on the MZV map. A NumericContext shares one evaluator, so a
// batch of values at the same accuracy reuses every polylogarithm series.

class NumericContext {
public:
    explicit NumericContext(int digits) : ev_(digits) {}

    int digits() const { return ev_.digits(); }
    mpfr_prec_t precision() const { return ev_.precision(); }
    MzvEvaluator& evaluator() { return ev_; }

    BigFloat mzv(const WordSum& u) { return ev_(u); }

    // zeta^MT(k_1, ..., k_r; l)
    BigFloat mt(const Index& k, int l) {
        if (k.empty()) throw LengthError("mt_num needs a nonempty index");
        if (l < 1) throw RangeError("mt_num needs l >= 1");
        return ev_(mt_word(k.appended(l)));
    }

    // sum_a (-1)^{k_a} zeta^MT(k without a; k_a)
    BigFloat omega_limit_mt(const Index& k) {
        require_length(k);
        BigFloat total(precision());
        for (std::size_t a = 0; a < k.length(); ++a) {
            BigFloat v = mt(k.without(a), k[a]);
            if (k[a] % 2 != 0) v = -v;
            total += v;
        }
        return total;
    }

    // (-1)^{k_r} zeta_S applied to mt_word(k), i.e. the MZV map on reg(phi(mt_word(k)))
    BigFloat omega_limit_symmetric(const Index& k) {
        require_length(k);
        BigFloat v = ev_(reg_shuffle0(phi(mt_word(k))));
        return k[k.length() - 1] % 2 == 0 ? v : -v;
    }

    BigFloat omega_limit(const Index& k) {
        Index key = k.sorted_descending();
        auto it = omega_memo_.find(key);
        if (it != omega_memo_.end()) return it->second;
        BigFloat a = omega_limit_mt(key);
        BigFloat b = omega_limit_symmetric(key);
        if ((a - b).log10_abs() > -digits())
            throw InternalClosureError("the two routes to Omega(" + k.to_string() + ") disagree");
        return omega_memo_.emplace(key, std::move(a)).first->second;
    }

    BigFloat zeta_s(const Index& k) { return ev_(zeta_s_word(k)); }

private:
    static void require_length(const Index& k) {
        if (k.length() < 2) throw LengthError("Omega needs length >= 2, got " + k.to_string());
    }

    MzvEvaluator ev_;
    std::map<Index, BigFloat> omega_memo_;
};

inline BigReal mt_num(const Index& k, int l, int digits) {
    NumericContext ctx(digits);
    return {ctx.mt(k, l), digits};
}

inline BigReal omega_limit_num(const Index& k, int digits) {
    NumericContext ctx(digits);
    return {ctx.omega_limit(k), digits};
}

inline BigReal zeta_s_num(const Index& k, int digits) {
    NumericContext ctx(digits);
    return {ctx.zeta_s(k), digits};
}

// ---------------------------------------------------------------------------
// omega_n(k; e^{2 pi i / n}) in floating point

// With q = e^{2 pi i / n}, 1/[m] = e^{-pi i (m-1)/n} sin(pi/n) / sin(m pi/n), so
// F_k(m) = q^{(k-1)m} / [m]^k = e^{pi i (km - 2m + k)/n} (sin(pi/n) / sin(m pi/n))^k.
inline BigComplex omega_circle_num(const Index& k, int n, int digits) {
    const std::size_t r = k.length();
    if (r < 2) throw LengthError("omega_circle_num needs length >= 2, got " + k.to_string());
    if (n < 2) throw RangeError("omega_circle_num needs n >= 2");
    if (digits < 1) throw PrecisionError("requested digits must be positive");
    const mpfr_prec_t prec = bits_for_digits(digits + kGuardDigits);
    if (static_cast<int>(r) > n) return BigComplex(prec);
    const BigFloat pi = BigFloat::pi(prec);
    const BigFloat pin = pi / BigFloat(static_cast<long>(n), prec);
    const BigFloat s1 = pin.sin();
    std::vector<BigFloat> ratio(static_cast<std::size_t>(n), BigFloat(prec));
    for (int m = 1; m < n; ++m) ratio[static_cast<std::size_t>(m)] = s1 / (pin * static_cast<long>(m)).sin();

    auto F = [&](int kk, int m) {
        const long twice_n = 2L * n;
        long phase = (static_cast<long>(kk) * m - 2L * m + kk) % twice_n;
        if (phase < 0) phase += twice_n;
        BigComplex z = BigComplex::expi(pin * phase);
        z *= ratio[static_cast<std::size_t>(m)].pow(static_cast<unsigned long>(kk));
        return z;
    };

    // conv[s] = sum over m_1 + ... + m_a = s of the product of the first a factors
    std::vector<BigComplex> conv(static_cast<std::size_t>(n) + 1, BigComplex(prec));
    for (int m = 1; m < n; ++m) conv[static_cast<std::size_t>(m)] = F(k[0], m);
    for (std::size_t a = 1; a < r; ++a) {
        std::vector<BigComplex> f(static_cast<std::size_t>(n), BigComplex(prec));
        for (int m = 1; m < n; ++m) f[static_cast<std::size_t>(m)] = F(k[a], m);
        std::vector<BigComplex> next(static_cast<std::size_t>(n) + 1, BigComplex(prec));
        const int lo = static_cast<int>(a) + 1;
        for (int s = lo; s <= n; ++s) {
            if (a + 1 == r && s != n) continue;
            BigComplex acc(prec);
            for (int m = 1; m <= s - static_cast<int>(a); ++m)
                acc += conv[static_cast<std::size_t>(s - m)] * f[static_cast<std::size_t>(m)];
            next[static_cast<std::size_t>(s)] = std::move(acc);
        }
        conv = std::move(next);
    }
    return conv[static_cast<std::size_t>(n)];
}

}  // namespace mtomega

#endif  // MTOMEGA_NUMERIC_HPP
