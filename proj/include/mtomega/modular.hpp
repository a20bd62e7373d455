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
// Arithmetic modulo primes: multiple harmonic sums, finite multiple omega
// values, Bernoulli numbers and residue tables.

#ifndef MTOMEGA_MODULAR_HPP
#define MTOMEGA_MODULAR_HPP

#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "errors.hpp"
#include "index.hpp"
#include "rational.hpp"
#include "words.hpp"

namespace mtomega {

struct Residue {
    std::int64_t prime = 0;
    std::int64_t value = 0;
    bool operator==(const Residue&) const = default;
};

using ResidueVector = std::vector<Residue>;

// ---------------------------------------------------------------------------
// Primes and F_p helpers

inline bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline std::vector<std::int64_t> primes_between(std::int64_t lo, std::int64_t hi) {
    std::vector<std::int64_t> out;
    for (std::int64_t n = std::max<std::int64_t>(lo, 2); n <= hi; ++n)
        if (is_prime(n)) out.push_back(n);
    return out;
}

// The first `count` primes strictly greater than `above`.
inline std::vector<std::int64_t> primes_above(std::int64_t above, std::size_t count) {
    std::vector<std::int64_t> out;
    for (std::int64_t n = above + 1; out.size() < count; ++n)
        if (is_prime(n)) out.push_back(n);
    return out;
}

inline std::int64_t mod_reduce(std::int64_t a, std::int64_t p) {
    a %= p;
    return a < 0 ? a + p : a;
}

inline std::int64_t mod_pow(std::int64_t b, std::int64_t e, std::int64_t p) {
    std::int64_t r = 1 % p;
    b = mod_reduce(b, p);
    while (e > 0) {
        if (e & 1) r = static_cast<std::int64_t>(static_cast<__int128>(r) * b % p);
        b = static_cast<std::int64_t>(static_cast<__int128>(b) * b % p);
        e >>= 1;
    }
    return r;
}

inline std::int64_t mod_inv(std::int64_t a, std::int64_t p) {
    a = mod_reduce(a, p);
    if (a == 0) throw DivisionByZero("no inverse of 0 modulo " + std::to_string(p));
    return mod_pow(a, p - 2, p);
}

inline void require_odd_prime(std::int64_t p) {
    if (p < 3 || !is_prime(p)) throw RangeError(std::to_string(p) + " is not an odd prime");
    if (p >= (std::int64_t(1) << 31)) throw RangeError("prime too large for word-size arithmetic");
}

// A rational number in F_p; DenominatorError if p divides the denominator.
inline std::int64_t rational_mod(const Rational& x, std::int64_t p) {
    Integer pp(static_cast<long>(p));
    Integer num = x.get_num() % pp, den = x.get_den() % pp;
    long n = num.get_si(), d = den.get_si();
    if (d == 0) throw DenominatorError("denominator " + x.get_den().get_str() + " divisible by " + std::to_string(p));
    return mod_reduce(static_cast<std::int64_t>(n), p) * mod_inv(d, p) % p;
}

// m^{-k} mod p for m = 0..p-1 (entry 0 unused).
inline std::vector<std::int64_t> inverse_powers(int k, std::int64_t p) {
    std::vector<std::int64_t> inv(static_cast<std::size_t>(p), 0);
    if (p > 1) inv[1] = 1;
    for (std::int64_t m = 2; m < p; ++m)
        inv[static_cast<std::size_t>(m)] = (p - (p / m) * inv[static_cast<std::size_t>(p % m)] % p) % p;
    std::vector<std::int64_t> out(static_cast<std::size_t>(p), 0);
    for (std::int64_t m = 1; m < p; ++m) out[static_cast<std::size_t>(m)] = mod_pow(inv[static_cast<std::size_t>(m)], k, p);
    return out;
}

// ---------------------------------------------------------------------------
// Multiple harmonic sums H_p(k) = sum_{p > m_1 > ... > m_r > 0} prod m_a^{-k_a}

inline Residue hsum_mod(const Index& k, std::int64_t p) {
    require_odd_prime(p);
    const std::size_t r = k.length();
    // acc[m] = sum over m > m_{a+1} > ... of the inner factors, built from the innermost part out
    std::vector<std::int64_t> inner(static_cast<std::size_t>(p) + 1, 1);
    for (std::size_t a = r; a-- > 0;) {
        auto f = inverse_powers(k[a], p);
        std::vector<std::int64_t> next(static_cast<std::size_t>(p) + 1, 0);
        std::int64_t run = 0;
        for (std::int64_t m = 1; m <= p; ++m) {
            next[static_cast<std::size_t>(m)] = run;  // sum over m_a < m
            if (m < p) run = (run + f[static_cast<std::size_t>(m)] * inner[static_cast<std::size_t>(m)]) % p;
        }
        inner = std::move(next);
    }
    // inner[p] is the sum with all variables below p
    return {p, r == 0 ? 1 % p : inner[static_cast<std::size_t>(p)]};
}

// ---------------------------------------------------------------------------
// Finite multiple omega values

namespace detail {

// Truncated convolution of coefficient arrays indexed 0..p.
inline std::vector<std::int64_t> convolve_mod(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b,
                                              std::int64_t p) {
    const std::size_t n = a.size();
    std::vector<std::int64_t> c(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i] == 0) continue;
        const std::int64_t ai = a[i];
        for (std::size_t j = 0; i + j < n; ++j) c[i + j] = (c[i + j] + ai * b[j]) % p;
    }
    return c;
}

}  // namespace detail

/** omega_p computations at one prime, sharing convolutions of common prefixes. */
class OmegaModEngine {
public:
    explicit OmegaModEngine(std::int64_t p) : p_(p) { require_odd_prime(p); }

    std::int64_t prime() const { return p_; }

    std::int64_t omega(const Index& k) {
        if (k.length() < 2) throw LengthError("omega_mod needs length >= 2, got " + k.to_string());
        Index s = k.sorted_descending();
        const std::vector<std::int64_t>& head = prefix(s.slice(0, s.length() - 1));
        const std::vector<std::int64_t>& last = single(s[s.length() - 1]);
        std::int64_t total = 0;
        for (std::int64_t m = 1; m < p_; ++m)
            total = (total + head[static_cast<std::size_t>(p_ - m)] * last[static_cast<std::size_t>(m)]) % p_;
        return total;
    }

private:
    const std::vector<std::int64_t>& single(int k) {
        auto it = singles_.find(k);
        if (it != singles_.end()) return it->second;
        std::vector<std::int64_t> f = inverse_powers(k, p_);
        f.push_back(0);  // index p
        f[0] = 0;
        return singles_.emplace(k, std::move(f)).first->second;
    }
    const std::vector<std::int64_t>& prefix(const Index& k) {
        auto it = prefixes_.find(k);
        if (it != prefixes_.end()) return it->second;
        std::vector<std::int64_t> v;
        if (k.length() == 1)
            v = single(k[0]);
        else
            v = detail::convolve_mod(prefix(k.slice(0, k.length() - 1)), single(k[k.length() - 1]), p_);
        return prefixes_.emplace(k, std::move(v)).first->second;
    }

    std::int64_t p_;
    std::map<int, std::vector<std::int64_t>> singles_;
    std::map<Index, std::vector<std::int64_t>> prefixes_;
};

// sum_{m_1 + ... + m_r = p} prod m_a^{-k_a}  mod p
inline Residue omega_mod(const Index& k, std::int64_t p) {
    OmegaModEngine eng(p);
    return {p, eng.omega(k)};
}

// zeta_A on words: w -> H_p(index of w), extended linearly.
inline Residue zeta_word_mod(const WordSum& u, std::int64_t p) {
    require_odd_prime(p);
    std::int64_t total = 0;
    for (const auto& [w, c] : u) {
        if (!w.in_h1()) throw NotInH1Error("zeta_word_mod: word " + w.to_string() + " is not in h^1");
        std::int64_t cv = rational_mod(c, p);
        total = (total + cv * hsum_mod(index_of_word(w), p).value) % p;
    }
    return {p, total};
}

// ---------------------------------------------------------------------------
// Bernoulli numbers modulo p

/** B_0, ..., B_{p-2} reduced modulo p, B_1 = -1/2. */
class BernoulliModP {
public:
    explicit BernoulliModP(std::int64_t p) : p_(p) {
        require_odd_prime(p);
        const std::size_t n = static_cast<std::size_t>(p);
        std::vector<std::int64_t> fact(n, 1), inv_fact(n, 1);
        for (std::size_t i = 1; i < n; ++i) fact[i] = fact[i - 1] * static_cast<std::int64_t>(i) % p;
        inv_fact[n - 1] = mod_inv(fact[n - 1], p);
        for (std::size_t i = n - 1; i > 0; --i) inv_fact[i - 1] = inv_fact[i] * static_cast<std::int64_t>(i) % p;
        auto binom = [&](std::size_t a, std::size_t b) { return fact[a] * inv_fact[b] % p * inv_fact[a - b] % p; };
        b_.assign(n - 1, 0);
        b_[0] = 1;
        // sum_{j=0}^{m} C(m+1, j) B_j = 0 for m >= 1
        for (std::size_t m = 1; m + 1 < n; ++m) {
            std::int64_t s = 0;
            for (std::size_t j = 0; j < m; ++j) s = (s + binom(m + 1, j) * b_[j]) % p;
            b_[m] = mod_reduce(-s, p) * mod_inv(static_cast<std::int64_t>(m + 1), p) % p;
        }
    }
    std::int64_t operator[](std::size_t i) const { return b_.at(i); }

private:
    std::int64_t p_;
    std::vector<std::int64_t> b_;
};

// B_{p-k} / k mod p for 2 <= k <= p - 2 (B_{p-k} is p-integral there)
inline Residue bern_div_mod(int k, std::int64_t p) {
    require_odd_prime(p);
    if (k < 2 || k > p - 2)
        throw RangeError("bern_div_mod needs 2 <= k <= p-2, got k=" + std::to_string(k) + " p=" + std::to_string(p));
    BernoulliModP b(p);
    return {p, b[static_cast<std::size_t>(p - k)] * mod_inv(k, p) % p};
}

// ---------------------------------------------------------------------------
// Residue tables

using Generator = std::variant<Index, WordSum>;

inline std::string generator_label(const Generator& g) {
    if (const Index* k = std::get_if<Index>(&g)) return k->to_string();
    return std::get<WordSum>(g).to_string();
}

struct ResidueTable {
    std::vector<std::string> labels;
    std::vector<std::int64_t> primes;          // columns kept
    std::vector<std::int64_t> dropped_primes;  // columns removed by a denominator collision
    std::vector<std::vector<std::int64_t>> values;  // values[row][col]

    std::string to_csv() const {
        std::ostringstream os;
        os << "index";
        for (auto p : primes) os << ',' << p;
        os << '\n';
        for (std::size_t i = 0; i < labels.size(); ++i) {
            os << labels[i];
            for (auto v : values[i]) os << ',' << v;
            os << '\n';
        }
        return os.str();
    }
};

// Rows are omega_p for Index generators and zeta_A for WordSum generators.
inline ResidueTable residue_table(const std::vector<Generator>& generators, const std::vector<std::int64_t>& primes) {
    ResidueTable t;
    for (const auto& g : generators) t.labels.push_back(generator_label(g));
    std::vector<std::vector<std::int64_t>> cols;
    for (auto p : primes) {
        OmegaModEngine eng(p);
        std::vector<std::int64_t> col;
        bool ok = true;
        for (const auto& g : generators) {
            try {
                if (const Index* k = std::get_if<Index>(&g))
                    col.push_back(eng.omega(*k));
                else
                    col.push_back(zeta_word_mod(std::get<WordSum>(g), p).value);
            } catch (const DenominatorError&) {
                ok = false;
                break;
            }
        }
        if (ok) {
            t.primes.push_back(p);
            cols.push_back(std::move(col));
        } else {
            t.dropped_primes.push_back(p);
        }
    }
    t.values.assign(generators.size(), {});
    for (std::size_t i = 0; i < generators.size(); ++i)
        for (const auto& col : cols) t.values[i].push_back(col[i]);
    return t;
}

}  // namespace mtomega

#endif  // MTOMEGA_MODULAR_HPP
