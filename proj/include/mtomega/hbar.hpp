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
// The algebra H^1-hat freely generated by e_{1hat}, e_1, e_2, ... over Q[hbar],
// its hbar-shuffle product, left multiplication by a, and the specialization rho.

#ifndef MTOMEGA_HBAR_HPP
#define MTOMEGA_HBAR_HPP

#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "index.hpp"
#include "rational.hpp"
#include "words.hpp"

namespace mtomega {

/** One basis monomial hbar^hbar * e_{k_1} ... e_{k_r}. */
struct HbarMonomial {
    int hbar = 0;
    ExtendedIndex eword;

    int weight() const { return hbar + eword.weight(); }

    std::strong_ordering operator<=>(const HbarMonomial& o) const {
        if (auto c = weight() <=> o.weight(); c != 0) return c;
        if (auto c = hbar <=> o.hbar; c != 0) return c;
        if (auto c = eword.length() <=> o.eword.length(); c != 0) return c;
        return eword <=> o.eword;
    }
    bool operator==(const HbarMonomial&) const = default;
};

class HbarSum {
public:
    using Terms = std::map<HbarMonomial, Rational>;

    HbarSum() = default;
    explicit HbarSum(const ExtendedIndex& k, int hbar = 0, const Rational& c = 1) { add(hbar, k, c); }

    static HbarSum one() { return HbarSum(ExtendedIndex()); }
    static HbarSum e(int k) { return HbarSum(ExtendedIndex{k}); }

    void add(int hbar, const ExtendedIndex& k, const Rational& c) {
        if (hbar < 0) throw InternalClosureError("negative hbar exponent in " + k.to_string());
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(HbarMonomial{hbar, k}, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    auto begin() const { return terms_.begin(); }
    auto end() const { return terms_.end(); }
    Rational coeff(int hbar, const ExtendedIndex& k) const {
        auto it = terms_.find(HbarMonomial{hbar, k});
        return it == terms_.end() ? Rational(0) : it->second;
    }

    HbarSum& operator+=(const HbarSum& o) {
        for (const auto& [m, c] : o.terms_) add(m.hbar, m.eword, c);
        return *this;
    }
    HbarSum& operator-=(const HbarSum& o) {
        for (const auto& [m, c] : o.terms_) add(m.hbar, m.eword, -c);
        return *this;
    }
    HbarSum& operator*=(const Rational& s) {
        if (s == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [m, c] : terms_) c *= s;
        return *this;
    }
    friend HbarSum operator+(HbarSum a, const HbarSum& b) { return a += b; }
    friend HbarSum operator-(HbarSum a, const HbarSum& b) { return a -= b; }
    friend HbarSum operator*(HbarSum a, const Rational& s) { return a *= s; }
    friend HbarSum operator*(const Rational& s, HbarSum a) { return a *= s; }
    bool operator==(const HbarSum& o) const { return terms_ == o.terms_; }

    // Concatenation product in the e-letters.
    friend HbarSum operator*(const HbarSum& a, const HbarSum& b) {
        HbarSum out;
        for (const auto& [u, cu] : a.terms_)
            for (const auto& [v, cv] : b.terms_) out.add(u.hbar + v.hbar, u.eword.concat(v.eword), cu * cv);
        return out;
    }

    HbarSum times_hbar(int j = 1) const {
        HbarSum out;
        for (const auto& [m, c] : terms_) out.add(m.hbar + j, m.eword, c);
        return out;
    }
    // e_k * this
    HbarSum prefixed(int k) const {
        HbarSum out;
        for (const auto& [m, c] : terms_) out.add(m.hbar, m.eword.prepended(k), c);
        return out;
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string s;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            if (!first) s += " + ";
            first = false;
            s += "(" + c.get_str() + ")";
            if (m.hbar) s += "*h^" + std::to_string(m.hbar);
            s += "*e" + m.eword.to_string();
        }
        return s;
    }

private:
    Terms terms_;
};

// ---------------------------------------------------------------------------
// Left multiplication by a

inline HbarSum a_mult(int j, const HbarSum& u) {
    if (j < 0) throw RangeError("a_mult needs j >= 0");
    HbarSum cur = u;
    for (int step = 0; step < j; ++step) {
        HbarSum next;
        for (const auto& [m, c] : cur) {
            if (m.eword.empty()) throw EmptyWordError("left multiplication by a on the empty monomial");
            int k = m.eword.front();
            if (k == kHat) {
                // a e_{1hat} = e_2 - hbar e_{1hat}
                next.add(m.hbar, m.eword.with_front(2), c);
                next.add(m.hbar + 1, m.eword, -c);
            } else {
                next.add(m.hbar, m.eword.with_front(k + 1), c);
            }
        }
        cur = std::move(next);
    }
    return cur;
}

// ---------------------------------------------------------------------------
// hbar-shuffle, by recursion on the leading e-letters

namespace detail {

class HbarShuffler {
public:
    HbarSum operator()(const HbarSum& u, const HbarSum& v) {
        HbarSum out;
        for (const auto& [mu, cu] : u)
            for (const auto& [mv, cv] : v)
                out += mono(mu.eword, mv.eword).times_hbar(mu.hbar + mv.hbar) * (cu * cv);
        return out;
    }

    const HbarSum& mono(const ExtendedIndex& u, const ExtendedIndex& v) {
        const auto key = u <= v ? std::make_pair(u, v) : std::make_pair(v, u);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
        HbarSum r = compute(u, v);
        return memo_.emplace(key, std::move(r)).first->second;
    }

private:
    static HbarSum e_prefix(int k, const HbarSum& x) { return x.prefixed(k); }
    // (e_1 - e_{1hat}) x
    static HbarSum c_prefix(const HbarSum& x) { return x.prefixed(1) - x.prefixed(kHat); }

    HbarSum compute(const ExtendedIndex& u, const ExtendedIndex& v) {
        if (u.empty()) return HbarSum(v);
        if (v.empty()) return HbarSum(u);
        const int k1 = u.front(), k2 = v.front();
        auto rank = [](int k) { return k == kHat ? 0 : (k == 1 ? 1 : 2); };
        // Cases covered directly: (1hat,1hat) (1,1) (1,1hat) (1hat,>=2) (>=2,>=2) (1,>=2).
        if ((k1 == kHat && k2 == 1) || (rank(k1) == 2 && rank(k2) < 2)) return HbarSum(mono(v, u));

        const ExtendedIndex u1 = u.tail(), v1 = v.tail();
        if (k1 == kHat && k2 == kHat) {
            HbarSum rest = mono(u1, v1);
            return e_prefix(kHat, mono(u1, v) + mono(u, v1)) + e_prefix(kHat, c_prefix(rest));
        }
        if (k1 == 1 && k2 == 1) {
            HbarSum rest = mono(u1, v1);
            return e_prefix(1, mono(u1, v1.prepended(kHat)) + mono(u1.prepended(kHat), v1)) +
                   e_prefix(1, c_prefix(rest));
        }
        if (k1 == 1 && k2 == kHat) {
            HbarSum rest = mono(u1, v1);
            return e_prefix(1, mono(u1, v)) + e_prefix(kHat, mono(u1.prepended(kHat), v1)) +
                   e_prefix(kHat, c_prefix(rest));
        }
        if (k1 == kHat) {  // k2 >= 2, v = a v''
            const ExtendedIndex v2 = v.with_front(k2 - 1);
            return e_prefix(kHat, mono(u1, v)) + a_mult(1, mono(u, v2)) +
                   e_prefix(kHat, mono(u1, v2)).times_hbar();
        }
        if (k1 == 1) {  // k2 >= 2
            return mono(u.with_front(kHat), v) + c_prefix(mono(u1, v));
        }
        // k1, k2 >= 2
        const ExtendedIndex u2 = u.with_front(k1 - 1), v2 = v.with_front(k2 - 1);
        return a_mult(1, mono(u2, v) + mono(u, v2) + mono(u2, v2).times_hbar());
    }

    std::map<std::pair<ExtendedIndex, ExtendedIndex>, HbarSum> memo_;
};

}  // namespace detail

inline HbarSum shuffle_hbar(const HbarSum& u, const HbarSum& v) {
    detail::HbarShuffler sh;
    return sh(u, v);
}

inline HbarSum shuffle_hbar_all(const std::vector<HbarSum>& factors) {
    detail::HbarShuffler sh;
    HbarSum acc = HbarSum::one();
    for (const auto& f : factors) acc = sh(acc, f);
    return acc;
}

// e_{k_1} sh ... sh e_{k_s}
inline HbarSum shuffle_hbar_of_letters(const std::vector<int>& ks) {
    std::vector<HbarSum> fs;
    fs.reserve(ks.size());
    for (int k : ks) fs.push_back(HbarSum::e(k));
    return shuffle_hbar_all(fs);
}

// ---------------------------------------------------------------------------
// rho: hbar -> 0, e_{1hat} -> y_1, e_k -> y_k

inline WordSum rho(const HbarSum& u) {
    WordSum out;
    for (const auto& [m, c] : u) {
        if (m.hbar > 0) continue;
        std::string letters;
        for (int k : m.eword) {
            int kk = (k == kHat) ? 1 : k;
            letters.append(static_cast<std::size_t>(kk - 1), '0');
            letters += '1';
        }
        out.add(Word::from_letters(std::move(letters)), c);
    }
    return out;
}

}  // namespace mtomega

#endif  // MTOMEGA_HBAR_HPP
