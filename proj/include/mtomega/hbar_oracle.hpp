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
// Reference implementation of the hbar-shuffle on raw words in a, b.
// Elements of H^1-hat are expanded letter by letter, shuffled with the
// defining recursion, and rewritten in the e-basis. Slow; meant for checks.

#ifndef MTOMEGA_HBAR_ORACLE_HPP
#define MTOMEGA_HBAR_ORACLE_HPP

#include <map>
#include <tuple>
#include <vector>
#include <string>
#include <utility>

#include "errors.hpp"
#include "hbar.hpp"
#include "rational.hpp"

namespace mtomega::raw {

// (hbar exponent, word over 'a','b') -> coefficient
using RawSum = std::map<std::pair<int, std::string>, Rational>;

inline void add_to(RawSum& s, int h, const std::string& w, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = s.try_emplace({h, w}, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) s.erase(it);
    }
}

inline RawSum expand_letter(int k) {
    RawSum s;
    if (k == kHat) {
        add_to(s, 0, "ab", 1);
    } else {
        add_to(s, 0, std::string(static_cast<std::size_t>(k), 'a') + "b", 1);
        add_to(s, 1, std::string(static_cast<std::size_t>(k - 1), 'a') + "b", 1);
    }
    return s;
}

inline RawSum expand(const HbarSum& u) {
    RawSum out;
    for (const auto& [m, c] : u) {
        RawSum cur;
        add_to(cur, m.hbar, "", c);
        for (int k : m.eword) {
            RawSum next;
            for (const auto& [hw, cc] : cur)
                for (const auto& [hw2, c2] : expand_letter(k))
                    add_to(next, hw.first + hw2.first, hw.second + hw2.second, cc * c2);
            cur = std::move(next);
        }
        for (const auto& [hw, cc] : cur) add_to(out, hw.first, hw.second, cc);
    }
    return out;
}

class RawShuffler {
public:
    const RawSum& operator()(const std::string& u, const std::string& v) {
        auto key = std::make_pair(u, v);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
        RawSum r;
        if (u.empty()) {
            add_to(r, 0, v, 1);
        } else if (v.empty()) {
            add_to(r, 0, u, 1);
        } else if (u[0] == 'b') {
            prefix_into(r, 'b', (*this)(u.substr(1), v), 0, 1);
        } else if (v[0] == 'b') {
            prefix_into(r, 'b', (*this)(u, v.substr(1)), 0, 1);
        } else {
            prefix_into(r, 'a', (*this)(u, v.substr(1)), 0, 1);
            prefix_into(r, 'a', (*this)(u.substr(1), v), 0, 1);
            prefix_into(r, 'a', (*this)(u.substr(1), v.substr(1)), 1, 1);
        }
        return memo_.emplace(std::move(key), std::move(r)).first->second;
    }

private:
    static void prefix_into(RawSum& r, char letter, const RawSum& s, int dh, const Rational& c) {
        for (const auto& [hw, cc] : s) add_to(r, hw.first + dh, letter + hw.second, cc * c);
    }
    std::map<std::pair<std::string, std::string>, RawSum> memo_;
};

inline RawSum shuffle(const RawSum& u, const RawSum& v) {
    RawShuffler sh;
    RawSum out;
    for (const auto& [hu, cu] : u)
        for (const auto& [hv, cv] : v)
            for (const auto& [hw, c] : sh(hu.second, hv.second))
                add_to(out, hu.first + hv.first + hw.first, hw.second, c * cu * cv);
    return out;
}

// Rewrites a raw sum in the e-basis. Substituting block by block is the
// triangular solve: a^j b (j >= 2) = e_j - hbar a^{j-1} b, a b = e_{1hat},
// b = hbar^{-1} (e_1 - e_{1hat}). Anything left over is reported.
inline HbarSum to_ebasis(const RawSum& s) {
    std::map<std::pair<int, ExtendedIndex>, Rational> acc;  // exponent may go negative here
    auto put = [&acc](int h, const ExtendedIndex& k, const Rational& c) {
        if (c == 0) return;
        auto [it, inserted] = acc.try_emplace({h, k}, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) acc.erase(it);
        }
    };
    for (const auto& [hw, c] : s) {
        const std::string& w = hw.second;
        if (!w.empty() && w.back() != 'b')
            throw InternalClosureError("raw word '" + w + "' does not end in b");
        // expansion of each block as a list of (hbar shift, letter, coefficient)
        std::map<std::pair<int, ExtendedIndex>, Rational> cur;
        cur[{hw.first, ExtendedIndex()}] = c;
        std::size_t pos = 0;
        while (pos < w.size()) {
            std::size_t j = 0;
            while (w[pos + j] == 'a') ++j;
            pos += j + 1;
            std::vector<std::tuple<int, int, Rational>> block;
            if (j == 0) {
                block = {{-1, 1, Rational(1)}, {-1, kHat, Rational(-1)}};
            } else if (j == 1) {
                block = {{0, kHat, Rational(1)}};
            } else {
                Rational sgn = 1;
                for (std::size_t i = 0; i + 2 <= j; ++i) {
                    block.emplace_back(static_cast<int>(i), static_cast<int>(j - i), sgn);
                    sgn = -sgn;
                }
                block.emplace_back(static_cast<int>(j - 1), kHat, sgn);
            }
            std::map<std::pair<int, ExtendedIndex>, Rational> next;
            for (const auto& [key, cc] : cur)
                for (const auto& [dh, letter, bc] : block) {
                    auto nk = std::make_pair(key.first + dh, key.second.concat(ExtendedIndex{letter}));
                    Rational v = cc * bc;
                    auto [it, inserted] = next.try_emplace(nk, v);
                    if (!inserted) {
                        it->second += v;
                        if (it->second == 0) next.erase(it);
                    }
                }
            cur = std::move(next);
        }
        for (const auto& [key, cc] : cur) put(key.first, key.second, cc);
    }
    HbarSum out;
    for (const auto& [key, c] : acc) {
        if (key.first < 0)
            throw InternalClosureError("residual term with hbar^" + std::to_string(key.first) + " e" +
                                       key.second.to_string());
        out.add(key.first, key.second, c);
    }
    return out;
}

inline HbarSum shuffle_hbar_raw(const HbarSum& u, const HbarSum& v) {
    return to_ebasis(shuffle(expand(u), expand(v)));
}

}  // namespace mtomega::raw

#endif  // MTOMEGA_HBAR_ORACLE_HPP
