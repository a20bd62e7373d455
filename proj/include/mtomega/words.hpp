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
// Hoffman's algebra on the letters x0, x1: words, exact linear combinations,
// the shuffle product, shuffle regularization and the map phi.

#ifndef MTOMEGA_WORDS_HPP
#define MTOMEGA_WORDS_HPP

#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "index.hpp"
#include "rational.hpp"

namespace mtomega {

/** A word over {x0, x1}, stored as a string of '0' and '1'. */
class Word {
public:
    Word() = default;

    static Word from_letters(std::string letters) {
        for (char c : letters)
            if (c != '0' && c != '1') throw ParseError("letters must be '0' or '1'");
        Word w;
        w.s_ = std::move(letters);
        return w;
    }

    // Accepts the printed form "x0x1x1"; the empty string and "1" both mean the empty word.
    static Word parse(const std::string& text) {
        if (text.empty() || text == "1") return Word();
        if (text.size() % 2 != 0) throw ParseError("malformed word '" + text + "'");
        std::string letters;
        for (std::size_t i = 0; i < text.size(); i += 2) {
            if (text[i] != 'x' || (text[i + 1] != '0' && text[i + 1] != '1'))
                throw ParseError("malformed word '" + text + "'");
            letters += text[i + 1];
        }
        return from_letters(std::move(letters));
    }

    static Word x0_power(int k) { return from_letters(std::string(static_cast<std::size_t>(k), '0')); }
    // y_k = x0^{k-1} x1
    static Word y(int k) {
        if (k < 1) throw RangeError("y_k needs k >= 1");
        return from_letters(std::string(static_cast<std::size_t>(k - 1), '0') + '1');
    }

    const std::string& letters() const { return s_; }
    std::size_t size() const { return s_.size(); }
    bool empty() const { return s_.empty(); }
    int weight() const { return static_cast<int>(s_.size()); }
    char operator[](std::size_t i) const { return s_[i]; }

    bool in_h1() const { return s_.empty() || s_.back() == '1'; }
    bool in_h0() const { return s_.empty() || (s_.front() == '0' && s_.back() == '1'); }

    Word operator+(const Word& o) const { return from_letters(s_ + o.s_); }
    Word suffix(std::size_t from) const { return from_letters(s_.substr(from)); }

    std::string to_string() const {
        if (s_.empty()) return "";
        std::string out;
        out.reserve(2 * s_.size());
        for (char c : s_) {
            out += 'x';
            out += c;
        }
        return out;
    }

    // Length first, then lexicographic with x0 < x1.
    std::strong_ordering operator<=>(const Word& o) const {
        if (s_.size() != o.s_.size()) return s_.size() <=> o.s_.size();
        return s_.compare(o.s_) <=> 0;
    }
    bool operator==(const Word& o) const { return s_ == o.s_; }

private:
    std::string s_;
};

/** Exact rational linear combination of words. Zero coefficients are never stored. */
class WordSum {
public:
    using Terms = std::map<Word, Rational>;

    WordSum() = default;
    WordSum(const Word& w) { terms_.emplace(w, Rational(1)); }  // NOLINT: words embed as sums
    WordSum(const Word& w, const Rational& c) { add(w, c); }

    static WordSum one() { return WordSum(Word()); }

    void add(const Word& w, const Rational& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(w, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    Rational coeff(const Word& w) const {
        auto it = terms_.find(w);
        return it == terms_.end() ? Rational(0) : it->second;
    }
    auto begin() const { return terms_.begin(); }
    auto end() const { return terms_.end(); }

    bool in_h1() const {
        for (const auto& [w, c] : terms_)
            if (!w.in_h1()) return false;
        return true;
    }
    bool in_h0() const {
        for (const auto& [w, c] : terms_)
            if (!w.in_h0()) return false;
        return true;
    }

    WordSum& operator+=(const WordSum& o) {
        for (const auto& [w, c] : o.terms_) add(w, c);
        return *this;
    }
    WordSum& operator-=(const WordSum& o) {
        for (const auto& [w, c] : o.terms_) add(w, -c);
        return *this;
    }
    WordSum& operator*=(const Rational& s) {
        if (s == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [w, c] : terms_) c *= s;
        return *this;
    }
    friend WordSum operator+(WordSum a, const WordSum& b) { return a += b; }
    friend WordSum operator-(WordSum a, const WordSum& b) { return a -= b; }
    friend WordSum operator-(WordSum a) { return a *= Rational(-1); }
    friend WordSum operator*(WordSum a, const Rational& s) { return a *= s; }
    friend WordSum operator*(const Rational& s, WordSum a) { return a *= s; }
    bool operator==(const WordSum& o) const { return terms_ == o.terms_; }

    // Concatenation product.
    friend WordSum operator*(const WordSum& a, const WordSum& b) {
        WordSum out;
        for (const auto& [u, cu] : a.terms_)
            for (const auto& [v, cv] : b.terms_) out.add(u + v, cu * cv);
        return out;
    }
    WordSum left_multiplied(const Word& prefix) const {
        WordSum out;
        for (const auto& [w, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), prefix + w, c);
        return out;
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string s;
        bool first = true;
        for (const auto& [w, c] : terms_) {
            Rational a = c;
            if (!first) {
                s += (a < 0) ? " - " : " + ";
                if (a < 0) a = -a;
            } else if (a < 0) {
                s += "-";
                a = -a;
            }
            first = false;
            std::string ws = w.empty() ? "1" : w.to_string();
            if (a == 1)
                s += ws;
            else
                s += a.get_str() + "*" + ws;
        }
        return s;
    }

private:
    Terms terms_;
};

// ---------------------------------------------------------------------------
// y-encoding

inline Word word_of_index(const Index& k) {
    std::string letters;
    for (int kk : k) {
        letters.append(static_cast<std::size_t>(kk - 1), '0');
        letters += '1';
    }
    return Word::from_letters(std::move(letters));
}

inline Index index_of_word(const Word& w) {
    if (!w.in_h1()) throw NotInH1Error("word " + w.to_string() + " does not end in x1");
    std::vector<int> parts;
    int run = 0;
    for (char c : w.letters()) {
        ++run;
        if (c == '1') {
            parts.push_back(run);
            run = 0;
        }
    }
    return Index(std::move(parts));
}

// ---------------------------------------------------------------------------
// Shuffle product

namespace detail {

// Shuffles of all suffix pairs, filled from the back.
inline WordSum shuffle_words_dp(const Word& u, const Word& v) {
    const std::size_t n = u.size(), m = v.size();
    std::vector<std::vector<WordSum>> t(n + 1, std::vector<WordSum>(m + 1));
    for (std::size_t i = n + 1; i-- > 0;) {
        for (std::size_t j = m + 1; j-- > 0;) {
            if (i == n) {
                t[i][j] = WordSum(v.suffix(j));
            } else if (j == m) {
                t[i][j] = WordSum(u.suffix(i));
            } else {
                Word a = Word::from_letters(std::string(1, u[i]));
                Word b = Word::from_letters(std::string(1, v[j]));
                t[i][j] = t[i + 1][j].left_multiplied(a) + t[i][j + 1].left_multiplied(b);
            }
        }
        if (i + 1 <= n) t[i + 1].clear();
    }
    return std::move(t[0][0]);
}

}  // namespace detail

inline WordSum shuffle(const Word& u, const Word& v) {
    if (u.empty()) return WordSum(v);
    if (v.empty()) return WordSum(u);
    return detail::shuffle_words_dp(u, v);
}

inline WordSum shuffle(const WordSum& u, const WordSum& v) {
    WordSum out;
    for (const auto& [a, ca] : u)
        for (const auto& [b, cb] : v) out += shuffle(a, b) * (ca * cb);
    return out;
}

// Shuffle of a list of factors; the empty list gives 1.
inline WordSum shuffle_all(const std::vector<WordSum>& factors) {
    WordSum acc = WordSum::one();
    for (const auto& f : factors) acc = shuffle(acc, f);
    return acc;
}

// ---------------------------------------------------------------------------
// phi : h^1 -> h^1

inline WordSum phi(const Word& w) {
    Index k = index_of_word(w);
    const std::size_t r = k.length();
    WordSum out;
    int partial = 0;
    for (std::size_t a = 0; a <= r; ++a) {
        if (a > 0) partial += k[a - 1];
        Word left = word_of_index(k.slice(0, a).reversed());
        Word right = word_of_index(k.slice(a, r));
        out += shuffle(left, right) * Rational(partial % 2 == 0 ? 1 : -1);
    }
    return out;
}

inline WordSum phi(const WordSum& u) {
    WordSum out;
    for (const auto& [w, c] : u) {
        if (!w.in_h1()) throw NotInH1Error("phi: word " + w.to_string() + " is not in h^1");
        out += phi(w) * c;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Shuffle regularization with zeta(x1) = 0

namespace detail {

class Regularizer {
public:
    WordSum operator()(const Word& w) {
        if (w.in_h0()) return WordSum(w);
        auto it = memo_.find(w);
        if (it != memo_.end()) return it->second;
        // w = x1^l x0 v'
        std::size_t l = 0;
        while (l < w.size() && w[l] == '1') ++l;
        WordSum result;
        if (l < w.size()) {
            Word head = Word::from_letters(std::string(l - 1, '1') + '0');
            WordSum inserted = shuffle(Word::from_letters("1"), w.suffix(l + 1)).left_multiplied(head);
            for (const auto& [v, c] : inserted) result += (*this)(v) * c;
            result *= frac(-1, static_cast<long>(l));
        }
        memo_.emplace(w, result);
        return result;
    }

private:
    std::map<Word, WordSum> memo_;
};

}  // namespace detail

inline WordSum reg_shuffle0(const WordSum& u) {
    detail::Regularizer reg;
    WordSum out;
    for (const auto& [w, c] : u) {
        if (!w.in_h1()) throw NotInH1Error("reg_shuffle0: word " + w.to_string() + " is not in h^1");
        out += reg(w) * c;
    }
    return out;
}

inline WordSum reg_shuffle0(const Word& w) { return reg_shuffle0(WordSum(w)); }

// ---------------------------------------------------------------------------
// Words attached to Mordell-Tornheim and symmetric values

// x0^{k_r} (y_{k_1} sh ... sh y_{k_{r-1}})
inline WordSum mt_word(const Index& k) {
    if (k.length() < 2) throw LengthError("mt_word needs an index of length >= 2, got " + k.to_string());
    std::vector<WordSum> ys;
    for (std::size_t i = 0; i + 1 < k.length(); ++i) ys.emplace_back(Word::y(k[i]));
    return shuffle_all(ys).left_multiplied(Word::x0_power(k[k.length() - 1]));
}

inline WordSum zeta_s_word(const Index& k) {
    if (k.empty()) throw LengthError("zeta_s_word needs a nonempty index");
    detail::Regularizer reg;
    const std::size_t r = k.length();
    WordSum out;
    int partial = 0;
    for (std::size_t a = 0; a <= r; ++a) {
        if (a > 0) partial += k[a - 1];
        WordSum left = reg(word_of_index(k.slice(0, a).reversed()));
        WordSum right = reg(word_of_index(k.slice(a, r)));
        out += shuffle(left, right) * Rational(partial % 2 == 0 ? 1 : -1);
    }
    return out;
}

struct IdentitySides {
    WordSum lhs;
    WordSum rhs;
};

// phi((-1)^{k_r} mt_word(k)) against sum_a (-1)^{k_a} x0^{k_a} (sh_{b != a} y_{k_b}).
inline IdentitySides identity_words_sides(const Index& k) {
    if (k.length() < 2) throw LengthError("identity check needs length >= 2, got " + k.to_string());
    const std::size_t r = k.length();
    IdentitySides s;
    s.lhs = phi(mt_word(k)) * Rational(k[r - 1] % 2 == 0 ? 1 : -1);
    for (std::size_t a = 0; a < r; ++a) {
        std::vector<WordSum> ys;
        for (std::size_t b = 0; b < r; ++b)
            if (b != a) ys.emplace_back(Word::y(k[b]));
        s.rhs += shuffle_all(ys).left_multiplied(Word::x0_power(k[a])) * Rational(k[a] % 2 == 0 ? 1 : -1);
    }
    return s;
}

inline bool check_identity_words(const Index& k) {
    IdentitySides s = identity_words_sides(k);
    return s.lhs == s.rhs;
}

}  // namespace mtomega

#endif  // MTOMEGA_WORDS_HPP
