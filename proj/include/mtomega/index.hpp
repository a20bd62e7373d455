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
// Indices (k_1,...,k_r) and extended indices over N plus the letter 1-hat.

#ifndef MTOMEGA_INDEX_HPP
#define MTOMEGA_INDEX_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <numeric>
#include <string>
#include <vector>

#include "errors.hpp"

namespace mtomega {

class Index {
public:
    Index() = default;
    explicit Index(std::vector<int> parts) : parts_(std::move(parts)) {
        for (int k : parts_)
            if (k < 1) throw RangeError("index parts must be positive, got " + std::to_string(k));
    }
    Index(std::initializer_list<int> parts) : Index(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const { return parts_; }
    std::size_t length() const { return parts_.size(); }
    bool empty() const { return parts_.empty(); }
    int weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
    bool admissible() const { return parts_.empty() || parts_.front() >= 2; }
    int operator[](std::size_t i) const { return parts_[i]; }
    auto begin() const { return parts_.begin(); }
    auto end() const { return parts_.end(); }

    Index without(std::size_t pos) const {
        std::vector<int> p = parts_;
        p.erase(p.begin() + static_cast<std::ptrdiff_t>(pos));
        return Index(std::move(p));
    }
    Index appended(int k) const {
        std::vector<int> p = parts_;
        p.push_back(k);
        return Index(std::move(p));
    }
    Index reversed() const { return Index(std::vector<int>(parts_.rbegin(), parts_.rend())); }
    Index slice(std::size_t from, std::size_t to) const {
        return Index(std::vector<int>(parts_.begin() + static_cast<std::ptrdiff_t>(from),
                                      parts_.begin() + static_cast<std::ptrdiff_t>(to)));
    }
    // Canonical representative of the permutation class.
    Index sorted_descending() const {
        std::vector<int> p = parts_;
        std::sort(p.begin(), p.end(), std::greater<>());
        return Index(std::move(p));
    }

    // Dot-separated form used on the command line and in CSV files.
    std::string to_string() const {
        std::string s;
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) s += '.';
            s += std::to_string(parts_[i]);
        }
        return s;
    }

    static Index parse(const std::string& s) {
        std::vector<int> parts;
        std::size_t pos = 0;
        if (s.empty()) throw ParseError("empty index");
        while (pos <= s.size()) {
            std::size_t dot = s.find('.', pos);
            if (dot == std::string::npos) dot = s.size();
            std::string tok = s.substr(pos, dot - pos);
            if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos || tok.size() > 6)
                throw ParseError("malformed index '" + s + "'");
            int k = std::stoi(tok);
            if (k < 1) throw ParseError("index parts must be positive in '" + s + "'");
            parts.push_back(k);
            pos = dot + 1;
        }
        return Index(std::move(parts));
    }

    auto operator<=>(const Index&) const = default;
    bool operator==(const Index&) const = default;

private:
    std::vector<int> parts_;
};

// The letter 1-hat is stored as 0, so that 1-hat < 1 < 2 < ...
inline constexpr int kHat = 0;

class ExtendedIndex {
public:
    ExtendedIndex() = default;
    explicit ExtendedIndex(std::vector<int> parts) : parts_(std::move(parts)) {
        for (int k : parts_)
            if (k < 0) throw RangeError("extended index parts must be >= 1 or 1-hat");
    }
    ExtendedIndex(std::initializer_list<int> parts) : ExtendedIndex(std::vector<int>(parts)) {}
    explicit ExtendedIndex(const Index& k) : parts_(k.parts()) {}

    const std::vector<int>& parts() const { return parts_; }
    std::size_t length() const { return parts_.size(); }
    bool empty() const { return parts_.empty(); }
    int weight() const {
        int w = 0;
        for (int k : parts_) w += (k == kHat ? 1 : k);
        return w;
    }
    int operator[](std::size_t i) const { return parts_[i]; }
    int front() const { return parts_.front(); }
    auto begin() const { return parts_.begin(); }
    auto end() const { return parts_.end(); }

    ExtendedIndex tail() const { return ExtendedIndex(std::vector<int>(parts_.begin() + 1, parts_.end())); }
    ExtendedIndex with_front(int k) const {
        std::vector<int> p = parts_;
        p.front() = k;
        return ExtendedIndex(std::move(p));
    }
    ExtendedIndex prepended(int k) const {
        std::vector<int> p;
        p.reserve(parts_.size() + 1);
        p.push_back(k);
        p.insert(p.end(), parts_.begin(), parts_.end());
        return ExtendedIndex(std::move(p));
    }
    ExtendedIndex concat(const ExtendedIndex& o) const {
        std::vector<int> p = parts_;
        p.insert(p.end(), o.parts_.begin(), o.parts_.end());
        return ExtendedIndex(std::move(p));
    }

    std::string to_string() const {
        std::string s = "(";
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) s += ',';
            s += parts_[i] == kHat ? std::string("1hat") : std::to_string(parts_[i]);
        }
        return s + ")";
    }

    auto operator<=>(const ExtendedIndex&) const = default;
    bool operator==(const ExtendedIndex&) const = default;

private:
    std::vector<int> parts_;
};

// All ordered indices of the given weight with length >= min_length.
inline std::vector<Index> compositions(int weight, std::size_t min_length = 1) {
    std::vector<Index> out;
    if (weight <= 0) return out;
    // bit i of mask set means a cut after position i+1
    const unsigned cuts = static_cast<unsigned>(weight - 1);
    for (unsigned long mask = 0; mask < (1ul << cuts); ++mask) {
        std::vector<int> parts;
        int run = 1;
        for (unsigned i = 0; i < cuts; ++i) {
            if (mask & (1ul << i)) {
                parts.push_back(run);
                run = 1;
            } else {
                ++run;
            }
        }
        parts.push_back(run);
        if (parts.size() >= min_length) out.emplace_back(std::move(parts));
    }
    std::sort(out.begin(), out.end(), [](const Index& a, const Index& b) {
        if (a.length() != b.length()) return a.length() < b.length();
        return a.parts() > b.parts();
    });
    return out;
}

// Nonincreasing indices of the given weight with length >= min_length,
// ordered by length and then reverse-lexicographically: (3,1),(2,2),(2,1,1),...
inline std::vector<Index> partitions(int weight, std::size_t min_length = 1) {
    std::vector<Index> out;
    if (weight <= 0) return out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int remaining, int max_part) {
        if (remaining == 0) {
            if (cur.size() >= min_length) out.emplace_back(cur);
            return;
        }
        for (int k = std::min(remaining, max_part); k >= 1; --k) {
            cur.push_back(k);
            rec(remaining - k, k);
            cur.pop_back();
        }
    };
    rec(weight, weight);
    std::stable_sort(out.begin(), out.end(), [](const Index& a, const Index& b) {
        if (a.length() != b.length()) return a.length() < b.length();
        return a.parts() > b.parts();
    });
    return out;
}

inline Index repeated(int part, int count) { return Index(std::vector<int>(static_cast<std::size_t>(count), part)); }

}  // namespace mtomega

#endif  // MTOMEGA_INDEX_HPP
