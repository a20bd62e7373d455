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
// Truncated generating series with WordSum coefficients, and coefficient-wise
// checks of the shuffle and phi formulas for y(t) = sum_k y_k t^{k-1}.

#ifndef MTOMEGA_GENERATING_HPP
#define MTOMEGA_GENERATING_HPP

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "rational.hpp"
#include "words.hpp"

namespace mtomega {

using Exponent = std::vector<int>;

inline int total_degree(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0); }

/** Power series in nv commuting variables, truncated above total degree D. */
class WordSeries {
public:
    WordSeries(int nv, int degree_bound) : nv_(nv), d_(degree_bound) {}

    static WordSeries constant(int nv, int d, const WordSum& w) {
        WordSeries s(nv, d);
        if (d >= 0 && !w.is_zero()) s.c_[Exponent(static_cast<std::size_t>(nv), 0)] = w;
        return s;
    }

    // y(L) for a linear form L = sum_i lin[i] * t_i.
    static WordSeries y_of(int nv, int d, const std::vector<int>& lin) {
        WordSeries s(nv, d);
        std::map<Exponent, Rational> power{{Exponent(static_cast<std::size_t>(nv), 0), Rational(1)}};
        for (int k = 1; k <= d + 1; ++k) {
            for (const auto& [e, c] : power) s.add(e, WordSum(Word::y(k), c));
            std::map<Exponent, Rational> next;
            for (const auto& [e, c] : power)
                for (int i = 0; i < nv; ++i) {
                    if (lin[static_cast<std::size_t>(i)] == 0) continue;
                    Exponent f = e;
                    ++f[static_cast<std::size_t>(i)];
                    Rational v = c * lin[static_cast<std::size_t>(i)];
                    auto [it, ins] = next.try_emplace(f, v);
                    if (!ins) it->second += v;
                }
            power = std::move(next);
        }
        return s;
    }

    int variables() const { return nv_; }
    int degree_bound() const { return d_; }
    const std::map<Exponent, WordSum>& coefficients() const { return c_; }

    WordSum coeff(const Exponent& e) const {
        auto it = c_.find(e);
        return it == c_.end() ? WordSum() : it->second;
    }

    void add(const Exponent& e, const WordSum& w) {
        if (total_degree(e) > d_ || w.is_zero()) return;
        auto [it, ins] = c_.try_emplace(e, w);
        if (!ins) {
            it->second += w;
            if (it->second.is_zero()) c_.erase(it);
        }
    }

    WordSeries& operator+=(const WordSeries& o) {
        for (const auto& [e, w] : o.c_) add(e, w);
        return *this;
    }
    WordSeries& operator-=(const WordSeries& o) {
        for (const auto& [e, w] : o.c_) add(e, -w);
        return *this;
    }
    friend WordSeries operator+(WordSeries a, const WordSeries& b) { return a += b; }
    friend WordSeries operator-(WordSeries a, const WordSeries& b) { return a -= b; }

    WordSeries combine(const WordSeries& o, const std::function<WordSum(const WordSum&, const WordSum&)>& op) const {
        WordSeries out(nv_, d_);
        for (const auto& [e1, w1] : c_)
            for (const auto& [e2, w2] : o.c_) {
                if (total_degree(e1) + total_degree(e2) > d_) continue;
                Exponent e = e1;
                for (std::size_t i = 0; i < e.size(); ++i) e[i] += e2[i];
                out.add(e, op(w1, w2));
            }
        return out;
    }

    // Concatenation product.
    friend WordSeries operator*(const WordSeries& a, const WordSeries& b) {
        return a.combine(b, [](const WordSum& x, const WordSum& y) { return x * y; });
    }
    WordSeries map_coefficients(const std::function<WordSum(const WordSum&)>& f) const {
        WordSeries out(nv_, d_);
        for (const auto& [e, w] : c_) out.add(e, f(w));
        return out;
    }

private:
    int nv_;
    int d_;
    std::map<Exponent, WordSum> c_;
};

inline WordSeries shuffle(const WordSeries& a, const WordSeries& b) {
    return a.combine(b, [](const WordSum& x, const WordSum& y) { return shuffle(x, y); });
}

inline WordSeries phi(const WordSeries& a) {
    return a.map_coefficients([](const WordSum& w) { return phi(w); });
}

struct GeneratingCheck {
    std::string identity;  // "two-factor", "multi-shuffle", ...
    std::string instance;  // parameters of the instance
    Exponent exponent;
    bool passed;
};

struct GeneratingReport {
    std::vector<GeneratingCheck> checks;
    bool all_passed() const {
        return std::all_of(checks.begin(), checks.end(), [](const GeneratingCheck& c) { return c.passed; });
    }
    std::size_t failures() const {
        return static_cast<std::size_t>(
            std::count_if(checks.begin(), checks.end(), [](const GeneratingCheck& c) { return !c.passed; }));
    }
};

namespace detail {

inline void compare_series(GeneratingReport& rep, const std::string& id, const std::string& inst,
                           const WordSeries& lhs, const WordSeries& rhs) {
    // every exponent tuple up to the bound, including those where both sides vanish
    const int nv = lhs.variables(), d = lhs.degree_bound();
    Exponent e(static_cast<std::size_t>(nv), 0);
    std::function<void(int, int)> rec = [&](int i, int left) {
        if (i == nv) {
            rep.checks.push_back({id, inst, e, lhs.coeff(e) == rhs.coeff(e)});
            return;
        }
        for (int v = 0; v <= left; ++v) {
            e[static_cast<std::size_t>(i)] = v;
            rec(i + 1, left - v);
        }
        e[static_cast<std::size_t>(i)] = 0;
    };
    rec(0, d);
}

inline std::vector<int> unit_form(int nv, int i, int sign = 1) {
    std::vector<int> l(static_cast<std::size_t>(nv), 0);
    l[static_cast<std::size_t>(i)] = sign;
    return l;
}

// S_I = sum over orderings of I of y(alpha_s) ... y(alpha_1), alpha_j = partial sums.
inline WordSeries s_series(int nv, int d, const std::vector<int>& vars) {
    WordSeries total(nv, d);
    std::vector<int> perm = vars;
    std::sort(perm.begin(), perm.end());
    do {
        WordSeries prod = WordSeries::constant(nv, d, WordSum::one());
        std::vector<int> alpha(static_cast<std::size_t>(nv), 0);
        for (int v : perm) {
            alpha[static_cast<std::size_t>(v)] = 1;
            prod = WordSeries::y_of(nv, d, alpha) * prod;  // later partial sums go to the left
        }
        total += prod;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

inline std::string subset_name(const std::vector<int>& vars) {
    std::string s = "{";
    for (std::size_t i = 0; i < vars.size(); ++i) s += (i ? "," : "") + std::to_string(vars[i] + 1);
    return s + "}";
}

}  // namespace detail

// Checks the y(t) identities coefficient by coefficient. An instance whose
// words have weight w0 at degree zero is expanded to degree max_weight - w0.
inline GeneratingReport check_generating_identities(int max_weight) {
    if (max_weight < 2) throw RangeError("check_generating_identities needs max_weight >= 2");
    GeneratingReport rep;
    const std::vector<std::pair<std::string, WordSum>> small = {
        {"1", WordSum::one()},
        {"y1", WordSum(Word::y(1))},
        {"y2", WordSum(Word::y(2))},
        {"y1y1", WordSum(Word::y(1) + Word::y(1))}};

    // y(t1) w sh y(t2) w' = y(t1+t2) (w sh y(t2) w' + y(t1) w sh w')
    for (const auto& [wn, w] : small)
        for (const auto& [vn, v] : small) {
            int d = max_weight - 2 - w.begin()->first.weight() - v.begin()->first.weight();
            if (d < 0) continue;
            const int nv = 2;
            auto y1 = WordSeries::y_of(nv, d, {1, 0}), y2 = WordSeries::y_of(nv, d, {0, 1});
            auto y12 = WordSeries::y_of(nv, d, {1, 1});
            auto W = WordSeries::constant(nv, d, w), V = WordSeries::constant(nv, d, v);
            WordSeries lhs = shuffle(y1 * W, y2 * V);
            WordSeries rhs = y12 * (shuffle(W, y2 * V) + shuffle(y1 * W, V));
            detail::compare_series(rep, "two-factor", "w=" + wn + ",w'=" + vn, lhs, rhs);
        }

    // y(t1) sh ... sh y(tr) = sum_sigma y(alpha_r) ... y(alpha_1)
    for (int r = 1; r <= 4; ++r) {
        int d = max_weight - r;
        if (d < 0) continue;
        WordSeries lhs = WordSeries::constant(r, d, WordSum::one());
        std::vector<int> vars;
        for (int i = 0; i < r; ++i) {
            lhs = shuffle(lhs, WordSeries::y_of(r, d, detail::unit_form(r, i)));
            vars.push_back(i);
        }
        detail::compare_series(rep, "multi-shuffle", "r=" + std::to_string(r), lhs, detail::s_series(r, d, vars));
    }

    // Subsets of [3]; variable 3 is u for the y(u) formula.
    for (int mask = 0; mask < 8; ++mask) {
        std::vector<int> vars;
        for (int i = 0; i < 3; ++i)
            if (mask >> i & 1) vars.push_back(i);
        const int s = static_cast<int>(vars.size());
        const std::string name = "I=" + detail::subset_name(vars);

        // phi(S_I) = S_I - sum_b y(-t_b) S_{I \ b}
        if (int d = max_weight - s; d >= 0) {
            const int nv = 3;
            WordSeries S = detail::s_series(nv, d, vars);
            WordSeries rhs = S;
            for (int b : vars) {
                std::vector<int> rest;
                for (int v : vars)
                    if (v != b) rest.push_back(v);
                rhs -= WordSeries::y_of(nv, d, detail::unit_form(nv, b, -1)) * detail::s_series(nv, d, rest);
            }
            detail::compare_series(rep, "phi-subset", name, phi(S), rhs);
        }

        // phi(y(u) S_I) = y(u) S_I - y(-u) sh S_I + sum_b y(-t_b) (y(-u) sh S_{I \ b})
        if (int d = max_weight - s - 1; d >= 0) {
            const int nv = 4;
            WordSeries S = detail::s_series(nv, d, vars);
            auto yu = WordSeries::y_of(nv, d, detail::unit_form(nv, 3));
            auto ymu = WordSeries::y_of(nv, d, detail::unit_form(nv, 3, -1));
            WordSeries rhs = yu * S - shuffle(ymu, S);
            for (int b : vars) {
                std::vector<int> rest;
                for (int v : vars)
                    if (v != b) rest.push_back(v);
                rhs += WordSeries::y_of(nv, d, detail::unit_form(nv, b, -1)) *
                       shuffle(ymu, detail::s_series(nv, d, rest));
            }
            detail::compare_series(rep, "phi-y-subset", name, phi(yu * S), rhs);
        }
    }
    return rep;
}

}  // namespace mtomega

#endif  // MTOMEGA_GENERATING_HPP
