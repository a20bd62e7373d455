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
// Identity-verification suites. Each suite sweeps a family of instances and
// records one check per instance; a report passes iff every check passes.

#ifndef MTOMEGA_SUITES_HPP
#define MTOMEGA_SUITES_HPP

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "mtomega/cyclo.hpp"
#include "mtomega/generating.hpp"
#include "mtomega/hbar.hpp"
#include "mtomega/modular.hpp"
#include "mtomega/numeric.hpp"
#include "mtomega/words.hpp"

namespace mtomega {

struct SuiteCheck {
    std::string suite;
    std::string instance;
    bool passed = true;
};

struct SuiteReport {
    std::vector<SuiteCheck> checks;

    void add(const std::string& suite, const std::string& instance, bool passed) {
        checks.push_back({suite, instance, passed});
    }
    void append(const SuiteReport& o) { checks.insert(checks.end(), o.checks.begin(), o.checks.end()); }
    std::size_t failures() const {
        return static_cast<std::size_t>(
            std::count_if(checks.begin(), checks.end(), [](const SuiteCheck& c) { return !c.passed; }));
    }
    bool all_passed() const { return failures() == 0; }
};

struct SuiteParams {
    int max_weight = 5;
    std::int64_t prime_min = 3;
    std::int64_t prime_max = 50;
    int n_min = 2;
    int n_max = 20;
    int digits = 40;
    int series_order = 30;
    std::uint64_t seed = 1;
    int random_samples = 2;
};

namespace detail {

inline bool all_parts_at_least_two(const Index& k) {
    return std::all_of(k.begin(), k.end(), [](int x) { return x >= 2; });
}

inline std::vector<Index> indices_up_to(int max_weight, std::size_t min_length = 2) {
    std::vector<Index> out;
    for (int wt = 2; wt <= max_weight; ++wt)
        for (auto& k : compositions(wt, min_length)) out.push_back(k);
    return out;
}

// sum_j (k_1, ..., k_j - 1, ..., k_r)
inline std::vector<Index> balanced_lowerings(const Index& k) {
    std::vector<Index> out;
    for (std::size_t j = 0; j < k.length(); ++j) {
        std::vector<int> p(k.begin(), k.end());
        --p[j];
        out.emplace_back(p);
    }
    return out;
}

inline std::string at_p(const Index& k, std::int64_t p) { return k.to_string() + " p=" + std::to_string(p); }
inline std::string at_n(const Index& k, int n) { return k.to_string() + " n=" + std::to_string(n); }

}  // namespace detail

// reduce_at_one(omega_n(k; zeta_p)) = omega_p(k) for every prime p in range.
inline SuiteReport suite_fmzv_reduction(const SuiteParams& sp) {
    SuiteReport rep;
    const auto ks = detail::indices_up_to(sp.max_weight);
    for (auto p : primes_between(std::max<std::int64_t>(sp.prime_min, 3), sp.prime_max)) {
        CycloEvaluator ev(static_cast<int>(p));
        OmegaModEngine eng(p);
        for (const auto& k : ks)
            rep.add("fmzv-reduction", detail::at_p(k, p), reduce_at_one(ev.omega(k), p).value == eng.omega(k));
    }
    return rep;
}

inline SuiteReport suite_q_kamano(const SuiteParams& sp) {
    SuiteReport rep;
    const auto ks = detail::indices_up_to(sp.max_weight);
    for (int n = sp.n_min; n <= sp.n_max; ++n) {
        CycloEvaluator ev(n);
        for (const auto& k : ks) rep.add("q-kamano", detail::at_n(k, n), ev.omega(k) == q_kamano_rhs(k, ev));
    }
    return rep;
}

inline SuiteReport suite_identity_words(const SuiteParams& sp) {
    SuiteReport rep;
    for (const auto& k : detail::indices_up_to(sp.max_weight)) rep.add("identity-words", k.to_string(), check_identity_words(k));
    return rep;
}

inline SuiteReport suite_generating(const SuiteParams& sp) {
    SuiteReport rep;
    for (const auto& c : check_generating_identities(sp.max_weight).checks) {
        std::string e;
        for (int x : c.exponent) e += (e.empty() ? "" : ",") + std::to_string(x);
        rep.add("generating", c.identity + " " + c.instance + " t^(" + e + ")", c.passed);
    }
    return rep;
}

// Hbar monomials with hbar >= 0 of the given total weight, 1-hat counted as weight 1.
inline std::vector<HbarMonomial> hbar_monomials(int weight) {
    std::vector<HbarMonomial> out;
    for (int h = 0; h <= weight; ++h) {
        const int w = weight - h;
        if (w == 0) {
            out.push_back({h, ExtendedIndex()});
            continue;
        }
        for (const auto& c : compositions(w, 1)) {
            // every part equal to 1 may be e_1 or e_1hat
            std::vector<std::size_t> ones;
            for (std::size_t i = 0; i < c.length(); ++i)
                if (c[i] == 1) ones.push_back(i);
            for (unsigned mask = 0; mask < (1u << ones.size()); ++mask) {
                std::vector<int> parts(c.begin(), c.end());
                for (std::size_t b = 0; b < ones.size(); ++b)
                    if (mask >> b & 1) parts[ones[b]] = kHat;
                out.push_back({h, ExtendedIndex(parts)});
            }
        }
    }
    return out;
}

inline std::string monomial_string(const HbarMonomial& m) {
    HbarSum s(m.eword, m.hbar);
    return s.to_string();
}

// L(u sh_hbar v) = L(u) L(v) as truncated series at rational q: the three
// fixed points plus `random_samples` q drawn from the seed.
inline SuiteReport suite_q_series(const SuiteParams& sp, int max_total_weight = 4) {
    SuiteReport rep;
    std::vector<Rational> qs = {frac(1, 2), frac(-2, 3), frac(5, 7)};
    std::mt19937_64 rng(sp.seed);
    std::uniform_int_distribution<long> num(-9, 9), den(2, 11);
    while (static_cast<int>(qs.size()) < 3 + sp.random_samples) {
        Rational q = frac(num(rng), den(rng));
        if (q == 0 || q == 1 || q == -1) continue;
        qs.push_back(q);
    }
    std::vector<HbarMonomial> monos;
    for (int w = 1; w < max_total_weight; ++w)
        for (auto& m : hbar_monomials(w)) monos.push_back(m);
    for (const auto& q : qs)
        for (const auto& a : monos)
            for (const auto& b : monos) {
                if (a.weight() + b.weight() > max_total_weight || b < a) continue;
                const HbarSum u(a.eword, a.hbar), v(b.eword, b.hbar);
                const int N = sp.series_order;
                bool ok = false;
                try {
                    ok = l_series_rational(shuffle_hbar(u, v), q, N) ==
                         l_series_rational(u, q, N) * l_series_rational(v, q, N);
                } catch (const PoleError&) {
                    ok = false;
                }
                rep.add("q-series", monomial_string(a) + " * " + monomial_string(b) + " q=" + q.get_str(), ok);
            }
    return rep;
}

// Balanced sums over parts >= 2 vanish exactly in Q(zeta_n).
inline SuiteReport suite_sym_sum(const SuiteParams& sp) {
    SuiteReport rep;
    std::vector<std::pair<Index, std::vector<CycloTerm>>> forms;
    for (const auto& k : detail::indices_up_to(sp.max_weight))
        if (detail::all_parts_at_least_two(k)) forms.emplace_back(k, sym_sum_terms(k));
    for (int n = sp.n_min; n <= sp.n_max; ++n) {
        CycloEvaluator ev(n);
        for (const auto& [k, terms] : forms)
            rep.add("sym-sum", detail::at_n(k, n), evaluate_terms(terms, ev).is_zero());
    }
    return rep;
}

// The balanced sum at zeta -> 1: sum_j omega(k - e_j) vanishes both modulo
// p and for the symmetric limit.
inline SuiteReport suite_balanced_limits(const SuiteParams& sp) {
    SuiteReport rep;
    std::vector<Index> ks;
    for (const auto& k : detail::indices_up_to(sp.max_weight))
        if (detail::all_parts_at_least_two(k)) ks.push_back(k);
    for (auto p : primes_between(std::max<std::int64_t>(sp.prime_min, 3), sp.prime_max)) {
        OmegaModEngine eng(p);
        for (const auto& k : ks) {
            std::int64_t s = 0;
            for (const auto& l : detail::balanced_lowerings(k)) s = mod_reduce(s + eng.omega(l), p);
            rep.add("balanced-limits", "finite " + detail::at_p(k, p), s == 0);
        }
    }
    NumericContext ctx(sp.digits);
    for (const auto& k : ks) {
        BigFloat s(ctx.precision());
        for (const auto& l : detail::balanced_lowerings(k)) s += ctx.omega_limit(l);
        rep.add("balanced-limits", "symmetric " + k.to_string(), s.log10_abs() < -sp.digits);
    }
    return rep;
}

// omega_p(k1, k2) = 0, omega_p({2}^{r-1}, 1) = 0 and omega_p({1}^k) = -k! B_{p-k}/k.
inline SuiteReport suite_specials(const SuiteParams& sp) {
    SuiteReport rep;
    for (auto p : primes_between(std::max<std::int64_t>(sp.prime_min, 3), sp.prime_max)) {
        OmegaModEngine eng(p);
        for (int wt = 2; wt <= sp.max_weight; ++wt) {
            // the identities hold in the ring A, i.e. for p > wt + 1
            if (wt + 2 > p) continue;
            for (const auto& k : compositions(wt, 2))
                if (k.length() == 2) rep.add("specials", "pair " + detail::at_p(k, p), eng.omega(k) == 0);
            if (wt % 2 == 1) {
                std::vector<int> parts(static_cast<std::size_t>(wt / 2), 2);
                parts.push_back(1);
                const Index k(parts);
                if (k.length() >= 2) rep.add("specials", "twos-one " + detail::at_p(k, p), eng.omega(k) == 0);
            }
        }
        for (int k = 2; k <= std::min(6, sp.max_weight); ++k) {
            if (k + 2 > p) continue;
            const std::int64_t fact = Integer(factorial(k) % Integer(static_cast<long>(p))).get_si();
            const std::int64_t rhs = mod_reduce(-fact * bern_div_mod(k, p).value, p);
            rep.add("specials", "ones " + detail::at_p(repeated(1, k), p), eng.omega(repeated(1, k)) == rhs);
        }
    }
    return rep;
}

inline const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"fmzv-reduction", "q-kamano",        "identity-words", "generating",
                                                   "q-series",       "sym-sum",         "balanced-limits", "specials"};
    return names;
}

inline SuiteReport run_suite(const std::string& name, const SuiteParams& sp) {
    if (name == "fmzv-reduction") return suite_fmzv_reduction(sp);
    if (name == "q-kamano") return suite_q_kamano(sp);
    if (name == "identity-words") return suite_identity_words(sp);
    if (name == "generating") return suite_generating(sp);
    if (name == "q-series") return suite_q_series(sp);
    if (name == "sym-sum") return suite_sym_sum(sp);
    if (name == "balanced-limits") return suite_balanced_limits(sp);
    if (name == "specials") return suite_specials(sp);
    if (name == "all") {
        SuiteReport rep;
        for (const auto& n : suite_names()) rep.append(run_suite(n, sp));
        return rep;
    }
    throw RangeError("unknown suite '" + name + "'");
}

}  // namespace mtomega

#endif  // MTOMEGA_SUITES_HPP
