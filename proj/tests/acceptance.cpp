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
// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "mtomega/relations.hpp"
#include "mtomega/suites.hpp"

using namespace mtomega;

namespace {

struct Outcome {
    bool passed;
    std::string detail;
};

std::string join(const std::vector<long>& v) {
    std::string s;
    for (long x : v) s += (s.empty() ? "" : ",") + std::to_string(x);
    return s;
}

std::string suite_detail(const SuiteReport& r) {
    return std::to_string(r.checks.size()) + " instances, " + std::to_string(r.failures()) + " failures";
}

// ---------------------------------------------------------------------------

Outcome finite_table() {
    const std::vector<long> expect = {0, 0, 1, 0, 1, 1, 1, 2, 2};
    std::vector<long> got;
    bool primes_ok = true;
    const auto t0 = std::chrono::steady_clock::now();
    for (int k = 1; k <= 9; ++k) {
        FiniteRun run = finite_relation_space(k);
        got.push_back(run.report.dimension);
        primes_ok = primes_ok && run.training_primes.size() == 40 && run.holdout_primes.size() == 20 &&
                    run.holdout_primes.back() < 400;
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::ostringstream os;
    os << "dims k=1..9: " << join(got) << " in " << secs << " s";
    return {got == expect && primes_ok && secs < 180, os.str()};
}

IntVec listed(const std::vector<GeneratorLabel>& gens, const std::vector<std::tuple<Rational, int, Index>>& terms) {
    std::vector<Rational> v(gens.size(), 0);
    for (const auto& [c, m, k] : terms) v[generator_position(gens, m, k)] += c;
    return primitive_integer_vector(v);
}

// The displayed weight 3, 4, 5 relations as lhs - rhs.
std::vector<std::vector<std::tuple<Rational, int, Index>>> listed_relations(int k) {
    const Rational h = frac(1, 2), q = frac(1, 4), e = frac(1, 8);
    if (k == 3) return {{{1, 0, {2, 1}}, {h, 1, {1, 1}}}};
    if (k == 4)
        return {{{1, 0, {3, 1}}, {-1, 0, {2, 1, 1}}, {-h, 1, {1, 1, 1}}, {-q, 2, {1, 1}}},
                {{1, 0, {2, 2}}, {1, 0, {2, 1, 1}}, {h, 1, {1, 1, 1}}, {-q, 2, {1, 1}}}};
    return {{{1, 0, {4, 1}}, {frac(3, 2), 1, {2, 1, 1}}, {frac(3, 4), 2, {1, 1, 1}}, {e, 3, {1, 1}}},
            {{1, 0, {3, 2}}, {-h, 1, {2, 1, 1}}, {-q, 2, {1, 1, 1}}, {e, 3, {1, 1}}},
            {{1, 0, {2, 2, 1}}, {1, 1, {2, 1, 1}}, {frac(1, 3), 2, {1, 1, 1}}}};
}

Outcome cyclotomic_table() {
    const std::vector<long> expect = {1, 2, 4, 7, 12, 19}, expect_q = {1, 1, 2, 3, 5, 7};
    std::vector<long> got, quotient;
    bool verified = true, lists = true, labels = true;
    std::vector<GeneratorLabel> prev_gens;
    IntMat prev_span;
    long prev_dim = 0;
    const auto t0 = std::chrono::steady_clock::now();
    for (int k = 2; k <= 7; ++k) {
        CyclotomicRun run = cyclotomic_relation_space(k, int_range(2, 40));
        got.push_back(run.report.dimension);
        quotient.push_back(run.report.dimension - prev_dim);
        prev_dim = run.report.dimension;
        verified = verified && run.verified;
        labels = labels && run.report.status == kConjecturalNumeric;
        const auto& gens = run.basis.generators;
        if (k >= 3 && k <= 5) {
            IntMat span;
            for (const auto& r : listed_relations(k)) span.push_back(listed(gens, r));
            for (const auto& a : prev_span) {
                IntVec v(gens.size(), 0);
                for (std::size_t i = 0; i < prev_gens.size(); ++i)
                    v[generator_position(gens, prev_gens[i].m + 1, prev_gens[i].index)] += a[i];
                span.push_back(v);
            }
            lists = lists && same_span(run.basis.vectors(), span, gens.size());
            prev_gens = gens;
            prev_span = span;
        }
        const IntMat proven = proven_cyclotomic_relations(k, gens);
        for (const auto& r : run.basis.relations)
            labels = labels && (r.status == kProven) == in_span(proven, r.vector, gens.size());
        if (k == 3) labels = labels && run.basis.relations.size() == 1 && run.basis.relations[0].status == kProven;
        if (k == 4 || k == 5) {
            std::size_t conj = 0;
            for (const auto& r : run.basis.relations) conj += r.status == kConjectural;
            labels = labels && conj > 0;
        }
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::ostringstream os;
    os << "dims k=2..7: " << join(got) << ", quotients " << join(quotient) << ", weight 3/4/5 lists "
       << (lists ? "recovered" : "NOT recovered") << ", labels " << (labels ? "ok" : "wrong") << ", " << secs << " s";
    return {got == expect && quotient == expect_q && verified && lists && labels && secs < 600, os.str()};
}

SuiteParams params(int max_weight) {
    SuiteParams sp;
    sp.max_weight = max_weight;
    sp.random_samples = 0;
    return sp;
}

Outcome fmzv_reduction() {
    SuiteParams sp = params(5);
    sp.prime_max = 50;
    SuiteReport r = suite_fmzv_reduction(sp);
    return {r.all_passed() && !r.checks.empty(), "weight <= 5, primes 3..47: " + suite_detail(r)};
}

Outcome q_kamano() {
    SuiteParams sp = params(5);
    sp.n_min = 2;
    sp.n_max = 20;
    SuiteReport r = suite_q_kamano(sp);
    return {r.all_passed() && !r.checks.empty(), "weight <= 5, n = 2..20: " + suite_detail(r)};
}

Outcome word_identities() {
    SuiteReport w = suite_identity_words(params(7));
    SuiteReport g = suite_generating(params(5));
    // compositions of w with at least two parts: 2^{w-1} - 1
    std::size_t expect = 0;
    for (int w = 2; w <= 7; ++w) expect += (std::size_t(1) << (w - 1)) - 1;
    return {w.all_passed() && g.all_passed() && w.checks.size() == expect,
            "identity words weight <= 7: " + suite_detail(w) + "; generating series weight <= 5: " + suite_detail(g)};
}

Outcome q_series() {
    SuiteParams sp = params(4);
    sp.series_order = 30;
    SuiteReport r = suite_q_series(sp, 4);
    return {r.all_passed() && !r.checks.empty(), "q in {1/2, -2/3, 5/7}, N = 30: " + suite_detail(r)};
}

Outcome balanced_sums() {
    SuiteParams sp = params(8);
    sp.n_max = 30;
    SuiteReport s = suite_sym_sum(sp);
    sp.prime_max = 200;
    sp.digits = 40;
    SuiteReport b = suite_balanced_limits(sp);
    return {s.all_passed() && b.all_passed() && !s.checks.empty(),
            "exact n = 2..30: " + suite_detail(s) + "; primes <= 200 and 40 digits: " + suite_detail(b)};
}

Outcome specials() {
    SuiteParams sp = params(8);
    sp.prime_max = 200;
    SuiteReport r = suite_specials(sp);
    std::size_t pairs = 0, twos = 0, ones = 0;
    for (const auto& c : r.checks) {
        pairs += c.instance.rfind("pair", 0) == 0;
        twos += c.instance.rfind("twos-one", 0) == 0;
        ones += c.instance.rfind("ones", 0) == 0;
    }
    return {r.all_passed() && pairs && twos && ones,
            "pairs " + std::to_string(pairs) + ", twos-one " + std::to_string(twos) + ", ones " + std::to_string(ones) +
                ": " + suite_detail(r)};
}

Outcome anchors() {
    NumericContext ctx(60);
    const auto prec = ctx.precision();
    double worst = -1e9;
    for (int k = 2; k <= 5; ++k) {
        BigFloat d = ctx.omega_limit(repeated(1, k)) + BigFloat::zeta(static_cast<unsigned long>(k), prec) * factorial(k);
        worst = std::max(worst, d.log10_abs());
    }
    for (int k = 3; k <= 6; ++k) {
        std::vector<int> parts(static_cast<std::size_t>(k - 2), 1);
        parts.insert(parts.begin(), 2);
        BigFloat d = ctx.zeta_s(Index(parts)) - BigFloat::zeta(static_cast<unsigned long>(k), prec) * static_cast<long>(k);
        worst = std::max(worst, d.log10_abs());
    }
    std::ostringstream os;
    os << "largest error 10^" << worst << " at 60 digits";
    return {worst < -40, os.str()};
}

Outcome convergence() {
    NumericContext ctx(30);
    bool ok = true;
    std::ostringstream os;
    for (const auto& k : {Index{1, 1}, Index{2, 1}, Index{1, 1, 1}}) {
        const BigFloat limit = ctx.omega_limit(k);
        double last = 1e300;
        os << "(" << k.to_string() << ")";
        for (int n : {50, 100, 200, 400}) {
            const BigComplex v = omega_circle_num(k, n, 30);
            const double e = (v - BigComplex(limit, BigFloat(limit.precision()))).abs().to_double();
            ok = ok && e < last;
            last = e;
            os << " " << e;
        }
        ok = ok && last < 0.05;
        os << "; ";
    }
    return {ok, "errors at n = 50,100,200,400: " + os.str() + "final threshold 0.05"};
}

Outcome products_and_kernels() {
    bool ok = true;
    std::ostringstream os;
    for (const auto& id : product_identities()) {
        const ProductCheck pc = check_product(id, int_range(2, 40));
        ok = ok && pc.holds;
        os << id.name << (pc.holds ? " holds" : " fails at n=" + std::to_string(pc.failing_n)) << "; ";
    }
    ConjectureParams p;
    p.include_cyclotomic = false;
    for (int k = 3; k <= 6; ++k) {
        const ConjectureReport rep = conjecture_report(k, p);
        ok = ok && rep.kernels_agree;
        os << "weight " << k << (rep.kernels_agree ? " kernels agree" : " kernels differ") << (k < 6 ? ", " : "");
    }
    return {ok, os.str()};
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"finite dimension table", finite_table},
        {"cyclotomic dimension tables and relation lists", cyclotomic_table},
        {"cyclotomic values reduce to finite values", fmzv_reduction},
        {"q-analogue of the Kamano formula", q_kamano},
        {"word identity and generating series", word_identities},
        {"q-series shuffle product", q_series},
        {"balanced sums", balanced_sums},
        {"special finite values", specials},
        {"numeric anchors", anchors},
        {"convergence on the unit circle", convergence},
        {"product identities and kernel agreement", products_and_kernels},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        failed += !o.passed;
        std::printf("criterion %2zu %s  %s: %s\n", i + 1, o.passed ? "PASS" : "FAIL", criteria[i].first.c_str(),
                    o.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria failed\n", failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
