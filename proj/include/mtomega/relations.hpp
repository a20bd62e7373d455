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
// Relation mining among finite, cyclotomic and symmetric multiple omega values,
// with dimension accounting.

#ifndef MTOMEGA_RELATIONS_HPP
#define MTOMEGA_RELATIONS_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mtomega/cyclo.hpp"
#include "mtomega/errors.hpp"
#include "mtomega/index.hpp"
#include "mtomega/lattice.hpp"
#include "mtomega/modular.hpp"
#include "mtomega/numeric.hpp"
#include "mtomega/pslq.hpp"

namespace mtomega {

inline const char* const kProven = "proven";
inline const char* const kConjectural = "conjectural";
inline const char* const kConjecturalNumeric = "conjectural-numeric";

// (1 - zeta)^m omega(index)
struct GeneratorLabel {
    int m = 0;
    Index index;

    std::string to_string() const {
        std::string s = "omega(" + index.to_string() + ")";
        if (m == 0) return s;
        return (m == 1 ? std::string("(1-z)") : "(1-z)^" + std::to_string(m)) + " " + s;
    }
    friend bool operator==(const GeneratorLabel& a, const GeneratorLabel& b) { return a.m == b.m && a.index == b.index; }
};

struct Relation {
    IntVec vector;
    std::string status = kConjectural;
};

struct RelationBasis {
    std::vector<GeneratorLabel> generators;
    std::vector<Relation> relations;
    std::string provenance;

    IntMat vectors() const {
        IntMat out;
        for (const auto& r : relations) out.push_back(r.vector);
        return out;
    }
};

struct DimReport {
    int weight = 0;
    std::size_t generator_count = 0;
    std::size_t relation_count = 0;
    long dimension = 0;
    std::string status = kConjecturalNumeric;
};

struct FiniteRun {
    RelationBasis basis;
    DimReport report;
    std::vector<std::int64_t> training_primes;
    std::vector<std::int64_t> holdout_primes;
    std::size_t rejected_candidates = 0;
};

struct CyclotomicRun {
    RelationBasis basis;
    DimReport report;
    std::vector<int> n_range;
    std::vector<int> verify_range;
    // kernel dimension after each n of n_range
    std::vector<std::size_t> kernel_history;
    int stabilized_at = 0;
    bool verified = true;
};

struct SymmetricRun {
    RelationBasis basis;
    DimReport report;
    int digits = 0;
    std::vector<Index> augmentation;  // zeta(2) zeta(w) for these Hoffman indices
    std::vector<IntVec> full_vectors;  // relations including augmentation coordinates
};

// ---------------------------------------------------------------------------
// Generators and shared helpers

// Unordered indices of weight k and length >= 2.
inline std::vector<GeneratorLabel> omega_generators(int k) {
    std::vector<GeneratorLabel> out;
    for (auto& p : partitions(k, 2)) out.push_back({0, p});
    return out;
}

inline bool ends_with_two_ones(const Index& k) {
    const std::size_t r = k.length();
    return r >= 2 && k[r - 1] == 1 && k[r - 2] == 1;
}

// (m, index) with m + wt = k, r >= 2; indices ending in 1,1 first, then by m.
inline std::vector<GeneratorLabel> cyclotomic_generators(int k) {
    std::vector<GeneratorLabel> out;
    for (int group = 0; group < 2; ++group)
        for (int m = 0; m + 2 <= k; ++m)
            for (auto& p : partitions(k - m, 2))
                if (ends_with_two_ones(p) == (group == 0)) out.push_back({m, p});
    return out;
}

inline std::size_t generator_position(const std::vector<GeneratorLabel>& gens, int m, const Index& k) {
    Index s = k.sorted_descending();
    for (std::size_t i = 0; i < gens.size(); ++i)
        if (gens[i].m == m && gens[i].index == s) return i;
    return gens.size();
}

// Q-span membership and equality via exact row reduction.
inline bool in_span(const IntMat& basis, const IntVec& v, std::size_t d) {
    RationalKernel rk(d);
    for (const auto& b : basis) rk.add_row(std::vector<Rational>(b.begin(), b.end()));
    return !rk.add_row(std::vector<Rational>(v.begin(), v.end()));
}

inline std::size_t span_rank(const IntMat& basis, std::size_t d) {
    RationalKernel rk(d);
    for (const auto& b : basis) rk.add_row(std::vector<Rational>(b.begin(), b.end()));
    return rk.rank();
}

inline bool same_span(const IntMat& a, const IntMat& b, std::size_t d) {
    IntMat both = a;
    both.insert(both.end(), b.begin(), b.end());
    const std::size_t r = span_rank(both, d);
    return r == span_rank(a, d) && r == span_rank(b, d);
}

// Relations among weight-k finite or symmetric values known to hold for all
// such values: omega(k1, k2) = 0 and sum_j omega(k_1, ..., k_j - 1, ..., k_r) = 0
// for k_i >= 2 (which contains omega({2}^{r-1}, 1) = 0).
inline IntMat proven_omega_relations(int k, const std::vector<GeneratorLabel>& gens) {
    IntMat out;
    const std::size_t d = gens.size();
    for (std::size_t i = 0; i < d; ++i)
        if (gens[i].index.length() == 2) {
            IntVec v(d, 0);
            v[i] = 1;
            out.push_back(v);
        }
    for (const auto& kp : partitions(k + 1, 2)) {
        if (std::any_of(kp.begin(), kp.end(), [](int x) { return x < 2; })) continue;
        IntVec v(d, 0);
        for (std::size_t j = 0; j < kp.length(); ++j) {
            std::vector<int> p(kp.begin(), kp.end());
            --p[j];
            std::size_t pos = generator_position(gens, 0, Index(p));
            if (pos < d) v[pos] += 1;
        }
        if (!is_zero_vector(v)) out.push_back(v);
    }
    return out;
}

// Balanced-sum relations (1 - zeta)^j S(k') = 0 for k' with parts >= 2.
inline IntMat proven_cyclotomic_relations(int k, const std::vector<GeneratorLabel>& gens) {
    IntMat out;
    const std::size_t d = gens.size();
    for (int j = 0; j + 3 <= k; ++j)
        for (const auto& kp : partitions(k + 1 - j, 2)) {
            if (std::any_of(kp.begin(), kp.end(), [](int x) { return x < 2; })) continue;
            std::vector<Rational> v(d, 0);
            bool ok = true;
            for (const auto& t : sym_sum_terms(kp)) {
                std::size_t pos = generator_position(gens, t.m + j, t.l);
                if (pos == d) {
                    ok = false;
                    break;
                }
                v[pos] += t.coeff;
            }
            if (ok) out.push_back(make_primitive(primitive_integer_vector(v)));
        }
    return out;
}

inline void label_statuses(RelationBasis& basis, const IntMat& proven) {
    const std::size_t d = basis.generators.size();
    for (auto& r : basis.relations) r.status = in_span(proven, r.vector, d) ? kProven : kConjectural;
}

inline DimReport make_report(int k, const RelationBasis& basis) {
    DimReport rep;
    rep.weight = k;
    rep.generator_count = basis.generators.size();
    rep.relation_count = basis.relations.size();
    rep.dimension = static_cast<long>(rep.generator_count) - static_cast<long>(rep.relation_count);
    const bool all_proven = std::all_of(basis.relations.begin(), basis.relations.end(),
                                        [](const Relation& r) { return r.status == kProven; });
    rep.status = rep.dimension == 0 && all_proven ? kProven : kConjecturalNumeric;
    return rep;
}

// ---------------------------------------------------------------------------
// Finite side: congruence lattices over a prime set

struct FiniteParams {
    std::size_t training = 40;
    std::size_t holdout = 20;
    Integer height_bound = 1024;
    std::int64_t prime_max = 400;
};

inline std::vector<std::int64_t> omega_residues(const std::vector<GeneratorLabel>& gens, std::int64_t p) {
    OmegaModEngine eng(p);
    std::vector<std::int64_t> v;
    v.reserve(gens.size());
    for (const auto& g : gens) v.push_back(eng.omega(g.index));
    return v;
}

inline bool vanishes_mod(const IntVec& a, const std::vector<std::int64_t>& v, std::int64_t p) {
    Integer s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * static_cast<long>(v[i]);
    Integer r;
    mpz_fdiv_r_ui(r.get_mpz_t(), s.get_mpz_t(), static_cast<unsigned long>(p));
    return r == 0;
}

inline FiniteRun finite_relation_space(int k, const std::vector<std::int64_t>& training,
                                       const std::vector<std::int64_t>& holdout, const Integer& height_bound) {
    FiniteRun run;
    run.training_primes = training;
    run.holdout_primes = holdout;
    run.basis.provenance = "finite";
    run.basis.generators = omega_generators(k);
    const std::size_t d = run.basis.generators.size();
    for (auto p : training)
        if (p <= k + 2) throw RangeError("training primes must exceed k + 2");
    if (d > 0) {
        IntMat lat = identity_lattice(d);
        for (auto p : training) {
            auto v = omega_residues(run.basis.generators, p);
            intersect_congruence(lat, std::vector<long>(v.begin(), v.end()), p);
            lat = lll_reduce(lat);
        }
        std::vector<std::vector<std::int64_t>> hold;
        for (auto p : holdout) hold.push_back(omega_residues(run.basis.generators, p));
        IntMat kept;
        for (const auto& b : lat) {
            if (height(b) > height_bound) continue;
            bool ok = true;
            for (std::size_t i = 0; i < holdout.size() && ok; ++i) ok = vanishes_mod(b, hold[i], holdout[i]);
            if (ok)
                kept.push_back(make_primitive(b));
            else
                ++run.rejected_candidates;
        }
        if (!kept.empty()) kept = lll_reduce(kept);
        for (auto& v : kept) run.basis.relations.push_back({make_primitive(v), kConjectural});
    }
    label_statuses(run.basis, proven_omega_relations(k, run.basis.generators));
    run.report = make_report(k, run.basis);
    return run;
}

// First `training` primes above k + 2, then the next `holdout` primes.
inline FiniteRun finite_relation_space(int k, const FiniteParams& params = {}) {
    auto all = primes_above(k + 2, params.training + params.holdout);
    if (!all.empty() && all.back() >= params.prime_max)
        throw RangeError("not enough primes below " + std::to_string(params.prime_max));
    std::vector<std::int64_t> training(all.begin(), all.begin() + static_cast<long>(params.training));
    std::vector<std::int64_t> holdout(all.begin() + static_cast<long>(params.training), all.end());
    return finite_relation_space(k, training, holdout, params.height_bound);
}

// ---------------------------------------------------------------------------
// Cyclotomic side: exact kernels over stacked Q(zeta_n) constraints

// n^k (1 - zeta)^m omega_n(index) in Z[zeta_n] for every generator.
inline std::vector<detail::IntCyclo> scaled_generator_values(const std::vector<GeneratorLabel>& gens, int k,
                                                             CycloEvaluator& ev) {
    const auto& ctx = *ev.ctx();
    const std::size_t deg = static_cast<std::size_t>(ctx.degree);
    detail::IntCyclo h(deg, 0);
    for (std::size_t i = 0; i < deg; ++i) h[i] = ctx.xpow[0][i] - ctx.xpow[1][i];
    std::vector<detail::IntCyclo> hpow{ctx.xpow[0]};
    std::vector<detail::IntCyclo> out;
    for (const auto& g : gens) {
        while (static_cast<int>(hpow.size()) <= g.m) hpow.push_back(detail::int_mul(hpow.back(), h, ctx));
        detail::IntCyclo v(deg, 0);
        if (static_cast<int>(g.index.length()) <= ev.n()) {
            v = detail::int_mul(ev.omega_scaled(g.index), hpow[static_cast<std::size_t>(g.m)], ctx);
            const Integer s = ipow(Integer(ev.n()), static_cast<unsigned long>(k - g.index.weight()));
            for (auto& c : v) c *= s;
        }
        out.push_back(std::move(v));
    }
    return out;
}

inline bool relation_vanishes(const std::vector<detail::IntCyclo>& vals, const IntVec& a) {
    for (std::size_t t = 0; t < vals[0].size(); ++t) {
        Integer s = 0;
        for (std::size_t g = 0; g < vals.size(); ++g)
            if (a[g] != 0) s += a[g] * vals[g][t];
        if (s != 0) return false;
    }
    return true;
}

inline bool cyclotomic_relation_holds(const std::vector<GeneratorLabel>& gens, int k, const IntVec& a, int n) {
    CycloEvaluator ev(n);
    return relation_vanishes(scaled_generator_values(gens, k, ev), a);
}

inline std::vector<int> int_range(int lo, int hi) {
    std::vector<int> out;
    for (int n = lo; n <= hi; ++n) out.push_back(n);
    return out;
}

inline CyclotomicRun cyclotomic_relation_space(int k, const std::vector<int>& n_range,
                                               const std::vector<int>& verify_range = int_range(41, 45)) {
    CyclotomicRun run;
    run.n_range = n_range;
    run.verify_range = verify_range;
    run.basis.provenance = "cyclotomic";
    run.basis.generators = cyclotomic_generators(k);
    const auto& gens = run.basis.generators;
    const std::size_t d = gens.size();
    RationalKernel rk(d);
    std::size_t last_dim = d + 1;
    for (int n : n_range) {
        if (n < 2) throw RangeError("cyclotomic constraints need n >= 2");
        if (rk.rank() < d) {
            CycloEvaluator ev(n);
            auto vals = scaled_generator_values(gens, k, ev);
            const std::size_t deg = static_cast<std::size_t>(ev.ctx()->degree);
            for (std::size_t t = 0; t < deg && rk.rank() < d; ++t) {
                std::vector<Rational> row(d);
                for (std::size_t g = 0; g < d; ++g) row[g] = vals[g][t];
                rk.add_row(std::move(row));
            }
        }
        const std::size_t dim = d - rk.rank();
        run.kernel_history.push_back(dim);
        if (dim != last_dim) run.stabilized_at = n;
        last_dim = dim;
    }
    for (auto& v : rk.kernel()) run.basis.relations.push_back({v, kConjectural});
    for (int n : verify_range) {
        if (run.basis.relations.empty()) break;
        CycloEvaluator ev(n);
        auto vals = scaled_generator_values(gens, k, ev);
        for (const auto& r : run.basis.relations)
            if (!relation_vanishes(vals, r.vector)) run.verified = false;
    }
    label_statuses(run.basis, proven_cyclotomic_relations(k, gens));
    run.report = make_report(k, run.basis);
    return run;
}

// Part of a cyclotomic relation surviving zeta -> 1, in the coordinates of
// omega_generators(k).
inline IntVec project_m0(const RelationBasis& cyc, const IntVec& rel, const std::vector<GeneratorLabel>& target) {
    IntVec v(target.size(), 0);
    for (std::size_t i = 0; i < cyc.generators.size(); ++i) {
        if (cyc.generators[i].m != 0 || rel[i] == 0) continue;
        std::size_t pos = generator_position(target, 0, cyc.generators[i].index);
        if (pos < target.size()) v[pos] += rel[i];
    }
    return v;
}

// ---------------------------------------------------------------------------
// Symmetric side: PSLQ on Omega values with zeta(2) augmentation

// Indices with all parts in {2, 3} of the given weight.
inline std::vector<Index> hoffman_indices(int weight) {
    std::vector<Index> out;
    if (weight == 0) {
        out.emplace_back();
        return out;
    }
    for (const auto& c : compositions(weight, 1))
        if (std::all_of(c.begin(), c.end(), [](int x) { return x == 2 || x == 3; })) out.push_back(c);
    return out;
}

struct SymmetricParams {
    int digits = 100;
    Integer max_height = Integer("1000000000000");
};

inline SymmetricRun symmetric_relation_space(int k, const SymmetricParams& params = {}) {
    if (params.digits < 50) throw PrecisionError("symmetric relation mining needs at least 50 digits");
    SymmetricRun run;
    run.digits = params.digits;
    run.basis.provenance = "symmetric";
    run.basis.generators = omega_generators(k);
    const std::size_t d = run.basis.generators.size();
    if (k >= 2) run.augmentation = hoffman_indices(k - 2);
    const int verify = (3 * params.digits + 1) / 2;
    NumericContext ctx(verify);
    std::vector<BigReal> values;
    for (const auto& g : run.basis.generators) values.push_back({ctx.omega_limit(g.index), verify});
    const BigFloat z2 = ctx.mzv(WordSum(Word::y(2)));
    for (const auto& h : run.augmentation)
        values.push_back({z2 * ctx.mzv(WordSum(word_of_index(h))), verify});

    // active coordinates; each relation found removes its last Omega coordinate
    std::vector<std::size_t> active(values.size());
    for (std::size_t i = 0; i < active.size(); ++i) active[i] = i;
    PslqOptions opt;
    opt.max_height = params.max_height;
    while (active.size() >= 2 && std::any_of(active.begin(), active.end(), [&](std::size_t i) { return i < d; })) {
        std::vector<BigReal> xs;
        for (auto i : active) xs.push_back(values[i]);
        auto rel = pslq(xs, params.digits, opt);
        if (!rel) break;
        IntVec full(values.size(), 0);
        std::size_t last_omega = active.size(), last_any = active.size();
        for (std::size_t j = 0; j < active.size(); ++j) {
            full[active[j]] = (*rel)[j];
            if ((*rel)[j] == 0) continue;
            last_any = j;
            if (active[j] < d) last_omega = j;
        }
        if (last_omega < active.size()) {
            run.full_vectors.push_back(full);
            IntVec omega_part(full.begin(), full.begin() + static_cast<long>(d));
            run.basis.relations.push_back({make_primitive(omega_part), kConjectural});
            active.erase(active.begin() + static_cast<long>(last_omega));
        } else {
            // a relation among the augmentation values alone: drop one of them
            active.erase(active.begin() + static_cast<long>(last_any));
        }
    }
    // a single remaining Omega value is a relation only if it vanishes
    if (active.size() == 1 && active[0] < d && values[active[0]].value.log10_abs() < -verify + 5) {
        IntVec v(d, 0);
        v[active[0]] = 1;
        run.basis.relations.push_back({v, kConjectural});
    }
    if (!run.basis.relations.empty()) {
        IntMat reduced = lll_reduce(run.basis.vectors());
        run.basis.relations.clear();
        for (auto& v : reduced) run.basis.relations.push_back({make_primitive(v), kConjectural});
    }
    label_statuses(run.basis, proven_omega_relations(k, run.basis.generators));
    run.report = make_report(k, run.basis);
    return run;
}

// ---------------------------------------------------------------------------
// Comparison of the three sides

struct ProductCheck {
    std::string name;
    int weight = 0;
    bool holds = true;            // exactly in Q(zeta_n) for every tested n
    int failing_n = 0;
    IntVec consequence;           // m = 0 part of the right-hand side, in omega_generators(weight)
    bool consequence_in_finite = false;
    bool consequence_in_symmetric = false;
};

struct ConjectureParams {
    FiniteParams finite;
    SymmetricParams symmetric;
    std::vector<int> n_range = int_range(2, 40);
    bool include_cyclotomic = true;
};

struct ConjectureReport {
    int weight = 0;
    FiniteRun finite;
    SymmetricRun symmetric;
    std::optional<CyclotomicRun> cyclotomic;
    bool kernels_agree = false;
    std::vector<bool> finite_in_symmetric;
    std::vector<bool> symmetric_in_finite;
    std::vector<IntVec> cyclotomic_projections;
    std::vector<bool> projection_in_finite;
    std::vector<bool> projection_in_symmetric;
    std::vector<ProductCheck> products;
};

struct ProductIdentity {
    std::string name;
    Index left_a, left_b;
    std::vector<CycloTerm> right;
};

// The two displayed product identities among cyclotomic omega values.
inline std::vector<ProductIdentity> product_identities() {
    return {
        {"omega(1,1)^2",
         Index{1, 1},
         Index{1, 1},
         {{Rational(-5), 0, Index{2, 1, 1}}, {frac(-5, 2), 1, Index{1, 1, 1}}, {frac(1, 4), 2, Index{1, 1}}}},
        {"omega(1,1) omega(1,1,1)",
         Index{1, 1},
         Index{1, 1, 1},
         {{Rational(-2), 0, Index{2, 1, 1, 1}},
          {Rational(-3), 0, Index{3, 1, 1}},
          {Rational(-1), 1, Index{1, 1, 1, 1}},
          {Rational(-3), 1, Index{2, 1, 1}},
          {frac(-1, 3), 2, Index{1, 1, 1}}}},
    };
}

inline ProductCheck check_product(const ProductIdentity& id, const std::vector<int>& n_range) {
    ProductCheck pc;
    pc.name = id.name;
    pc.weight = id.left_a.weight() + id.left_b.weight();
    for (int n : n_range) {
        CycloEvaluator ev(n);
        CycloElem lhs = ev.omega(id.left_a) * ev.omega(id.left_b);
        if (!(lhs - evaluate_terms(id.right, ev)).is_zero()) {
            pc.holds = false;
            pc.failing_n = n;
            break;
        }
    }
    auto gens = omega_generators(pc.weight);
    std::vector<Rational> c(gens.size(), 0);
    for (const auto& t : id.right)
        if (t.m == 0) c[generator_position(gens, 0, t.l)] += t.coeff;
    pc.consequence = make_primitive(primitive_integer_vector(c));
    return pc;
}

inline ConjectureReport conjecture_report(int k, const ConjectureParams& params = {}) {
    ConjectureReport rep;
    rep.weight = k;
    rep.finite = finite_relation_space(k, params.finite);
    rep.symmetric = symmetric_relation_space(k, params.symmetric);
    const std::size_t d = rep.finite.basis.generators.size();
    const IntMat F = rep.finite.basis.vectors(), S = rep.symmetric.basis.vectors();
    rep.kernels_agree = same_span(F, S, d);
    for (const auto& v : F) rep.finite_in_symmetric.push_back(in_span(S, v, d));
    for (const auto& v : S) rep.symmetric_in_finite.push_back(in_span(F, v, d));
    if (params.include_cyclotomic && k >= 2) {
        rep.cyclotomic = cyclotomic_relation_space(k, params.n_range);
        for (const auto& r : rep.cyclotomic->basis.relations) {
            IntVec p = project_m0(rep.cyclotomic->basis, r.vector, rep.finite.basis.generators);
            if (is_zero_vector(p)) continue;
            rep.cyclotomic_projections.push_back(p);
            rep.projection_in_finite.push_back(in_span(F, p, d));
            rep.projection_in_symmetric.push_back(in_span(S, p, d));
        }
    }
    for (const auto& id : product_identities()) {
        ProductCheck pc = check_product(id, params.n_range);
        if (pc.weight == k) {
            pc.consequence_in_finite = in_span(F, pc.consequence, d);
            pc.consequence_in_symmetric = in_span(S, pc.consequence, d);
        }
        rep.products.push_back(std::move(pc));
    }
    return rep;
}

}  // namespace mtomega

#endif  // MTOMEGA_RELATIONS_HPP
