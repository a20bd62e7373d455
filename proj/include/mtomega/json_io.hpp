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
// JSON and CSV forms of the domain types. Rationals are written as "p" or
// "p/q" strings; every to_json has a matching from_json.

#ifndef MTOMEGA_JSON_IO_HPP
#define MTOMEGA_JSON_IO_HPP

#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "mtomega/cyclo.hpp"
#include "mtomega/hbar.hpp"
#include "mtomega/modular.hpp"
#include "mtomega/numeric.hpp"
#include "mtomega/relations.hpp"
#include "mtomega/words.hpp"

namespace mtomega {

using Json = nlohmann::ordered_json;

inline std::string rational_string(const Rational& x) { return x.get_str(); }

inline Json index_json(const Index& k) { return Json(k.parts()); }

inline Index index_from_json(const Json& j) {
    if (!j.is_array()) throw ParseError("index must be a JSON array");
    return Index(j.get<std::vector<int>>());
}

// ---------------------------------------------------------------------------
// Word and hbar sums

inline Json to_json(const WordSum& u) {
    Json terms = Json::array();
    for (const auto& [w, c] : u) terms.push_back({{"coeff", rational_string(c)}, {"word", w.to_string()}});
    return {{"terms", terms}};
}

inline WordSum word_sum_from_json(const Json& j) {
    WordSum u;
    for (const auto& t : j.at("terms")) {
        const std::string w = t.at("word").get<std::string>();
        u.add(Word::parse(w), parse_rational(t.at("coeff").get<std::string>()));
    }
    return u;
}

inline Json to_json(const HbarSum& u) {
    Json terms = Json::array();
    for (const auto& [m, c] : u) {
        Json ew = Json::array();
        for (int k : m.eword.parts()) {
            if (k == kHat)
                ew.push_back("1hat");
            else
                ew.push_back(k);
        }
        terms.push_back({{"coeff", rational_string(c)}, {"hbar", m.hbar}, {"eword", ew}});
    }
    return {{"terms", terms}};
}

inline HbarSum hbar_sum_from_json(const Json& j) {
    HbarSum u;
    for (const auto& t : j.at("terms")) {
        std::vector<int> parts;
        for (const auto& e : t.at("eword")) {
            if (e.is_string()) {
                if (e.get<std::string>() != "1hat") throw ParseError("unknown letter " + e.dump());
                parts.push_back(kHat);
            } else {
                parts.push_back(e.get<int>());
            }
        }
        u.add(t.at("hbar").get<int>(), ExtendedIndex(parts), parse_rational(t.at("coeff").get<std::string>()));
    }
    return u;
}

// ---------------------------------------------------------------------------
// Residues, cyclotomic numbers, reals

inline Json to_json(const Residue& r) { return {{"p", r.prime}, {"res", r.value}}; }

inline Residue residue_from_json(const Json& j) { return {j.at("p").get<std::int64_t>(), j.at("res").get<std::int64_t>()}; }

inline Json to_json(const CycloElem& x) {
    Json c = Json::array();
    for (const auto& q : x.coeffs()) c.push_back(rational_string(q));
    return {{"n", x.n()}, {"coeffs", c}};
}

inline CycloElem cyclo_from_json(const Json& j) {
    auto ctx = make_cyclo_ctx(j.at("n").get<int>());
    std::vector<Rational> c;
    for (const auto& s : j.at("coeffs")) c.push_back(parse_rational(s.get<std::string>()));
    if (static_cast<int>(c.size()) != ctx->degree) throw ParseError("coefficient count does not match phi(n)");
    return CycloElem(ctx, std::move(c));
}

inline Json to_json(const BigReal& x) { return {{"value", x.to_string()}, {"certified_digits", x.certified_digits}}; }

inline BigReal big_real_from_json(const Json& j) {
    const int digits = j.at("certified_digits").get<int>();
    return {BigFloat::parse(j.at("value").get<std::string>(), bits_for_digits(digits + kGuardDigits)), digits};
}

inline Json to_json(const BigComplex& z, int digits) {
    return {{"re", z.re.to_string(digits)}, {"im", z.im.to_string(digits)}, {"certified_digits", digits}};
}

inline BigComplex big_complex_from_json(const Json& j) {
    const auto prec = bits_for_digits(j.at("certified_digits").get<int>() + kGuardDigits);
    return {BigFloat::parse(j.at("re").get<std::string>(), prec), BigFloat::parse(j.at("im").get<std::string>(), prec)};
}

// ---------------------------------------------------------------------------
// Relation spaces

inline Json int_vector_json(const IntVec& v) {
    Json a = Json::array();
    for (const auto& x : v) {
        if (x.fits_slong_p())
            a.push_back(x.get_si());
        else
            a.push_back(x.get_str());
    }
    return a;
}

inline IntVec int_vector_from_json(const Json& j) {
    IntVec v;
    for (const auto& x : j) v.push_back(x.is_string() ? Integer(x.get<std::string>()) : Integer(x.get<long>()));
    return v;
}

inline Json to_json(const GeneratorLabel& g) { return {{"m", g.m}, {"index", index_json(g.index)}, {"label", g.to_string()}}; }

inline Json to_json(const RelationBasis& b, const DimReport& r) {
    Json gens = Json::array(), rels = Json::array();
    for (const auto& g : b.generators) gens.push_back(to_json(g));
    for (const auto& rel : b.relations) rels.push_back({{"vector", int_vector_json(rel.vector)}, {"status", rel.status}});
    return {{"weight", r.weight},
            {"provenance", b.provenance},
            {"generators", gens},
            {"relations", rels},
            {"generator_count", r.generator_count},
            {"relation_count", r.relation_count},
            {"dimension", r.dimension},
            {"status", r.status}};
}

inline std::pair<RelationBasis, DimReport> relation_space_from_json(const Json& j) {
    RelationBasis b;
    DimReport r;
    b.provenance = j.at("provenance").get<std::string>();
    for (const auto& g : j.at("generators")) b.generators.push_back({g.at("m").get<int>(), index_from_json(g.at("index"))});
    for (const auto& rel : j.at("relations"))
        b.relations.push_back({int_vector_from_json(rel.at("vector")), rel.at("status").get<std::string>()});
    r.weight = j.at("weight").get<int>();
    r.generator_count = j.at("generator_count").get<std::size_t>();
    r.relation_count = j.at("relation_count").get<std::size_t>();
    r.dimension = j.at("dimension").get<long>();
    r.status = j.at("status").get<std::string>();
    return {b, r};
}

inline Json to_json(const FiniteRun& run) {
    Json j = to_json(run.basis, run.report);
    j["training_primes"] = run.training_primes;
    j["holdout_primes"] = run.holdout_primes;
    j["rejected_candidates"] = run.rejected_candidates;
    return j;
}

inline Json to_json(const CyclotomicRun& run) {
    Json j = to_json(run.basis, run.report);
    j["n_range"] = {run.n_range.empty() ? 0 : run.n_range.front(), run.n_range.empty() ? 0 : run.n_range.back()};
    j["verify_range"] = run.verify_range;
    j["kernel_history"] = run.kernel_history;
    j["stabilized_at"] = run.stabilized_at;
    j["verified"] = run.verified;
    return j;
}

inline Json to_json(const SymmetricRun& run) {
    Json j = to_json(run.basis, run.report);
    j["digits"] = run.digits;
    Json aug = Json::array();
    for (const auto& h : run.augmentation) aug.push_back("zeta(2) zeta(" + h.to_string() + ")");
    j["augmentation"] = aug;
    Json full = Json::array();
    for (const auto& v : run.full_vectors) full.push_back(int_vector_json(v));
    j["full_vectors"] = full;
    return j;
}

inline Json to_json(const ConjectureReport& rep) {
    Json j;
    j["weight"] = rep.weight;
    j["kernels_agree"] = rep.kernels_agree;
    j["finite"] = to_json(rep.finite);
    j["symmetric"] = to_json(rep.symmetric);
    j["finite_in_symmetric"] = rep.finite_in_symmetric;
    j["symmetric_in_finite"] = rep.symmetric_in_finite;
    if (rep.cyclotomic) {
        Json proj = Json::array();
        for (std::size_t i = 0; i < rep.cyclotomic_projections.size(); ++i)
            proj.push_back({{"vector", int_vector_json(rep.cyclotomic_projections[i])},
                            {"in_finite", static_cast<bool>(rep.projection_in_finite[i])},
                            {"in_symmetric", static_cast<bool>(rep.projection_in_symmetric[i])}});
        j["cyclotomic"] = to_json(*rep.cyclotomic);
        j["cyclotomic_projections"] = proj;
    }
    Json prods = Json::array();
    for (const auto& p : rep.products) {
        Json pj = {{"name", p.name}, {"weight", p.weight}, {"holds", p.holds}};
        if (!p.holds) pj["failing_n"] = p.failing_n;
        pj["consequence"] = int_vector_json(p.consequence);
        if (p.weight == rep.weight) {
            pj["consequence_in_finite"] = p.consequence_in_finite;
            pj["consequence_in_symmetric"] = p.consequence_in_symmetric;
        }
        prods.push_back(pj);
    }
    j["products"] = prods;
    return j;
}

// weight,generators,relations,dimension,status
inline std::string dims_csv(const std::vector<DimReport>& rows) {
    std::ostringstream os;
    os << "weight,generators,relations,dimension,status\n";
    for (const auto& r : rows)
        os << r.weight << ',' << r.generator_count << ',' << r.relation_count << ',' << r.dimension << ',' << r.status
           << '\n';
    return os.str();
}

}  // namespace mtomega

#endif  // MTOMEGA_JSON_IO_HPP
