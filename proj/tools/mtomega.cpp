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
#include <algorithm>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mtomega/json_io.hpp"
#include "mtomega/relations.hpp"
#include "mtomega/suites.hpp"

using namespace mtomega;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitFailed = 2;

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Command-line and config-file settings. Unset optionals fall back to the
// per-command defaults.
struct RunConfig {
    std::string weights;
    std::optional<int> max_weight;
    std::optional<std::int64_t> prime_min;
    std::optional<std::int64_t> prime_max;
    std::optional<int> n_max;
    std::optional<int> digits;
    std::string height_bound = "1024";
    std::string format = "json";
    std::uint64_t seed = 1;
    bool force = false;
};

std::vector<int> parse_weights(const std::string& s) {
    std::vector<int> out;
    try {
        if (auto dots = s.find(".."); dots != std::string::npos) {
            const int lo = std::stoi(s.substr(0, dots)), hi = std::stoi(s.substr(dots + 2));
            for (int k = lo; k <= hi; ++k) out.push_back(k);
        } else {
            std::stringstream ss(s);
            std::string item;
            while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
        }
    } catch (const std::logic_error&) {
        throw ConfigError("malformed weight list '" + s + "' (expected a..b or a,b,c)");
    }
    if (out.empty()) throw ConfigError("empty weight list '" + s + "'");
    for (int k : out)
        if (k < 1) throw ConfigError("weights must be positive");
    return out;
}

void validate(const RunConfig& cfg, int top_weight) {
    if (cfg.digits && *cfg.digits < 30) throw ConfigError("--digits must be at least 30");
    if (cfg.n_max && *cfg.n_max < 2) throw ConfigError("--n-max must be at least 2");
    if (cfg.prime_max && *cfg.prime_max < 3) throw ConfigError("--prime-max must be at least 3");
    if (cfg.prime_min && *cfg.prime_min <= top_weight + 2)
        throw ConfigError("--prime-min must exceed the largest weight + 2 = " + std::to_string(top_weight + 2));
    if (cfg.prime_min && cfg.prime_max && *cfg.prime_min > *cfg.prime_max)
        throw ConfigError("--prime-min exceeds --prime-max");
    if (cfg.format != "json" && cfg.format != "csv") throw ConfigError("--format must be json or csv");
}

Index parse_index_arg(const std::string& s) {
    try {
        return Index::parse(s);
    } catch (const Error& e) {
        throw ConfigError(std::string("malformed index '") + s + "': " + e.what());
    }
}

std::string csv_bool(bool b) { return b ? "true" : "false"; }

// ---------------------------------------------------------------------------
// verify

struct SuiteDefaults {
    int max_weight;
    std::int64_t prime_max;
    int n_max;
};

const std::map<std::string, SuiteDefaults>& suite_defaults() {
    static const std::map<std::string, SuiteDefaults> d = {
        {"fmzv-reduction", {5, 50, 0}}, {"q-kamano", {5, 0, 20}},   {"identity-words", {7, 0, 0}},
        {"generating", {5, 0, 0}},      {"q-series", {4, 0, 0}},    {"sym-sum", {8, 0, 30}},
        {"balanced-limits", {8, 200, 0}}, {"specials", {8, 200, 0}}};
    return d;
}

SuiteReport run_configured_suite(const std::string& name, const RunConfig& cfg) {
    const SuiteDefaults& d = suite_defaults().at(name);
    SuiteParams sp;
    sp.max_weight = cfg.max_weight.value_or(d.max_weight);
    sp.prime_min = cfg.prime_min.value_or(3);
    sp.prime_max = cfg.prime_max.value_or(d.prime_max);
    sp.n_max = cfg.n_max.value_or(d.n_max);
    sp.digits = cfg.digits.value_or(40);
    sp.seed = cfg.seed;
    if (name == "q-series") return suite_q_series(sp, sp.max_weight);
    return run_suite(name, sp);
}

int cmd_verify(const std::string& suite, const RunConfig& cfg) {
    std::vector<std::string> names;
    if (suite == "all")
        names = suite_names();
    else if (suite_defaults().count(suite))
        names = {suite};
    else
        throw ConfigError("unknown suite '" + suite + "'");
    validate(cfg, cfg.max_weight.value_or(0));

    SuiteReport all;
    for (const auto& n : names) {
        SuiteReport rep = run_configured_suite(n, cfg);
        std::cerr << n << ": " << rep.checks.size() << " instances, " << rep.failures() << " failed\n";
        all.append(rep);
    }
    for (const auto& c : all.checks)
        if (!c.passed) std::cerr << "FAIL " << c.suite << " " << c.instance << "\n";

    if (cfg.format == "csv") {
        std::cout << "suite,instance,passed\n";
        for (const auto& c : all.checks) std::cout << c.suite << ",\"" << c.instance << "\"," << csv_bool(c.passed) << "\n";
    } else {
        Json checks = Json::array();
        for (const auto& c : all.checks) checks.push_back({{"suite", c.suite}, {"instance", c.instance}, {"passed", c.passed}});
        Json j = {{"suite", suite}, {"instances", all.checks.size()}, {"failed", all.failures()}, {"checks", checks}};
        std::cout << j.dump() << "\n";
    }
    return all.all_passed() ? kExitOk : kExitFailed;
}

// ---------------------------------------------------------------------------
// dims and relations

const std::map<std::string, int>& guardrails() {
    static const std::map<std::string, int> g = {{"finite", 10}, {"cyclotomic", 8}, {"symmetric", 7}};
    return g;
}

std::vector<int> checked_weights(const std::string& side, const RunConfig& cfg) {
    if (!guardrails().count(side)) throw ConfigError("unknown side '" + side + "' (finite|cyclotomic|symmetric)");
    if (cfg.weights.empty()) throw ConfigError("--weights is required");
    std::vector<int> ws = parse_weights(cfg.weights);
    const int cap = guardrails().at(side);
    for (int k : ws) {
        if (k <= cap) continue;
        if (!cfg.force)
            throw ConfigError("weight " + std::to_string(k) + " exceeds the " + side + " guardrail " +
                              std::to_string(cap) + " (use --force)");
        std::cerr << "warning: weight " << k << " is beyond the " << side << " guardrail; this may take very long\n";
    }
    int top = 0;
    for (int k : ws) top = std::max(top, k);
    validate(cfg, top);
    return ws;
}

FiniteParams finite_params(const RunConfig& cfg) {
    FiniteParams p;
    p.prime_max = cfg.prime_max.value_or(p.prime_max);
    p.height_bound = Integer(cfg.height_bound);
    return p;
}

SymmetricParams symmetric_params(const RunConfig& cfg) {
    SymmetricParams p;
    p.digits = cfg.digits.value_or(p.digits);
    if (p.digits < 50) throw ConfigError("symmetric mining needs --digits >= 50");
    return p;
}

std::vector<int> n_range(const RunConfig& cfg) { return int_range(2, cfg.n_max.value_or(40)); }

struct SideRun {
    Json json;
    RelationBasis basis;
    DimReport report;
};

SideRun run_side(const std::string& side, int k, const RunConfig& cfg) {
    if (side == "finite") {
        FiniteParams p = finite_params(cfg);
        FiniteRun r = cfg.prime_min ? finite_relation_space(k, primes_between(*cfg.prime_min, p.prime_max),
                                                            primes_between(p.prime_max + 1, p.prime_max + 200),
                                                            p.height_bound)
                                    : finite_relation_space(k, p);
        return {to_json(r), r.basis, r.report};
    }
    if (side == "cyclotomic") {
        CyclotomicRun r = cyclotomic_relation_space(k, n_range(cfg));
        if (!r.verified) std::cerr << "warning: weight " << k << " kernel failed verification on fresh n\n";
        return {to_json(r), r.basis, r.report};
    }
    SymmetricRun r = symmetric_relation_space(k, symmetric_params(cfg));
    return {to_json(r), r.basis, r.report};
}

int cmd_dims(const std::string& side, const RunConfig& cfg) {
    const std::vector<int> ws = checked_weights(side, cfg);
    std::vector<DimReport> rows;
    std::vector<long> quotient;
    std::map<int, long> dim_at;
    for (int k : ws) {
        rows.push_back(run_side(side, k, cfg).report);
        dim_at[k] = rows.back().dimension;
    }
    if (side == "cyclotomic")
        for (int k : ws) {
            if (!dim_at.count(k - 1)) dim_at[k - 1] = k - 1 >= 2 ? run_side(side, k - 1, cfg).report.dimension : 0;
            quotient.push_back(dim_at[k] - dim_at[k - 1]);
        }

    std::string compact;
    for (const auto& r : rows) compact += (compact.empty() ? "" : " ") + std::to_string(r.weight) + "," + std::to_string(r.dimension);
    std::cerr << side << " dims: " << compact << "\n";

    if (cfg.format == "csv") {
        std::string out = dims_csv(rows);
        if (side == "cyclotomic") {
            std::stringstream in(out), re;
            std::string line;
            std::getline(in, line);
            re << line << ",quotient_dimension\n";
            for (std::size_t i = 0; std::getline(in, line); ++i) re << line << "," << quotient[i] << "\n";
            out = re.str();
        }
        std::cout << out;
    } else {
        Json arr = Json::array();
        for (std::size_t i = 0; i < rows.size(); ++i) {
            const auto& r = rows[i];
            Json row = {{"weight", r.weight},
                        {"generators", r.generator_count},
                        {"relations", r.relation_count},
                        {"dimension", r.dimension},
                        {"status", r.status}};
            if (side == "cyclotomic") row["quotient_dimension"] = quotient[i];
            arr.push_back(row);
        }
        std::cout << Json{{"side", side}, {"rows", arr}}.dump() << "\n";
    }
    return kExitOk;
}

void print_relations_csv(const RelationBasis& b, int weight) {
    std::cout << "weight,status";
    for (const auto& g : b.generators) std::cout << ",\"" << g.to_string() << "\"";
    std::cout << "\n";
    for (const auto& r : b.relations) {
        std::cout << weight << "," << r.status;
        for (const auto& x : r.vector) std::cout << "," << x.get_str();
        std::cout << "\n";
    }
}

int cmd_relations(const std::string& side, const RunConfig& cfg) {
    if (side == "conjecture") {
        if (cfg.weights.empty()) throw ConfigError("--weights is required");
        std::vector<int> ws = parse_weights(cfg.weights);
        for (int k : ws)
            if (k > 7 && !cfg.force) throw ConfigError("conjecture reports are limited to weight 7 (use --force)");
        validate(cfg, *std::max_element(ws.begin(), ws.end()));
        ConjectureParams p;
        p.finite = finite_params(cfg);
        p.symmetric = symmetric_params(cfg);
        p.n_range = n_range(cfg);
        bool ok = true;
        for (int k : ws) {
            ConjectureReport rep = conjecture_report(k, p);
            ok = ok && rep.kernels_agree;
            if (cfg.format == "csv")
                std::cout << (k == ws.front() ? "weight,kernels_agree,finite_relations,symmetric_relations\n" : "") << k
                          << "," << csv_bool(rep.kernels_agree) << "," << rep.finite.basis.relations.size() << ","
                          << rep.symmetric.basis.relations.size() << "\n";
            else
                std::cout << to_json(rep).dump() << "\n";
        }
        return ok ? kExitOk : kExitFailed;
    }
    for (int k : checked_weights(side, cfg)) {
        SideRun r = run_side(side, k, cfg);
        if (cfg.format == "csv")
            print_relations_csv(r.basis, k);
        else
            std::cout << r.json.dump() << "\n";
    }
    return kExitOk;
}

// ---------------------------------------------------------------------------
// values

int cmd_values(const std::string& kind, const std::vector<std::string>& args, const std::vector<std::int64_t>& primes,
               std::optional<int> n, const RunConfig& cfg) {
    if (args.empty()) throw ConfigError("values needs at least one index");
    std::vector<Index> ks;
    int top = 0;
    for (const auto& a : args) {
        ks.push_back(parse_index_arg(a));
        top = std::max(top, ks.back().weight());
    }
    validate(cfg, kind == "omega-mod" ? top : 0);
    const bool csv = cfg.format == "csv";
    const int digits = cfg.digits.value_or(40);

    if (kind == "omega-mod") {
        std::vector<std::int64_t> ps = primes;
        if (ps.empty()) ps = primes_between(cfg.prime_min.value_or(top + 3), cfg.prime_max.value_or(50));
        for (auto p : ps)
            if (!is_prime(p) || p < 3) throw ConfigError(std::to_string(p) + " is not an odd prime");
        if (csv) std::cout << "index,p,res\n";
        for (const auto& k : ks) {
            if (k.length() < 2) throw ConfigError("omega-mod needs an index with r >= 2, got " + k.to_string());
            for (auto p : ps) {
                const Residue r = omega_mod(k, p);
                if (csv) {
                    std::cout << k.to_string() << "," << r.prime << "," << r.value << "\n";
                } else {
                    Json j = {{"index", k.to_string()}};
                    j.update(to_json(r));
                    std::cout << j.dump() << "\n";
                }
            }
        }
    } else if (kind == "omega-root") {
        std::vector<int> ns;
        if (n)
            ns = {*n};
        else
            ns = int_range(2, cfg.n_max.value_or(6));
        if (csv) std::cout << "index,n,coeffs\n";
        for (const auto& k : ks) {
            if (k.length() < 2) throw ConfigError("omega-root needs an index with r >= 2, got " + k.to_string());
            for (int m : ns) {
                if (m < 2) throw ConfigError("--n must be at least 2");
                const CycloElem x = omega_at_root(k, m);
                if (csv) {
                    std::cout << k.to_string() << "," << m << ",\"";
                    for (std::size_t i = 0; i < x.coeffs().size(); ++i) std::cout << (i ? " " : "") << x.coeffs()[i].get_str();
                    std::cout << "\"\n";
                } else {
                    Json j = {{"index", k.to_string()}};
                    j.update(to_json(x));
                    std::cout << j.dump() << "\n";
                }
            }
        }
    } else if (kind == "omega-limit" || kind == "zeta-s") {
        NumericContext ctx(digits);
        if (csv) std::cout << "index,digits,value\n";
        for (const auto& k : ks) {
            BigReal v;
            if (kind == "omega-limit") {
                if (k.length() < 2) throw ConfigError("omega-limit needs an index with r >= 2, got " + k.to_string());
                v = {ctx.omega_limit(k), digits};
            } else {
                v = {ctx.zeta_s(k), digits};
            }
            if (csv) {
                std::cout << k.to_string() << "," << digits << "," << v.to_string() << "\n";
            } else {
                Json j = {{"index", k.to_string()}};
                j.update(to_json(v));
                std::cout << j.dump() << "\n";
            }
        }
    } else {
        throw ConfigError("unknown value kind '" + kind + "' (omega-mod|omega-root|omega-limit|zeta-s)");
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Finite, cyclotomic and symmetric omega values: identity checks and relation mining", "mtomega"};
    app.fallthrough();
    app.require_subcommand(1);
    app.set_config("--config", "", "Read options from a key = value file");

    RunConfig cfg;
    app.add_option("--weights", cfg.weights, "Weights as a..b or a,b,c");
    app.add_option("--max-weight", cfg.max_weight, "Largest weight swept by verify");
    app.add_option("--prime-min", cfg.prime_min, "Smallest prime used");
    app.add_option("--prime-max", cfg.prime_max, "Largest prime used");
    app.add_option("--n-max", cfg.n_max, "Largest n for cyclotomic sweeps");
    app.add_option("--digits", cfg.digits, "Decimal digits for numeric work (>= 30)");
    app.add_option("--height-bound", cfg.height_bound, "Coefficient bound for finite relations");
    app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--seed", cfg.seed, "Seed for randomized sampling");
    app.add_flag("--force", cfg.force, "Override weight guardrails");

    std::string suite, side, kind;
    std::vector<std::string> value_args;
    std::vector<std::int64_t> primes;
    std::optional<int> n;

    auto* verify = app.add_subcommand("verify", "Run identity-verification suites");
    verify->add_option("suite", suite, "Suite name or 'all'")->required();
    auto* dims = app.add_subcommand("dims", "Dimension tables");
    dims->add_option("side", side, "finite|cyclotomic|symmetric")->required();
    auto* rels = app.add_subcommand("relations", "Relation bases with labels and status");
    rels->add_option("side", side, "finite|cyclotomic|symmetric|conjecture")->required();
    auto* values = app.add_subcommand("values", "Value streams");
    values->add_option("kind", kind, "omega-mod|omega-root|omega-limit|zeta-s")->required();
    values->add_option("indices", value_args, "Dot-separated indices such as 2.1.1");
    values->add_option("--primes", primes, "Primes for omega-mod")->delimiter(',');
    values->add_option("--n", n, "Order of the root of unity for omega-root");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitConfig;
    }

    try {
        if (*verify) return cmd_verify(suite, cfg);
        if (*dims) return cmd_dims(side, cfg);
        if (*rels) return cmd_relations(side, cfg);
        if (*values) return cmd_values(kind, value_args, primes, n, cfg);
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    }
    return kExitConfig;
}
