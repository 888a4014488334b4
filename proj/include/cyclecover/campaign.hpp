#pragma once

#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "conditions.hpp"
#include "generators.hpp"
#include "io.hpp"
#include "matching.hpp"
#include "partition.hpp"
#include "structural.hpp"

namespace cyclecover {

// Fuzz campaigns: seeded trials through generation, optional rejection
// conditioning and a configurable set of checks. Hard invariants run at
// assert level (a failure fails the campaign); asymptotic lemma-shaped
// checks run at report level, where a conditioned sample whose
// conclusion fails is archived as a `.cg` repro, never asserted away.
// The level is part of the schema below, not a config choice.

enum class CheckId {
    Duality,
    PosaFromOre,
    ObsPosa,
    ObsOre,
    TwoCycles,
    ThreeCycles,
    SpanningPair,
    CoverTriple,
    DoubleCoverContracting,
};

enum class CheckLevel { Assert, Report };

inline CheckLevel check_level(CheckId id) {
    switch (id) {
        case CheckId::Duality:
        case CheckId::PosaFromOre:
        case CheckId::ObsPosa:
        case CheckId::ObsOre:
            return CheckLevel::Assert;
        default:
            return CheckLevel::Report;
    }
}

inline const char* check_name(CheckId id) {
    switch (id) {
        case CheckId::Duality: return "duality";
        case CheckId::PosaFromOre: return "posa_from_ore";
        case CheckId::ObsPosa: return "obs_posa";
        case CheckId::ObsOre: return "obs_ore";
        case CheckId::TwoCycles: return "two_cycles";
        case CheckId::ThreeCycles: return "three_cycles";
        case CheckId::SpanningPair: return "spanning_pair";
        case CheckId::CoverTriple: return "cover_triple";
        default: return "double_cover_contracting";
    }
}

inline const std::vector<CheckId>& all_checks() {
    static const std::vector<CheckId> ids = {
        CheckId::Duality,       CheckId::PosaFromOre, CheckId::ObsPosa,
        CheckId::ObsOre,        CheckId::TwoCycles,   CheckId::ThreeCycles,
        CheckId::SpanningPair,  CheckId::CoverTriple, CheckId::DoubleCoverContracting};
    return ids;
}

struct CampaignParams {
    Rational x = Rational(1, 4);        // posa_from_ore exponent
    Rational eta = Rational(1, 10);     // cover_triple / double-cover bound
    Rational gamma = Rational(1, 20);   // obs_posa fallback when unconditioned
    bool distinct = true;               // two_cycles colour rule
    Rational min_cover_frac = Rational(1); // two/three_cycles target fraction
    int partition_cap = kDefaultPartitionCap;
    int bruteforce_cap = kDefaultBruteforceCap;
    int u_samples = 12;                 // sampled sets per observation suite
    bool require_no_contracting = true; // spanning_pair variant
};

struct CampaignConfig {
    std::string name = "campaign";
    int trials = 100;
    uint64_t seed = 0;
    GeneratorSpec generator;
    int n_min = 0, n_max = 0; // when set, n varies per trial
    SampleCondition condition;
    int max_tries = 50;
    std::map<CheckId, bool> enabled;
    CampaignParams params;
};

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline CampaignConfig parse_campaign_config(std::istream& in) {
    CampaignConfig cfg;
    for (CheckId id : all_checks()) cfg.enabled[id] = false;
    std::string section, line;
    int lineno = 0;
    std::string gen_kind = "gnp", cond_kind = "none", inner = "red";
    auto fail = [&](const std::string& msg) -> void {
        throw ConfigError("config line " + std::to_string(lineno) + ": " + msg);
    };
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto trim = [](std::string s) {
            size_t a = s.find_first_not_of(" \t\r");
            size_t b = s.find_last_not_of(" \t\r");
            return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
        };
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']') fail("unterminated section header");
            section = line.substr(1, line.size() - 2);
            continue;
        }
        auto eq = line.find('=');
        if (eq == std::string::npos) fail("expected key = value");
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (key.empty() || value.empty()) fail("empty key or value");
        try {
            if (section == "campaign") {
                if (key == "name") cfg.name = value;
                else if (key == "trials") cfg.trials = std::stoi(value);
                else if (key == "seed") cfg.seed = std::stoull(value);
                else fail("unknown campaign key '" + key + "'");
            } else if (section == "generator") {
                if (key == "kind") gen_kind = value;
                else if (key == "n") cfg.generator.n = std::stoi(value);
                else if (key == "n_min") cfg.n_min = std::stoi(value);
                else if (key == "n_max") cfg.n_max = std::stoi(value);
                else if (key == "p") cfg.generator.p = Rational::parse(value);
                else if (key == "q") cfg.generator.q = Rational::parse(value);
                else if (key == "k") cfg.generator.gkm.k = std::stoi(value);
                else if (key == "m") { cfg.generator.gkm.m = std::stoi(value); cfg.generator.m = std::stoi(value); }
                else if (key == "inner") inner = value;
                else if (key == "flips") cfg.generator.flip_count = std::stoi(value);
                else fail("unknown generator key '" + key + "'");
            } else if (section == "condition") {
                if (key == "kind") cond_kind = value;
                else if (key == "gamma") cfg.condition.gamma = Rational::parse(value);
                else if (key == "delta") cfg.condition.delta = Rational::parse(value);
                else if (key == "x_density") cfg.condition.x_density = Rational::parse(value);
                else if (key == "max_tries") cfg.max_tries = std::stoi(value);
                else fail("unknown condition key '" + key + "'");
            } else if (section == "checks") {
                bool found = false;
                for (CheckId id : all_checks())
                    if (key == check_name(id)) {
                        if (value != "on" && value != "off") fail("check value must be on or off");
                        cfg.enabled[id] = value == "on";
                        found = true;
                    }
                if (!found) fail("unknown check '" + key + "'");
            } else if (section == "params") {
                if (key == "x") cfg.params.x = Rational::parse(value);
                else if (key == "eta") cfg.params.eta = Rational::parse(value);
                else if (key == "gamma") cfg.params.gamma = Rational::parse(value);
                else if (key == "distinct") cfg.params.distinct = value == "true";
                else if (key == "min_cover_frac") cfg.params.min_cover_frac = Rational::parse(value);
                else if (key == "cap") cfg.params.partition_cap = std::stoi(value);
                else if (key == "bruteforce_cap") cfg.params.bruteforce_cap = std::stoi(value);
                else if (key == "u_samples") cfg.params.u_samples = std::stoi(value);
                else if (key == "require_no_contracting")
                    cfg.params.require_no_contracting = value == "true";
                else fail("unknown params key '" + key + "'");
            } else {
                fail("unknown section '" + section + "'");
            }
        } catch (const std::invalid_argument& e) {
            fail(e.what());
        } catch (const std::out_of_range&) {
            fail("number out of range");
        }
    }
    if (gen_kind == "gnp") cfg.generator.kind = GeneratorSpec::Kind::Gnp;
    else if (gen_kind == "gkm") cfg.generator.kind = GeneratorSpec::Kind::Gkm;
    else if (gen_kind == "ore_not_posa") cfg.generator.kind = GeneratorSpec::Kind::OreNotPosa;
    else if (gen_kind == "perturbed_gkm") cfg.generator.kind = GeneratorSpec::Kind::PerturbedGkm;
    else throw ConfigError("config: unknown generator kind '" + gen_kind + "'");
    if (cond_kind == "none") cfg.condition.kind = SampleCondition::Kind::None;
    else if (cond_kind == "posa") cfg.condition.kind = SampleCondition::Kind::Posa;
    else if (cond_kind == "ore") cfg.condition.kind = SampleCondition::Kind::Ore;
    else if (cond_kind == "ore_pair") cfg.condition.kind = SampleCondition::Kind::OrePair;
    else throw ConfigError("config: unknown condition kind '" + cond_kind + "'");
    if (inner == "red") cfg.generator.gkm.inner = GkmSpec::Inner::AllRed;
    else if (inner == "blue") cfg.generator.gkm.inner = GkmSpec::Inner::AllBlue;
    else if (inner.rfind("seed:", 0) == 0) {
        cfg.generator.gkm.inner = GkmSpec::Inner::Seeded;
        cfg.generator.gkm.seed = std::stoull(inner.substr(5));
    } else {
        throw ConfigError("config: unknown inner colouring '" + inner + "'");
    }
    if (cfg.trials < 0) throw ConfigError("config: negative trial count");
    return cfg;
}

struct CheckOutcome {
    std::string outcome; // pass | fail | vacuous | present | absent | anomaly | skip
    std::string detail;
    bool hard_failure = false;
    bool anomaly = false;
};

namespace detail {

inline long long ceil_rational(const Rational& r) { return -(-r).floor(); }

inline std::vector<int> sample_subset(Xorshift64Star& rng, int n, int size) {
    std::vector<int> pool(n);
    for (int i = 0; i < n; ++i) pool[i] = i;
    for (int i = 0; i < size; ++i) {
        int j = i + (int)rng.next_below((uint64_t)(n - i));
        std::swap(pool[i], pool[j]);
    }
    pool.resize(size);
    std::sort(pool.begin(), pool.end());
    return pool;
}

} // namespace detail

/// Runs one check against one instance. `conditioned` records whether the
/// campaign's rejection condition accepted this sample, which is what
/// promotes a failed report-level conclusion to an anomaly.
inline CheckOutcome run_check(CheckId id, const ColouredGraph& g, const ColouredGraph& x,
                              bool conditioned, const SampleCondition& cond,
                              const CampaignParams& prm, Xorshift64Star& rng) {
    (void)x; // the exception graph only conditions sampling, checks run on g
    int n = g.vertex_count();
    CheckOutcome out;
    switch (id) {
        case CheckId::Duality: {
            if (n > prm.bruteforce_cap) return {"skip", "n above bruteforce cap", false, false};
            Subgraph h = Subgraph::whole(g);
            auto m = max_two_matching(h);
            auto bf = max_contraction_bruteforce(h, prm.bruteforce_cap);
            bool ok = m.size == h.size() - bf.contraction && is_valid_two_matching(h, m) &&
                      has_cycle_edge_decomposition(h, m) && is_stable(h, bf.set) &&
                      contraction(h, bf.set) == bf.contraction;
            out.outcome = ok ? "pass" : "fail";
            out.hard_failure = !ok;
            out.detail = "matching=" + std::to_string(m.size) +
                         " contraction=" + std::to_string(bf.contraction);
            return out;
        }
        case CheckId::PosaFromOre: {
            auto rep = ore_implies_posa_check(g, prm.x);
            if (rep.pass && rep.clause == "vacuous") return {"vacuous", "", false, false};
            out.outcome = rep.pass ? "pass" : "fail";
            out.hard_failure = !rep.pass;
            if (!rep.pass && rep.posa_witness)
                out.detail = "violation at j=" + std::to_string(rep.posa_witness->j);
            return out;
        }
        case CheckId::ObsPosa: {
            Rational gamma = cond.kind == SampleCondition::Kind::Posa ? cond.gamma : prm.gamma;
            if (!(Rational(n) * gamma >= Rational(1)) || !check_posa(g, gamma).pass)
                return {"vacuous", "", false, false};
            bool ok = posa_min_degree_holds(g);
            int quarter = (int)detail::ceil_rational(Rational(n, 4));
            for (int s = 0; ok && s < prm.u_samples; ++s) {
                int big = quarter + (int)rng.next_below((uint64_t)(n - quarter + 1));
                ok = posa_large_set_holds(g, detail::sample_subset(rng, n, big));
                if (ok && quarter > 1) {
                    int small = 1 + (int)rng.next_below((uint64_t)(quarter - 1));
                    ok = posa_small_set_holds(g, detail::sample_subset(rng, n, small));
                }
            }
            out.outcome = ok ? "pass" : "fail";
            out.hard_failure = !ok;
            return out;
        }
        case CheckId::ObsOre: {
            if (cond.kind != SampleCondition::Kind::OrePair || !conditioned)
                return {"vacuous", "needs an ore_pair-conditioned sample", false, false};
            auto fam = two_components_cover(g);
            auto res = find_contracting_set(fam.union_graph, 0, prm.bruteforce_cap);
            if (!res.exists || !res.witness)
                return {"vacuous", "no contracting set in the test union", false, false};
            const auto& w = *res.witness;
            bool ok = contracting_set_bounds_hold(fam.union_graph, w, n);
            for (int s = 0; ok && s < 4; ++s) {
                std::vector<int> sub;
                for (int v : w.set)
                    if (rng.next_below(2) == 0) sub.push_back(v);
                ok = subset_contraction_holds(fam.union_graph, w.set, sub);
            }
            out.outcome = ok ? "pass" : "fail";
            out.hard_failure = !ok;
            return out;
        }
        case CheckId::TwoCycles:
        case CheckId::ThreeCycles: {
            if (n > prm.partition_cap) return {"skip", "n above partition cap", false, false};
            int k = id == CheckId::TwoCycles ? 2 : 3;
            bool distinct = id == CheckId::TwoCycles && prm.distinct;
            int min_cover = (int)detail::ceil_rational(prm.min_cover_frac * Rational(n));
            auto part = find_cycle_partition(g, k, distinct, min_cover, prm.partition_cap);
            if (part) {
                bool sound = validate_cycle_partition(g, *part, distinct) &&
                             part->covered >= min_cover;
                out.outcome = sound ? "present" : "fail";
                out.hard_failure = !sound;
                out.detail = "covered=" + std::to_string(part->covered);
                return out;
            }
            out.outcome = conditioned ? "anomaly" : "absent";
            out.anomaly = conditioned;
            out.detail = "no partition with min_cover=" + std::to_string(min_cover);
            return out;
        }
        case CheckId::SpanningPair: {
            auto fam = find_spanning_pair(g, prm.require_no_contracting);
            if (fam) {
                bool sound = fam->union_size() == n;
                if (prm.require_no_contracting) {
                    sound = sound && max_contraction(fam->union_graph) == 0;
                    if (n <= prm.bruteforce_cap)
                        sound = sound &&
                                max_contraction_bruteforce(fam->union_graph, prm.bruteforce_cap)
                                        .contraction == 0;
                }
                out.outcome = sound ? "present" : "fail";
                out.hard_failure = !sound;
                return out;
            }
            bool hyp = conditioned && cond.kind == SampleCondition::Kind::Posa;
            out.outcome = hyp ? "anomaly" : "absent";
            out.anomaly = hyp;
            return out;
        }
        case CheckId::CoverTriple: {
            auto fam = find_cover_triple(g, prm.eta, prm.bruteforce_cap);
            long long bar = (prm.eta * Rational(n)).floor();
            if (fam) {
                bool sound = Rational(fam->union_size()) >=
                             (Rational(1) - prm.eta) * Rational(n);
                sound = sound &&
                        !find_contracting_set(fam->union_graph, (int)bar, prm.bruteforce_cap)
                                 .exists;
                if (fam->union_size() <= prm.bruteforce_cap)
                    sound = sound && max_contraction_bruteforce(fam->union_graph,
                                                                prm.bruteforce_cap)
                                             .contraction <= bar;
                out.outcome = sound ? "present" : "fail";
                out.hard_failure = !sound;
                out.detail = "members=" + std::to_string(fam->members.size()) +
                             " cover=" + std::to_string(fam->union_size());
                return out;
            }
            bool hyp = conditioned && cond.kind == SampleCondition::Kind::OrePair;
            out.outcome = hyp ? "anomaly" : "absent";
            out.anomaly = hyp;
            return out;
        }
        case CheckId::DoubleCoverContracting: {
            // Spot check: a tested double-covering family should have no
            // floor(eta*n)-contracting set in its union.
            auto reds = monochromatic_components(g, Colour::Red);
            auto blues = monochromatic_components(g, Colour::Blue);
            std::vector<MonochromaticComponent> top;
            for (const auto& c : reds) top.push_back(c);
            for (const auto& c : blues) top.push_back(c);
            std::sort(top.begin(), top.end(), [](const auto& a, const auto& b) {
                if (a.size() != b.size()) return a.size() > b.size();
                if (a.colour != b.colour) return a.colour == Colour::Red;
                return a.id < b.id;
            });
            if (top.size() > 6) top.resize(6);
            long long bar = (prm.eta * Rational(n)).floor();
            int tested = 0, violations = 0;
            int t = (int)top.size();
            for (int mask = 1; mask < (1 << t); ++mask) {
                if (std::popcount((unsigned)mask) > 3) continue;
                std::vector<MonochromaticComponent> fam;
                for (int i = 0; i < t; ++i)
                    if (mask & (1 << i)) fam.push_back(top[i]);
                if (!is_double_cover(g, fam).first) continue;
                ++tested;
                auto u = union_subgraph(g, fam);
                if (find_contracting_set(u, (int)bar, prm.bruteforce_cap).exists) ++violations;
            }
            if (tested == 0) return {"vacuous", "no tested family double-covers", false, false};
            bool hyp = conditioned && cond.kind == SampleCondition::Kind::OrePair;
            if (violations == 0) {
                out.outcome = "pass";
            } else {
                out.outcome = hyp ? "anomaly" : "violation";
                out.anomaly = hyp;
            }
            out.detail = "families=" + std::to_string(tested) +
                         " violations=" + std::to_string(violations);
            return out;
        }
    }
    return {"skip", "", false, false};
}

struct CampaignRow {
    int trial = 0;
    uint64_t seed = 0;
    int n = 0;
    std::string generator;
    std::string condition;
    std::string condition_outcome; // accepted:<tries> | rejected | none
    std::string check;
    std::string level;
    CheckOutcome result;
    std::string anomaly_path;
};

struct CampaignResult {
    std::vector<CampaignRow> rows;
    std::vector<std::string> anomaly_files;
    int hard_failures = 0;
    std::vector<std::string> summary;
};

inline constexpr const char* kCsvHeader =
    "schema_version,trial,seed,n,generator,condition,condition_outcome,check,level,outcome,"
    "detail,anomaly";

inline std::string csv_field(std::string s) {
    for (auto& ch : s)
        if (ch == ',' || ch == '\n') ch = ';';
    return s;
}

/// Runs the whole campaign. The CSV and anomaly files are deterministic
/// functions of the config; timing is intentionally kept out of them.
inline CampaignResult run_campaign(const CampaignConfig& cfg, const std::string& out_csv,
                                   const std::string& anomaly_dir_arg = "") {
    namespace fs = std::filesystem;
    CampaignResult result;
    std::string anomaly_dir = anomaly_dir_arg.empty() ? out_csv + ".anomalies" : anomaly_dir_arg;

    std::ofstream csv(out_csv);
    if (!csv) throw std::runtime_error("campaign: cannot write " + out_csv);
    csv << kCsvHeader << "\n";

    std::map<std::string, std::map<std::string, int>> tally;

    for (int trial = 0; trial < cfg.trials; ++trial) {
        uint64_t seed = derive_seed(cfg.seed, (uint64_t)trial);
        GeneratorSpec spec = cfg.generator;
        spec.seed = seed;
        spec.gkm.seed = seed;
        if (cfg.n_max > cfg.n_min && cfg.n_min > 0)
            spec.n = cfg.n_min +
                     (int)(derive_seed(seed, 0xA5u) % (uint64_t)(cfg.n_max - cfg.n_min + 1));
        else if (cfg.n_min > 0)
            spec.n = cfg.n_min;

        ColouredGraph g(0);
        ColouredGraph x(0);
        bool conditioned = false;
        std::string cond_outcome = "none";
        if (cfg.condition.kind == SampleCondition::Kind::None) {
            g = generate(spec);
            x = ColouredGraph(g.vertex_count());
        } else {
            auto sample = sample_conditioned(spec, cfg.condition, cfg.max_tries);
            if (!sample) {
                cond_outcome = "rejected";
                g = ColouredGraph(spec.kind == GeneratorSpec::Kind::Gnp ? spec.n : 0);
                x = ColouredGraph(g.vertex_count());
            } else {
                conditioned = true;
                cond_outcome = "accepted:" + std::to_string(sample->attempts);
                g = std::move(sample->graph);
                x = std::move(sample->except);
            }
        }

        Xorshift64Star check_rng(derive_seed(seed, 0xC0DEu));
        for (CheckId id : all_checks()) {
            if (!cfg.enabled.at(id)) continue;
            CampaignRow row;
            row.trial = trial;
            row.seed = seed;
            row.n = g.vertex_count();
            row.generator = spec.describe();
            row.condition = cfg.condition.describe();
            row.condition_outcome = cond_outcome;
            row.check = check_name(id);
            row.level = check_level(id) == CheckLevel::Assert ? "assert" : "report";
            if (cond_outcome == "rejected") {
                row.result = {"skip", "condition rejected", false, false};
            } else {
                row.result = run_check(id, g, x, conditioned, cfg.condition, cfg.params,
                                       check_rng);
            }
            if (row.result.anomaly) {
                fs::create_directories(anomaly_dir);
                std::string path = anomaly_dir + "/trial" + std::to_string(trial) + "_" +
                                   row.check + ".cg";
                std::ofstream af(path);
                serialize(g, af);
                row.anomaly_path = path;
                result.anomaly_files.push_back(path);
                if (x.edge_count() > 0) {
                    std::ofstream xf(path + ".x");
                    serialize(x, xf);
                }
            }
            if (row.result.hard_failure) ++result.hard_failures;
            csv << "1," << row.trial << "," << row.seed << "," << row.n << ","
                << csv_field(row.generator) << "," << csv_field(row.condition) << ","
                << row.condition_outcome << "," << row.check << "," << row.level << ","
                << row.result.outcome << "," << csv_field(row.result.detail) << ","
                << csv_field(row.anomaly_path) << "\n";
            tally[row.check][row.result.outcome]++;
            result.rows.push_back(std::move(row));
        }
    }

    for (CheckId id : all_checks()) {
        if (!cfg.enabled.at(id)) continue;
        const auto& t = tally[check_name(id)];
        std::ostringstream line;
        line << "check " << check_name(id) << ":";
        for (const char* key :
             {"pass", "present", "absent", "vacuous", "violation", "anomaly", "fail", "skip"}) {
            auto it = t.find(key);
            if (it != t.end() && it->second > 0) line << " " << key << "=" << it->second;
        }
        result.summary.push_back(line.str());
    }
    return result;
}

} // namespace cyclecover
