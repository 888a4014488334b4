// cyclecover — command-line toolkit for 2-edge-coloured graphs: degree
// conditions, monochromatic components, 2-matchings with Tutte-Berge
// duality, extremal constructions, exact cycle-partition search and
// reproducible fuzz campaigns. Graphs travel as `.cg` files; vertices
// are 1-indexed on the wire and in all output.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "cyclecover/campaign.hpp"
#include "cyclecover/conditions.hpp"
#include "cyclecover/constructions.hpp"
#include "cyclecover/generators.hpp"
#include "cyclecover/io.hpp"
#include "cyclecover/matching.hpp"
#include "cyclecover/partition.hpp"
#include "cyclecover/structural.hpp"

using json = nlohmann::ordered_json;
using namespace cyclecover;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitInputError = 2;

int partition_cap() {
    if (const char* env = std::getenv("CYCLECOVER_CAP")) {
        int cap = std::atoi(env);
        if (cap >= 1 && cap <= kHardPartitionCap) return cap;
    }
    return kDefaultPartitionCap;
}

ColouredGraph load_file(const std::string& path) {
    if (path == "-") return load_graph(std::cin);
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return load_graph(in);
}

json witness_json(const ConditionReport& rep) {
    json out;
    for (const auto& [key, value] : rep.params) out[key] = value;
    out["verdict"] = rep.pass ? "pass" : "fail";
    if (!rep.clause.empty()) out["clause"] = rep.clause;
    if (rep.posa_witness) {
        const auto& w = *rep.posa_witness;
        if (rep.clause == "max_degree") // (vertex, its X-degree, the bound)
            out["witness"] = {{"vertex", w.j}, {"deg_X", w.degree},
                              {"threshold", w.threshold.str()}};
        else
            out["witness"] = {{"j", w.j}, {"d_j", w.degree}, {"threshold", w.threshold.str()}};
    }
    if (rep.ore_witness) {
        const auto& w = *rep.ore_witness;
        out["witness"] = {{"u", w.u + 1},         {"v", w.v + 1},
                          {"deg_u", w.deg_u},     {"deg_v", w.deg_v},
                          {"threshold", w.threshold.str()}};
    }
    return out;
}

int report_verdict(const char* what, const ConditionReport& rep) {
    std::cout << (rep.pass ? "PASS " : "FAIL ") << what << "\n";
    std::cout << witness_json(rep).dump(2) << "\n";
    return rep.pass ? kExitPass : kExitFail;
}

std::string comp_tag(const MonochromaticComponent& c) {
    return std::string(1, colour_char(c.colour)) + std::to_string(c.id);
}

void print_component(const MonochromaticComponent& c) {
    std::cout << "component " << comp_tag(c);
    for (int v : c.vertices) std::cout << " " << v + 1;
    std::cout << "\n";
}

/// Parses "r0,b2"-style component references against the canonical
/// decomposition of g.
std::vector<MonochromaticComponent> parse_components(const ColouredGraph& g,
                                                     const std::string& text) {
    auto reds = monochromatic_components(g, Colour::Red);
    auto blues = monochromatic_components(g, Colour::Blue);
    std::vector<MonochromaticComponent> out;
    size_t pos = 0;
    while (pos < text.size()) {
        size_t end = text.find(',', pos);
        if (end == std::string::npos) end = text.size();
        std::string tok = text.substr(pos, end - pos);
        pos = end + 1;
        if (tok.empty()) continue;
        if (tok[0] != 'r' && tok[0] != 'b')
            throw std::runtime_error("component id must look like r0 or b1: " + tok);
        const auto& pool = tok[0] == 'r' ? reds : blues;
        int idx = std::stoi(tok.substr(1));
        if (idx < 0 || idx >= (int)pool.size())
            throw std::runtime_error("no component " + tok);
        out.push_back(pool[idx]);
    }
    return out;
}

void print_partition(const CyclePartition& p) {
    for (const auto& part : p.parts) {
        std::cout << "cycle " << (part.colour ? std::string(1, colour_char(*part.colour)) : "-");
        for (int v : part.vertices) std::cout << " " << v + 1;
        std::cout << "\n";
    }
}

int cmd_check(const std::string& file, const std::vector<std::string>& posa,
              const std::string& ore, const std::vector<std::string>& ore_pair,
              const std::vector<std::string>& classify, const std::string& except_path) {
    auto g = load_file(file);
    if (!posa.empty()) {
        auto rep = check_posa_general(g, Rational::parse(posa[0]), Rational::parse(posa[1]),
                                      (int)std::stol(posa[2]));
        return report_verdict("posa", rep);
    }
    if (!ore.empty()) return report_verdict("ore", check_ore(g, Rational::parse(ore)));
    ColouredGraph x(g.vertex_count());
    if (!except_path.empty()) x = load_file(except_path);
    if (!ore_pair.empty()) {
        auto rep = check_ore_pair(g, x, Rational::parse(ore_pair[0]),
                                  Rational::parse(ore_pair[1]));
        return report_verdict("ore-pair", rep);
    }
    if (!classify.empty()) {
        auto cls = classify_colouring(g, x, Rational::parse(classify[0]),
                                      Rational::parse(classify[1]));
        bool classified = cls.tag != ColouringClass::Tag::Unclassified;
        std::cout << (classified ? "PASS classify " : "FAIL classify ") << tag_name(cls.tag)
                  << "\n";
        json out;
        out["check"] = "classify";
        out["delta"] = cls.delta.str();
        out["gamma"] = cls.gamma.str();
        out["tag"] = tag_name(cls.tag);
        if (!cls.reason.empty()) out["reason"] = cls.reason;
        json comps = json::array();
        for (const auto& c : cls.comps)
            comps.push_back({{"id", comp_tag(c)}, {"size", c.size()}});
        out["components"] = comps;
        std::cout << out.dump(2) << "\n";
        return classified ? kExitPass : kExitFail;
    }
    std::cerr << "check: pick one of --posa, --ore, --ore-pair, --classify\n";
    return kExitInputError;
}

int cmd_matching(const std::string& file, bool max2, bool contraction_max,
                 int contracting_above, const std::string& components) {
    auto g = load_file(file);
    Subgraph h = components.empty() ? Subgraph::whole(g)
                                    : union_subgraph(g, parse_components(g, components));
    if (max2) {
        auto m = max_two_matching(h);
        std::cout << "max2 size " << m.size << "\n";
        for (const auto& [u, v, w] : m.support)
            std::cout << "w " << u + 1 << " " << v + 1 << " " << w << "\n";
        return kExitPass;
    }
    if (contraction_max) {
        auto res = find_contracting_set(h, 0);
        std::cout << "contraction " << res.max_contraction << "\n";
        if (res.witness) {
            std::cout << "set";
            for (int v : res.witness->set) std::cout << " " << v + 1;
            std::cout << "\n";
        }
        return kExitPass;
    }
    if (contracting_above >= 0) {
        auto res = find_contracting_set(h, contracting_above);
        if (!res.exists) {
            std::cout << "absent\n";
            return kExitPass;
        }
        std::cout << "present contraction " << res.max_contraction << "\n";
        if (res.witness) {
            std::cout << "set";
            for (int v : res.witness->set) std::cout << " " << v + 1;
            std::cout << "\n";
        } else {
            std::cout << "set unavailable\n"; // value exact, witness best-effort at scale
        }
        return kExitPass;
    }
    std::cerr << "matching: pick one of --max2, --contraction-max, --contracting-above\n";
    return kExitInputError;
}

int cmd_partition(const std::string& file, int k, bool distinct,
                  std::optional<int> min_cover) {
    auto g = load_file(file);
    int target = min_cover.value_or(g.vertex_count());
    auto part = find_cycle_partition(g, k, distinct, target, partition_cap());
    if (!part) {
        std::cout << "absent\n";
        return kExitPass;
    }
    std::cout << "present covered " << part->covered << "\n";
    print_partition(*part);
    return kExitPass;
}

int cmd_maxcover(const std::string& file, int k, bool distinct) {
    auto g = load_file(file);
    auto [value, part] = max_cycle_cover(g, k, distinct, partition_cap());
    std::cout << "value " << value << "\n";
    print_partition(part);
    return kExitPass;
}

int cmd_structural(const std::string& file, bool spanning_pair, bool no_contracting,
                   const std::string& cover_triple, bool two_cover,
                   const std::string& double_cover) {
    auto g = load_file(file);
    if (spanning_pair) {
        auto fam = find_spanning_pair(g, no_contracting);
        if (!fam) {
            std::cout << "absent\n";
            return kExitPass;
        }
        std::cout << "present coverage " << fam->coverage.str() << "\n";
        for (const auto& c : fam->members) print_component(c);
        return kExitPass;
    }
    if (!cover_triple.empty()) {
        auto fam = find_cover_triple(g, Rational::parse(cover_triple));
        if (!fam) {
            std::cout << "absent\n";
            return kExitPass;
        }
        std::cout << "present coverage " << fam->coverage.str() << "\n";
        for (const auto& c : fam->members) print_component(c);
        return kExitPass;
    }
    if (two_cover) {
        auto fam = two_components_cover(g);
        std::cout << "coverage " << fam.coverage.str() << " size " << fam.union_size() << "\n";
        for (const auto& c : fam.members) print_component(c);
        return kExitPass;
    }
    if (!double_cover.empty()) {
        auto comps = parse_components(g, double_cover);
        auto [ok, count] = is_double_cover(g, comps);
        std::cout << "double-cover " << (ok ? "yes" : "no") << " count " << count << "\n";
        return kExitPass;
    }
    std::cerr << "structural: pick one of --spanning-pair, --cover-triple, --two-cover, "
                 "--double-cover\n";
    return kExitInputError;
}

GkmSpec::Inner parse_inner(const std::string& text, uint64_t& seed) {
    if (text == "red") return GkmSpec::Inner::AllRed;
    if (text == "blue") return GkmSpec::Inner::AllBlue;
    if (text.rfind("seed:", 0) == 0) {
        seed = std::stoull(text.substr(5));
        return GkmSpec::Inner::Seeded;
    }
    throw std::runtime_error("inner must be red, blue or seed:<s>");
}

int cmd_verify_gkm(int k, int m, const std::string& inner_text) {
    uint64_t seed = 0;
    GkmSpec spec{k, m, parse_inner(inner_text, seed), seed};
    auto rep = verify_gkm(spec, partition_cap());
    std::cout << "posa-violations:";
    for (int j : rep.posa_violations) std::cout << " " << j;
    std::cout << "\n";
    std::cout << "clause-posa: " << (rep.posa_clause ? "pass" : "fail") << "\n";
    if (rep.cover_clause_ran) {
        std::cout << "two-cycle-cover: " << (rep.cover_exists ? "present" : "absent") << "\n";
        std::cout << "clause-cover: " << (rep.cover_clause ? "pass" : "fail") << "\n";
    } else {
        std::cout << "two-cycle-cover: skipped (n above cap)\n";
    }
    std::cout << "verdict: " << (rep.pass() ? "pass" : "fail") << "\n";
    return rep.pass() ? kExitPass : kExitFail;
}

int cmd_fuzz(const std::string& config_path, const std::string& out_path,
             const std::string& anomaly_dir) {
    std::ifstream in(config_path);
    if (!in) throw std::runtime_error("cannot open " + config_path);
    auto cfg = parse_campaign_config(in);
    if (const char* env = std::getenv("CYCLECOVER_CAP")) {
        int cap = std::atoi(env);
        if (cap >= 1 && cap <= kHardPartitionCap) cfg.params.partition_cap = cap;
    }
    auto result = run_campaign(cfg, out_path, anomaly_dir);
    for (const auto& line : result.summary) std::cout << line << "\n";
    std::cout << "anomalies " << result.anomaly_files.size() << "\n";
    std::cout << "hard-failures " << result.hard_failures << "\n";
    return result.hard_failures == 0 ? kExitPass : kExitFail;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"cyclecover: monochromatic cycle partition toolkit"};
    app.require_subcommand(1);

    // check
    auto* check = app.add_subcommand("check", "degree-condition checkers");
    std::string check_file, check_ore_gamma, check_except;
    std::vector<std::string> check_posa_args, check_ore_pair_args, check_classify_args;
    check->add_option("file", check_file, "input .cg file ('-' for stdin)")->required();
    check->add_option("--posa", check_posa_args, "x y offset: d_j > j + x*n + offset for j < y*n")
        ->expected(3);
    check->add_option("--ore", check_ore_gamma, "gamma: (n,gamma)-Ore");
    check->add_option("--ore-pair", check_ore_pair_args, "delta gamma: (n,delta,gamma)-Ore pair")
        ->expected(2);
    check->add_option("--classify", check_classify_args, "delta gamma: plain/mixed/split")
        ->expected(2);
    check->add_option("--except", check_except, "exception graph X (.cg)");

    // matching
    auto* matching = app.add_subcommand("matching", "2-matchings and contracting sets");
    std::string matching_file, matching_components;
    bool want_max2 = false, want_cmax = false;
    int above = -1;
    matching->add_option("file", matching_file, "input .cg file")->required();
    matching->add_flag("--max2", want_max2, "maximum 2-matching");
    matching->add_flag("--contraction-max", want_cmax, "maximum stable-set contraction");
    matching->add_option("--contracting-above", above, "find a stable set with contraction > c");
    matching->add_option("--components", matching_components,
                         "restrict to a component union, e.g. r0,b1");

    // partition
    auto* partition = app.add_subcommand("partition", "exact monochromatic cycle partition");
    std::string partition_file;
    int part_k = 2;
    bool part_distinct = false;
    int part_min_cover = -1;
    partition->add_option("file", partition_file, "input .cg file")->required();
    partition->add_option("--k", part_k, "number of parts (1..3)")->required();
    partition->add_flag("--distinct", part_distinct, "coloured parts must differ in colour");
    partition->add_option("--min-cover", part_min_cover, "minimum vertices covered (default n)");

    // maxcover
    auto* maxcover = app.add_subcommand("maxcover", "maximum coverable vertex count");
    std::string maxcover_file;
    int maxcover_k = 2;
    bool maxcover_distinct = false;
    maxcover->add_option("file", maxcover_file, "input .cg file")->required();
    maxcover->add_option("--k", maxcover_k, "number of parts (1..3)")->required();
    maxcover->add_flag("--distinct", maxcover_distinct, "coloured parts must differ in colour");

    // structural
    auto* structural = app.add_subcommand("structural", "component-family searches");
    std::string structural_file, structural_triple, structural_double;
    bool want_spanning = false, want_no_contracting = false, want_two_cover = false;
    structural->add_option("file", structural_file, "input .cg file")->required();
    structural->add_flag("--spanning-pair", want_spanning, "spanning red+blue component pair");
    structural->add_flag("--no-contracting", want_no_contracting,
                         "require the pair's union to have no contracting set");
    structural->add_option("--cover-triple", structural_triple,
                           "eta: <=3 components covering (1-eta)n without eta*n-contraction");
    structural->add_flag("--two-cover", want_two_cover, "best two-component cover");
    structural->add_option("--double-cover", structural_double,
                           "component ids (e.g. r0,r1,b0): double-cover test");

    // gen
    auto* gen = app.add_subcommand("gen", "instance generators (write .cg to stdout)");
    gen->require_subcommand(1);
    auto* gen_gnp = gen->add_subcommand("gnp", "G(n,p) with per-edge colour probability q");
    int gnp_n = 10;
    std::string gnp_p = "1/2", gnp_q = "1/2";
    uint64_t gnp_seed = 0;
    gen_gnp->add_option("--n", gnp_n)->required();
    gen_gnp->add_option("--p", gnp_p, "edge probability (rational)");
    gen_gnp->add_option("--q", gnp_q, "red probability (rational)");
    gen_gnp->add_option("--seed", gnp_seed);
    auto* gen_gkm = gen->add_subcommand("gkm", "four-cluster extremal graph");
    int gkm_k = 1, gkm_m = 2;
    std::string gkm_inner = "red";
    gen_gkm->add_option("--k", gkm_k)->required();
    gen_gkm->add_option("--m", gkm_m)->required();
    gen_gkm->add_option("--inner", gkm_inner, "red | blue | seed:<s>");
    auto* gen_onp = gen->add_subcommand("ore-not-posa", "two-clique graph");
    int onp_m = 3;
    gen_onp->add_option("--m", onp_m)->required();

    // verify
    auto* verify = app.add_subcommand("verify", "construction property verification");
    verify->require_subcommand(1);
    auto* verify_gkm_cmd = verify->add_subcommand("gkm", "check both G_{k,m} claims");
    int vk = 1, vm = 2;
    std::string verify_inner = "red";
    verify_gkm_cmd->add_option("--k", vk)->required();
    verify_gkm_cmd->add_option("--m", vm)->required();
    verify_gkm_cmd->add_option("--inner", verify_inner, "red | blue | seed:<s>");

    // fuzz
    auto* fuzz = app.add_subcommand("fuzz", "run a campaign from a config file");
    std::string fuzz_config, fuzz_out, fuzz_anomaly_dir;
    fuzz->add_option("--config", fuzz_config)->required();
    fuzz->add_option("--out", fuzz_out, "CSV output path")->required();
    fuzz->add_option("--anomaly-dir", fuzz_anomaly_dir, "default: <out>.anomalies");

    CLI11_PARSE(app, argc, argv);

    try {
        if (check->parsed())
            return cmd_check(check_file, check_posa_args, check_ore_gamma, check_ore_pair_args,
                             check_classify_args, check_except);
        if (matching->parsed())
            return cmd_matching(matching_file, want_max2, want_cmax, above, matching_components);
        if (partition->parsed())
            return cmd_partition(partition_file, part_k, part_distinct,
                                 part_min_cover >= 0 ? std::optional<int>(part_min_cover)
                                                     : std::nullopt);
        if (maxcover->parsed()) return cmd_maxcover(maxcover_file, maxcover_k, maxcover_distinct);
        if (structural->parsed())
            return cmd_structural(structural_file, want_spanning, want_no_contracting,
                                  structural_triple, want_two_cover, structural_double);
        if (gen->parsed()) {
            if (gen_gnp->parsed()) {
                GeneratorSpec spec;
                spec.kind = GeneratorSpec::Kind::Gnp;
                spec.n = gnp_n;
                spec.p = Rational::parse(gnp_p);
                spec.q = Rational::parse(gnp_q);
                spec.seed = gnp_seed;
                serialize(generate(spec), std::cout);
                return kExitPass;
            }
            if (gen_gkm->parsed()) {
                uint64_t seed = 0;
                GkmSpec spec{gkm_k, gkm_m, parse_inner(gkm_inner, seed), seed};
                serialize(build_gkm(spec).graph, std::cout);
                return kExitPass;
            }
            serialize(build_ore_not_posa(onp_m), std::cout);
            return kExitPass;
        }
        if (verify->parsed()) return cmd_verify_gkm(vk, vm, verify_inner);
        if (fuzz->parsed()) return cmd_fuzz(fuzz_config, fuzz_out, fuzz_anomaly_dir);
    } catch (const ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const ConfigError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const CapExceeded& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}
