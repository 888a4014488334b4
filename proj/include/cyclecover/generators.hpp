#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "conditions.hpp"
#include "constructions.hpp"
#include "graph.hpp"
#include "rational.hpp"
#include "rng.hpp"

namespace cyclecover {

/// Seeded instance generator. Output is a pure function of (kind,
/// parameters, seed); pairs are always visited in lexicographic order so
/// the draw sequence is part of the contract.
struct GeneratorSpec {
    enum class Kind { Gnp, Gkm, OreNotPosa, PerturbedGkm };
    Kind kind = Kind::Gnp;
    uint64_t seed = 0;

    // Gnp
    int n = 0;
    Rational p = Rational(1, 2); // edge probability
    Rational q = Rational(1, 2); // red probability per present edge

    // Gkm / PerturbedGkm
    GkmSpec gkm;
    int flip_count = 0; // PerturbedGkm: edges recoloured after building

    // OreNotPosa
    int m = 3;

    std::string describe() const {
        switch (kind) {
            case Kind::Gnp:
                return "gnp(n=" + std::to_string(n) + ",p=" + p.str() + ",q=" + q.str() + ")";
            case Kind::Gkm:
                return "gkm(k=" + std::to_string(gkm.k) + ",m=" + std::to_string(gkm.m) +
                       ",inner=" + gkm.inner_name() + ")";
            case Kind::OreNotPosa:
                return "ore_not_posa(m=" + std::to_string(m) + ")";
            default:
                return "perturbed_gkm(k=" + std::to_string(gkm.k) + ",m=" +
                       std::to_string(gkm.m) + ",inner=" + gkm.inner_name() +
                       ",flips=" + std::to_string(flip_count) + ")";
        }
    }
};

inline ColouredGraph generate(const GeneratorSpec& spec) {
    switch (spec.kind) {
        case GeneratorSpec::Kind::Gnp: {
            if (spec.n < 0) throw std::invalid_argument("generate: negative n");
            if (spec.p < Rational(0) || spec.p > Rational(1) || spec.q < Rational(0) ||
                spec.q > Rational(1))
                throw std::invalid_argument("generate: probability out of [0,1]");
            Xorshift64Star rng(spec.seed);
            ColouredGraph g(spec.n);
            for (int u = 0; u < spec.n; ++u)
                for (int v = u + 1; v < spec.n; ++v) {
                    if (!rng.chance(spec.p.num(), spec.p.den())) continue;
                    Colour c = rng.chance(spec.q.num(), spec.q.den()) ? Colour::Red : Colour::Blue;
                    g.add_edge(u, v, c);
                }
            return g;
        }
        case GeneratorSpec::Kind::Gkm:
            return build_gkm(spec.gkm).graph;
        case GeneratorSpec::Kind::OreNotPosa:
            return build_ore_not_posa(spec.m);
        case GeneratorSpec::Kind::PerturbedGkm: {
            ColouredGraph g = build_gkm(spec.gkm).graph;
            auto edges = g.edges();
            if (edges.empty() || spec.flip_count < 0)
                throw std::invalid_argument("generate: bad perturbation spec");
            // rebuild with flip_count random recolourings
            Xorshift64Star rng(spec.seed);
            std::vector<int> flips(edges.size(), 0);
            for (int t = 0; t < spec.flip_count; ++t)
                flips[(size_t)rng.next_below(edges.size())] ^= 1;
            ColouredGraph out(g.vertex_count());
            for (size_t i = 0; i < edges.size(); ++i) {
                auto [u, v, c] = edges[i];
                out.add_edge(u, v, flips[i] ? other(c) : c);
            }
            return out;
        }
    }
    throw std::logic_error("generate: unknown kind");
}

/// Named acceptance predicates for rejection sampling.
struct SampleCondition {
    enum class Kind { None, Posa, Ore, OrePair };
    Kind kind = Kind::None;
    Rational gamma = Rational(1, 20);
    Rational delta = Rational(1, 25);
    Rational x_density = Rational(0, 1); // ore_pair: edge probability of X; 0 = empty X

    std::string describe() const {
        switch (kind) {
            case Kind::None: return "none";
            case Kind::Posa: return "posa(" + gamma.str() + ")";
            case Kind::Ore: return "ore(" + gamma.str() + ")";
            default: return "ore_pair(" + delta.str() + "," + gamma.str() + ")";
        }
    }
};

struct ConditionedSample {
    ColouredGraph graph;
    ColouredGraph except; // exception graph X (empty unless ore_pair sampled one)
    int attempts = 0;     // 1-based index of the accepted attempt
};

/// Rejection sampling: attempt t regenerates the spec with a seed derived
/// from (spec.seed, t) and accepts the first sample passing the condition.
inline std::optional<ConditionedSample> sample_conditioned(const GeneratorSpec& spec,
                                                           const SampleCondition& cond,
                                                           int max_tries) {
    for (int t = 1; t <= max_tries; ++t) {
        GeneratorSpec attempt = spec;
        attempt.seed = derive_seed(spec.seed, (uint64_t)t);
        attempt.gkm.seed = attempt.seed;
        ColouredGraph g = generate(attempt);
        ColouredGraph x(g.vertex_count());
        bool ok = false;
        switch (cond.kind) {
            case SampleCondition::Kind::None:
                ok = true;
                break;
            case SampleCondition::Kind::Posa:
                ok = check_posa(g, cond.gamma).pass;
                break;
            case SampleCondition::Kind::Ore:
                ok = check_ore(g, cond.gamma).pass;
                break;
            case SampleCondition::Kind::OrePair: {
                if (cond.x_density > Rational(0)) {
                    GeneratorSpec xs;
                    xs.kind = GeneratorSpec::Kind::Gnp;
                    xs.n = g.vertex_count();
                    xs.p = cond.x_density;
                    xs.q = Rational(1);
                    xs.seed = derive_seed(attempt.seed, 0x58u);
                    x = generate(xs);
                }
                ok = check_ore_pair(g, x, cond.delta, cond.gamma).pass;
                break;
            }
        }
        if (ok) return ConditionedSample{std::move(g), std::move(x), t};
    }
    return std::nullopt;
}

} // namespace cyclecover
