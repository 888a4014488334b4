#pragma once

#include <algorithm>
#include <functional>
#include <iterator>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "graph.hpp"
#include "rational.hpp"
#include "subgraph.hpp"

namespace cyclecover {

// Degree-condition checkers. Thresholds are exact rationals throughout;
// Posa-type comparisons are strict (>), Ore-type are non-strict (>=).

struct PosaWitness {
    int j;              // first violating index, 1-based
    int degree;         // d_j
    Rational threshold; // j + x*n + offset
};

struct OreWitness {
    int u, v; // first violating non-adjacent pair, lexicographic
    int deg_u, deg_v;
    Rational threshold; // t*n
};

struct ConditionReport {
    bool pass = true;
    std::optional<PosaWitness> posa_witness;
    std::optional<OreWitness> ore_witness;
    std::string clause; // which clause failed, for compound checks
    std::vector<std::pair<std::string, std::string>> params;

    static ConditionReport passed() { return ConditionReport{}; }
};

/// d_j > j + x*n + offset for all integers 1 <= j < y*n.
/// Fail reports the smallest violating j; an empty range passes.
inline ConditionReport check_posa_general(const ColouredGraph& g, Rational x, Rational y,
                                          int offset) {
    if (x < Rational(0) || !(y > Rational(0)) || y > Rational(1, 2))
        throw std::invalid_argument("check_posa_general: need x >= 0 and 0 < y <= 1/2");
    int n = g.vertex_count();
    ConditionReport rep;
    rep.params = {{"check", "posa"}, {"x", x.str()}, {"y", y.str()},
                  {"offset", std::to_string(offset)}, {"n", std::to_string(n)}};
    auto seq = degree_sequence(g);
    for (int j = 1; Rational(j) < y * Rational(n); ++j) {
        Rational threshold = Rational(j) + x * Rational(n) + Rational(offset);
        if (!(Rational(seq.d(j)) > threshold)) {
            rep.pass = false;
            rep.posa_witness = PosaWitness{j, seq.d(j), threshold};
            rep.clause = "posa";
            return rep;
        }
    }
    return rep;
}

/// All indices failing the condition, for "fails exactly at ..." claims.
inline std::vector<int> posa_violations(const ColouredGraph& g, Rational x, Rational y,
                                        int offset) {
    int n = g.vertex_count();
    auto seq = degree_sequence(g);
    std::vector<int> out;
    for (int j = 1; Rational(j) < y * Rational(n); ++j)
        if (!(Rational(seq.d(j)) > Rational(j) + x * Rational(n) + Rational(offset)))
            out.push_back(j);
    return out;
}

/// (n, gamma)-Posa: d_j > j + (1/2 + gamma)n for all 1 <= j < n/4.
inline ConditionReport check_posa(const ColouredGraph& g, Rational gamma) {
    auto rep = check_posa_general(g, Rational(1, 2) + gamma, Rational(1, 4), 0);
    rep.params.push_back({"gamma", gamma.str()});
    return rep;
}

namespace detail {

/// Ore-type scan with an arbitrary adjacency/degree view, so the same
/// code serves G and G union X.
template <typename HasEdge, typename Deg>
inline ConditionReport ore_scan(int n, Rational t, HasEdge&& has_edge, Deg&& deg) {
    ConditionReport rep;
    rep.params = {{"check", "ore"}, {"t", t.str()}, {"n", std::to_string(n)}};
    Rational threshold = t * Rational(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            if (has_edge(u, v)) continue;
            if (Rational(deg(u) + deg(v)) < threshold) {
                rep.pass = false;
                rep.ore_witness = OreWitness{u, v, deg(u), deg(v), threshold};
                rep.clause = "ore";
                return rep;
            }
        }
    return rep;
}

} // namespace detail

/// deg u + deg v >= t*n for every non-adjacent pair; complete graphs
/// pass vacuously.
inline ConditionReport check_ore_general(const ColouredGraph& g, Rational t) {
    return detail::ore_scan(
        g.vertex_count(), t, [&](int u, int v) { return g.has_edge(u, v); },
        [&](int v) { return g.degree(v); });
}

/// (n, gamma)-Ore: threshold (4/3 + gamma)n.
inline ConditionReport check_ore(const ColouredGraph& g, Rational gamma) {
    auto rep = check_ore_general(g, Rational(4, 3) + gamma);
    rep.params.push_back({"gamma", gamma.str()});
    return rep;
}

/// (n, delta, gamma)-Ore pair: Delta(X) < delta*n and G union X is
/// (n, gamma)-Ore. X's colours are ignored. Fail names the clause.
inline ConditionReport check_ore_pair(const ColouredGraph& g, const ColouredGraph& x,
                                      Rational delta, Rational gamma) {
    int n = g.vertex_count();
    if (x.vertex_count() != n)
        throw std::invalid_argument("check_ore_pair: vertex-set mismatch");
    ConditionReport rep;
    rep.params = {{"check", "ore_pair"}, {"delta", delta.str()}, {"gamma", gamma.str()},
                  {"n", std::to_string(n)}};
    Rational cap = delta * Rational(n);
    for (int v = 0; v < n; ++v)
        if (!(Rational(x.degree(v)) < cap)) {
            rep.pass = false;
            rep.clause = "max_degree";
            rep.posa_witness = PosaWitness{v + 1, x.degree(v), cap}; // reuses (index, value, bound)
            return rep;
        }

    std::vector<int> udeg(n, 0);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v && (g.has_edge(u, v) || x.has_edge(u, v))) ++udeg[u];
    auto inner = detail::ore_scan(
        n, Rational(4, 3) + gamma,
        [&](int u, int v) { return g.has_edge(u, v) || x.has_edge(u, v); },
        [&](int v) { return udeg[v]; });
    if (!inner.pass) {
        rep.pass = false;
        rep.clause = "ore";
        rep.ore_witness = inner.ore_witness;
    }
    return rep;
}

/// Implication check (a property, not a filter): whenever G satisfies
/// the Ore-type bound (1 + 2x)n, its degree sequence must satisfy
/// d_j > j + xn for all 1 <= j < n/2. Vacuous pass if the hypothesis
/// fails. A Fail here would be a genuine counterexample.
inline ConditionReport ore_implies_posa_check(const ColouredGraph& g, Rational x) {
    if (x < Rational(0) || !(x < Rational(1, 2)))
        throw std::invalid_argument("ore_implies_posa_check: need 0 <= x < 1/2");
    ConditionReport rep;
    rep.params = {{"check", "ore_implies_posa"}, {"x", x.str()}};
    auto hyp = check_ore_general(g, Rational(1) + Rational(2) * x);
    if (!hyp.pass) {
        rep.clause = "vacuous";
        return rep;
    }
    auto concl = check_posa_general(g, x, Rational(1, 2), 0);
    if (!concl.pass) {
        rep.pass = false;
        rep.clause = "counterexample";
        rep.posa_witness = concl.posa_witness;
    }
    return rep;
}

struct ColouringClass {
    enum class Tag { Plain, Mixed, Split, Unclassified };
    Tag tag = Tag::Unclassified;
    std::vector<MonochromaticComponent> comps; // Plain: {R}; Mixed: {R,B}; Split: {R1,R2}
    Rational delta, gamma;
    std::string reason; // set when Unclassified
};

inline const char* tag_name(ColouringClass::Tag t) {
    switch (t) {
        case ColouringClass::Tag::Plain: return "plain";
        case ColouringClass::Tag::Mixed: return "mixed";
        case ColouringClass::Tag::Split: return "split";
        default: return "unclassified";
    }
}

namespace detail {

inline int union_size(const MonochromaticComponent& a, const MonochromaticComponent& b) {
    std::vector<int> u;
    std::set_union(a.vertices.begin(), a.vertices.end(), b.vertices.begin(), b.vertices.end(),
                   std::back_inserter(u));
    return (int)u.size();
}

} // namespace detail

/// Plain / mixed / split trichotomy of a 2-edge-colouring, first
/// applicable tag wins and witnesses maximize coverage. Unclassified is
/// an ordinary outcome (possible at small n), not an error.
inline ColouringClass classify_colouring(const ColouredGraph& g, const ColouredGraph& x,
                                         Rational delta, Rational gamma) {
    ColouringClass cls;
    cls.delta = delta;
    cls.gamma = gamma;
    if (!check_ore_pair(g, x, delta, gamma).pass) {
        cls.reason = "ore_pair precondition failed";
        return cls;
    }
    int n = g.vertex_count();
    auto reds = monochromatic_components(g, Colour::Red);
    auto blues = monochromatic_components(g, Colour::Blue);

    // plain: one component with >= (1 - 10 delta) n vertices
    Rational plain_bar = (Rational(1) - Rational(10) * delta) * Rational(n);
    const MonochromaticComponent* best = nullptr;
    for (const auto& c : reds)
        if (Rational(c.size()) >= plain_bar && (!best || c.size() > best->size())) best = &c;
    for (const auto& c : blues)
        if (Rational(c.size()) >= plain_bar && (!best || c.size() > best->size())) best = &c;
    if (best) {
        cls.tag = ColouringClass::Tag::Plain;
        cls.comps = {*best};
        return cls;
    }

    // mixed: a red-blue pair covering >= (1 - 8 delta) n
    Rational mixed_bar = (Rational(1) - Rational(8) * delta) * Rational(n);
    int best_cover = -1;
    const MonochromaticComponent *br = nullptr, *bb = nullptr;
    for (const auto& r : reds)
        for (const auto& b : blues) {
            int cov = detail::union_size(r, b);
            if (Rational(cov) >= mixed_bar && cov > best_cover) {
                best_cover = cov;
                br = &r;
                bb = &b;
            }
        }
    if (br) {
        cls.tag = ColouringClass::Tag::Mixed;
        cls.comps = {*br, *bb};
        return cls;
    }

    // split: a same-colour pair covering >= (1 - 6 delta) n
    Rational split_bar = (Rational(1) - Rational(6) * delta) * Rational(n);
    best_cover = -1;
    const MonochromaticComponent *s1 = nullptr, *s2 = nullptr;
    for (const auto& comps : {std::cref(reds), std::cref(blues)})
        for (size_t i = 0; i < comps.get().size(); ++i)
            for (size_t j = i + 1; j < comps.get().size(); ++j) {
                int cov = comps.get()[i].size() + comps.get()[j].size(); // disjoint
                if (Rational(cov) >= split_bar && cov > best_cover) {
                    best_cover = cov;
                    s1 = &comps.get()[i];
                    s2 = &comps.get()[j];
                }
            }
    if (s1) {
        cls.tag = ColouringClass::Tag::Split;
        cls.comps = {*s1, *s2};
        return cls;
    }
    cls.reason = "no tag applies";
    return cls;
}

// Facts that hold for every (n, gamma)-Posa graph with n*gamma >= 1,
// used as an invariant suite on conditioned samples.

/// delta(G) > n/2.
inline bool posa_min_degree_holds(const ColouredGraph& g) {
    int n = g.vertex_count();
    for (int v = 0; v < n; ++v)
        if (2 * g.degree(v) <= n) return false;
    return true;
}

/// Every U with |U| >= n/4 has a vertex of degree > 3n/4.
inline bool posa_large_set_holds(const ColouredGraph& g, const std::vector<int>& u_set) {
    int n = g.vertex_count();
    for (int v : u_set)
        if (4 * g.degree(v) > 3 * n) return true;
    return false;
}

/// Every non-empty U with |U| < n/4 has a vertex with more than n/2
/// neighbours outside U.
inline bool posa_small_set_holds(const ColouredGraph& g, const std::vector<int>& u_set) {
    int n = g.vertex_count();
    std::vector<char> in(n, 0);
    for (int v : u_set) in[v] = 1;
    for (int v : u_set) {
        int out_deg = 0;
        for (int w : g.neighbours(v))
            if (!in[w]) ++out_deg;
        if (2 * out_deg > n) return true;
    }
    return false;
}

} // namespace cyclecover
