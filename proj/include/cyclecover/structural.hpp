#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "conditions.hpp"
#include "graph.hpp"
#include "matching.hpp"
#include "rational.hpp"
#include "subgraph.hpp"

namespace cyclecover {

/// A family of at most four monochromatic components together with their
/// union subgraph and the covered fraction of the host graph.
struct ComponentFamily {
    std::vector<MonochromaticComponent> members;
    Subgraph union_graph;
    Rational coverage; // |union| / n

    int union_size() const { return union_graph.size(); }
};

namespace detail {

inline ComponentFamily make_family(const ColouredGraph& g,
                                   std::vector<MonochromaticComponent> members) {
    Subgraph u = union_subgraph(g, members);
    Rational cov = g.vertex_count() == 0 ? Rational(0)
                                         : Rational(u.size(), g.vertex_count());
    return ComponentFamily{std::move(members), std::move(u), cov};
}

inline int union_count(const std::vector<const MonochromaticComponent*>& comps, int n) {
    std::vector<char> seen(n, 0);
    int cnt = 0;
    for (const auto* c : comps)
        for (int v : c->vertices)
            if (!seen[v]) {
                seen[v] = 1;
                ++cnt;
            }
    return cnt;
}

} // namespace detail

/// A red and a blue component whose union spans G, optionally also free
/// of contracting sets (max contraction 0, i.e. a perfect 2-matching).
/// Pairs are tried by decreasing union size, ties by component ids.
inline std::optional<ComponentFamily> find_spanning_pair(const ColouredGraph& g,
                                                         bool require_no_contracting) {
    int n = g.vertex_count();
    auto reds = monochromatic_components(g, Colour::Red);
    auto blues = monochromatic_components(g, Colour::Blue);
    struct Cand {
        int cover;
        int ri, bi;
    };
    std::vector<Cand> cands;
    for (const auto& r : reds)
        for (const auto& b : blues) {
            int cov = detail::union_count({&r, &b}, n);
            if (cov == n) cands.push_back({cov, r.id, b.id});
        }
    std::sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) {
        if (a.cover != b.cover) return a.cover > b.cover;
        if (a.ri != b.ri) return a.ri < b.ri;
        return a.bi < b.bi;
    });
    for (const auto& c : cands) {
        auto fam = detail::make_family(g, {reds[c.ri], blues[c.bi]});
        if (!require_no_contracting || max_contraction(fam.union_graph) == 0) return fam;
    }
    return std::nullopt;
}

/// The pair of monochromatic components (any colours) maximizing union
/// coverage, exhaustively over all pairs.
inline ComponentFamily two_components_cover(const ColouredGraph& g) {
    int n = g.vertex_count();
    auto reds = monochromatic_components(g, Colour::Red);
    auto blues = monochromatic_components(g, Colour::Blue);
    std::vector<const MonochromaticComponent*> all;
    for (const auto& c : reds) all.push_back(&c);
    for (const auto& c : blues) all.push_back(&c);
    int best = -1;
    std::pair<size_t, size_t> pick{0, 1};
    for (size_t i = 0; i < all.size(); ++i)
        for (size_t j = i + 1; j < all.size(); ++j) {
            int cov = detail::union_count({all[i], all[j]}, n);
            if (cov > best) {
                best = cov;
                pick = {i, j};
            }
        }
    return detail::make_family(g, {*all[pick.first], *all[pick.second]});
}

/// Counts vertices whose red component AND blue component both belong to
/// the family; the family double-covers G when that holds for at least
/// 2n/3 vertices.
inline std::pair<bool, int> is_double_cover(const ColouredGraph& g,
                                            const std::vector<MonochromaticComponent>& family) {
    int n = g.vertex_count();
    auto reds = monochromatic_components(g, Colour::Red);
    auto blues = monochromatic_components(g, Colour::Blue);
    auto red_idx = component_index(reds, n);
    auto blue_idx = component_index(blues, n);
    std::vector<char> red_in(reds.size(), 0), blue_in(blues.size(), 0);
    for (const auto& c : family) {
        const auto& canon = c.colour == Colour::Red ? reds : blues;
        if (c.id < 0 || c.id >= (int)canon.size() || canon[c.id].vertices != c.vertices)
            throw std::invalid_argument("is_double_cover: component not from this graph");
        (c.colour == Colour::Red ? red_in : blue_in)[c.id] = 1;
    }
    int count = 0;
    for (int v = 0; v < n; ++v)
        if (red_in[red_idx[v]] && blue_in[blue_idx[v]]) ++count;
    return {3 * count >= 2 * n, count};
}

inline std::pair<bool, int> is_double_cover(const ColouredGraph& g, const ComponentFamily& fam) {
    return is_double_cover(g, fam.members);
}

/// At most three monochromatic components whose union has >= (1 - eta)n
/// vertices and no floor(eta*n)-contracting set. Families are tried
/// coverage-descending (smaller families first on ties).
inline std::optional<ComponentFamily> find_cover_triple(const ColouredGraph& g, Rational eta,
                                                        int bruteforce_cap = kDefaultBruteforceCap) {
    int n = g.vertex_count();
    auto reds = monochromatic_components(g, Colour::Red);
    auto blues = monochromatic_components(g, Colour::Blue);
    std::vector<const MonochromaticComponent*> all;
    for (const auto& c : reds) all.push_back(&c);
    for (const auto& c : blues) all.push_back(&c);
    int total = (int)all.size();

    Rational coverage_bar = (Rational(1) - eta) * Rational(n);
    long long contraction_bar = (eta * Rational(n)).floor();
    if (contraction_bar < 0) contraction_bar = 0;

    struct Cand {
        int cover;
        std::vector<int> idx;
    };
    std::vector<Cand> cands;
    for (int i = 0; i < total; ++i) {
        int ci = detail::union_count({all[i]}, n);
        if (Rational(ci) >= coverage_bar) cands.push_back({ci, {i}});
        for (int j = i + 1; j < total; ++j) {
            int cj = detail::union_count({all[i], all[j]}, n);
            if (Rational(cj) >= coverage_bar) cands.push_back({cj, {i, j}});
            for (int l = j + 1; l < total; ++l) {
                int cl = detail::union_count({all[i], all[j], all[l]}, n);
                if (Rational(cl) >= coverage_bar) cands.push_back({cl, {i, j, l}});
            }
        }
    }
    std::sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) {
        if (a.cover != b.cover) return a.cover > b.cover;
        if (a.idx.size() != b.idx.size()) return a.idx.size() < b.idx.size();
        return a.idx < b.idx;
    });
    for (const auto& c : cands) {
        std::vector<MonochromaticComponent> members;
        for (int i : c.idx) members.push_back(*all[i]);
        auto fam = detail::make_family(g, members);
        if (!find_contracting_set(fam.union_graph, (int)contraction_bar, bruteforce_cap).exists)
            return fam;
    }
    return std::nullopt;
}

/// Clause-by-clause evaluation of the evenly-split configuration: both
/// pairs split (n,delta,gamma)-Ore, pair colours differ, and no three of
/// the four components double-cover G.
struct EvenlySplitReport {
    bool ore_pair = false;
    bool no_plain = false;
    bool no_mixed = false;
    bool red_pair_split = false;  // same colour + coverage bar for (R1,R2)
    bool blue_pair_split = false; // same colour + coverage bar for (B1,B2)
    bool colours_differ = false;
    bool no_triple_double_covers = false;

    bool value() const {
        return ore_pair && no_plain && no_mixed && red_pair_split && blue_pair_split &&
               colours_differ && no_triple_double_covers;
    }
};

inline EvenlySplitReport check_evenly_split_detail(const ColouredGraph& g,
                                                   const ColouredGraph& x, Rational delta,
                                                   Rational gamma,
                                                   const MonochromaticComponent& r1,
                                                   const MonochromaticComponent& r2,
                                                   const MonochromaticComponent& b1,
                                                   const MonochromaticComponent& b2) {
    int n = g.vertex_count();
    auto reds = monochromatic_components(g, Colour::Red);
    auto blues = monochromatic_components(g, Colour::Blue);
    for (const auto* c : {&r1, &r2, &b1, &b2}) {
        const auto& canon = c->colour == Colour::Red ? reds : blues;
        if (c->id < 0 || c->id >= (int)canon.size() || canon[c->id].vertices != c->vertices)
            throw std::invalid_argument("check_evenly_split: component not from this graph");
    }

    EvenlySplitReport rep;
    rep.ore_pair = check_ore_pair(g, x, delta, gamma).pass;

    Rational plain_bar = (Rational(1) - Rational(10) * delta) * Rational(n);
    rep.no_plain = true;
    for (const auto& comps : {std::cref(reds), std::cref(blues)})
        for (const auto& c : comps.get())
            if (Rational(c.size()) >= plain_bar) rep.no_plain = false;

    Rational mixed_bar = (Rational(1) - Rational(8) * delta) * Rational(n);
    rep.no_mixed = true;
    for (const auto& r : reds)
        for (const auto& b : blues)
            if (Rational(detail::union_count({&r, &b}, n)) >= mixed_bar) rep.no_mixed = false;

    Rational split_bar = (Rational(1) - Rational(6) * delta) * Rational(n);
    rep.red_pair_split = r1.colour == r2.colour && r1.id != r2.id &&
                         Rational(r1.size() + r2.size()) >= split_bar;
    rep.blue_pair_split = b1.colour == b2.colour && b1.id != b2.id &&
                          Rational(b1.size() + b2.size()) >= split_bar;
    rep.colours_differ = r1.colour != b1.colour;

    rep.no_triple_double_covers = true;
    const MonochromaticComponent* four[4] = {&r1, &r2, &b1, &b2};
    for (int skip = 0; skip < 4; ++skip) {
        std::vector<MonochromaticComponent> triple;
        for (int i = 0; i < 4; ++i)
            if (i != skip) triple.push_back(*four[i]);
        if (is_double_cover(g, triple).first) rep.no_triple_double_covers = false;
    }
    return rep;
}

inline bool check_evenly_split(const ColouredGraph& g, const ColouredGraph& x, Rational delta,
                               Rational gamma, const MonochromaticComponent& r1,
                               const MonochromaticComponent& r2,
                               const MonochromaticComponent& b1,
                               const MonochromaticComponent& b2) {
    return check_evenly_split_detail(g, x, delta, gamma, r1, r2, b1, b2).value();
}

} // namespace cyclecover
