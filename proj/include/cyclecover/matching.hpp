#pragma once

#include <array>
#include <cassert>
#include <functional>
#include <limits>
#include <optional>
#include <stdexcept>
#include <vector>

#include "subgraph.hpp"

namespace cyclecover {

struct CapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Edge weights in {0,1,2} with total weight at most 2 at every vertex.
/// Only the support is stored; after canonicalization it decomposes into
/// vertex-disjoint weight-2 edges and weight-1 cycles.
struct TwoMatching {
    std::vector<std::array<int, 3>> support; // (u, v, w) with u < v, w in {1,2}
    int size = 0;                            // sum of all weights
};

struct ContractionWitness {
    std::vector<int> set; // sorted, stable in the host graph
    int contraction = 0;  // |set| - |N(set)|
};

inline bool is_stable(const Subgraph& h, const std::vector<int>& set) {
    for (int v : set)
        if (!h.contains(v)) throw std::out_of_range("is_stable: vertex not in subgraph");
    std::vector<char> in(h.id_bound(), 0);
    for (int v : set) in[v] = 1;
    for (int v : set)
        for (int u : h.neighbours(v))
            if (in[u]) return false;
    return true;
}

/// c_H(S) = |S| - |N_H(S)| for a stable set S.
inline int contraction(const Subgraph& h, const std::vector<int>& set) {
    if (!is_stable(h, set)) throw std::invalid_argument("contraction: set is not stable");
    std::vector<char> in(h.id_bound(), 0), nbr(h.id_bound(), 0);
    for (int v : set) in[v] = 1;
    int nsize = 0;
    for (int v : set)
        for (int u : h.neighbours(v))
            if (!in[u] && !nbr[u]) {
                nbr[u] = 1;
                ++nsize;
            }
    return (int)set.size() - nsize;
}

namespace detail {

/// Hopcroft-Karp maximum matching on the bipartite double cover of h.
/// Left and right sides are both copies of h's vertices (compacted to
/// 0..k-1); edge uv of h becomes uL-vR and vL-uR. Returns match_l,
/// match_r (indices, -1 if exposed) and the matching size.
struct DoubleCoverMatching {
    std::vector<int> ids;     // compact index -> original id
    std::vector<int> match_l; // left  -> right partner
    std::vector<int> match_r; // right -> left partner
    int size = 0;
};

inline DoubleCoverMatching double_cover_matching(const Subgraph& h) {
    DoubleCoverMatching r;
    r.ids = h.vertices();
    int k = (int)r.ids.size();
    std::vector<int> pos(h.id_bound(), -1);
    for (int i = 0; i < k; ++i) pos[r.ids[i]] = i;
    std::vector<std::vector<int>> adj(k);
    for (int i = 0; i < k; ++i)
        for (int u : h.neighbours(r.ids[i])) adj[i].push_back(pos[u]);

    r.match_l.assign(k, -1);
    r.match_r.assign(k, -1);
    const int INF = std::numeric_limits<int>::max();
    std::vector<int> dist(k);
    std::vector<int> queue;
    queue.reserve(k);

    auto bfs = [&]() -> bool {
        queue.clear();
        bool found = false;
        for (int u = 0; u < k; ++u) {
            if (r.match_l[u] == -1) {
                dist[u] = 0;
                queue.push_back(u);
            } else {
                dist[u] = INF;
            }
        }
        for (size_t qi = 0; qi < queue.size(); ++qi) {
            int u = queue[qi];
            for (int v : adj[u]) {
                int w = r.match_r[v];
                if (w == -1) {
                    found = true;
                } else if (dist[w] == INF) {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        return found;
    };

    std::function<bool(int)> dfs = [&](int u) -> bool {
        for (int v : adj[u]) {
            int w = r.match_r[v];
            if (w == -1 || (dist[w] == dist[u] + 1 && dfs(w))) {
                r.match_l[u] = v;
                r.match_r[v] = u;
                return true;
            }
        }
        dist[u] = INF;
        return false;
    };

    while (bfs())
        for (int u = 0; u < k; ++u)
            if (r.match_l[u] == -1 && dfs(u)) ++r.size;
    return r;
}

} // namespace detail

/// Maximum 2-matching via the bipartite double cover. The extracted
/// weights are canonicalized so the weight-1 support is a disjoint union
/// of cycles: even weight-1 paths are rewritten to alternating 2,0
/// weights, which preserves the total. Odd paths cannot occur in a
/// maximum 2-matching (rewriting one would increase the size).
inline TwoMatching max_two_matching(const Subgraph& h) {
    auto dc = detail::double_cover_matching(h);
    int k = (int)dc.ids.size();

    // weight per oriented support pair, folded to u < v (compact indices)
    std::vector<std::array<int, 3>> sup;
    std::vector<std::vector<std::pair<int, int>>> w1(k); // weight-1 incidences: (nbr, sup idx)
    std::vector<int> w1deg(k, 0);
    for (int u = 0; u < k; ++u) {
        int v = dc.match_l[u];
        if (v == -1) continue;
        if (u > v && dc.match_l[v] == u) continue; // already emitted from the other side
        int a = std::min(u, v), b = std::max(u, v);
        int w = (dc.match_l[a] == b ? 1 : 0) + (dc.match_l[b] == a ? 1 : 0);
        sup.push_back({a, b, w});
        if (w == 1) {
            int idx = (int)sup.size() - 1;
            w1[a].push_back({b, idx});
            w1[b].push_back({a, idx});
            ++w1deg[a];
            ++w1deg[b];
        }
    }

    // rewrite weight-1 paths into disjoint weight-2 edges
    std::vector<char> visited(k, 0);
    for (int s = 0; s < k; ++s) {
        if (w1deg[s] != 1 || visited[s]) continue;
        // walk the path from endpoint s, toggling weights 2,0,2,0,...
        int cur = s, prev = -1, step = 0;
        while (true) {
            visited[cur] = 1;
            int nxt = -1, idx = -1;
            for (auto [nb, si] : w1[cur])
                if (nb != prev) {
                    nxt = nb;
                    idx = si;
                    break;
                }
            if (nxt == -1) break;
            sup[idx][2] = (step % 2 == 0) ? 2 : 0;
            prev = cur;
            cur = nxt;
            ++step;
        }
        // an odd path would mean the bipartite matching was not maximum
        assert(step % 2 == 0);
    }

    TwoMatching m;
    m.size = dc.size;
    for (const auto& [a, b, w] : sup) {
        if (w == 0) continue;
        int u = dc.ids[a], v = dc.ids[b];
        if (u > v) std::swap(u, v);
        m.support.push_back({u, v, w});
    }
    std::sort(m.support.begin(), m.support.end());
    return m;
}

/// max { c_H(S) | S stable }, read off the duality of the double cover.
inline int max_contraction(const Subgraph& h) {
    return h.size() - detail::double_cover_matching(h).size;
}

constexpr int kDefaultBruteforceCap = 25;

/// Exhaustive maximum contraction over all stable sets, by include/
/// exclude branch and bound. Witness is the lexicographically smallest
/// sorted set among the maxima (include-first order guarantees it).
inline ContractionWitness max_contraction_bruteforce(const Subgraph& h,
                                                     int cap = kDefaultBruteforceCap) {
    int k = h.size();
    if (k > cap) throw CapExceeded("max_contraction_bruteforce: size cap exceeded");
    const auto& ids = h.vertices();

    std::vector<char> in_set(h.id_bound(), 0), in_nbr(h.id_bound(), 0);
    std::vector<int> chosen;
    int nbr_count = 0;
    ContractionWitness best; // empty set, contraction 0

    std::function<void(int)> rec = [&](int i) {
        int cur = (int)chosen.size() - nbr_count;
        if (cur > best.contraction) {
            best.contraction = cur;
            best.set = chosen;
        }
        if (i == k) return;
        if (cur + (k - i) <= best.contraction) return; // cannot strictly improve
        int v = ids[i];
        if (!in_nbr[v]) { // include v (stability: v not adjacent to the set)
            std::vector<int> added;
            for (int u : h.neighbours(v))
                if (!in_set[u] && !in_nbr[u]) {
                    in_nbr[u] = 1;
                    ++nbr_count;
                    added.push_back(u);
                }
            in_set[v] = 1;
            chosen.push_back(v);
            rec(i + 1);
            chosen.pop_back();
            in_set[v] = 0;
            for (int u : added) {
                in_nbr[u] = 0;
                --nbr_count;
            }
        }
        rec(i + 1); // exclude v
    };
    rec(0);
    std::sort(best.set.begin(), best.set.end());
    return best;
}

/// Outcome of a contracting-set query. `exists` is always exact (via the
/// duality); `witness` may be missing beyond the brute-force cap when the
/// deficiency region of the double cover fails to project to a stable set.
struct ContractingSetResult {
    bool exists = false;
    int max_contraction = 0;
    std::optional<ContractionWitness> witness;
};

/// Search for a stable set S with c_H(S) > c.
inline ContractingSetResult find_contracting_set(const Subgraph& h, int c,
                                                 int bruteforce_cap = kDefaultBruteforceCap) {
    if (c < 0) throw std::invalid_argument("find_contracting_set: c must be >= 0");
    ContractingSetResult res;
    auto dc = detail::double_cover_matching(h);
    res.max_contraction = h.size() - dc.size;
    res.exists = res.max_contraction > c;
    if (!res.exists) return res;

    if (h.size() <= bruteforce_cap) {
        res.witness = max_contraction_bruteforce(h, bruteforce_cap);
        return res;
    }

    // Alternating reachability from exposed left vertices; the reached
    // left set attains the maximum deficiency, project it back.
    int k = (int)dc.ids.size();
    std::vector<int> pos(h.id_bound(), -1);
    for (int i = 0; i < k; ++i) pos[dc.ids[i]] = i;
    std::vector<char> reach_l(k, 0), reach_r(k, 0);
    std::vector<int> queue;
    for (int u = 0; u < k; ++u)
        if (dc.match_l[u] == -1) {
            reach_l[u] = 1;
            queue.push_back(u);
        }
    for (size_t qi = 0; qi < queue.size(); ++qi) {
        int u = queue[qi];
        for (int v0 : h.neighbours(dc.ids[u])) {
            int v = pos[v0];
            if (reach_r[v]) continue;
            reach_r[v] = 1;
            int w = dc.match_r[v];
            if (w != -1 && !reach_l[w]) {
                reach_l[w] = 1;
                queue.push_back(w);
            }
        }
    }
    std::vector<int> set;
    for (int u = 0; u < k; ++u)
        if (reach_l[u]) set.push_back(dc.ids[u]);
    std::sort(set.begin(), set.end());
    if (is_stable(h, set)) {
        int cs = contraction(h, set);
        if (cs > c) res.witness = ContractionWitness{std::move(set), cs};
    }
    return res;
}

inline bool is_valid_two_matching(const Subgraph& h, const TwoMatching& m) {
    std::vector<int> load(h.id_bound(), 0);
    int total = 0;
    for (const auto& [u, v, w] : m.support) {
        if (!h.has_edge(u, v) || w < 1 || w > 2) return false;
        load[u] += w;
        load[v] += w;
        total += w;
    }
    if (total != m.size) return false;
    for (int v : h.vertices())
        if (load[v] > 2) return false;
    return true;
}

/// Canonical-form check: weight-2 edges isolated from all other support,
/// weight-1 support a disjoint union of simple cycles.
inline bool has_cycle_edge_decomposition(const Subgraph& h, const TwoMatching& m) {
    std::vector<int> w1deg(h.id_bound(), 0), w2deg(h.id_bound(), 0);
    for (const auto& [u, v, w] : m.support) {
        if (w == 2) {
            ++w2deg[u];
            ++w2deg[v];
        } else {
            ++w1deg[u];
            ++w1deg[v];
        }
    }
    for (int v : h.vertices()) {
        if (w2deg[v] > 1) return false;
        if (w2deg[v] == 1 && w1deg[v] != 0) return false;
        if (w1deg[v] != 0 && w1deg[v] != 2) return false;
    }
    return true;
}

// Observation-style facts about contracting sets, rechecked on witnesses.

/// |S| >= c_H(S) and |N_H(S)| < n/2 for any contracting set. The
/// witness is recomputed against the subgraph rather than trusted.
inline bool contracting_set_bounds_hold(const Subgraph& h, const ContractionWitness& w,
                                        int host_n) {
    if (!is_stable(h, w.set) || contraction(h, w.set) != w.contraction) return false;
    int nbrs = (int)w.set.size() - w.contraction;
    return (int)w.set.size() >= w.contraction && 2 * nbrs < host_n;
}

/// Subsets of stable sets stay stable and lose at most one unit of
/// contraction per removed vertex.
inline bool subset_contraction_holds(const Subgraph& h, const std::vector<int>& set,
                                     const std::vector<int>& subset) {
    if (!is_stable(h, subset)) return false;
    int removed = (int)(set.size() - subset.size());
    return contraction(h, subset) >= contraction(h, set) - removed;
}

} // namespace cyclecover
