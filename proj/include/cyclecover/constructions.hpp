#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "conditions.hpp"
#include "graph.hpp"
#include "rng.hpp"

namespace cyclecover {

/// Four-cluster extremal graph on n = 4m vertices: a cluster U of k
/// vertices, clusters A1 and A2 of m vertices each and a cluster B of
/// 2m - k. Edges U-B and A1-A2 are absent; inside A1, A1-B and U-A2 are
/// red; inside A2, A2-B and U-A1 are blue; edges inside U and inside B
/// are present with the colouring rule below.
struct GkmSpec {
    int k = 1;
    int m = 2;
    enum class Inner { AllRed, AllBlue, Seeded };
    Inner inner = Inner::AllRed;
    uint64_t seed = 0; // used when inner == Seeded

    void validate() const {
        if (k < 1 || k >= m) throw std::invalid_argument("gkm: need 1 <= k < m");
    }
    int n() const { return 4 * m; }
    std::string inner_name() const {
        switch (inner) {
            case Inner::AllRed: return "red";
            case Inner::AllBlue: return "blue";
            default: return "seed:" + std::to_string(seed);
        }
    }
};

/// Cluster boundaries of a built G_{k,m}: U = [0,k), A1 = [k,k+m),
/// A2 = [k+m,k+2m), B = [k+2m,4m).
struct GkmGraph {
    ColouredGraph graph;
    int k, m;

    bool in_u(int v) const { return v < k; }
    bool in_a1(int v) const { return v >= k && v < k + m; }
    bool in_a2(int v) const { return v >= k + m && v < k + 2 * m; }
    bool in_b(int v) const { return v >= k + 2 * m; }
};

inline GkmGraph build_gkm(const GkmSpec& spec) {
    spec.validate();
    int k = spec.k, m = spec.m, n = spec.n();
    ColouredGraph g(n);
    Xorshift64Star rng(spec.seed);
    auto inner_colour = [&]() {
        switch (spec.inner) {
            case GkmSpec::Inner::AllRed: return Colour::Red;
            case GkmSpec::Inner::AllBlue: return Colour::Blue;
            default: return rng.next_below(2) == 0 ? Colour::Red : Colour::Blue;
        }
    };
    auto cluster = [&](int v) { return v < k ? 0 : v < k + m ? 1 : v < k + 2 * m ? 2 : 3; };
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            int cu = cluster(u), cv = cluster(v);
            if ((cu == 0 && cv == 3) || (cu == 1 && cv == 2)) continue; // U-B, A1-A2 missing
            if (cu == cv) {
                if (cu == 1) g.add_edge(u, v, Colour::Red);
                else if (cu == 2) g.add_edge(u, v, Colour::Blue);
                else g.add_edge(u, v, inner_colour()); // inside U or B
            } else if ((cu == 1 && cv == 3) || (cu == 0 && cv == 2)) {
                g.add_edge(u, v, Colour::Red); // A1-B, U-A2
            } else {
                g.add_edge(u, v, Colour::Blue); // A2-B, U-A1
            }
        }
    return GkmGraph{std::move(g), k, m};
}

/// Two-clique graph on n = 4m vertices: a clique U of m-1 vertices, a
/// clique on the remaining 3m+1, and exactly 2m+1 edges from each u in U
/// to the big clique, assigned round-robin so the big-clique side sees
/// U-degrees differing by at most one. Satisfies a strong Ore-type bound
/// yet violates the Posa-type condition at j = m-1. All edges red.
inline ColouredGraph build_ore_not_posa(int m) {
    if (m < 3) throw std::invalid_argument("ore_not_posa: need m >= 3");
    int n = 4 * m, small = m - 1, big = 3 * m + 1;
    ColouredGraph g(n);
    for (int u = 0; u < small; ++u)
        for (int v = u + 1; v < small; ++v) g.add_edge(u, v, Colour::Red);
    for (int u = 0; u < big; ++u)
        for (int v = u + 1; v < big; ++v) g.add_edge(small + u, small + v, Colour::Red);
    int quota = 2 * m + 1;
    for (int i = 0; i < small; ++i) {
        long long start = (long long)i * quota % big;
        for (int t = 0; t < quota; ++t) {
            int v = small + (int)((start + t) % big);
            g.add_edge(i, v, Colour::Red);
        }
    }
    return g;
}

struct GkmReport {
    std::vector<int> posa_violations; // indices where the slack condition fails
    bool posa_clause = false;         // fails exactly at {k}
    bool cover_clause_ran = false;    // partition search ran (n within cap)
    bool cover_exists = true;         // two monochromatic cycles cover V(G)
    bool cover_clause = false;        // no such cover exists

    bool pass() const { return posa_clause && (!cover_clause_ran || cover_clause); }
};

// verify_gkm lives in partition.hpp to use the exact search.

} // namespace cyclecover
