#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <vector>

#include "constructions.hpp"
#include "graph.hpp"
#include "matching.hpp" // CapExceeded

namespace cyclecover {

constexpr int kDefaultPartitionCap = 14;
constexpr int kHardPartitionCap = 20; // table memory grows as 2^n

/// Generalized cycle: empty set, single vertex, single edge or a cycle
/// on >= 3 vertices. Degenerate kinds (Empty, Vertex) are colour-neutral.
struct GeneralizedCycle {
    enum class Kind { Empty, Vertex, Edge, Cycle };
    Kind kind = Kind::Empty;
    std::optional<Colour> colour;
    std::vector<int> vertices; // cyclic order for Kind::Cycle

    int size() const { return (int)vertices.size(); }
};

struct CyclePartition {
    std::vector<GeneralizedCycle> parts;
    int covered = 0;
};

/// Per-colour spanning table: for every vertex subset S, whether the
/// colour class induced on S has a spanning generalized cycle. Built by
/// Held-Karp-style DP over endpoint sets rooted at each subset's lowest
/// vertex; O(2^n * n) time and space.
class HamiltonTable {
public:
    HamiltonTable(const ColouredGraph& g, Colour colour, int cap = kDefaultPartitionCap)
        : n_(g.vertex_count()), colour_(colour) {
        if (n_ > cap || cap > kHardPartitionCap)
            throw CapExceeded("hamilton table: vertex count exceeds cap");
        adj_.assign(n_, 0);
        for (const auto& [u, v, c] : g.edges())
            if (c == colour) {
                adj_[u] |= 1u << v;
                adj_[v] |= 1u << u;
            }
        uint32_t full = n_ == 0 ? 0 : (uint32_t(1) << n_) - 1;
        endpoints_.assign((size_t)full + 1, 0);
        span_.assign((size_t)full + 1, 0);
        for (uint32_t mask = 0; mask <= full; ++mask) {
            int pc = std::popcount(mask);
            if (pc == 0) {
                span_[mask] = 1;
                if (mask == full) break;
                continue;
            }
            int r = std::countr_zero(mask);
            if (pc == 1) {
                endpoints_[mask] = mask;
                span_[mask] = 1;
            } else {
                uint32_t ends = 0;
                uint32_t rest = mask & ~(1u << r);
                for (uint32_t bits = rest; bits;) {
                    int v = std::countr_zero(bits);
                    bits &= bits - 1;
                    if (endpoints_[mask ^ (1u << v)] & adj_[v]) ends |= 1u << v;
                }
                endpoints_[mask] = ends;
                if (pc == 2) {
                    span_[mask] = (adj_[r] & rest) != 0; // the edge exists in this colour
                } else {
                    span_[mask] = (ends & adj_[r]) != 0;
                }
            }
            if (mask == full) break;
        }
    }

    Colour colour() const { return colour_; }
    int n() const { return n_; }

    /// Does the colour class induced on `mask` admit a spanning
    /// generalized cycle? Always true for |mask| <= 1.
    bool spanning(uint32_t mask) const { return span_[mask] != 0; }

    /// Cyclic vertex order witnessing spanning(mask) for |mask| >= 3.
    std::vector<int> extract_cycle(uint32_t mask) const {
        int r = std::countr_zero(mask);
        uint32_t closers = endpoints_[mask] & adj_[r];
        int v = std::countr_zero(closers);
        std::vector<int> path; // from v back to r
        uint32_t cur_mask = mask;
        int cur = v;
        while (cur != r) {
            path.push_back(cur);
            uint32_t prev_mask = cur_mask ^ (1u << cur);
            uint32_t cands = endpoints_[prev_mask] & adj_[cur];
            cur = std::countr_zero(cands);
            cur_mask = prev_mask;
        }
        path.push_back(r);
        std::reverse(path.begin(), path.end());
        return path;
    }

private:
    int n_;
    Colour colour_;
    std::vector<uint32_t> adj_;
    std::vector<uint32_t> endpoints_;
    std::vector<char> span_;
};

inline HamiltonTable mono_hamiltonian_table(const ColouredGraph& g, Colour colour,
                                            int cap = kDefaultPartitionCap) {
    return HamiltonTable(g, colour, cap);
}

/// Exact search for covers of a coloured graph by k generalized cycles.
/// Subsets are tried by increasing popcount with numeric tie-break.
/// With distinct_colours, "distinct" means no two coloured parts share a
/// colour; degenerate parts are neutral, so up to one red and one blue
/// part can appear and the search fixes the order red-ish, blue-ish.
class PartitionSearcher {
public:
    explicit PartitionSearcher(const ColouredGraph& g, int cap = kDefaultPartitionCap)
        : n_(g.vertex_count()),
          red_(g, Colour::Red, cap),
          blue_(g, Colour::Blue, cap) {
        full_ = n_ == 0 ? 0 : (uint32_t(1) << n_) - 1;
        size_t cells = (size_t)full_ + 1;
        order_.resize(cells);
        for (size_t i = 0; i < cells; ++i) order_[i] = (uint32_t)i;
        std::sort(order_.begin(), order_.end(), by_popcount_then_value);
        f_red_.resize(cells);
        f_blue_.resize(cells);
        f_any_.resize(cells);
        for (uint32_t mask = 0;; ++mask) {
            f_red_[mask] = f_table_cell(mask, Role::RedOrNeutral, f_red_);
            f_blue_[mask] = f_table_cell(mask, Role::BlueOrNeutral, f_blue_);
            f_any_[mask] = f_table_cell(mask, Role::Any, f_any_);
            if (mask == full_) break;
        }
    }

    std::optional<CyclePartition> find(int k, bool distinct_colours, int min_cover) const {
        if (k < 1 || k > 3) throw std::invalid_argument("partition: k must be 1, 2 or 3");
        if (min_cover > n_) return std::nullopt;
        if (k == 1) return find1(distinct_colours, min_cover);
        if (k == 2) return find2(distinct_colours, min_cover);
        return find3(distinct_colours, min_cover);
    }

    /// Maximum coverable vertex count with k parts, plus a witness.
    std::pair<int, CyclePartition> max_cover(int k, bool distinct_colours) const {
        // Presence is monotone decreasing in min_cover, so binary descent
        // would work; a direct downward probe keeps the witness logic in
        // one place and the table lookups make each probe cheap.
        for (int c = n_;; --c) {
            auto part = find(k, distinct_colours, c);
            if (part) return {c, *part};
        }
    }

private:
    enum class Role { RedOrNeutral, BlueOrNeutral, Any };

    static bool by_popcount_then_value(uint32_t a, uint32_t b) {
        int pa = std::popcount(a), pb = std::popcount(b);
        if (pa != pb) return pa < pb;
        return a < b;
    }

    bool role_ok(uint32_t mask, Role role) const {
        int pc = std::popcount(mask);
        if (pc <= 1) return true; // neutral
        switch (role) {
            case Role::RedOrNeutral: return red_.spanning(mask);
            case Role::BlueOrNeutral: return blue_.spanning(mask);
            default: return red_.spanning(mask) || blue_.spanning(mask);
        }
    }

    uint8_t f_table_cell(uint32_t mask, Role role, const std::vector<uint8_t>& f) {
        int pc = std::popcount(mask);
        if (role_ok(mask, role)) return (uint8_t)pc;
        uint8_t best = 0;
        for (uint32_t bits = mask; bits;) {
            int v = std::countr_zero(bits);
            bits &= bits - 1;
            best = std::max(best, f[mask ^ (1u << v)]);
        }
        return best;
    }

    const std::vector<uint8_t>& f_for(Role role) const {
        switch (role) {
            case Role::RedOrNeutral: return f_red_;
            case Role::BlueOrNeutral: return f_blue_;
            default: return f_any_;
        }
    }

    /// Largest sub-subset of mask feasible for the role (value from the
    /// f table, witness by walking it; smallest removal first).
    uint32_t best_subset(uint32_t mask, Role role) const {
        const auto& f = f_for(role);
        uint32_t cur = mask;
        while (!(role_ok(cur, role) && std::popcount(cur) == f[cur])) {
            for (uint32_t bits = cur; bits;) {
                int v = std::countr_zero(bits);
                bits &= bits - 1;
                if (f[cur ^ (1u << v)] == f[cur]) {
                    cur ^= 1u << v;
                    break;
                }
            }
        }
        return cur;
    }

    GeneralizedCycle build_part(uint32_t mask, Role role) const {
        GeneralizedCycle part;
        int pc = std::popcount(mask);
        if (pc == 0) return part;
        if (pc == 1) {
            part.kind = GeneralizedCycle::Kind::Vertex;
            part.vertices = {std::countr_zero(mask)};
            return part;
        }
        Colour c;
        switch (role) {
            case Role::RedOrNeutral: c = Colour::Red; break;
            case Role::BlueOrNeutral: c = Colour::Blue; break;
            default: c = red_.spanning(mask) ? Colour::Red : Colour::Blue; break;
        }
        const HamiltonTable& table = c == Colour::Red ? red_ : blue_;
        part.colour = c;
        if (pc == 2) {
            part.kind = GeneralizedCycle::Kind::Edge;
            int u = std::countr_zero(mask);
            part.vertices = {u, std::countr_zero(mask ^ (1u << u))};
        } else {
            part.kind = GeneralizedCycle::Kind::Cycle;
            part.vertices = table.extract_cycle(mask);
        }
        return part;
    }

    CyclePartition assemble(const std::vector<std::pair<uint32_t, Role>>& picks, int k) const {
        CyclePartition out;
        for (const auto& [mask, role] : picks) {
            out.parts.push_back(build_part(mask, role));
            out.covered += std::popcount(mask);
        }
        while ((int)out.parts.size() < k) out.parts.push_back(GeneralizedCycle{});
        return out;
    }

    std::optional<CyclePartition> find1(bool, int min_cover) const {
        for (uint32_t mask : order_)
            if (std::popcount(mask) >= min_cover && role_ok(mask, Role::Any))
                return assemble({{mask, Role::Any}}, 1);
        return std::nullopt;
    }

    std::optional<CyclePartition> find2(bool distinct, int min_cover) const {
        Role r1 = distinct ? Role::RedOrNeutral : Role::Any;
        Role r2 = distinct ? Role::BlueOrNeutral : Role::Any;
        const auto& f2 = f_for(r2);
        for (uint32_t s1 : order_) {
            if (!role_ok(s1, r1)) continue;
            uint32_t comp = full_ & ~s1;
            if (std::popcount(s1) + f2[comp] < min_cover) continue;
            uint32_t s2 = best_subset(comp, r2);
            return assemble({{s1, r1}, {s2, r2}}, 2);
        }
        return std::nullopt;
    }

    std::optional<CyclePartition> find3(bool distinct, int min_cover) const {
        Role r1 = distinct ? Role::RedOrNeutral : Role::Any;
        Role r2 = distinct ? Role::BlueOrNeutral : Role::Any;
        std::vector<uint32_t> subs;
        for (uint32_t s1 : order_) {
            if (!role_ok(s1, r1)) continue;
            uint32_t comp = full_ & ~s1;
            int c1 = std::popcount(s1);
            // upper bound on what parts 2 and 3 can add
            int bound = distinct ? f_blue_[comp] + std::min(1, std::popcount(comp))
                                 : 2 * (int)f_any_[comp];
            if (c1 + bound < min_cover) continue;
            subs.clear();
            for (uint32_t s = comp;; s = (s - 1) & comp) {
                subs.push_back(s);
                if (s == 0) break;
            }
            std::sort(subs.begin(), subs.end(), by_popcount_then_value);
            for (uint32_t s2 : subs) {
                if (!role_ok(s2, r2)) continue;
                uint32_t rem = comp & ~s2;
                int c2 = std::popcount(s2);
                if (distinct) {
                    // third part is necessarily neutral: one vertex at most
                    int c3 = rem != 0 && c1 + c2 < min_cover ? 1 : 0;
                    if (c1 + c2 + c3 < min_cover) continue;
                    uint32_t s3 = c3 == 1 ? (uint32_t(1) << std::countr_zero(rem)) : 0;
                    return assemble({{s1, r1}, {s2, r2}, {s3, Role::Any}}, 3);
                }
                if (c1 + c2 + f_any_[rem] < min_cover) continue;
                uint32_t s3 = best_subset(rem, Role::Any);
                return assemble({{s1, r1}, {s2, r2}, {s3, Role::Any}}, 3);
            }
        }
        return std::nullopt;
    }

    int n_;
    HamiltonTable red_, blue_;
    uint32_t full_ = 0;
    std::vector<uint32_t> order_;
    std::vector<uint8_t> f_red_, f_blue_, f_any_;
};

inline std::optional<CyclePartition> find_cycle_partition(const ColouredGraph& g, int k,
                                                          bool distinct_colours, int min_cover,
                                                          int cap = kDefaultPartitionCap) {
    return PartitionSearcher(g, cap).find(k, distinct_colours, min_cover);
}

inline std::pair<int, CyclePartition> max_cycle_cover(const ColouredGraph& g, int k,
                                                      bool distinct_colours,
                                                      int cap = kDefaultPartitionCap) {
    return PartitionSearcher(g, cap).max_cover(k, distinct_colours);
}

/// Revalidates a returned partition against the raw graph: part shapes,
/// edge colours, pairwise disjointness, cover count and (optionally) the
/// distinct-colours rule.
inline bool validate_cycle_partition(const ColouredGraph& g, const CyclePartition& p,
                                     bool distinct_colours) {
    std::vector<char> seen(g.vertex_count(), 0);
    int covered = 0;
    std::vector<Colour> coloured_parts;
    for (const auto& part : p.parts) {
        for (int v : part.vertices) {
            if (v < 0 || v >= g.vertex_count() || seen[v]) return false;
            seen[v] = 1;
            ++covered;
        }
        switch (part.kind) {
            case GeneralizedCycle::Kind::Empty:
                if (!part.vertices.empty() || part.colour) return false;
                break;
            case GeneralizedCycle::Kind::Vertex:
                if (part.vertices.size() != 1 || part.colour) return false;
                break;
            case GeneralizedCycle::Kind::Edge: {
                if (part.vertices.size() != 2 || !part.colour) return false;
                auto c = g.edge_colour(part.vertices[0], part.vertices[1]);
                if (!c || *c != *part.colour) return false;
                coloured_parts.push_back(*part.colour);
                break;
            }
            case GeneralizedCycle::Kind::Cycle: {
                if (part.vertices.size() < 3 || !part.colour) return false;
                int len = (int)part.vertices.size();
                for (int i = 0; i < len; ++i) {
                    auto c = g.edge_colour(part.vertices[i], part.vertices[(i + 1) % len]);
                    if (!c || *c != *part.colour) return false;
                }
                coloured_parts.push_back(*part.colour);
                break;
            }
        }
    }
    if (covered != p.covered) return false;
    if (distinct_colours)
        for (size_t i = 0; i < coloured_parts.size(); ++i)
            for (size_t j = i + 1; j < coloured_parts.size(); ++j)
                if (coloured_parts[i] == coloured_parts[j]) return false;
    return true;
}

/// Checks the two claimed properties of G_{k,m}: the slack Posa-type
/// condition fails exactly at index k, and no two vertex-disjoint
/// monochromatic cycles (same colours allowed) cover all vertices.
inline GkmReport verify_gkm(const GkmSpec& spec, int cap = kDefaultPartitionCap) {
    auto built = build_gkm(spec);
    GkmReport rep;
    rep.posa_violations =
        posa_violations(built.graph, Rational(1, 2), Rational(1, 4), -1);
    rep.posa_clause = rep.posa_violations == std::vector<int>{spec.k};
    if (spec.n() <= cap) {
        rep.cover_clause_ran = true;
        auto cover = find_cycle_partition(built.graph, 2, false, spec.n(), cap);
        rep.cover_exists = cover.has_value();
        rep.cover_clause = !rep.cover_exists;
    }
    return rep;
}

} // namespace cyclecover
