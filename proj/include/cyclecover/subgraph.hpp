#pragma once

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

#include "graph.hpp"

namespace cyclecover {

/// Union of monochromatic components, viewed as an uncoloured graph on
/// the parent's vertex ids. An edge {u,v} belongs to the subgraph iff
/// some kept component has the edge's colour and contains both ends.
/// Also constructible from a plain edge list, which is the view the
/// matching machinery works on.
class Subgraph {
public:
    static Subgraph whole(const ColouredGraph& g) {
        Subgraph s(g.vertex_count());
        for (int v = 0; v < g.vertex_count(); ++v) s.verts_.push_back(v);
        std::fill(s.in_.begin(), s.in_.end(), 1);
        for (const auto& [u, v, c] : g.edges()) s.push_edge(u, v);
        s.finish();
        return s;
    }

    /// Plain graph on all of 0..n-1 with the given edges.
    static Subgraph from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
        Subgraph s(n);
        for (int v = 0; v < n; ++v) s.verts_.push_back(v);
        std::fill(s.in_.begin(), s.in_.end(), 1);
        for (auto [u, v] : edges) {
            if (u < 0 || v < 0 || u >= n || v >= n || u == v)
                throw std::invalid_argument("subgraph: bad edge");
            s.push_edge(u, v);
        }
        s.finish();
        return s;
    }

    /// Union of the given components of g. Each component must be one of
    /// g's canonical components (as returned by monochromatic_components).
    static Subgraph from_components(const ColouredGraph& g,
                                    const std::vector<MonochromaticComponent>& comps) {
        int n = g.vertex_count();
        auto reds = monochromatic_components(g, Colour::Red);
        auto blues = monochromatic_components(g, Colour::Blue);
        std::vector<char> keep_red(reds.size(), 0), keep_blue(blues.size(), 0);
        for (const auto& c : comps) {
            const auto& canon = c.colour == Colour::Red ? reds : blues;
            if (c.id < 0 || c.id >= (int)canon.size() || canon[c.id].vertices != c.vertices)
                throw std::invalid_argument("subgraph: component not from this graph");
            (c.colour == Colour::Red ? keep_red : keep_blue)[c.id] = 1;
        }
        auto red_idx = component_index(reds, n);
        auto blue_idx = component_index(blues, n);

        Subgraph s(n);
        for (const auto& c : comps)
            for (int v : c.vertices)
                if (!s.in_[v]) {
                    s.in_[v] = 1;
                    s.verts_.push_back(v);
                }
        std::sort(s.verts_.begin(), s.verts_.end());
        for (const auto& [u, v, c] : g.edges()) {
            bool kept = c == Colour::Red ? keep_red[red_idx[u]] : keep_blue[blue_idx[u]];
            if (kept) s.push_edge(u, v);
        }
        s.finish();
        return s;
    }

    /// Vertices present, ascending.
    const std::vector<int>& vertices() const { return verts_; }
    int size() const { return (int)verts_.size(); }
    int edge_count() const { return m_; }

    /// Bound on vertex ids (the parent's n); not all ids need be present.
    int id_bound() const { return (int)in_.size(); }

    bool contains(int v) const { return v >= 0 && v < (int)in_.size() && in_[v]; }

    const std::vector<int>& neighbours(int v) const { return adj_.at(v); }

    int degree(int v) const { return (int)adj_.at(v).size(); }

    bool has_edge(int u, int v) const {
        if (!contains(u) || !contains(v)) return false;
        const auto& a = adj_[u];
        return std::binary_search(a.begin(), a.end(), v);
    }

private:
    explicit Subgraph(int n) : in_(n, 0), adj_(n), m_(0) {}

    void push_edge(int u, int v) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
        ++m_;
    }

    void finish() {
        for (auto& a : adj_) std::sort(a.begin(), a.end());
    }

    std::vector<int> verts_;
    std::vector<char> in_;
    std::vector<std::vector<int>> adj_;
    int m_;
};

inline Subgraph union_subgraph(const ColouredGraph& g,
                               const std::vector<MonochromaticComponent>& comps) {
    return Subgraph::from_components(g, comps);
}

} // namespace cyclecover
