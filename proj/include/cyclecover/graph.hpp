#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <queue>
#include <stdexcept>
#include <tuple>
#include <vector>

namespace cyclecover {

enum class Colour : uint8_t { Red, Blue };

inline Colour other(Colour c) { return c == Colour::Red ? Colour::Blue : Colour::Red; }
inline char colour_char(Colour c) { return c == Colour::Red ? 'r' : 'b'; }

/// Simple undirected graph on vertices 0..n-1 with every edge coloured
/// red or blue. Once built it is treated as immutable; all algorithms
/// take it by const reference and are pure.
class ColouredGraph {
public:
    explicit ColouredGraph(int n) : n_(n), m_(0), cell_(size_t(n) * n, 0), deg_(n, 0) {
        if (n < 0) throw std::invalid_argument("graph: negative vertex count");
    }

    int vertex_count() const { return n_; }
    int edge_count() const { return m_; }

    void add_edge(int u, int v, Colour c) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw std::invalid_argument("graph: loop edge");
        if (cell(u, v) != 0) throw std::invalid_argument("graph: duplicate edge");
        uint8_t code = c == Colour::Red ? 1 : 2;
        cell(u, v) = code;
        cell(v, u) = code;
        ++deg_[u];
        ++deg_[v];
        ++m_;
    }

    bool has_edge(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return u != v && cell(u, v) != 0;
    }

    std::optional<Colour> edge_colour(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        if (u == v) return std::nullopt;
        uint8_t code = cell(u, v);
        if (code == 0) return std::nullopt;
        return code == 1 ? Colour::Red : Colour::Blue;
    }

    int degree(int v) const {
        check_vertex(v);
        return deg_[v];
    }

    /// Degree counting only edges of one colour class.
    int degree(int v, Colour c) const {
        check_vertex(v);
        uint8_t code = c == Colour::Red ? 1 : 2;
        int d = 0;
        for (int u = 0; u < n_; ++u)
            if (cell(v, u) == code) ++d;
        return d;
    }

    std::vector<int> neighbours(int v) const {
        check_vertex(v);
        std::vector<int> out;
        for (int u = 0; u < n_; ++u)
            if (cell(v, u) != 0) out.push_back(u);
        return out;
    }

    std::vector<int> neighbours(int v, Colour c) const {
        check_vertex(v);
        uint8_t code = c == Colour::Red ? 1 : 2;
        std::vector<int> out;
        for (int u = 0; u < n_; ++u)
            if (cell(v, u) == code) out.push_back(u);
        return out;
    }

    /// All edges as (u, v, colour) with u < v, sorted lexicographically.
    std::vector<std::tuple<int, int, Colour>> edges() const {
        std::vector<std::tuple<int, int, Colour>> out;
        out.reserve(m_);
        for (int u = 0; u < n_; ++u)
            for (int v = u + 1; v < n_; ++v) {
                uint8_t code = cell(u, v);
                if (code != 0) out.emplace_back(u, v, code == 1 ? Colour::Red : Colour::Blue);
            }
        return out;
    }

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= n_) throw std::out_of_range("graph: vertex out of range");
    }

    uint8_t& cell(int u, int v) { return cell_[size_t(u) * n_ + v]; }
    uint8_t cell(int u, int v) const { return cell_[size_t(u) * n_ + v]; }

    int n_;
    int m_;
    std::vector<uint8_t> cell_;
    std::vector<int> deg_;
};

/// Connected component of one colour class, stored as a sorted vertex
/// set. A vertex with no edge of the colour forms its own singleton
/// component, so every vertex has exactly one component per colour.
struct MonochromaticComponent {
    Colour colour;
    int id = 0; // index within the colour class, after sorting
    std::vector<int> vertices;

    int size() const { return (int)vertices.size(); }
    bool contains(int v) const {
        return std::binary_search(vertices.begin(), vertices.end(), v);
    }
};

/// Components of one colour class, sorted by decreasing size with ties
/// broken by smallest contained vertex id; ids follow that order.
inline std::vector<MonochromaticComponent> monochromatic_components(const ColouredGraph& g,
                                                                    Colour colour) {
    int n = g.vertex_count();
    std::vector<int> comp(n, -1);
    std::vector<std::vector<int>> groups;
    for (int s = 0; s < n; ++s) {
        if (comp[s] != -1) continue;
        int idx = (int)groups.size();
        comp[s] = idx;
        groups.push_back({s});
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int u : g.neighbours(v, colour)) {
                if (comp[u] != -1) continue;
                comp[u] = idx;
                groups[idx].push_back(u);
                q.push(u);
            }
        }
    }
    for (auto& grp : groups) std::sort(grp.begin(), grp.end());
    std::sort(groups.begin(), groups.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() > b.size();
        return a.front() < b.front();
    });
    std::vector<MonochromaticComponent> out;
    out.reserve(groups.size());
    for (int i = 0; i < (int)groups.size(); ++i)
        out.push_back(MonochromaticComponent{colour, i, std::move(groups[i])});
    return out;
}

/// Index of the colour-c component containing each vertex, keyed by the
/// canonical ordering of monochromatic_components.
inline std::vector<int> component_index(const std::vector<MonochromaticComponent>& comps, int n) {
    std::vector<int> idx(n, -1);
    for (const auto& c : comps)
        for (int v : c.vertices) idx[v] = c.id;
    return idx;
}

/// Non-decreasing degree sequence plus a vertex ordering realizing it.
struct DegreeSequence {
    std::vector<int> values; // values[i] <= values[i+1]
    std::vector<int> perm;   // values[i] == deg(perm[i])

    /// 1-based access matching the usual d_1 <= ... <= d_n notation.
    int d(int j) const { return values.at(j - 1); }
};

inline DegreeSequence degree_sequence(const ColouredGraph& g) {
    int n = g.vertex_count();
    DegreeSequence seq;
    seq.perm.resize(n);
    for (int v = 0; v < n; ++v) seq.perm[v] = v;
    std::sort(seq.perm.begin(), seq.perm.end(), [&](int a, int b) {
        int da = g.degree(a), db = g.degree(b);
        if (da != db) return da < db;
        return a < b;
    });
    seq.values.resize(n);
    for (int i = 0; i < n; ++i) seq.values[i] = g.degree(seq.perm[i]);
    return seq;
}

} // namespace cyclecover
