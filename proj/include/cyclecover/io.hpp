#pragma once

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "graph.hpp"

namespace cyclecover {

/// Parse failure in a `.cg` stream; `line` is 1-based.
struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_, const std::string& what_)
        : std::runtime_error("line " + std::to_string(line_) + ": " + what_), line(line_) {}
};

// `.cg` format:
//   # comment                (anywhere)
//   p cg <n> <m>             (exactly one header)
//   e <u> <v> <c>            (m lines, 1 <= u < v <= n, c in {r, b})
// Vertices are 1-indexed on disk and 0-indexed in memory.

inline ColouredGraph load_graph(std::istream& in) {
    std::string raw;
    int lineno = 0;
    int n = -1, m = -1, edges_seen = 0;
    ColouredGraph g(0);

    auto fail = [&](const std::string& msg) -> void { throw ParseError(lineno, msg); };

    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = raw;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;

        std::istringstream ss(line);
        std::string tag;
        ss >> tag;
        if (tag == "p") {
            if (n != -1) fail("duplicate header");
            std::string fmt;
            if (!(ss >> fmt >> n >> m) || fmt != "cg" || n < 0 || m < 0)
                fail("malformed header, expected 'p cg <n> <m>'");
            std::string extra;
            if (ss >> extra) fail("malformed header, trailing tokens");
            g = ColouredGraph(n);
        } else if (tag == "e") {
            if (n == -1) fail("edge before header");
            int u = 0, v = 0;
            std::string c;
            if (!(ss >> u >> v >> c)) fail("malformed edge line, expected 'e <u> <v> <c>'");
            std::string extra;
            if (ss >> extra) fail("malformed edge line, trailing tokens");
            if (u < 1 || u > n || v < 1 || v > n) fail("vertex out of range");
            if (u == v) fail("loop edge");
            if (u > v) fail("edge endpoints not in increasing order");
            if (c != "r" && c != "b") fail("unknown colour '" + c + "'");
            if (g.edge_colour(u - 1, v - 1).has_value()) fail("duplicate edge");
            if (++edges_seen > m) fail("more edges than declared");
            g.add_edge(u - 1, v - 1, c == "r" ? Colour::Red : Colour::Blue);
        } else {
            fail("unknown line tag '" + tag + "'");
        }
    }
    ++lineno;
    if (n == -1) fail("missing header");
    if (edges_seen != m) fail("fewer edges than declared");
    return g;
}

inline ColouredGraph load_graph(const std::string& text) {
    std::istringstream ss(text);
    return load_graph(ss);
}

/// Emits the canonical form: header then edges sorted lexicographically.
inline void serialize(const ColouredGraph& g, std::ostream& out) {
    out << "p cg " << g.vertex_count() << " " << g.edge_count() << "\n";
    for (const auto& [u, v, c] : g.edges())
        out << "e " << (u + 1) << " " << (v + 1) << " " << colour_char(c) << "\n";
}

inline std::string serialize(const ColouredGraph& g) {
    std::ostringstream ss;
    serialize(g, ss);
    return ss.str();
}

} // namespace cyclecover
