#include "doctest.h"

#include <set>
#include <sstream>

#include "cyclecover/constructions.hpp"
#include "cyclecover/graph.hpp"
#include "cyclecover/io.hpp"
#include "cyclecover/rng.hpp"
#include "cyclecover/subgraph.hpp"
#include "oracles.hpp"

using namespace cyclecover;

TEST_CASE("load_graph parses the smallest graphs") {
    auto g = load_graph(std::string("p cg 2 1\ne 1 2 r\n"));
    CHECK(g.vertex_count() == 2);
    CHECK(g.edge_count() == 1);
    CHECK(g.edge_colour(0, 1) == Colour::Red);

    auto g2 = load_graph(std::string("p cg 3 3\ne 1 2 r\ne 2 3 r\ne 1 3 b\n"));
    CHECK(g2.edge_colour(0, 1) == Colour::Red);
    CHECK(g2.edge_colour(1, 2) == Colour::Red);
    CHECK(g2.edge_colour(0, 2) == Colour::Blue);
}

TEST_CASE("load_graph reports distinct errors with line numbers") {
    auto expect_error = [](const std::string& text, int line, const char* needle) {
        try {
            load_graph(text);
            FAIL_CHECK("expected ParseError for: " << text);
        } catch (const ParseError& e) {
            CHECK(e.line == line);
            CHECK(std::string(e.what()).find(needle) != std::string::npos);
        }
    };
    expect_error("p cg 2 2\ne 1 2 r\ne 1 2 b\n", 3, "duplicate edge");
    expect_error("p cg 2 1\ne 1 1 r\n", 2, "loop");
    expect_error("p cg 2 1\ne 1 3 r\n", 2, "out of range");
    expect_error("p xx 2 1\ne 1 2 r\n", 1, "malformed header");
    expect_error("e 1 2 r\n", 1, "edge before header");
    expect_error("p cg 2 1\ne 1 2 g\n", 2, "unknown colour");
    expect_error("p cg 3 1\ne 2 1 r\n", 2, "increasing order");
    expect_error("p cg 2 2\ne 1 2 r\n", 3, "fewer edges");
    expect_error("p cg 2 0\ne 1 2 r\n", 2, "more edges");
    expect_error("# only a comment\n", 2, "missing header");
}

TEST_CASE("comments and blank lines are skipped") {
    auto g = load_graph(std::string("# hello\n\np cg 2 1\n# mid\ne 1 2 b\n"));
    CHECK(g.edge_colour(0, 1) == Colour::Blue);
}

TEST_CASE("serialize then load is the identity") {
    Xorshift64Star rng(7);
    for (int trial = 0; trial < 30; ++trial) {
        int n = 1 + (int)rng.next_below(12);
        ColouredGraph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng.next_below(2) == 0)
                    g.add_edge(u, v, rng.next_below(2) ? Colour::Red : Colour::Blue);
        auto text = serialize(g);
        auto h = load_graph(text);
        CHECK(h.vertex_count() == g.vertex_count());
        CHECK(h.edge_count() == g.edge_count());
        CHECK(serialize(h) == text);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) CHECK(g.edge_colour(u, v) == h.edge_colour(u, v));
    }
}

TEST_CASE("graph invariants are enforced at construction") {
    ColouredGraph g(3);
    g.add_edge(0, 1, Colour::Red);
    CHECK_THROWS_AS(g.add_edge(1, 0, Colour::Blue), std::invalid_argument); // parallel
    CHECK_THROWS_AS(g.add_edge(2, 2, Colour::Red), std::invalid_argument);  // loop
    CHECK_THROWS_AS(g.add_edge(0, 3, Colour::Red), std::out_of_range);
    CHECK(g.has_edge(0, 1));
    CHECK(g.has_edge(1, 0)); // symmetric adjacency
}

TEST_CASE("monochromatic components: singleton decision") {
    ColouredGraph k2(2);
    k2.add_edge(0, 1, Colour::Red);
    auto red = monochromatic_components(k2, Colour::Red);
    REQUIRE(red.size() == 1);
    CHECK(red[0].vertices == std::vector<int>{0, 1});

    auto blue = monochromatic_components(k2, Colour::Blue);
    REQUIRE(blue.size() == 2);
    CHECK(blue[0].vertices == std::vector<int>{0});
    CHECK(blue[1].vertices == std::vector<int>{1});
}

TEST_CASE("components match the BFS oracle and partition the vertex set") {
    Xorshift64Star rng(99);
    for (int trial = 0; trial < 25; ++trial) {
        int n = 1 + (int)rng.next_below(14);
        ColouredGraph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng.next_below(3) == 0)
                    g.add_edge(u, v, rng.next_below(2) ? Colour::Red : Colour::Blue);
        for (Colour c : {Colour::Red, Colour::Blue}) {
            auto comps = monochromatic_components(g, c);
            auto expect = oracles::bfs_components(g, c);
            REQUIRE(comps.size() == expect.size());
            std::vector<char> covered(n, 0);
            for (size_t i = 0; i < comps.size(); ++i) {
                CHECK(comps[i].vertices == expect[i]);
                CHECK(comps[i].id == (int)i);
                for (int v : comps[i].vertices) {
                    CHECK(!covered[v]);
                    covered[v] = 1;
                }
            }
            for (int v = 0; v < n; ++v) CHECK(covered[v]);
            // every edge of the colour lies inside one component
            auto idx = component_index(comps, n);
            for (const auto& [u, v, ec] : g.edges())
                if (ec == c) CHECK(idx[u] == idx[v]);
        }
    }
}

TEST_CASE("components of build_gkm agree with BFS (n=8)") {
    auto built = build_gkm(GkmSpec{1, 2, GkmSpec::Inner::AllRed, 0});
    for (Colour c : {Colour::Red, Colour::Blue}) {
        auto comps = monochromatic_components(built.graph, c);
        auto expect = oracles::bfs_components(built.graph, c);
        REQUIRE(comps.size() == expect.size());
        for (size_t i = 0; i < comps.size(); ++i) CHECK(comps[i].vertices == expect[i]);
    }
}

TEST_CASE("degree sequence basics") {
    ColouredGraph empty(3);
    CHECK(degree_sequence(empty).values == std::vector<int>{0, 0, 0});

    // first k entries of G_{k,m} are k + 2m - 1
    for (int k = 1; k <= 2; ++k)
        for (int m = k + 1; m <= 3; ++m) {
            auto built = build_gkm(GkmSpec{k, m, GkmSpec::Inner::AllRed, 0});
            auto seq = degree_sequence(built.graph);
            for (int j = 1; j <= k; ++j) CHECK(seq.d(j) == k + 2 * m - 1);
        }
}

TEST_CASE("degree sequence matches a per-vertex recount on G(10, 1/2)") {
    Xorshift64Star rng(5);
    ColouredGraph g(10);
    for (int u = 0; u < 10; ++u)
        for (int v = u + 1; v < 10; ++v)
            if (rng.next_below(2) == 0)
                g.add_edge(u, v, rng.next_below(2) ? Colour::Red : Colour::Blue);
    auto seq = degree_sequence(g);
    std::vector<int> recount;
    for (int v = 0; v < 10; ++v) {
        int d = 0;
        for (int u = 0; u < 10; ++u)
            if (u != v && g.has_edge(u, v)) ++d;
        recount.push_back(d);
    }
    std::sort(recount.begin(), recount.end());
    CHECK(seq.values == recount);
    for (int i = 0; i < 10; ++i) CHECK(seq.values[i] == g.degree(seq.perm[i]));
}

TEST_CASE("degree sequence is invariant under relabelling") {
    Xorshift64Star rng(123);
    for (int trial = 0; trial < 10; ++trial) {
        int n = 4 + (int)rng.next_below(8);
        ColouredGraph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng.next_below(2) == 0)
                    g.add_edge(u, v, rng.next_below(2) ? Colour::Red : Colour::Blue);
        std::vector<int> perm(n);
        for (int i = 0; i < n; ++i) perm[i] = i;
        for (int i = n - 1; i > 0; --i)
            std::swap(perm[i], perm[(int)rng.next_below((uint64_t)i + 1)]);
        ColouredGraph h(n);
        for (const auto& [u, v, c] : g.edges()) {
            int a = perm[u], b = perm[v];
            h.add_edge(std::min(a, b), std::max(a, b), c);
        }
        CHECK(degree_sequence(g).values == degree_sequence(h).values);
    }
}

TEST_CASE("union_subgraph recovers the whole graph from all components") {
    auto g = load_graph(std::string("p cg 5 4\ne 1 2 r\ne 2 3 b\ne 3 4 r\ne 4 5 b\n"));
    std::vector<MonochromaticComponent> all;
    for (Colour c : {Colour::Red, Colour::Blue})
        for (auto& comp : monochromatic_components(g, c)) all.push_back(comp);
    auto u = union_subgraph(g, all);
    CHECK(u.size() == g.vertex_count());
    CHECK(u.edge_count() == g.edge_count());
    for (const auto& [a, b, c] : g.edges()) CHECK(u.has_edge(a, b));
}

TEST_CASE("union_subgraph of one component keeps only its colour class") {
    auto g = load_graph(std::string("p cg 4 4\ne 1 2 r\ne 2 3 r\ne 1 3 b\ne 3 4 b\n"));
    auto reds = monochromatic_components(g, Colour::Red);
    // red component {0,1,2}
    auto u = union_subgraph(g, {reds[0]});
    CHECK(u.vertices() == std::vector<int>{0, 1, 2});
    CHECK(u.has_edge(0, 1));
    CHECK(u.has_edge(1, 2));
    CHECK(!u.has_edge(0, 2)); // that edge is blue
}

TEST_CASE("subgraph edge rule: edge present iff some kept component holds it") {
    Xorshift64Star rng(404);
    for (int trial = 0; trial < 20; ++trial) {
        int n = 3 + (int)rng.next_below(10);
        ColouredGraph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng.next_below(2) == 0)
                    g.add_edge(u, v, rng.next_below(2) ? Colour::Red : Colour::Blue);
        std::vector<MonochromaticComponent> kept;
        for (Colour c : {Colour::Red, Colour::Blue})
            for (auto& comp : monochromatic_components(g, c))
                if (rng.next_below(2) == 0) kept.push_back(comp);
        auto sub = union_subgraph(g, kept);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) {
                auto col = g.edge_colour(u, v);
                bool expect = false;
                if (col)
                    for (const auto& c : kept)
                        if (c.colour == *col && c.contains(u) && c.contains(v)) expect = true;
                CHECK(sub.has_edge(u, v) == expect);
            }
        // vertex set is exactly the union of kept components
        std::set<int> verts;
        for (const auto& c : kept) verts.insert(c.vertices.begin(), c.vertices.end());
        CHECK(sub.vertices() == std::vector<int>(verts.begin(), verts.end()));
    }
}

TEST_CASE("union_subgraph rejects components from another graph") {
    auto g = load_graph(std::string("p cg 3 2\ne 1 2 r\ne 2 3 r\n"));
    auto h = load_graph(std::string("p cg 3 1\ne 1 3 r\n"));
    auto comps = monochromatic_components(h, Colour::Red);
    CHECK_THROWS_AS(union_subgraph(g, {comps[0]}), std::invalid_argument);
}

TEST_CASE("union of the A1-red and A2-blue components in G_{k,m}") {
    // Both components reach into B but neither touches U: the red
    // component of A1 is A1+B, the blue component of A2 is A2+B, so
    // their union is everything except U. Cross-checked against BFS.
    for (int k = 1; k <= 2; ++k)
        for (int m = k + 1; m <= 3; ++m) {
            auto built = build_gkm(GkmSpec{k, m, GkmSpec::Inner::AllRed, 0});
            const auto& g = built.graph;
            int a1 = built.k; // first vertex of A1
            int a2 = built.k + built.m;
            auto reds = monochromatic_components(g, Colour::Red);
            auto blues = monochromatic_components(g, Colour::Blue);
            const MonochromaticComponent* red_a1 = nullptr;
            const MonochromaticComponent* blue_a2 = nullptr;
            for (const auto& c : reds)
                if (c.contains(a1)) red_a1 = &c;
            for (const auto& c : blues)
                if (c.contains(a2)) blue_a2 = &c;
            REQUIRE(red_a1 != nullptr);
            REQUIRE(blue_a2 != nullptr);

            // independent BFS recomputation
            auto oracle_red = oracles::bfs_components(g, Colour::Red);
            auto oracle_blue = oracles::bfs_components(g, Colour::Blue);
            auto find_with = [&](const std::vector<std::vector<int>>& comps, int v) {
                for (const auto& c : comps)
                    if (std::binary_search(c.begin(), c.end(), v)) return c;
                return std::vector<int>{};
            };
            CHECK(red_a1->vertices == find_with(oracle_red, a1));
            CHECK(blue_a2->vertices == find_with(oracle_blue, a2));

            auto u = union_subgraph(g, {*red_a1, *blue_a2});
            std::vector<int> expect;
            for (int v = built.k; v < g.vertex_count(); ++v) expect.push_back(v);
            CHECK(u.vertices() == expect); // all of A1, A2, B; U is missing
        }
}
