#include "doctest.h"

#include "cyclecover/generators.hpp"
#include "cyclecover/matching.hpp"
#include "cyclecover/subgraph.hpp"
#include "oracles.hpp"

using namespace cyclecover;

namespace {

Subgraph complete(int n) {
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) e.push_back({u, v});
    return Subgraph::from_edges(n, e);
}

Subgraph star(int leaves) {
    std::vector<std::pair<int, int>> e;
    for (int v = 1; v <= leaves; ++v) e.push_back({0, v});
    return Subgraph::from_edges(leaves + 1, e);
}

Subgraph cycle(int n) {
    std::vector<std::pair<int, int>> e;
    for (int v = 0; v < n; ++v) e.push_back({v, (v + 1) % n});
    return Subgraph::from_edges(n, e);
}

Subgraph random_subgraph(Xorshift64Star& rng, int n, int denom = 2) {
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.next_below((uint64_t)denom) == 0) e.push_back({u, v});
    return Subgraph::from_edges(n, e);
}

} // namespace

TEST_CASE("stability and contraction on tiny graphs") {
    auto k13 = star(3);
    CHECK(is_stable(k13, {}));
    CHECK(is_stable(k13, {2}));
    CHECK(!is_stable(k13, {0, 1}));
    CHECK(is_stable(k13, {1, 2, 3}));
    CHECK(contraction(k13, {}) == 0);
    CHECK(contraction(k13, {1, 2, 3}) == 2); // 3 leaves, 1 neighbour

    auto path = Subgraph::from_edges(3, {{0, 1}, {1, 2}});
    CHECK(contraction(path, {0, 2}) == 1);
    CHECK_THROWS_AS(contraction(path, {0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(is_stable(path, {7}), std::out_of_range);
}

TEST_CASE("brute-force maximum contraction on the named graphs") {
    CHECK(max_contraction_bruteforce(complete(4)).contraction == 0);
    auto k13 = max_contraction_bruteforce(star(3));
    CHECK(k13.contraction == 2);
    CHECK(k13.set == std::vector<int>{1, 2, 3});
    CHECK(max_contraction_bruteforce(cycle(5)).contraction == 0);
    CHECK(max_contraction_bruteforce(cycle(5)).contraction ==
          oracles::max_contraction_exhaustive(cycle(5)));
    CHECK_THROWS_AS(max_contraction_bruteforce(complete(6), 5), CapExceeded);
}

TEST_CASE("maximum 2-matchings on the named graphs") {
    auto k3 = max_two_matching(complete(3));
    CHECK(k3.size == 3);
    CHECK(is_valid_two_matching(complete(3), k3));
    CHECK(has_cycle_edge_decomposition(complete(3), k3));

    auto k13 = max_two_matching(star(3));
    CHECK(k13.size == 2); // one spoke at weight 2; equals 4 - 2 by duality
    REQUIRE(k13.support.size() == 1);
    CHECK(k13.support[0][2] == 2);

    auto c5 = max_two_matching(cycle(5));
    CHECK(c5.size == 5);
    CHECK(has_cycle_edge_decomposition(cycle(5), c5));

    CHECK(max_two_matching(Subgraph::from_edges(1, {})).size == 0);
    CHECK(max_contraction(Subgraph::from_edges(1, {})) == 1);
}

TEST_CASE("a path canonicalizes to a double edge") {
    auto path = Subgraph::from_edges(3, {{0, 1}, {1, 2}});
    auto m = max_two_matching(path);
    CHECK(m.size == 2);
    CHECK(is_valid_two_matching(path, m));
    CHECK(has_cycle_edge_decomposition(path, m));
}

TEST_CASE("duality against brute force on 500 random graphs, n <= 14") {
    Xorshift64Star rng(2024);
    for (int trial = 0; trial < 500; ++trial) {
        int n = 1 + (int)rng.next_below(14);
        auto h = random_subgraph(rng, n, 2 + (int)rng.next_below(2));
        auto m = max_two_matching(h);
        auto bf = max_contraction_bruteforce(h);
        REQUIRE(m.size == h.size() - bf.contraction);
        REQUIRE(max_contraction(h) == bf.contraction);
        CHECK(is_valid_two_matching(h, m));
        CHECK(has_cycle_edge_decomposition(h, m));
        CHECK(is_stable(h, bf.set));
        CHECK(contraction(h, bf.set) == bf.contraction);
    }
}

TEST_CASE("brute force agrees with the exhaustive subset scan, n <= 10") {
    Xorshift64Star rng(31337);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 1 + (int)rng.next_below(10);
        auto h = random_subgraph(rng, n);
        CHECK(max_contraction_bruteforce(h).contraction ==
              oracles::max_contraction_exhaustive(h));
    }
}

TEST_CASE("max_contraction is zero iff a perfect 2-matching exists") {
    Xorshift64Star rng(555);
    for (int trial = 0; trial < 80; ++trial) {
        int n = 1 + (int)rng.next_below(12);
        auto h = random_subgraph(rng, n);
        int c = max_contraction(h);
        CHECK(c >= 0);
        CHECK((c == 0) == (max_two_matching(h).size == h.size()));
    }
}

TEST_CASE("adding an edge never increases the maximum contraction") {
    Xorshift64Star rng(808);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 3 + (int)rng.next_below(9);
        std::vector<std::pair<int, int>> edges;
        std::vector<std::pair<int, int>> missing;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                (rng.next_below(2) == 0 ? edges : missing).push_back({u, v});
        if (missing.empty()) continue;
        int before = max_contraction(Subgraph::from_edges(n, edges));
        edges.push_back(missing[(size_t)rng.next_below(missing.size())]);
        int after = max_contraction(Subgraph::from_edges(n, edges));
        CHECK(after <= before);
    }
}

TEST_CASE("find_contracting_set fast paths and witnesses") {
    auto k4 = complete(4);
    auto none = find_contracting_set(k4, 0);
    CHECK(!none.exists);
    CHECK(!none.witness.has_value());

    auto k13 = find_contracting_set(star(3), 1);
    REQUIRE(k13.exists);
    REQUIRE(k13.witness.has_value());
    CHECK(k13.witness->set == std::vector<int>{1, 2, 3});
    CHECK(k13.witness->contraction == 2);

    CHECK_THROWS_AS(find_contracting_set(k4, -1), std::invalid_argument);
}

TEST_CASE("find_contracting_set agrees with brute force on random graphs") {
    Xorshift64Star rng(4242);
    for (int trial = 0; trial < 120; ++trial) {
        int n = 1 + (int)rng.next_below(14);
        auto h = random_subgraph(rng, n);
        int best = max_contraction_bruteforce(h).contraction;
        for (int c = 0; c <= 3; ++c) {
            auto res = find_contracting_set(h, c);
            CHECK(res.exists == (best > c));
            if (res.witness) {
                CHECK(is_stable(h, res.witness->set));
                CHECK(contraction(h, res.witness->set) == res.witness->contraction);
                CHECK(res.witness->contraction > c);
            }
        }
    }
}

TEST_CASE("witness extraction beyond the brute-force cap is sound") {
    Xorshift64Star rng(90);
    for (int trial = 0; trial < 25; ++trial) {
        int n = 26 + (int)rng.next_below(10);
        auto h = random_subgraph(rng, n, 6); // sparse: contracting sets exist
        auto res = find_contracting_set(h, 0, /*bruteforce_cap=*/25);
        if (res.witness) {
            CHECK(is_stable(h, res.witness->set));
            CHECK(contraction(h, res.witness->set) == res.witness->contraction);
            CHECK(res.witness->contraction > 0);
            CHECK(res.witness->contraction <= res.max_contraction);
        }
    }
}

TEST_CASE("observation suite on contracting sets") {
    Xorshift64Star rng(64);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 2 + (int)rng.next_below(12);
        auto h = random_subgraph(rng, n, 3);
        auto res = find_contracting_set(h, 0);
        if (!res.witness) continue;
        const auto& w = *res.witness;
        CHECK(contracting_set_bounds_hold(h, w, n));
        // every subset stays stable and loses at most one unit per vertex
        std::vector<int> sub;
        for (size_t i = 0; i < w.set.size(); ++i)
            if (rng.next_below(2) == 0) sub.push_back(w.set[i]);
        CHECK(subset_contraction_holds(h, w.set, sub));
        CHECK(subset_contraction_holds(h, w.set, {}));
    }
}
