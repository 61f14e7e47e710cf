#include "doctest.h"

#include <bit>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

#include "rainbow/errors.hpp"
#include "rainbow/families.hpp"
#include "rainbow/oracles.hpp"
#include "rainbow/structure.hpp"

using namespace rainbow;

namespace {

// Independent reference oracles, deliberately naive.

int subset_alpha(const Graph& g) {
    const int n = g.vertex_count();
    int best = 0;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        bool ok = true;
        for (const Edge& e : g.edges())
            if ((mask >> e.u & 1) && (mask >> e.v & 1)) { ok = false; break; }
        if (ok) best = std::max(best, std::popcount(mask));
    }
    return best;
}

bool path_enum_rainbow(const Graph& g, const EdgeColoring& col) {
    const int n = g.vertex_count();
    for (int s = 0; s < n; ++s) {
        for (int t = s + 1; t < n; ++t) {
            bool found = false;
            std::vector<char> on_path(n, 0);
            std::function<void(int, std::uint64_t)> dfs = [&](int v, std::uint64_t used) {
                if (found) return;
                if (v == t) { found = true; return; }
                on_path[v] = 1;
                for (int w : g.neighbors(v)) {
                    if (on_path[w]) continue;
                    std::uint64_t bit = 1ull << col.color_of(Edge(v, w));
                    if (used & bit) continue;
                    dfs(w, used | bit);
                }
                on_path[v] = 0;
            };
            dfs(s, 0);
            if (!found) return false;
        }
    }
    return true;
}

int enumerate_rc(const Graph& g) {
    const auto& es = g.edges();
    const int m = static_cast<int>(es.size());
    for (int k = 1; k <= m; ++k) {
        std::vector<int> assign(m, 1);
        for (;;) {
            EdgeColoring col;
            col.k = k;
            for (int i = 0; i < m; ++i) col.assign(es[i], assign[i]);
            if (path_enum_rainbow(g, col)) return k;
            int i = m - 1;
            while (i >= 0 && assign[i] == k) assign[i--] = 1;
            if (i < 0) break;
            ++assign[i];
        }
    }
    return m;
}

Graph petersen() {
    return Graph::build(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0},
                             {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5},
                             {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9}});
}

} // namespace

TEST_CASE("independence number on named graphs") {
    CHECK(independence_number(petersen()).alpha == 4);
    CHECK(independence_number(make_cycle(5)).alpha == 2);
    CHECK(independence_number(make_cycle(6)).alpha == 3);
    CHECK(independence_number(make_complete(7)).alpha == 1);
    CHECK(independence_number(make_path(6)).alpha == 3);
    CHECK(independence_number(make_double_star(6)).alpha == 6);
}

TEST_CASE("independence witness is an independent set of the claimed size") {
    for (std::uint64_t seed : {1, 2, 3, 4, 5, 6, 7, 8}) {
        Graph g = make_random_connected(9, 0.35, seed);
        IndependenceResult r = independence_number(g);
        CHECK(static_cast<int>(r.witness.size()) == r.alpha);
        for (std::size_t i = 0; i < r.witness.size(); ++i)
            for (std::size_t j = i + 1; j < r.witness.size(); ++j)
                CHECK_FALSE(g.adjacent(r.witness[i], r.witness[j]));
    }
}

TEST_CASE("independence number agrees with subset enumeration on small seeds") {
    for (std::uint64_t seed = 1; seed <= 12; ++seed) {
        Graph g = make_random_connected(7, 0.4, seed);
        CHECK(independence_number(g).alpha == subset_alpha(g));
    }
}

TEST_CASE("independence oracle reports budget exhaustion as an interval") {
    CHECK_THROWS_AS(independence_number(petersen(), 2), budget_exceeded);
    try {
        independence_number(petersen(), 2);
    } catch (const budget_exceeded& b) {
        CHECK(b.lower >= 0);
        CHECK(b.upper >= b.lower);
    }
}

TEST_CASE("rainbow connectivity verdicts on hand colorings") {
    Graph p3 = make_path(3);
    EdgeColoring same;
    same.k = 1;
    same.assign(Edge(0, 1), 1);
    same.assign(Edge(1, 2), 1);
    RainbowVerdict bad = is_rainbow_connected(p3, same);
    CHECK_FALSE(bad.connected);
    REQUIRE(bad.violations.size() == 1);
    CHECK(bad.violations[0] == std::pair<int, int>{0, 2});

    EdgeColoring two;
    two.k = 2;
    two.assign(Edge(0, 1), 1);
    two.assign(Edge(1, 2), 2);
    CHECK(is_rainbow_connected(p3, two).connected);
}

TEST_CASE("rainbow connectivity agrees with naive path enumeration") {
    // sweep a few deterministic colorings of small graphs
    for (std::uint64_t seed = 1; seed <= 8; ++seed) {
        Graph g = make_random_connected(7, 0.35, seed);
        const auto& es = g.edges();
        for (int k = 2; k <= 4; ++k) {
            EdgeColoring col;
            col.k = k;
            for (std::size_t i = 0; i < es.size(); ++i)
                col.assign(es[i], 1 + static_cast<int>((i * 2654435761u + seed) % k));
            CHECK(is_rainbow_connected(g, col).connected == path_enum_rainbow(g, col));
        }
    }
}

TEST_CASE("rainbow connectivity verifier validates its input") {
    Graph p3 = make_path(3);
    EdgeColoring partial;
    partial.k = 2;
    partial.assign(Edge(0, 1), 1);
    CHECK_THROWS_AS(is_rainbow_connected(p3, partial), std::invalid_argument);
    EdgeColoring wide;
    wide.k = 65;
    CHECK_THROWS_AS(is_rainbow_connected(p3, wide), std::invalid_argument);
}

TEST_CASE("exact rainbow connection numbers of named graphs") {
    for (int n : {2, 3, 4, 5, 6}) CHECK(rc_exact(make_complete(n)).rc == 1);
    CHECK(rc_exact(make_cycle(4)).rc == 2);
    CHECK(rc_exact(make_cycle(5)).rc == 3);
    CHECK(rc_exact(make_cycle(6)).rc == 3);
    CHECK(rc_exact(make_cycle(7)).rc == 4);
    CHECK(rc_exact(make_cycle(8)).rc == 4);
    for (int n : {2, 3, 4, 5, 6, 7}) CHECK(rc_exact(make_path(n)).rc == n - 1);
    // a star is a tree: every edge needs its own color
    CHECK(rc_exact(Graph::build(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}})).rc == 4);
}

TEST_CASE("exact rainbow connection matches full enumeration on small graphs") {
    std::vector<Graph> zoo;
    zoo.push_back(make_path(4));
    zoo.push_back(make_cycle(4));
    zoo.push_back(make_cycle(5));
    zoo.push_back(make_complete(4));
    zoo.push_back(Graph::build(4, {{0, 1}, {1, 2}, {2, 3}, {0, 2}}));          // paw
    zoo.push_back(Graph::build(4, {{0, 1}, {1, 2}, {2, 3}, {0, 2}, {1, 3}}));  // diamond
    for (const Graph& g : zoo) {
        CHECK(rc_exact(g).rc == enumerate_rc(g));
        CHECK(is_rainbow_connected(g, rc_exact(g).witness).connected);
    }
}

TEST_CASE("rc search respects the diameter floor and a proven ceiling") {
    Graph c6 = make_cycle(6);
    CHECK(rc_exact_with_upper(c6, 5) == 3);
    CHECK(rc_exact_with_upper(c6, 3) == 3);  // empty range collapses to the bound
    CHECK_THROWS_AS(rc_exact_with_upper(c6, 2), std::invalid_argument);
    CHECK_THROWS_AS(rc_exact(petersen(), 50), budget_exceeded);
}

TEST_CASE("clique cover numbers of named graphs") {
    CHECK(clique_cover_number(make_cycle(5)) == 3);
    CHECK(clique_cover_number(make_complete(6)) == 1);
    CHECK(clique_cover_number(make_double_star(4)) == 4);
    CHECK(clique_cover_number(make_path(4)) == 2);
    CHECK(clique_cover_number(petersen()) == 5);
}

TEST_CASE("clique cover dominates the independence number") {
    for (std::uint64_t seed = 1; seed <= 8; ++seed) {
        Graph g = make_random_connected(8, 0.4, seed);
        CHECK(independence_number(g).alpha <= clique_cover_number(g));
    }
}
