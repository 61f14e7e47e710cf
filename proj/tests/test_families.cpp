#include "doctest.h"

#include <stdexcept>

#include "rainbow/families.hpp"
#include "rainbow/structure.hpp"

using namespace rainbow;

TEST_CASE("path cycle and complete sizes") {
    CHECK(make_path(1).edge_count() == 0);
    CHECK(make_path(6).vertex_count() == 6);
    CHECK(make_path(6).edge_count() == 5);
    CHECK(make_cycle(5).edge_count() == 5);
    CHECK(make_cycle(5).min_degree() == 2);
    CHECK(make_complete(6).edge_count() == 15);
    CHECK(make_complete(6).is_complete());
    CHECK_THROWS_AS(make_path(0), std::invalid_argument);
    CHECK_THROWS_AS(make_cycle(2), std::invalid_argument);
}

TEST_CASE("clique path order and diameter") {
    // order 2t + 2 + (t-1)s, diameter 2t-1 along the spine
    for (int t : {2, 3, 4}) {
        for (int s : {2, 5}) {
            Graph g = make_clique_path(t, s);
            CHECK(g.vertex_count() == 2 * t + 2 + (t - 1) * s);
            CHECK(diameter(g) == 2 * t - 1);
            CHECK(g.is_connected());
            CHECK(g.min_degree() >= 2);
        }
    }
    CHECK_THROWS_AS(make_clique_path(1, 2), std::invalid_argument);
    CHECK_THROWS_AS(make_clique_path(2, 1), std::invalid_argument);
}

TEST_CASE("clique chain block degrees") {
    // first two blocks have 2 vertices each: degree 3 in the first block,
    // s + 3 in the second; diameter is 2t - 1 across the chain
    Graph g = make_clique_chain(2, 4);
    CHECK(g.vertex_count() == 2 + 2 + 4 + 4);
    CHECK(g.degree(0) == 3);
    CHECK(g.degree(1) == 3);
    CHECK(g.degree(2) == 4 + 3);
    CHECK(g.degree(3) == 4 + 3);
    CHECK(diameter(g) == 3);
    Graph h = make_clique_chain(3, 2);
    CHECK(diameter(h) == 5);
    CHECK_THROWS_AS(make_clique_chain(2, 0), std::invalid_argument);
}

TEST_CASE("double star is complete tripartite with two hubs") {
    Graph g = make_double_star(6);
    CHECK(g.vertex_count() == 8);
    CHECK(g.edge_count() == 1 + 2 * 6);
    CHECK(g.adjacent(0, 1));
    for (int v = 2; v < 8; ++v) {
        CHECK(g.degree(v) == 2);
        CHECK(g.adjacent(0, v));
        CHECK(g.adjacent(1, v));
    }
    CHECK(diameter(g) == 2);
    CHECK_THROWS_AS(make_double_star(3), std::invalid_argument);
}

TEST_CASE("random connected graphs are deterministic per seed") {
    Graph a = make_random_connected(10, 0.3, 42);
    Graph b = make_random_connected(10, 0.3, 42);
    CHECK(a.edges() == b.edges());
    CHECK(a.is_connected());
    Graph c = make_random_connected(10, 0.3, 43);
    CHECK(a.edges() != c.edges());  // different draw on a different seed
}

TEST_CASE("family dispatch by name") {
    CHECK(generate_family("path", {{"n", 5}}).edge_count() == 4);
    CHECK(generate_family("cycle", {{"n", 5}}).edge_count() == 5);
    CHECK(generate_family("complete", {{"n", 4}}).edge_count() == 6);
    CHECK(generate_family("example1", {{"t", 2}, {"s", 2}}).vertex_count() == 8);
    CHECK(generate_family("example2", {{"t", 2}, {"s", 2}}).vertex_count() == 8);
    CHECK(generate_family("example3", {{"s", 5}}).vertex_count() == 7);
    CHECK(generate_family("random", {{"n", 8}, {"p", 0.4}, {"seed", 7}}).vertex_count() == 8);
    CHECK_THROWS_AS(generate_family("nonesuch", {}), std::invalid_argument);
    CHECK_THROWS_AS(generate_family("path", {}), std::invalid_argument);  // missing n
}
