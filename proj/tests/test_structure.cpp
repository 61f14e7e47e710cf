#include "doctest.h"

#include <algorithm>
#include <stdexcept>

#include "rainbow/families.hpp"
#include "rainbow/oracles.hpp"
#include "rainbow/structure.hpp"

using namespace rainbow;

TEST_CASE("bfs distances on a path") {
    Graph g = make_path(5);
    CHECK(bfs_distances(g, 0) == std::vector<int>{0, 1, 2, 3, 4});
    CHECK(bfs_distances(g, 2) == std::vector<int>{2, 1, 0, 1, 2});
}

TEST_CASE("distances from a set and its shells") {
    Graph g = make_cycle(6);
    std::vector<int> d = distances_from_set(g, {0, 1});
    CHECK(d == std::vector<int>{0, 0, 1, 2, 2, 1});
    CHECK(shell_at(g, {0, 1}, 1) == std::vector<int>{2, 5});
    CHECK(shell_at(g, {0, 1}, 2) == std::vector<int>{3, 4});
}

TEST_CASE("diameter radius eccentricity") {
    CHECK(diameter(make_path(6)) == 5);
    CHECK(radius(make_path(6)) == 3);
    CHECK(diameter(make_cycle(6)) == 3);
    CHECK(radius(make_cycle(6)) == 3);
    CHECK(eccentricity(make_path(6), 0) == 5);
    CHECK(eccentricity(make_path(6), 3) == 3);
    CHECK(diameter(make_complete(4)) == 1);
}

TEST_CASE("bridge finding") {
    CHECK(find_bridges(make_cycle(5)).empty());
    CHECK(find_bridges(make_path(4)) ==
          std::vector<Edge>{Edge(0, 1), Edge(1, 2), Edge(2, 3)});
    // two triangles joined by one edge: only the joining edge is a bridge
    Graph tt = Graph::build(6, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {3, 4}, {3, 5}, {4, 5}});
    CHECK(find_bridges(tt) == std::vector<Edge>{Edge(2, 3)});
    // a star: every edge is a bridge
    Graph star = Graph::build(4, {{0, 1}, {0, 2}, {0, 3}});
    CHECK(find_bridges(star).size() == 3);
}

TEST_CASE("blow-up turns a single edge into a triangle") {
    Graph k2 = Graph::build(2, {{0, 1}});
    BlowUpResult r = blow_up(k2, Edge(0, 1), 1);
    CHECK(r.graph.vertex_count() == 3);
    CHECK(r.graph.is_complete());
    CHECK(r.record.bridge == Edge(0, 1));
    CHECK(r.record.added == std::vector<int>{2});
    CHECK(independence_number(k2).alpha == 1);
    CHECK(independence_number(r.graph).alpha == 1);
}

TEST_CASE("blow-up of a pendant edge preserves independence and connection numbers") {
    Graph p3 = make_path(3);
    BlowUpResult r = blow_up(p3, Edge(0, 1), 1);
    CHECK(r.graph.vertex_count() == 4);
    CHECK(independence_number(p3).alpha == 2);
    CHECK(independence_number(r.graph).alpha == 2);
    CHECK(rc_exact(p3).rc == 2);
    CHECK(rc_exact(r.graph).rc == 2);

    // the same holds for pendant edges of larger graphs
    Graph p6 = make_path(6);
    BlowUpResult rp = blow_up(p6, Edge(0, 1), 1);
    CHECK(independence_number(rp.graph).alpha == independence_number(p6).alpha);
    CHECK(rc_exact(rp.graph).rc == rc_exact(p6).rc);
}

TEST_CASE("blow-up at an interior bridge can raise the independence number") {
    // On the 6-path, adding a helper above the middle edge creates the
    // independent set {0, 2, 5, helper}: one more than the path itself has.
    Graph p6 = make_path(6);
    BlowUpResult r = blow_up(p6, Edge(3, 4), 1);
    CHECK(independence_number(p6).alpha == 3);
    CHECK(independence_number(r.graph).alpha == 4);
    // the rainbow connection number of this pair is nevertheless unchanged
    CHECK(rc_exact(p6).rc == 5);
    CHECK(rc_exact(r.graph).rc == 5);
}

TEST_CASE("blow-up validates its arguments") {
    Graph c5 = make_cycle(5);
    CHECK_THROWS_AS(blow_up(c5, Edge(0, 1), 1), std::invalid_argument);  // not a bridge
    Graph p3 = make_path(3);
    CHECK_THROWS_AS(blow_up(p3, Edge(0, 2), 1), std::invalid_argument);  // not an edge
    CHECK_THROWS_AS(blow_up(p3, Edge(0, 1), 0), std::invalid_argument);  // q too small
}

TEST_CASE("blow-up with q=2 adds a clique of order four") {
    Graph p3 = make_path(3);
    BlowUpResult r = blow_up(p3, Edge(0, 1), 2);
    CHECK(r.graph.vertex_count() == 5);
    CHECK(r.record.added == std::vector<int>{3, 4});
    // {0, 1, 3, 4} must induce a complete subgraph
    for (int a : {0, 1, 3, 4})
        for (int b : {0, 1, 3, 4})
            if (a < b) CHECK(r.graph.adjacent(a, b));
}

TEST_CASE("induced edges and induced spanning tree") {
    Graph g = make_cycle(5);
    CHECK(induced_edges(g, {0, 1, 2}) == std::vector<Edge>{Edge(0, 1), Edge(1, 2)});
    CHECK(induced_edges(g, {0, 2}).empty());
    std::vector<Edge> t = induced_spanning_tree(g, {0, 1, 2});
    CHECK(t.size() == 2);
    CHECK_THROWS_AS(induced_spanning_tree(g, {0, 2}), std::invalid_argument);

    Graph k4 = make_complete(4);
    CHECK(induced_edges(k4, {0, 1, 2}).size() == 3);
    CHECK(induced_spanning_tree(k4, {0, 1, 2}).size() == 2);
}
