#pragma once

#include <vector>

#include "rainbow/graph.hpp"

namespace rainbow {

inline constexpr int kUnreachable = -1;

// Single-source BFS distances; kUnreachable marks vertices in other components.
std::vector<int> bfs_distances(const Graph& g, int source);

// Distance to the nearest member of the (non-empty) seed set.
std::vector<int> distances_from_set(const Graph& g, const std::vector<int>& seed);

// Vertices at distance exactly k from the seed set, ascending ids.
std::vector<int> shell_at(const Graph& g, const std::vector<int>& seed, int k);

int eccentricity(const Graph& g, int v);  // kUnreachable if g is disconnected
int diameter(const Graph& g);             // kUnreachable if disconnected
int radius(const Graph& g);               // kUnreachable if disconnected

// All bridges (cut edges), canonical order.
std::vector<Edge> find_bridges(const Graph& g);

// Clique blow-up at a bridge: adds q new vertices adjacent to both endpoints
// and to each other, so {u, v, new...} induces a clique.  The original edge is
// kept.  Throws std::invalid_argument unless e is a bridge of g and q >= 1.
struct BlowUp {
    Edge bridge;             // original bridge in the input graph
    std::vector<int> added;  // ids of the inserted vertices
};
struct BlowUpResult {
    Graph graph;
    BlowUp record;
};
BlowUpResult blow_up(const Graph& g, const Edge& e, int q);

// Spanning tree (BFS from the lowest id) of the subgraph induced by subset.
// Throws if the induced subgraph is disconnected.  On a tree this returns the
// tree's own edges.
std::vector<Edge> induced_spanning_tree(const Graph& g, const std::vector<int>& subset);

// Edges of the subgraph induced by subset, canonical order.
std::vector<Edge> induced_edges(const Graph& g, const std::vector<int>& subset);

} // namespace rainbow
