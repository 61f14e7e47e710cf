#pragma once

#include <vector>

#include "rainbow/graph.hpp"

namespace rainbow {

// Connected dominating set with an attached spanning tree, grown from a
// minimum-degree seed by repeatedly appending a 2-edge branch v-h-u, where v
// is at distance exactly 2 from the current set, h is a common neighbor at
// distance 1 and u is the attachment point inside the set.  Branch far ends
// land in `tips`, branch midpoints in `mids`; an attachment point that is
// itself a midpoint is recorded as a knot (its tree degree reaches 3).
//
// Structural guarantees, re-checked after construction:
//   every vertex is in the set or adjacent to it;
//   tips are pairwise non-adjacent and |tips| = |mids| + 1;
//   the tree spans the set and all its leaves are tips.
struct DominatingTree {
    std::vector<int> dom;    // the dominating set, ascending
    std::vector<Edge> tree;  // spanning tree of the set, canonical order
    std::vector<int> tips;   // seed + branch far ends, in insertion order
    std::vector<int> mids;   // branch midpoints, in insertion order
    std::vector<int> knots;  // midpoints later used as attachment points
    int seed = -1;

    bool in_dom(int v) const;
    bool is_tip(int v) const;
    bool is_mid(int v) const;
    bool is_knot(int v) const;
    int tree_degree(int v) const;
    // unique tree path between two set members (inclusive)
    std::vector<int> tree_path(int from, int to) const;
};

// Requires g connected, non-complete, minimum degree >= 2; throws
// std::invalid_argument otherwise.  Deterministic: the seed is the lowest-id
// minimum-degree vertex, each round picks the lowest-id distance-2 vertex and
// the lexicographically smallest midpoint/attachment pair.
DominatingTree build_dominating_tree(const Graph& g);

} // namespace rainbow
