#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "rainbow/certificate.hpp"
#include "rainbow/coloring.hpp"
#include "rainbow/dominating_tree.hpp"
#include "rainbow/graph.hpp"

namespace rainbow {

// Longest leaf-to-leaf path of the dominating tree, found by a double sweep
// with lowest-id tie-breaks and normalized so the lower-id end comes first.
// Both ends are tip vertices.  Requires |D| >= 3.
std::vector<int> longest_pendant_path(const DominatingTree& dt);

// Split of the dominated outside vertices by their edges into the dominating
// set, refined relative to a chosen tree path P = y1 x1 ... xk y2:
//   a:  at least two edges into the set;  b: exactly one.
//   a4: >= 2 neighbors off the path ends; a3: neighbors exactly {y1, y2};
//   a1: y1-neighbor with one off-end neighbor; a2: same for y2.
//   b1/b2/b3: sole edge lands on y1 / y2 / another tip.
// A vertex matching several predicates is placed by priority a4 > a3 > a1 > a2.
// `anchor` stores each classified vertex's designated set-neighbors (second
// slot -1 for b-vertices).  A b-vertex whose sole edge lands on a mid vertex
// belongs to the enlargement shortcut instead; it is recorded in
// `detached_pending` and left out of b1/b2/b3.
struct NeighborhoodPartition {
    std::vector<int> a, b;
    std::vector<int> a1, a2, a3, a4;
    std::vector<int> b1, b2, b3;
    std::map<int, std::pair<int, int>> anchor;
    std::vector<int> detached_pending;
    int y1 = -1;
    int y2 = -1;
};

NeighborhoodPartition classify_neighborhood(const Graph& g, const DominatingTree& dt,
                                            const std::vector<int>& path);

// Rainbow coloring of tree + extra (one cycle C): non-cycle tree edges get
// distinct colors; C gets paired colors — antipodal reuse for |C| >= 4, a
// single shared color for |C| = 3.  Verified before return; k <= e(tree)-1.
EdgeColoring unicyclic_rainbow_coloring(const Graph& g, const std::vector<Edge>& tree,
                                        const Edge& extra);

// Chord route: the induced subgraph on the dominating set has a non-tree edge.
// Colors T plus the lowest chord via unicyclic_rainbow_coloring, then spends
// two fresh colors on the outside vertices.  k <= e(T)+1 = 2|Y|-1.
ColoringCertificate case1_coloring(const Graph& g, const DominatingTree& dt,
                                   const NeighborhoodPartition& part);

// Tree route: the induced subgraph equals T.  All tree edges get distinct
// colors with the path-end bindings the subcase dictates, one fresh color
// goes on the b-to-set edges, and the a-vertices' two designated edges are
// set per subcase.  k = e(T)+1 = 2|Y|-1.
ColoringCertificate case2_coloring(const Graph& g, const DominatingTree& dt,
                                   const std::vector<int>& path,
                                   const NeighborhoodPartition& part);

} // namespace rainbow
