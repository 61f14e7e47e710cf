#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rainbow/casework.hpp"
#include "rainbow/dominating_tree.hpp"
#include "rainbow/graph.hpp"

namespace rainbow {

// An independent set one larger than the tip set, plus the branch that found
// it.  Handing such a set to the caller lets the whole graph be colored with
// |D|+2 <= 2|I|-1 colors, skipping the explicit casework.
struct EnlargedSet {
    std::vector<int> members;
    std::string branch;
};

// Tries, in order:
//   "detached-vertex": an outside vertex with no tip neighbor joins the tips.
//   "pendant-pair":    two non-adjacent outside vertices, each with exactly
//                      one set edge landing on a tip, merged with the tree
//                      path between their tips (mids swapped in, path tips
//                      swapped out; a knot-segment repair when the path has
//                      two consecutive mids).  Tree-only route.
//   "twin-pair":       two non-adjacent outside vertices whose set
//                      neighborhoods are the same two tips; same path
//                      machinery with the far tip dropped.  Tree-only route.
//   "pair-cover":      two non-adjacent outside vertices whose combined tip
//                      neighborhood is a single tip; that tip is traded for
//                      the pair.
// Every candidate is re-verified (independence and size |Y|+1) before being
// returned; a constructed set that cannot be realized even by the bounded
// exact fallback search raises verification_failure naming the branch.
std::optional<EnlargedSet> find_enlarged_independent_set(const Graph& g,
                                                         const DominatingTree& dt,
                                                         const NeighborhoodPartition& part);

} // namespace rainbow
