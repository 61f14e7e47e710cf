#pragma once

#include <vector>

#include "rainbow/coloring.hpp"
#include "rainbow/graph.hpp"

namespace rainbow {

// Extends a rainbow coloring of the subgraph induced by a connected dominating
// set to the whole graph using exactly three additional colors.
//
// The neighborhood of the set is partitioned greedily: while some outside
// vertex still has an outside neighbor, the lowest such vertex becomes a hub
// and absorbs its outside closed neighborhood; what remains are isolated
// outside vertices.  Colors: hub-to-set edges get the first fresh color,
// edges among outside vertices the second, absorbed-member-to-set edges the
// third.  An isolated leftover colors its first set edge with the first fresh
// color and any further set edges with the third, so that two leftovers whose
// neighborhoods both lie inside the set still reach each other.
//
// The declared palette is inner.k + 3 even when a fresh color goes unused.
// The result is verified before it is returned; a failure throws
// verification_failure with the offending pair.
EdgeColoring extend_from_dominating_set(const Graph& g, const std::vector<int>& dom,
                                        const EdgeColoring& inner);

// Rainbow coloring of the subgraph induced by `dom`: distinct colors 1..|tree|
// on the given spanning tree edges, any chords reuse color 1.  Building block
// for the shortcut route and for tests.
EdgeColoring tree_distinct_coloring(const Graph& g, const std::vector<int>& dom,
                                    const std::vector<Edge>& tree);

} // namespace rainbow
