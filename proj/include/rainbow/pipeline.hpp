#pragma once

#include <vector>

#include "rainbow/certificate.hpp"
#include "rainbow/graph.hpp"
#include "rainbow/structure.hpp"

namespace rainbow {

// Result of clearing every pendant edge out of a connected graph by blowing
// it up into a triangle (one helper vertex per edge, original edge kept).
// Pendant edges are always bridges, and fixing them lifts the graph to
// minimum degree >= 2 without disturbing the independence number — unlike an
// interior bridge, whose triangle can enlarge a maximum independent set.
// Interior bridges are left alone; the later construction tolerates them.
// Records are in processing order (ascending leaf id).
struct BridgePreprocess {
    Graph graph;
    std::vector<BlowUp> records;
};
BridgePreprocess preprocess_bridges(const Graph& g);

// End-to-end bounded rainbow coloring of a connected graph: palette size at
// most 2*|witness|-1 for the independent witness set carried in the
// certificate.  Graphs of minimum degree >= 2 (bridges allowed) go through
// the dominating-tree construction directly; graphs with pendant vertices run
// both the pendant blow-up detour and pendant peeling (strip degree-1
// vertices to a core of minimum degree >= 2, color the core, then give every
// peeled edge its own fresh color) and keep the better certificate — a kept
// budget first, then the smaller palette.  Route taken:
//   "complete"                  one color suffices;
//   "lemma-shortcut.<branch>"   an enlarged independent set was found, the
//                               dominating set is colored as a tree and
//                               extended with three fresh colors;
//   "case1"                     the dominating set induces a chord;
//   "case2.<subcase>"           the dominating set induces exactly its tree;
//   "pendant-peel.<core>"       peeling fallback around the core's route
//                               ("single" when the core is one vertex).
// A "+repair" suffix marks a certificate whose coloring needed the bounded
// deterministic recoloring pass after the primary construction failed its
// verification; fallback_used is set whenever any fallback fired (repair,
// bridge color restoration, peeling, or a witness recomputed by the exact
// oracle).
//
// The certificate's coloring, verdict and witness all refer to the input
// graph.  Throws std::invalid_argument for a disconnected input or when the
// palette would exceed the verifier's 64-color limit, and
// verification_failure if no route produces a verified coloring.
ColoringCertificate rainbow_color_bounded(const Graph& g);

} // namespace rainbow
