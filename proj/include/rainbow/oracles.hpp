#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "rainbow/coloring.hpp"
#include "rainbow/errors.hpp"
#include "rainbow/graph.hpp"

namespace rainbow {

// ---- independence number -------------------------------------------------

struct IndependenceResult {
    int alpha = 0;
    std::vector<int> witness;  // an independent set of size alpha, ascending
};

// Exact maximum independent set via branch and bound: branches on a vertex of
// maximum residual degree, bounded by a greedy clique cover of the residual
// graph.  Deterministic (lowest-id tie-breaks).  Throws budget_exceeded when
// the node budget runs out, carrying [best-found, n] as the interval.
IndependenceResult independence_number(const Graph& g, std::uint64_t node_budget = 50'000'000);

// ---- rainbow connectivity ------------------------------------------------

struct RainbowVerdict {
    bool connected = false;
    std::vector<std::pair<int, int>> violations;  // pairs with no rainbow path
    std::uint64_t states_explored = 0;
};

// Decides whether every vertex pair is joined by a path with pairwise
// distinct edge colors.  Exact: searches (vertex, used-color-set) states per
// source with subset dominance pruning.  Requires a total coloring with
// k <= 64 (std::invalid_argument otherwise, listing what is missing).
RainbowVerdict is_rainbow_connected(const Graph& g, const EdgeColoring& col);

// ---- exact rainbow connection number -------------------------------------

struct RcResult {
    int rc = 0;
    EdgeColoring witness;
};

// Smallest k admitting a rainbow-connected k-coloring.  Iterates k upward
// from diameter(g); colorings are enumerated canonically (first edge color 1,
// each new color introduced in increasing order) so each color partition is
// tried once; partial assignments are pruned with an optimistic connectivity
// check.  Throws budget_exceeded with the bracketing interval when the node
// budget runs out.  Intended for small instances (roughly e(g) <= 15 unless
// the answer is near the diameter).
RcResult rc_exact(const Graph& g, std::uint64_t node_budget = 80'000'000);

// Same search, but takes a proven upper bound (from a verified coloring).
// Only k in [diameter, upper-1] must be searched: if the range is empty or
// exhausts without a witness, the bound itself is exact.
int rc_exact_with_upper(const Graph& g, int verified_upper, std::uint64_t node_budget = 80'000'000);

// ---- clique cover number -------------------------------------------------

// Minimum number of cliques covering V(g) = chromatic number of the
// complement, computed exactly (iterative deepening with canonical color
// pruning).  Practical to about 20 vertices.
int clique_cover_number(const Graph& g, std::uint64_t node_budget = 50'000'000);

} // namespace rainbow
