#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "rainbow/graph.hpp"

namespace rainbow {

// Deterministic graph constructors used by the tests, the CLI and the sweeps.
// Parameter bounds are validated; violations throw std::invalid_argument.

Graph make_path(int n);      // n >= 1 vertices 0..n-1 in a path
Graph make_cycle(int n);     // n >= 3
Graph make_complete(int n);  // n >= 1

// Chain of cliques hung off a path v1..v_2t: a 2-vertex clique joined to
// (v1,v2) and, for each later position i in 2..t, an s-vertex clique joined to
// (v_{2i-1}, v_{2i}).  Total order 2t + 2 + (t-1)s.  t >= 2, s >= 2.
Graph make_clique_path(int t, int s);

// Chain of 2t clique blocks V1..V_2t, |V1| = |V2| = 2 and |Vi| = s for i >= 3,
// consecutive blocks fully joined.  t >= 2, s >= 2.
Graph make_clique_chain(int t, int s);

// Complete tripartite K_{1,1,s}: two hub vertices joined to each other and to
// s independent vertices.  s >= 4.
Graph make_double_star(int s);

// Erdos-Renyi G(n,p) conditioned on connectivity: draws with the given seed
// until connected, at most max_draws attempts, then throws.
Graph make_random_connected(int n, double p, std::uint64_t seed, int max_draws = 10000);

// Name-based dispatch for the CLI: family is one of path, cycle, complete,
// example1 (clique path), example2 (clique chain), example3 (double star),
// random.  Required params: n / t,s / s / n,p,seed depending on family.
Graph generate_family(const std::string& family, const std::map<std::string, double>& params);

} // namespace rainbow
