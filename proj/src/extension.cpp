#include "rainbow/extension.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "rainbow/errors.hpp"
#include "rainbow/oracles.hpp"
#include "rainbow/structure.hpp"

namespace rainbow {

EdgeColoring tree_distinct_coloring(const Graph& g, const std::vector<int>& dom,
                                    const std::vector<Edge>& tree) {
    EdgeColoring col;
    col.k = static_cast<int>(tree.size());
    int next = 1;
    for (const Edge& e : tree) {
        if (!g.adjacent(e.u, e.v))
            throw std::invalid_argument("tree edge " + std::to_string(e.u) + "-" +
                                        std::to_string(e.v) + " is not an edge of the graph");
        col.assign(e, next++);
    }
    // Chords inside the induced subgraph reuse color 1; the tree alone already
    // provides a rainbow path for every pair.
    for (const Edge& e : induced_edges(g, dom))
        if (col.color_of(e) == 0) col.assign(e, col.k >= 1 ? 1 : 0);
    col.refresh_surjectivity();
    return col;
}

EdgeColoring extend_from_dominating_set(const Graph& g, const std::vector<int>& dom,
                                        const EdgeColoring& inner) {
    const int n = g.vertex_count();
    std::vector<char> in_dom(n, 0);
    for (int v : dom) {
        if (!g.has_vertex(v)) throw std::invalid_argument("dominating set vertex out of range");
        in_dom[v] = 1;
    }
    for (int v = 0; v < n; ++v) {
        if (in_dom[v]) continue;
        bool covered = false;
        for (int u : g.neighbors(v))
            if (in_dom[u]) { covered = true; break; }
        if (!covered)
            throw std::invalid_argument("vertex " + std::to_string(v) +
                                        " is not dominated by the given set");
    }
    if (g.min_degree() < 2)
        throw std::invalid_argument("extension requires minimum degree 2");

    // The inner coloring must cover exactly the induced edges.
    for (const Edge& e : g.edges()) {
        if (in_dom[e.u] && in_dom[e.v] && inner.color_of(e) == 0)
            throw std::invalid_argument("inner coloring misses edge " + std::to_string(e.u) +
                                        "-" + std::to_string(e.v));
    }

    const int c1 = inner.k + 1;
    const int c2 = inner.k + 2;
    const int c3 = inner.k + 3;

    EdgeColoring out;
    out.colors = inner.colors;
    out.k = c3;

    // Edges among outside vertices all share the second fresh color.
    for (const Edge& e : g.edges())
        if (!in_dom[e.u] && !in_dom[e.v]) out.assign(e, c2);

    // Greedy hub absorption: repeatedly take the lowest outside vertex that
    // still has an outside neighbor, and absorb its outside closed
    // neighborhood.  Hub set-edges get c1, absorbed-member set-edges get c3.
    std::vector<char> in_f(n, 0);
    for (int v = 0; v < n; ++v)
        if (!in_dom[v]) in_f[v] = 1;

    auto has_f_neighbor = [&](int v) {
        for (int u : g.neighbors(v))
            if (in_f[u]) return true;
        return false;
    };

    for (;;) {
        int hub = -1;
        for (int v = 0; v < n && hub < 0; ++v)
            if (in_f[v] && has_f_neighbor(v)) hub = v;
        if (hub < 0) break;

        std::vector<int> members;
        for (int u : g.neighbors(hub))
            if (in_f[u]) members.push_back(u);
        in_f[hub] = 0;
        for (int m : members) in_f[m] = 0;

        for (int d : g.neighbors(hub))
            if (in_dom[d]) out.assign(Edge(hub, d), c1);
        for (int m : members)
            for (int d : g.neighbors(m))
                if (in_dom[d]) out.assign(Edge(m, d), c3);
    }

    // Leftovers are pairwise non-adjacent; each colors its first set-edge c1
    // and any remaining set-edges c3, so two leftovers meet through one c1 and
    // one c3 edge instead of two c1 edges.
    for (int v = 0; v < n; ++v) {
        if (!in_f[v]) continue;
        bool first = true;
        for (int d : g.neighbors(v)) {
            if (!in_dom[d]) continue;
            out.assign(Edge(v, d), first ? c1 : c3);
            first = false;
        }
    }

    out.refresh_surjectivity();

    if (out.k <= 64) {
        RainbowVerdict verdict = is_rainbow_connected(g, out);
        if (!verdict.connected) {
            const auto& p = verdict.violations.front();
            throw verification_failure("extension", p,
                                       "no rainbow path between " + std::to_string(p.first) +
                                           " and " + std::to_string(p.second));
        }
    }
    return out;
}

} // namespace rainbow
