#include "rainbow/dominating_tree.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <stdexcept>

#include "rainbow/structure.hpp"

namespace rainbow {

bool DominatingTree::in_dom(int v) const {
    return std::binary_search(dom.begin(), dom.end(), v);
}
bool DominatingTree::is_tip(int v) const {
    return std::find(tips.begin(), tips.end(), v) != tips.end();
}
bool DominatingTree::is_mid(int v) const {
    return std::find(mids.begin(), mids.end(), v) != mids.end();
}
bool DominatingTree::is_knot(int v) const {
    return std::find(knots.begin(), knots.end(), v) != knots.end();
}

int DominatingTree::tree_degree(int v) const {
    int d = 0;
    for (const Edge& e : tree)
        if (e.u == v || e.v == v) ++d;
    return d;
}

std::vector<int> DominatingTree::tree_path(int from, int to) const {
    std::map<int, std::vector<int>> adj;
    for (const Edge& e : tree) {
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    std::map<int, int> parent;
    parent[from] = from;
    std::queue<int> q;
    q.push(from);
    while (!q.empty() && !parent.count(to)) {
        int v = q.front();
        q.pop();
        for (int w : adj[v])
            if (!parent.count(w)) {
                parent[w] = v;
                q.push(w);
            }
    }
    if (!parent.count(to)) throw std::logic_error("tree_path: endpoints not connected in tree");
    std::vector<int> path;
    for (int v = to; v != from; v = parent[v]) path.push_back(v);
    path.push_back(from);
    std::reverse(path.begin(), path.end());
    return path;
}

DominatingTree build_dominating_tree(const Graph& g) {
    if (!g.is_connected()) throw std::invalid_argument("dominating tree: graph must be connected");
    if (g.is_complete()) throw std::invalid_argument("dominating tree: graph must not be complete");
    if (g.min_degree() < 2) throw std::invalid_argument("dominating tree: need minimum degree >= 2");

    int n = g.vertex_count();
    DominatingTree dt;
    // seed: lowest-id vertex of minimum degree
    int seed = 0;
    for (int v = 1; v < n; ++v)
        if (g.degree(v) < g.degree(seed)) seed = v;
    dt.seed = seed;
    dt.tips.push_back(seed);

    std::vector<char> in_set(n, 0), in_mids(n, 0);
    in_set[seed] = 1;
    std::vector<int> members{seed};

    for (;;) {
        auto dist = distances_from_set(g, members);
        int v = -1;
        for (int cand = 0; cand < n; ++cand)
            if (dist[cand] == 2) {
                v = cand;
                break;
            }
        if (v == -1) break;
        // smallest (h, u): h a distance-1 neighbor of v, u a set neighbor of h
        int best_h = -1, best_u = -1;
        for (int h : g.neighbors(v)) {
            if (dist[h] != 1) continue;
            for (int u : g.neighbors(h)) {
                if (!in_set[u]) continue;
                if (best_h == -1 || h < best_h || (h == best_h && u < best_u)) {
                    best_h = h;
                    best_u = u;
                }
                break;  // neighbors ascend, so the first set member is minimal for this h
            }
        }
        if (best_h == -1) throw std::logic_error("dominating tree: distance-2 vertex without a 2-step path");
        dt.tree.push_back(Edge(v, best_h));
        dt.tree.push_back(Edge(best_h, best_u));
        dt.tips.push_back(v);
        dt.mids.push_back(best_h);
        if (in_mids[best_u] && !dt.is_knot(best_u)) dt.knots.push_back(best_u);
        in_set[v] = in_set[best_h] = 1;
        in_mids[best_h] = 1;
        members.push_back(v);
        members.push_back(best_h);
    }

    dt.dom = members;
    std::sort(dt.dom.begin(), dt.dom.end());
    std::sort(dt.tree.begin(), dt.tree.end());

    // structural self-checks; a failure here means the construction above
    // does not deliver what the rest of the pipeline assumes
    auto dist = distances_from_set(g, dt.dom);
    for (int v = 0; v < n; ++v)
        if (dist[v] > 1) throw std::logic_error("dominating tree: set is not dominating");
    if (dt.tips.size() != dt.mids.size() + 1)
        throw std::logic_error("dominating tree: tip/mid count mismatch");
    for (size_t i = 0; i < dt.tips.size(); ++i)
        for (size_t j = i + 1; j < dt.tips.size(); ++j)
            if (g.adjacent(dt.tips[i], dt.tips[j]))
                throw std::logic_error("dominating tree: tips are not independent");
    if (dt.tree.size() + 1 != dt.dom.size())
        throw std::logic_error("dominating tree: tree edge count is off");
    for (int v : dt.dom)
        if (dt.tree_degree(v) == 1 && !dt.is_tip(v))
            throw std::logic_error("dominating tree: leaf that is not a tip");
    return dt;
}

} // namespace rainbow
