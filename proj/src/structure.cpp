#include "rainbow/structure.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <stdexcept>

namespace rainbow {

std::vector<int> bfs_distances(const Graph& g, int source) {
    if (!g.has_vertex(source)) throw std::invalid_argument("bfs: no such vertex");
    std::vector<int> dist(g.vertex_count(), kUnreachable);
    std::queue<int> q;
    dist[source] = 0;
    q.push(source);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : g.neighbors(v))
            if (dist[w] == kUnreachable) {
                dist[w] = dist[v] + 1;
                q.push(w);
            }
    }
    return dist;
}

std::vector<int> distances_from_set(const Graph& g, const std::vector<int>& seed) {
    if (seed.empty()) throw std::invalid_argument("distances_from_set: empty seed set");
    std::vector<int> dist(g.vertex_count(), kUnreachable);
    std::queue<int> q;
    for (int v : seed) {
        if (!g.has_vertex(v)) throw std::invalid_argument("distances_from_set: bad vertex");
        if (dist[v] == 0) continue;
        dist[v] = 0;
        q.push(v);
    }
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : g.neighbors(v))
            if (dist[w] == kUnreachable) {
                dist[w] = dist[v] + 1;
                q.push(w);
            }
    }
    return dist;
}

std::vector<int> shell_at(const Graph& g, const std::vector<int>& seed, int k) {
    auto dist = distances_from_set(g, seed);
    std::vector<int> out;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (dist[v] == k) out.push_back(v);
    return out;
}

int eccentricity(const Graph& g, int v) {
    auto dist = bfs_distances(g, v);
    int ecc = 0;
    for (int d : dist) {
        if (d == kUnreachable) return kUnreachable;
        ecc = std::max(ecc, d);
    }
    return ecc;
}

int diameter(const Graph& g) {
    int best = 0;
    for (int v = 0; v < g.vertex_count(); ++v) {
        int e = eccentricity(g, v);
        if (e == kUnreachable) return kUnreachable;
        best = std::max(best, e);
    }
    return best;
}

int radius(const Graph& g) {
    if (g.vertex_count() == 0) return 0;
    int best = -1;
    for (int v = 0; v < g.vertex_count(); ++v) {
        int e = eccentricity(g, v);
        if (e == kUnreachable) return kUnreachable;
        if (best == -1 || e < best) best = e;
    }
    return best;
}

std::vector<Edge> find_bridges(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> num(n, -1), low(n, 0);
    std::vector<Edge> out;
    int timer = 0;
    // iterative lowpoint DFS; parent tracked by the edge we arrived on
    std::function<void(int, int)> dfs = [&](int v, int parent) {
        num[v] = low[v] = timer++;
        bool skipped_parent = false;
        for (int w : g.neighbors(v)) {
            if (w == parent && !skipped_parent) {
                skipped_parent = true;  // one parallel edge back to parent, if any, counts
                continue;
            }
            if (num[w] == -1) {
                dfs(w, v);
                low[v] = std::min(low[v], low[w]);
                if (low[w] > num[v]) out.push_back(Edge(v, w));
            } else {
                low[v] = std::min(low[v], num[w]);
            }
        }
    };
    for (int v = 0; v < n; ++v)
        if (num[v] == -1) dfs(v, -1);
    std::sort(out.begin(), out.end());
    return out;
}

BlowUpResult blow_up(const Graph& g, const Edge& e, int q) {
    if (q < 1) throw std::invalid_argument("blow_up: need q >= 1");
    auto bridges = find_bridges(g);
    if (!std::binary_search(bridges.begin(), bridges.end(), e))
        throw std::invalid_argument("blow_up: (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                    ") is not a bridge");
    int n = g.vertex_count();
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(g.edge_count() + q * (q + 3) / 2);
    for (const Edge& f : g.edges()) pairs.emplace_back(f.u, f.v);
    BlowUp rec;
    rec.bridge = e;
    for (int i = 0; i < q; ++i) rec.added.push_back(n + i);
    for (int w : rec.added) {
        pairs.emplace_back(w, e.u);
        pairs.emplace_back(w, e.v);
    }
    for (size_t i = 0; i < rec.added.size(); ++i)
        for (size_t j = i + 1; j < rec.added.size(); ++j)
            pairs.emplace_back(rec.added[i], rec.added[j]);
    return BlowUpResult{Graph::build(n + q, pairs), rec};
}

std::vector<Edge> induced_edges(const Graph& g, const std::vector<int>& subset) {
    std::vector<char> in(g.vertex_count(), 0);
    for (int v : subset) {
        if (!g.has_vertex(v)) throw std::invalid_argument("induced_edges: bad vertex");
        in[v] = 1;
    }
    std::vector<Edge> out;
    for (const Edge& e : g.edges())
        if (in[e.u] && in[e.v]) out.push_back(e);
    return out;
}

std::vector<Edge> induced_spanning_tree(const Graph& g, const std::vector<int>& subset) {
    if (subset.empty()) throw std::invalid_argument("spanning tree: empty subset");
    std::vector<char> in(g.vertex_count(), 0);
    for (int v : subset) {
        if (!g.has_vertex(v)) throw std::invalid_argument("spanning tree: bad vertex");
        in[v] = 1;
    }
    int root = *std::min_element(subset.begin(), subset.end());
    std::vector<char> vis(g.vertex_count(), 0);
    std::vector<Edge> tree;
    std::queue<int> q;
    vis[root] = 1;
    q.push(root);
    int reached = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : g.neighbors(v))
            if (in[w] && !vis[w]) {
                vis[w] = 1;
                ++reached;
                tree.push_back(Edge(v, w));
                q.push(w);
            }
    }
    // subset may carry duplicates; count distinct members
    int distinct = 0;
    for (int v = 0; v < g.vertex_count(); ++v) distinct += in[v] ? 1 : 0;
    if (reached != distinct)
        throw std::invalid_argument("spanning tree: induced subgraph is disconnected");
    std::sort(tree.begin(), tree.end());
    return tree;
}

} // namespace rainbow
