#include "rainbow/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>

namespace rainbow {

Graph Graph::build(int n, const std::vector<std::pair<int, int>>& pairs) {
    if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
    Graph g;
    g.n_ = n;
    std::set<Edge> seen;
    for (const auto& [a, b] : pairs) {
        if (a == b)
            throw std::invalid_argument("self-loop at vertex " + std::to_string(a));
        if (a < 0 || a >= n || b < 0 || b >= n)
            throw std::invalid_argument("edge (" + std::to_string(a) + "," + std::to_string(b) +
                                        ") outside vertex range 0.." + std::to_string(n - 1));
        seen.insert(Edge(a, b));
    }
    g.edges_.assign(seen.begin(), seen.end());
    g.finalize();
    return g;
}

Graph Graph::from_pairs(const std::vector<std::pair<int, int>>& pairs) {
    std::set<int> ids;
    for (const auto& [a, b] : pairs) {
        ids.insert(a);
        ids.insert(b);
    }
    std::map<int, int> remap;
    std::vector<std::string> labels;
    int next = 0;
    for (int id : ids) {
        remap[id] = next++;
        labels.push_back(std::to_string(id));
    }
    std::vector<std::pair<int, int>> dense;
    dense.reserve(pairs.size());
    for (const auto& [a, b] : pairs) dense.emplace_back(remap[a], remap[b]);
    Graph g = build(next, dense);
    g.labels_ = std::move(labels);
    return g;
}

void Graph::finalize() {
    adj_.assign(n_, {});
    for (const Edge& e : edges_) {
        adj_[e.u].push_back(e.v);
        adj_[e.v].push_back(e.u);
    }
    for (auto& row : adj_) std::sort(row.begin(), row.end());

    // connectivity check, cached once
    connected_ = true;
    if (n_ > 1) {
        std::vector<char> vis(n_, 0);
        std::queue<int> q;
        q.push(0);
        vis[0] = 1;
        int count = 1;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int w : adj_[v])
                if (!vis[w]) {
                    vis[w] = 1;
                    ++count;
                    q.push(w);
                }
        }
        connected_ = (count == n_);
    }
}

const std::vector<int>& Graph::neighbors(int v) const {
    if (!has_vertex(v)) throw std::invalid_argument("no such vertex: " + std::to_string(v));
    return adj_[v];
}

int Graph::degree(int v) const { return static_cast<int>(neighbors(v).size()); }

int Graph::min_degree() const {
    if (n_ == 0) return 0;
    int d = degree(0);
    for (int v = 1; v < n_; ++v) d = std::min(d, degree(v));
    return d;
}

bool Graph::adjacent(int u, int v) const {
    const auto& row = neighbors(u);
    return std::binary_search(row.begin(), row.end(), v);
}

int Graph::edge_index(const Edge& e) const {
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it == edges_.end() || *it != e) return -1;
    return static_cast<int>(it - edges_.begin());
}

bool Graph::is_complete() const {
    return static_cast<long long>(edge_count()) * 2 == static_cast<long long>(n_) * (n_ - 1);
}

void Graph::set_labels(std::vector<std::string> labels) {
    if (static_cast<int>(labels.size()) != n_)
        throw std::invalid_argument("label count does not match vertex count");
    labels_ = std::move(labels);
}

Graph read_edge_list(std::istream& in) {
    std::vector<std::pair<int, int>> pairs;
    int declared_n = -1, declared_m = -1;
    std::string line;
    int lineno = 0;
    int max_id = -1;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue;  // blank or comment-only
        if (first == "p") {
            if (declared_n != -1)
                throw std::invalid_argument("line " + std::to_string(lineno) + ": duplicate header");
            if (!(ls >> declared_n >> declared_m) || declared_n < 0 || declared_m < 0)
                throw std::invalid_argument("line " + std::to_string(lineno) + ": malformed header");
            continue;
        }
        int a, b;
        try {
            a = std::stoi(first);
        } catch (const std::exception&) {
            throw std::invalid_argument("line " + std::to_string(lineno) + ": expected vertex id, got '" + first + "'");
        }
        if (!(ls >> b))
            throw std::invalid_argument("line " + std::to_string(lineno) + ": missing second endpoint");
        std::string extra;
        if (ls >> extra)
            throw std::invalid_argument("line " + std::to_string(lineno) + ": trailing tokens");
        if (a < 0 || b < 0)
            throw std::invalid_argument("line " + std::to_string(lineno) + ": negative vertex id");
        pairs.emplace_back(a, b);
        max_id = std::max(max_id, std::max(a, b));
    }
    int n = std::max(declared_n, max_id + 1);
    Graph g = Graph::build(n, pairs);
    if (declared_n != -1) {
        if (declared_n < max_id + 1)
            throw std::invalid_argument("header vertex count " + std::to_string(declared_n) +
                                        " smaller than largest id " + std::to_string(max_id));
        if (declared_m != g.edge_count())
            throw std::invalid_argument("header edge count " + std::to_string(declared_m) +
                                        " does not match " + std::to_string(g.edge_count()) + " parsed edges");
    }
    return g;
}

Graph read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
    out << "p " << g.vertex_count() << " " << g.edge_count() << "\n";
    for (const Edge& e : g.edges()) out << e.u << " " << e.v << "\n";
}

void write_edge_list_file(const std::string& path, const Graph& g) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    write_edge_list(out, g);
}

} // namespace rainbow
