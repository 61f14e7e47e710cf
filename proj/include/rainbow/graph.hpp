#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace rainbow {

// Canonical undirected edge: u < v always holds after construction.
struct Edge {
    int u = 0;
    int v = 0;
    Edge() = default;
    Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Simple undirected graph, immutable after construction.  Adjacency lists are
// kept sorted and the edge list canonical (sorted (u,v) pairs with u < v), so
// every traversal in the library is deterministic.
class Graph {
public:
    Graph() = default;

    // Builds the graph on vertices 0..n-1.  Throws std::invalid_argument on
    // self-loops or out-of-range endpoints; duplicate pairs are collapsed.
    static Graph build(int n, const std::vector<std::pair<int, int>>& pairs);

    // Builds from raw id pairs: ids are normalized (sorted, made dense); the
    // original id of vertex i is retained as its label.
    static Graph from_pairs(const std::vector<std::pair<int, int>>& pairs);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const;
    int degree(int v) const;
    int min_degree() const;
    bool adjacent(int u, int v) const;
    bool has_vertex(int v) const { return v >= 0 && v < n_; }

    // Index of e in the canonical edge list, or -1 if absent.
    int edge_index(const Edge& e) const;

    bool is_connected() const { return connected_; }
    bool is_complete() const;

    const std::vector<std::string>& labels() const { return labels_; }
    void set_labels(std::vector<std::string> labels);

private:
    int n_ = 0;
    std::vector<std::vector<int>> adj_;
    std::vector<Edge> edges_;
    std::vector<std::string> labels_;
    bool connected_ = true;

    void finalize();
};

// Edge-list text format: one "u v" pair per line, '#' starts a comment,
// blank lines are skipped.  An optional "p <n> <m>" header pins the expected
// vertex and edge counts and is validated on read.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);
void write_edge_list(std::ostream& out, const Graph& g);
void write_edge_list_file(const std::string& path, const Graph& g);

} // namespace rainbow
