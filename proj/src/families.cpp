#include "rainbow/families.hpp"

#include <random>
#include <stdexcept>
#include <vector>

namespace rainbow {

Graph make_path(int n) {
    if (n < 1) throw std::invalid_argument("path: need n >= 1");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph::build(n, e);
}

Graph make_cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle: need n >= 3");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    e.emplace_back(n - 1, 0);
    return Graph::build(n, e);
}

Graph make_complete(int n) {
    if (n < 1) throw std::invalid_argument("complete: need n >= 1");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return Graph::build(n, e);
}

namespace {

void add_clique(std::vector<std::pair<int, int>>& e, const std::vector<int>& verts) {
    for (size_t i = 0; i < verts.size(); ++i)
        for (size_t j = i + 1; j < verts.size(); ++j) e.emplace_back(verts[i], verts[j]);
}

void add_join(std::vector<std::pair<int, int>>& e, const std::vector<int>& a,
              const std::vector<int>& b) {
    for (int u : a)
        for (int v : b) e.emplace_back(u, v);
}

} // namespace

Graph make_clique_path(int t, int s) {
    if (t < 2 || s < 2) throw std::invalid_argument("clique path: need t >= 2 and s >= 2");
    // path vertices v1..v_2t are ids 0..2t-1; clique blocks follow
    int n = 2 * t + 2 + (t - 1) * s;
    std::vector<std::pair<int, int>> e;
    std::vector<std::string> labels(n);
    for (int i = 0; i < 2 * t; ++i) labels[i] = "v" + std::to_string(i + 1);
    for (int i = 0; i + 1 < 2 * t; ++i) e.emplace_back(i, i + 1);
    int next = 2 * t;
    for (int block = 1; block <= t; ++block) {
        int size = (block == 1) ? 2 : s;
        std::vector<int> verts;
        for (int j = 0; j < size; ++j) {
            labels[next] = "G" + std::to_string(block) + ":" + std::to_string(j);
            verts.push_back(next++);
        }
        add_clique(e, verts);
        // block i is joined to path vertices v_{2i-1} and v_{2i}
        int a = 2 * block - 2, b = 2 * block - 1;
        add_join(e, verts, {a, b});
    }
    Graph g = Graph::build(n, e);
    g.set_labels(std::move(labels));
    return g;
}

Graph make_clique_chain(int t, int s) {
    if (t < 2 || s < 2) throw std::invalid_argument("clique chain: need t >= 2 and s >= 2");
    std::vector<std::vector<int>> blocks;
    std::vector<std::pair<int, int>> e;
    std::vector<std::string> labels;
    int next = 0;
    for (int i = 1; i <= 2 * t; ++i) {
        int size = (i <= 2) ? 2 : s;
        std::vector<int> verts;
        for (int j = 0; j < size; ++j) {
            labels.push_back("V" + std::to_string(i) + ":" + std::to_string(j));
            verts.push_back(next++);
        }
        add_clique(e, verts);
        blocks.push_back(std::move(verts));
    }
    for (size_t i = 0; i + 1 < blocks.size(); ++i) add_join(e, blocks[i], blocks[i + 1]);
    Graph g = Graph::build(next, e);
    g.set_labels(std::move(labels));
    return g;
}

Graph make_double_star(int s) {
    if (s < 4) throw std::invalid_argument("double star: need s >= 4");
    std::vector<std::pair<int, int>> e;
    e.emplace_back(0, 1);
    for (int i = 2; i < s + 2; ++i) {
        e.emplace_back(0, i);
        e.emplace_back(1, i);
    }
    return Graph::build(s + 2, e);
}

Graph make_random_connected(int n, double p, std::uint64_t seed, int max_draws) {
    if (n < 1) throw std::invalid_argument("random: need n >= 1");
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("random: need 0 <= p <= 1");
    std::mt19937_64 rng(seed);
    // raw 53-bit uniform draw keeps the stream identical across platforms
    auto coin = [&rng, p]() {
        double r = static_cast<double>(rng() >> 11) * (1.0 / 9007199254740992.0);
        return r < p;
    };
    for (int attempt = 0; attempt < max_draws; ++attempt) {
        std::vector<std::pair<int, int>> e;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (coin()) e.emplace_back(i, j);
        Graph g = Graph::build(n, e);
        if (g.is_connected()) return g;
    }
    throw std::runtime_error("random: no connected draw in " + std::to_string(max_draws) +
                             " attempts (n=" + std::to_string(n) + ", p=" + std::to_string(p) + ")");
}

Graph generate_family(const std::string& family, const std::map<std::string, double>& params) {
    auto need = [&params, &family](const std::string& key) {
        auto it = params.find(key);
        if (it == params.end())
            throw std::invalid_argument(family + ": missing parameter " + key);
        return it->second;
    };
    auto need_int = [&need](const std::string& key) { return static_cast<int>(need(key)); };
    if (family == "path") return make_path(need_int("n"));
    if (family == "cycle") return make_cycle(need_int("n"));
    if (family == "complete") return make_complete(need_int("n"));
    if (family == "example1") return make_clique_path(need_int("t"), need_int("s"));
    if (family == "example2") return make_clique_chain(need_int("t"), need_int("s"));
    if (family == "example3") return make_double_star(need_int("s"));
    if (family == "random") {
        auto it = params.find("seed");
        std::uint64_t seed = it == params.end() ? 1 : static_cast<std::uint64_t>(it->second);
        return make_random_connected(need_int("n"), need("p"), seed);
    }
    throw std::invalid_argument("unknown family: " + family);
}

} // namespace rainbow
