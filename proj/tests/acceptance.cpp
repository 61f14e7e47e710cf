// End-to-end acceptance checks for the bounded rainbow coloring pipeline.
// Each check prints exactly one [PASS]/[FAIL] line with a timing; the process
// exit code is the number of failed checks.

#include <chrono>
#include <cstdint>
#include <exception>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "rainbow/dominating_tree.hpp"
#include "rainbow/extension.hpp"
#include "rainbow/families.hpp"
#include "rainbow/oracles.hpp"
#include "rainbow/pipeline.hpp"
#include "rainbow/structure.hpp"

using namespace rainbow;

namespace {

using clock_type = std::chrono::steady_clock;

struct Outcome {
    bool pass = false;
    std::string detail;
};

struct SolvedInstance {
    std::string name;
    Graph graph;
    int palette = 0;
};

std::vector<SolvedInstance> roster;  // filled by earlier checks, consumed by the chain check

int run_check(const std::string& name, double limit_s, const std::function<Outcome()>& body) {
    auto t0 = clock_type::now();
    Outcome out;
    try {
        out = body();
    } catch (const std::exception& e) {
        out = {false, std::string("unexpected exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(clock_type::now() - t0).count();
    bool timely = secs <= limit_s;
    bool ok = out.pass && timely;
    std::ostringstream line;
    line << (ok ? "[PASS] " : "[FAIL] ") << name << ": " << out.detail;
    if (!timely) line << " [over time limit]";
    line << " (" << std::fixed << std::setprecision(1) << secs << "s, limit "
         << std::setprecision(0) << limit_s << "s)";
    std::cout << line.str() << "\n";
    return ok ? 0 : 1;
}

bool witness_independent(const Graph& g, const std::vector<int>& w) {
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = i + 1; j < w.size(); ++j)
            if (g.adjacent(w[i], w[j])) return false;
    return true;
}

// ---- independent brute-force rainbow connection, used to cross-check the oracle ----

bool brute_pair_connected(const Graph& g, const std::vector<int>& assign, int s, int t) {
    // DFS over simple paths carrying a bitmask of used colors
    std::vector<int> stack{s};
    std::vector<std::uint64_t> seen_vertices{1ull << s};
    std::vector<std::uint64_t> seen_colors{0};
    while (!stack.empty()) {
        int v = stack.back();
        std::uint64_t vs = seen_vertices.back();
        std::uint64_t cs = seen_colors.back();
        stack.pop_back();
        seen_vertices.pop_back();
        seen_colors.pop_back();
        if (v == t) return true;
        for (int u : g.neighbors(v)) {
            if (vs & (1ull << u)) continue;
            int c = assign[g.edge_index(Edge(v, u))];
            if (cs & (1ull << c)) continue;
            stack.push_back(u);
            seen_vertices.push_back(vs | (1ull << u));
            seen_colors.push_back(cs | (1ull << c));
        }
    }
    return false;
}

bool brute_all_pairs(const Graph& g, const std::vector<int>& assign) {
    for (int s = 0; s < g.vertex_count(); ++s)
        for (int t = s + 1; t < g.vertex_count(); ++t)
            if (!brute_pair_connected(g, assign, s, t)) return false;
    return true;
}

int brute_rc(const Graph& g) {
    int m = g.edge_count();
    for (int k = 1; k <= m; ++k) {
        std::vector<int> assign(m, 1);
        while (true) {
            if (brute_all_pairs(g, assign)) return k;
            int i = 0;
            while (i < m && assign[i] == k) assign[i++] = 1;
            if (i == m) break;
            ++assign[i];
        }
    }
    return m;
}

// deterministic random tree: vertex v >= 1 hangs off a previously placed vertex
Graph random_tree(int n, std::uint64_t seed) {
    std::uint64_t state = seed * 6364136223846793005ull + 1442695040888963407ull;
    auto next = [&state]() {
        state = state * 6364136223846793005ull + 1442695040888963407ull;
        return state >> 33;
    };
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v) edges.emplace_back(static_cast<int>(next() % v), v);
    return Graph::build(n, edges);
}

// ---- the checks ----

Outcome check_clique_path_tightness() {
    int instances = 0;
    for (int t : {2, 3, 4}) {
        for (int s : {2, 5, 10}) {
            Graph g = make_clique_path(t, s);
            ColoringCertificate cert = rainbow_color_bounded(g);
            std::ostringstream tag;
            tag << "clique-path(" << t << "," << s << ")";
            if (!cert.verdict.connected || !is_rainbow_connected(g, cert.coloring).connected)
                return {false, tag.str() + " failed verification"};
            if (cert.palette_size > 2 * t - 1)
                return {false, tag.str() + " palette " + std::to_string(cert.palette_size) +
                                   " over " + std::to_string(2 * t - 1)};
            if (diameter(g) != 2 * t - 1)
                return {false, tag.str() + " diameter " + std::to_string(diameter(g))};
            int alpha = independence_number(g).alpha;
            if (alpha != t)
                return {false, tag.str() + " independence number " + std::to_string(alpha)};
            if (t == 2) {
                int rc = rc_exact_with_upper(g, cert.palette_size);
                if (rc != 3 || cert.palette_size != 3)
                    return {false, tag.str() + " rc " + std::to_string(rc) + ", palette " +
                                       std::to_string(cert.palette_size) + ", wanted 3 = 3"};
            }
            roster.push_back({tag.str(), g, cert.palette_size});
            ++instances;
        }
    }
    return {true, std::to_string(instances) +
                      " instances: palette = diameter = 2t-1, independent witness of size t"};
}

Outcome check_clique_chain_tightness() {
    int instances = 0;
    for (int t : {2, 3}) {
        for (int s : {2, 4}) {
            Graph g = make_clique_chain(t, s);
            ColoringCertificate cert = rainbow_color_bounded(g);
            std::ostringstream tag;
            tag << "clique-chain(" << t << "," << s << ")";
            if (!cert.verdict.connected || !is_rainbow_connected(g, cert.coloring).connected)
                return {false, tag.str() + " failed verification"};
            if (cert.palette_size > 2 * t - 1)
                return {false, tag.str() + " palette " + std::to_string(cert.palette_size) +
                                   " over " + std::to_string(2 * t - 1)};
            if (diameter(g) != 2 * t - 1)
                return {false, tag.str() + " diameter " + std::to_string(diameter(g))};
            int alpha = independence_number(g).alpha;
            if (alpha != t)
                return {false, tag.str() + " independence number " + std::to_string(alpha)};
            roster.push_back({tag.str(), g, cert.palette_size});
            ++instances;
        }
    }
    return {true, std::to_string(instances) + " instances: palette <= 2t-1 with equality bounds met"};
}

Outcome check_two_hub_looseness() {
    // the bound 2*alpha-1 grows linearly while the exact optimum is expected
    // to sit at three colors across the whole sweep
    std::ostringstream rcs;
    bool ok = true;
    for (int s = 4; s <= 8; ++s) {
        Graph g = make_double_star(s);
        int rc = rc_exact(g).rc;
        int alpha = independence_number(g).alpha;
        ColoringCertificate cert = rainbow_color_bounded(g);
        roster.push_back({"two-hub(" + std::to_string(s) + ")", g, cert.palette_size});
        rcs << " s=" << s << ":rc=" << rc;
        if (rc != 3 || alpha != s) ok = false;
    }
    return {ok, "expected rc=3 across s=4..8, got" + rcs.str() +
                    " (two hub-color pairs already cover four leaves, so three colors are only "
                    "forced from s=5 on)"};
}

Outcome check_random_certificates() {
    int solved = 0;
    for (std::uint64_t seed = 1; solved < 200; ++seed) {
        int n = 4 + static_cast<int>(seed % 9);
        double p = 0.20 + 0.05 * static_cast<double>(seed % 5);
        Graph g = make_random_connected(n, p, seed);
        ColoringCertificate cert = rainbow_color_bounded(g);
        if (!is_rainbow_connected(g, cert.coloring).connected)
            return {false, "seed " + std::to_string(seed) + ": coloring not rainbow connected"};
        if (!witness_independent(g, cert.witness))
            return {false, "seed " + std::to_string(seed) + ": witness not independent"};
        int alpha = independence_number(g).alpha;
        if (cert.palette_size > 2 * alpha - 1)
            return {false, "seed " + std::to_string(seed) + ": palette " +
                               std::to_string(cert.palette_size) + " exceeds " +
                               std::to_string(2 * alpha - 1)};
        if (solved < 60)
            roster.push_back({"random(seed=" + std::to_string(seed) + ")", g, cert.palette_size});
        ++solved;
    }
    return {true, "200 random connected graphs (n <= 12): every certificate verifies and the "
                  "palette never exceeds twice the exact independence number minus one"};
}

Outcome check_extension_arithmetic() {
    int done = 0;
    for (std::uint64_t seed = 1; done < 50; ++seed) {
        int n = 5 + static_cast<int>(seed % 8);
        Graph g = make_random_connected(n, 0.35, seed);
        if (g.min_degree() < 2 || g.is_complete()) continue;
        DominatingTree dt = build_dominating_tree(g);
        EdgeColoring inner = tree_distinct_coloring(g, dt.dom, dt.tree);
        EdgeColoring ext = extend_from_dominating_set(g, dt.dom, inner);
        if (ext.k != inner.k + 3)
            return {false, "seed " + std::to_string(seed) + ": declared " +
                               std::to_string(ext.k) + ", wanted " + std::to_string(inner.k + 3)};
        if (!is_rainbow_connected(g, ext).connected)
            return {false, "seed " + std::to_string(seed) + ": extension not rainbow connected"};
        ++done;
    }
    return {true, "50 dominating-set extensions verify with exactly three fresh colors each"};
}

Outcome check_blow_up_invariance() {
    int rc_same = 0;
    int alpha_same = 0;
    int collected = 0;
    std::ostringstream drift;
    for (std::uint64_t seed = 1; collected < 30; ++seed) {
        int n = 5 + static_cast<int>(seed % 4);
        Graph g = make_random_connected(n, 0.30, seed);
        std::vector<Edge> cuts = find_bridges(g);
        if (cuts.empty()) continue;
        BlowUpResult blown = blow_up(g, cuts.front(), 1);
        int rc_before = rc_exact(g).rc;
        int rc_after = rc_exact(blown.graph).rc;
        int a_before = independence_number(g).alpha;
        int a_after = independence_number(blown.graph).alpha;
        if (rc_before == rc_after) ++rc_same;
        if (a_before == a_after)
            ++alpha_same;
        else if (drift.tellp() == 0)
            drift << " (first drift at seed " << seed << ": " << a_before << " -> " << a_after
                  << ")";
        ++collected;
    }
    bool ok = rc_same == 30 && alpha_same == 30;
    return {ok, "single-edge blow-up at the first bridge: rc preserved " + std::to_string(rc_same) +
                    "/30, independence number preserved " + std::to_string(alpha_same) + "/30" +
                    drift.str() +
                    (ok ? "" : "; an interior bridge can enlarge a maximum independent set, so "
                               "exact invariance does not hold in general")};
}

Outcome check_oracle_baselines() {
    for (int n = 2; n <= 6; ++n) {
        int rc = rc_exact(make_complete(n)).rc;
        if (rc != 1)
            return {false, "complete graph on " + std::to_string(n) + ": rc " + std::to_string(rc)};
    }
    for (int n = 4; n <= 8; ++n) {
        Graph c = make_cycle(n);
        int rc = rc_exact(c).rc;
        int ref = brute_rc(c);
        if (rc != ref)
            return {false, "cycle " + std::to_string(n) + ": oracle " + std::to_string(rc) +
                               " vs brute force " + std::to_string(ref)};
        if (rc > (n + 1) / 2)
            return {false, "cycle " + std::to_string(n) + ": rc " + std::to_string(rc) +
                               " above ceil(n/2)"};
    }
    int trees = 0;
    for (int n = 2; n <= 7; ++n) {
        std::vector<Graph> shapes;
        shapes.push_back(make_path(n));
        if (n >= 3) {
            std::vector<std::pair<int, int>> star_edges;
            for (int v = 1; v < n; ++v) star_edges.emplace_back(0, v);
            shapes.push_back(Graph::build(n, star_edges));
        }
        if (n >= 5)
            for (std::uint64_t seed : {11, 12, 13}) shapes.push_back(random_tree(n, seed));
        for (const Graph& t : shapes) {
            int rc = rc_exact(t).rc;
            if (rc != n - 1)
                return {false, "tree on " + std::to_string(n) + " vertices: rc " +
                                   std::to_string(rc) + ", wanted " + std::to_string(n - 1)};
            if (brute_rc(t) != n - 1)
                return {false, "tree on " + std::to_string(n) + " vertices: brute force disagrees"};
            ++trees;
        }
    }
    return {true, "complete graphs rc=1, cycles match brute force under ceil(n/2), " +
                      std::to_string(trees) + " trees at rc = edge count"};
}

Outcome check_cover_chain() {
    int checked = 0;
    for (const SolvedInstance& inst : roster) {
        int alpha = independence_number(inst.graph).alpha;
        int cover = clique_cover_number(inst.graph);
        if (inst.palette > 2 * alpha - 1)
            return {false, inst.name + ": palette " + std::to_string(inst.palette) + " > " +
                               std::to_string(2 * alpha - 1)};
        if (2 * alpha - 1 > 2 * cover - 1)
            return {false, inst.name + ": independence bound above clique-cover bound"};
        ++checked;
    }
    return {true, std::to_string(checked) +
                      " solved instances satisfy palette <= 2a-1 <= 2(cover)-1"};
}

} // namespace

int main() {
    int failures = 0;
    failures += run_check("clique-path tightness", 10, check_clique_path_tightness);
    failures += run_check("clique-chain tightness", 10, check_clique_chain_tightness);
    failures += run_check("two-hub looseness", 60, check_two_hub_looseness);
    failures += run_check("random certificate sweep", 120, check_random_certificates);
    failures += run_check("dominating-set extension arithmetic", 30, check_extension_arithmetic);
    failures += run_check("bridge blow-up invariance", 120, check_blow_up_invariance);
    failures += run_check("exact oracle baselines", 120, check_oracle_baselines);
    failures += run_check("palette and cover chain", 120, check_cover_chain);
    std::cout << (failures == 0 ? "all checks passed"
                                : std::to_string(failures) + " check(s) failed")
              << "\n";
    return failures;
}
