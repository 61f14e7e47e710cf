#include "rainbow/pipeline.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>

#include "rainbow/casework.hpp"
#include "rainbow/dominating_tree.hpp"
#include "rainbow/errors.hpp"
#include "rainbow/extension.hpp"
#include "rainbow/oracles.hpp"
#include "rainbow/shortcut.hpp"

namespace rainbow {

namespace {

// Bounded deterministic recoloring: nudge non-tree edges incident to a
// violating pair until the verifier is satisfied, never changing the palette
// size.  Accepts only strict drops in the violation count, so it terminates.
bool repair_coloring_avoiding(const Graph& g, const std::set<Edge>& tree_set,
                              EdgeColoring& col) {
    const int rounds_cap = 32;
    for (int round = 0; round < rounds_cap; ++round) {
        RainbowVerdict verdict = is_rainbow_connected(g, col);
        if (verdict.connected) return true;
        const std::size_t cur = verdict.violations.size();

        std::set<int> hot;
        for (const auto& [a, b] : verdict.violations) { hot.insert(a); hot.insert(b); }
        std::vector<Edge> cand;
        for (const Edge& e : g.edges())
            if (!tree_set.count(e) && (hot.count(e.u) || hot.count(e.v)))
                cand.push_back(e);

        bool improved = false;
        for (const Edge& e : cand) {
            const int orig = col.color_of(e);
            for (int c = 1; c <= col.k && !improved; ++c) {
                if (c == orig) continue;
                col.assign(e, c);
                RainbowVerdict trial = is_rainbow_connected(g, col);
                if (trial.violations.size() < cur) improved = true;
            }
            if (improved) break;
            col.assign(e, orig);
        }
        if (improved) continue;

        long long attempts = 0;
        const long long attempts_cap = 20'000;
        for (std::size_t i = 0; i < cand.size() && !improved; ++i) {
            for (std::size_t j = i + 1; j < cand.size() && !improved; ++j) {
                const int oi = col.color_of(cand[i]);
                const int oj = col.color_of(cand[j]);
                for (int ci = 1; ci <= col.k && !improved; ++ci) {
                    for (int cj = 1; cj <= col.k && !improved; ++cj) {
                        if (ci == oi && cj == oj) continue;
                        if (++attempts > attempts_cap) break;
                        col.assign(cand[i], ci);
                        col.assign(cand[j], cj);
                        RainbowVerdict trial = is_rainbow_connected(g, col);
                        if (trial.violations.size() < cur) improved = true;
                    }
                    if (attempts > attempts_cap) break;
                }
                if (!improved) {
                    col.assign(cand[i], oi);
                    col.assign(cand[j], oj);
                }
                if (attempts > attempts_cap) break;
            }
            if (attempts > attempts_cap) break;
        }
        if (!improved) return false;
    }
    return is_rainbow_connected(g, col).connected;
}

bool repair_coloring(const Graph& g, const DominatingTree& dt, EdgeColoring& col) {
    return repair_coloring_avoiding(g, std::set<Edge>(dt.tree.begin(), dt.tree.end()), col);
}

ColoringCertificate complete_certificate(const Graph& g) {
    ColoringCertificate cert;
    EdgeColoring col;
    for (const Edge& e : g.edges()) col.assign(e, 1);
    col.k = g.edge_count() > 0 ? 1 : 0;
    col.refresh_surjectivity();
    cert.coloring = col;
    cert.palette_size = col.k;
    cert.witness = {0};
    cert.route = "complete";
    cert.verdict = is_rainbow_connected(g, col);
    cert.budget_ok = col.k <= 1;
    return cert;
}

// The dominating-tree construction on a connected non-complete graph with
// minimum degree two (bridges are fine).  Witness and coloring live on g.
ColoringCertificate run_machinery(const Graph& g) {
    ColoringCertificate cert;
    DominatingTree dt = build_dominating_tree(g);
    std::vector<int> path = longest_pendant_path(dt);
    NeighborhoodPartition part = classify_neighborhood(g, dt, path);

    if (auto enlarged = find_enlarged_independent_set(g, dt, part)) {
        EdgeColoring inner = tree_distinct_coloring(g, dt.dom, dt.tree);
        EdgeColoring full = extend_from_dominating_set(g, dt.dom, inner);
        cert.coloring = full;
        cert.palette_size = full.k;
        cert.witness = enlarged->members;
        cert.route = "lemma-shortcut." + enlarged->branch;
        return cert;
    }

    const bool has_chord = induced_edges(g, dt.dom).size() > dt.dom.size() - 1;
    try {
        cert = has_chord ? case1_coloring(g, dt, part) : case2_coloring(g, dt, path, part);
    } catch (const verification_failure& vf) {
        if (!vf.attempt) throw;
        EdgeColoring col = *vf.attempt;
        if (!repair_coloring(g, dt, col)) throw;
        cert.coloring = col;
        cert.palette_size = col.k;
        cert.witness = dt.tips;
        std::sort(cert.witness.begin(), cert.witness.end());
        cert.route = vf.route + "+repair";
        cert.fallback_used = true;
    }
    return cert;
}

// Replace helper vertices in the witness by bridge endpoints, keeping the set
// independent in the original graph.  Falls back to the exact oracle if no
// assignment of endpoints works; throws when even that cannot reach the size
// the helper-graph witness promised (the blow-up grew the independence
// number, which genuinely happens at non-pendant bridges).
std::vector<int> restore_witness(const Graph& g, const std::vector<int>& witness,
                                 const std::vector<BlowUp>& records, bool& used_oracle) {
    std::map<int, Edge> owner;
    for (const BlowUp& r : records)
        for (int a : r.added) owner.emplace(a, r.bridge);

    std::vector<int> fixed;
    std::vector<Edge> todo;
    for (int v : witness) {
        auto it = owner.find(v);
        if (it == owner.end()) fixed.push_back(v);
        else todo.push_back(it->second);
    }
    if (todo.empty()) return witness;

    std::vector<int> chosen;
    std::function<bool(std::size_t)> grow = [&](std::size_t i) {
        if (i == todo.size()) return true;
        for (int r : {todo[i].u, todo[i].v}) {
            bool ok = std::find(fixed.begin(), fixed.end(), r) == fixed.end() &&
                      std::find(chosen.begin(), chosen.end(), r) == chosen.end();
            for (int x : fixed)
                if (ok && g.adjacent(r, x)) ok = false;
            for (int x : chosen)
                if (ok && g.adjacent(r, x)) ok = false;
            if (!ok) continue;
            chosen.push_back(r);
            if (grow(i + 1)) return true;
            chosen.pop_back();
        }
        return false;
    };
    if (grow(0)) {
        std::vector<int> out = fixed;
        out.insert(out.end(), chosen.begin(), chosen.end());
        std::sort(out.begin(), out.end());
        return out;
    }

    used_oracle = true;
    const std::size_t want = witness.size();
    try {
        IndependenceResult res = independence_number(g);
        if (res.witness.size() < want)
            throw verification_failure("witness-restore", {-1, -1},
                                       "the helper-graph witness exceeds the graph's own "
                                       "independence number");
        return res.witness;
    } catch (const budget_exceeded&) {
        throw verification_failure("witness-restore", {-1, -1},
                                   "independent-set oracle ran out of budget while replacing "
                                   "helper vertices in the witness");
    }
}

// Blow every pendant edge into a triangle, color the helper graph (now of
// minimum degree two), restrict the coloring back, and map the witness home.
// Throws verification_failure when any stage cannot be completed faithfully.
ColoringCertificate blowup_route(const Graph& g) {
    BridgePreprocess pre = preprocess_bridges(g);
    const Graph& work = pre.graph;
    ColoringCertificate cert = run_machinery(work);

    EdgeColoring restricted;
    restricted.k = cert.coloring.k;
    for (const Edge& e : g.edges()) restricted.assign(e, cert.coloring.color_of(e));
    restricted.refresh_surjectivity();
    if (!is_rainbow_connected(g, restricted).connected) {
        // First try to fix the lost pairs inside the existing palette; only
        // if that fails, give every former pendant edge its own fresh color
        // (any connecting path that used a helper vertex maps back onto it).
        if (repair_coloring_avoiding(g, {}, restricted)) {
            cert.route += "+repair";
        } else {
            for (const BlowUp& r : pre.records) restricted.assign(r.bridge, ++restricted.k);
            restricted.refresh_surjectivity();
            RainbowVerdict after = is_rainbow_connected(g, restricted);
            if (!after.connected)
                throw verification_failure(
                    cert.route + "+bridge-restore", after.violations.front(),
                    "restriction to the pendant graph failed even with fresh edge colors");
        }
        cert.fallback_used = true;
    }
    cert.coloring = restricted;
    cert.palette_size = restricted.k;

    bool used_oracle = false;
    cert.witness = restore_witness(g, cert.witness, pre.records, used_oracle);
    if (used_oracle) cert.fallback_used = true;

    cert.verdict = is_rainbow_connected(g, cert.coloring);
    if (!cert.verdict.connected)
        throw verification_failure(cert.route, cert.verdict.violations.front(),
                                   "restricted certificate failed verification");
    cert.budget_ok = cert.palette_size <= 2 * static_cast<int>(cert.witness.size()) - 1;
    return cert;
}

// Pendant peeling: strip degree-1 vertices down to a core with minimum degree
// two (or a single vertex), color the core, then give each peeled edge its
// own fresh color.  Any two peeled vertices that are adjacent in g were
// parent and child at peel time, so the greedy witness below is independent:
// a chosen pendant kills its parent, and core-witness vertices survive only
// if no chosen pendant hangs off them.
ColoringCertificate peel_route(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<char> removed(n, 0);
    std::vector<int> deg(n, 0);
    for (int v = 0; v < n; ++v) deg[v] = g.degree(v);

    std::vector<std::pair<int, int>> peel; // (vertex, parent) in peel order
    for (;;) {
        int v = -1;
        for (int u = 0; u < n; ++u)
            if (!removed[u] && deg[u] == 1) { v = u; break; }
        if (v < 0) break;
        int parent = -1;
        for (int u : g.neighbors(v))
            if (!removed[u]) { parent = u; break; }
        peel.emplace_back(v, parent);
        removed[v] = 1;
        --deg[v];
        --deg[parent];
    }
    const int p = static_cast<int>(peel.size());
    if (p == 0) throw std::logic_error("peel route invoked without pendant vertices");

    std::vector<int> core;
    for (int v = 0; v < n; ++v)
        if (!removed[v]) core.push_back(v);
    if (core.empty()) throw std::logic_error("peeling removed every vertex");

    // Color the core in compact ids.
    EdgeColoring col;
    int core_k = 0;
    std::vector<int> core_witness;
    std::string core_route;
    if (core.size() == 1) {
        core_route = "single";
        core_witness = {core[0]};
    } else {
        std::map<int, int> to_local;
        for (std::size_t i = 0; i < core.size(); ++i) to_local[core[i]] = static_cast<int>(i);
        std::vector<std::pair<int, int>> local_edges;
        for (const Edge& e : g.edges())
            if (!removed[e.u] && !removed[e.v])
                local_edges.emplace_back(to_local[e.u], to_local[e.v]);
        Graph core_g = Graph::build(static_cast<int>(core.size()), local_edges);
        ColoringCertificate inner =
            core_g.is_complete() ? complete_certificate(core_g) : run_machinery(core_g);
        core_k = inner.palette_size;
        core_route = inner.route;
        for (const auto& [e, c] : inner.coloring.colors)
            col.assign(Edge(core[e.u], core[e.v]), c);
        for (int w : inner.witness) core_witness.push_back(core[w]);
    }

    for (int i = 0; i < p; ++i)
        col.assign(Edge(peel[i].first, peel[i].second), core_k + 1 + i);
    col.k = core_k + p;
    col.refresh_surjectivity();

    std::vector<char> killed(n, 0);
    std::vector<int> members;
    for (const auto& [v, parent] : peel) {
        if (killed[v]) continue;
        members.push_back(v);
        killed[parent] = 1;
    }
    for (int w : core_witness)
        if (!killed[w]) members.push_back(w);
    std::sort(members.begin(), members.end());
    for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = i + 1; j < members.size(); ++j)
            if (g.adjacent(members[i], members[j]))
                throw std::logic_error("peel witness is not independent");

    ColoringCertificate cert;
    cert.coloring = col;
    cert.palette_size = col.k;
    cert.witness = members;
    cert.route = "pendant-peel." + core_route;
    cert.fallback_used = true;
    cert.verdict = is_rainbow_connected(g, col);
    if (!cert.verdict.connected)
        throw verification_failure(cert.route, cert.verdict.violations.front(),
                                   "peeled coloring failed verification");
    if (cert.palette_size > 2 * static_cast<int>(cert.witness.size()) - 1) {
        // The structural witness is too small; ask the exact oracle for the
        // best independent set before conceding the budget flag.
        try {
            IndependenceResult res = independence_number(g);
            if (res.witness.size() > cert.witness.size()) cert.witness = res.witness;
        } catch (const budget_exceeded&) {
        }
    }
    cert.budget_ok = cert.palette_size <= 2 * static_cast<int>(cert.witness.size()) - 1;
    return cert;
}

} // namespace

BridgePreprocess preprocess_bridges(const Graph& g) {
    if (!g.is_connected())
        throw std::invalid_argument("bridge preprocessing requires a connected graph");
    BridgePreprocess out;
    out.graph = g;
    // Only pendant edges are blown up.  They are always bridges, fixing them
    // lifts every degree-1 vertex to degree 2, and unlike an interior bridge
    // the triangle at a pendant edge cannot enlarge a maximum independent
    // set: a set using the helper vertex swaps it for the leaf.
    for (;;) {
        int leaf = -1;
        for (int v = 0; v < out.graph.vertex_count(); ++v)
            if (out.graph.degree(v) == 1) { leaf = v; break; }
        if (leaf < 0) break;
        BlowUpResult r = blow_up(out.graph, Edge(leaf, out.graph.neighbors(leaf).front()), 1);
        out.graph = r.graph;
        out.records.push_back(r.record);
    }
    return out;
}

ColoringCertificate rainbow_color_bounded(const Graph& g) {
    if (!g.is_connected())
        throw std::invalid_argument("bounded rainbow coloring requires a connected graph");

    if (g.is_complete()) return complete_certificate(g);

    if (g.min_degree() >= 2) {
        ColoringCertificate cert = run_machinery(g);
        cert.verdict = is_rainbow_connected(g, cert.coloring);
        if (!cert.verdict.connected)
            throw verification_failure(cert.route, cert.verdict.violations.front(),
                                       "final certificate failed verification");
        cert.budget_ok =
            cert.palette_size <= 2 * static_cast<int>(cert.witness.size()) - 1;
        return cert;
    }

    // Pendant vertices present.  Both constructions are attempted — the
    // helper-graph detour (primary) and pendant peeling — and the better
    // certificate wins: a kept budget beats a busted one, then the smaller
    // palette, with the detour taking ties.
    std::optional<ColoringCertificate> via_blowup;
    try {
        via_blowup = blowup_route(g);
    } catch (const verification_failure&) {
    }
    std::optional<ColoringCertificate> via_peel;
    std::optional<verification_failure> peel_error;
    try {
        via_peel = peel_route(g);
    } catch (const verification_failure& e) {
        peel_error = e;
    }
    if (!via_blowup && !via_peel) throw *peel_error;
    if (!via_blowup) return *via_peel;
    if (!via_peel) return *via_blowup;
    auto strictly_better = [](const ColoringCertificate& a, const ColoringCertificate& b) {
        if (a.budget_ok != b.budget_ok) return a.budget_ok;
        return a.palette_size < b.palette_size;
    };
    return strictly_better(*via_peel, *via_blowup) ? *via_peel : *via_blowup;
}

} // namespace rainbow
