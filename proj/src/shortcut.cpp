#include "rainbow/shortcut.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>

#include "rainbow/errors.hpp"
#include "rainbow/oracles.hpp"
#include "rainbow/structure.hpp"

namespace rainbow {

namespace {

bool pairwise_independent(const Graph& g, const std::vector<int>& members) {
    for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = i + 1; j < members.size(); ++j)
            if (g.adjacent(members[i], members[j])) return false;
    return true;
}

bool accepted(const Graph& g, std::vector<int>& cand, int want) {
    std::sort(cand.begin(), cand.end());
    if (std::adjacent_find(cand.begin(), cand.end()) != cand.end()) return false;
    if (static_cast<int>(cand.size()) != want) return false;
    return pairwise_independent(g, cand);
}

// Path-merge candidate without a consecutive-mid segment: mids on the tree
// path between the two anchor tips come in, tips on the path go out.
std::optional<std::vector<int>> plain_candidate(const DominatingTree& dt,
                                                const std::vector<int>& base, int y, int yp) {
    std::vector<int> path = dt.tree_path(y, yp);
    for (std::size_t i = 0; i + 1 < path.size(); ++i)
        if (dt.is_mid(path[i]) && dt.is_mid(path[i + 1])) return std::nullopt;
    std::vector<int> cand = base;
    std::set<int> path_tips;
    for (int v : path) {
        if (dt.is_mid(v)) cand.push_back(v);
        else path_tips.insert(v);
    }
    for (int t : dt.tips)
        if (!path_tips.count(t)) cand.push_back(t);
    return cand;
}

// Knot-segment candidate: walk from the near anchor up to (but excluding) the
// first pair of consecutive mids; mids of that segment come in, its tips go
// out.  `drop_far` additionally expels the far anchor tip, which the segment
// never reaches.
std::optional<std::vector<int>> knot_candidate(const DominatingTree& dt,
                                               const std::vector<int>& base, int y, int yp,
                                               bool drop_far) {
    std::vector<int> path = dt.tree_path(y, yp);
    std::size_t cut = path.size();
    for (std::size_t i = 0; i + 1 < path.size(); ++i)
        if (dt.is_mid(path[i]) && dt.is_mid(path[i + 1])) { cut = i; break; }
    if (cut == path.size()) return std::nullopt;
    std::vector<int> cand = base;
    std::set<int> expelled_tips;
    if (drop_far) expelled_tips.insert(yp);
    for (std::size_t j = 0; j <= cut; ++j) {
        int v = path[j];
        if (dt.is_mid(v)) cand.push_back(v);
        else expelled_tips.insert(v);
    }
    for (int t : dt.tips)
        if (!expelled_tips.count(t)) cand.push_back(t);
    return cand;
}

// Exact fallback: the claimed set, if it exists, lives inside the dominating
// set plus the chosen pair, so a branch-and-bound run on that small induced
// subgraph settles the claim either way.
std::optional<std::vector<int>> pool_search(const Graph& g, const std::vector<int>& dom,
                                             int w, int wp, int want) {
    std::vector<int> pool = dom;
    pool.push_back(w);
    pool.push_back(wp);
    std::sort(pool.begin(), pool.end());
    pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
    std::map<int, int> to_local;
    for (std::size_t i = 0; i < pool.size(); ++i) to_local[pool[i]] = static_cast<int>(i);
    std::vector<std::pair<int, int>> edges;
    for (std::size_t i = 0; i < pool.size(); ++i)
        for (std::size_t j = i + 1; j < pool.size(); ++j)
            if (g.adjacent(pool[i], pool[j]))
                edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
    Graph sub = Graph::build(static_cast<int>(pool.size()), edges);
    IndependenceResult res;
    try {
        res = independence_number(sub, 4'000'000);
    } catch (const budget_exceeded&) {
        return std::nullopt;
    }
    if (res.alpha < want) return std::nullopt;
    std::vector<int> cand;
    for (int local : res.witness) cand.push_back(pool[local]);
    std::sort(cand.begin(), cand.end());
    while (static_cast<int>(cand.size()) > want) cand.pop_back();
    return cand;
}

} // namespace

std::optional<EnlargedSet> find_enlarged_independent_set(const Graph& g,
                                                         const DominatingTree& dt,
                                                         const NeighborhoodPartition& part) {
    const int want = static_cast<int>(dt.tips.size()) + 1;
    std::vector<int> outside;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!dt.in_dom(v)) outside.push_back(v);

    auto tip_degree = [&](int v) {
        int c = 0;
        for (int u : g.neighbors(v))
            if (dt.is_tip(u)) ++c;
        return c;
    };

    // A vertex with no tip neighbor joins the tips directly.
    for (int v : outside) {
        if (tip_degree(v) != 0) continue;
        std::vector<int> cand = dt.tips;
        cand.push_back(v);
        if (!accepted(g, cand, want))
            throw verification_failure("enlargement.detached-vertex", {v, v},
                                       "tip set plus a tip-free vertex failed the "
                                       "independence re-check");
        return EnlargedSet{cand, "detached-vertex"};
    }

    const bool tree_case =
        induced_edges(g, dt.dom).size() == dt.dom.size() - 1;

    auto try_pair_with_paths = [&](int w, int wp, int y, int yp, bool twin,
                                   const char* branch) -> std::vector<int> {
        std::vector<std::optional<std::vector<int>>> cands;
        if (y == yp) {
            cands.push_back(plain_candidate(dt, {w, wp}, y, yp));
        } else {
            cands.push_back(plain_candidate(dt, {w, wp}, y, yp));
            if (twin) {
                cands.push_back(knot_candidate(dt, {w, wp}, y, yp, true));
                cands.push_back(knot_candidate(dt, {w, wp}, yp, y, true));
            } else {
                cands.push_back(knot_candidate(dt, {w}, y, yp, false));
                cands.push_back(knot_candidate(dt, {wp}, yp, y, false));
            }
        }
        cands.push_back(pool_search(g, dt.dom, w, wp, want));
        for (auto& c : cands) {
            if (!c) continue;
            std::vector<int> cand = *c;
            if (accepted(g, cand, want)) return cand;
        }
        throw verification_failure(std::string("enlargement.") + branch, {w, wp},
                                   "no candidate construction for the pair survived the "
                                   "independence re-check");
    };

    if (tree_case) {
        // Two non-adjacent vertices with exactly one set edge each, landing
        // on tips.
        std::vector<int> bcand = part.b1;
        bcand.insert(bcand.end(), part.b2.begin(), part.b2.end());
        bcand.insert(bcand.end(), part.b3.begin(), part.b3.end());
        std::sort(bcand.begin(), bcand.end());
        for (std::size_t i = 0; i < bcand.size(); ++i) {
            for (std::size_t j = i + 1; j < bcand.size(); ++j) {
                int w = bcand[i], wp = bcand[j];
                if (g.adjacent(w, wp)) continue;
                int y = part.anchor.at(w).first;
                int yp = part.anchor.at(wp).first;
                std::vector<int> cand = try_pair_with_paths(w, wp, y, yp, false, "pendant-pair");
                return EnlargedSet{cand, "pendant-pair"};
            }
        }

        // Two non-adjacent vertices whose set neighborhoods are the same two
        // tips.
        std::map<int, std::pair<int, int>> twin_anchor;
        std::vector<int> twins;
        for (int v : outside) {
            std::vector<int> in_d;
            for (int u : g.neighbors(v))
                if (dt.in_dom(u)) in_d.push_back(u);
            if (in_d.size() != 2) continue;
            if (!dt.is_tip(in_d[0]) || !dt.is_tip(in_d[1])) continue;
            twin_anchor[v] = {in_d[0], in_d[1]};
            twins.push_back(v);
        }
        for (std::size_t i = 0; i < twins.size(); ++i) {
            for (std::size_t j = i + 1; j < twins.size(); ++j) {
                int w = twins[i], wp = twins[j];
                if (twin_anchor[w] != twin_anchor[wp]) continue;
                if (g.adjacent(w, wp)) continue;
                int y = twin_anchor[w].first;
                int yp = twin_anchor[w].second;
                std::vector<int> cand = try_pair_with_paths(w, wp, y, yp, true, "twin-pair");
                return EnlargedSet{cand, "twin-pair"};
            }
        }
    }

    // Two non-adjacent outside vertices whose tip neighborhoods union to a
    // single tip: trade that tip for the pair.
    for (std::size_t i = 0; i < outside.size(); ++i) {
        for (std::size_t j = i + 1; j < outside.size(); ++j) {
            int w = outside[i], wp = outside[j];
            if (g.adjacent(w, wp)) continue;
            std::set<int> shared;
            for (int u : g.neighbors(w))
                if (dt.is_tip(u)) shared.insert(u);
            for (int u : g.neighbors(wp))
                if (dt.is_tip(u)) shared.insert(u);
            if (shared.size() != 1) continue;
            std::vector<int> cand = {w, wp};
            for (int t : dt.tips)
                if (!shared.count(t)) cand.push_back(t);
            if (!accepted(g, cand, want))
                throw verification_failure("enlargement.pair-cover", {w, wp},
                                           "tip trade for a single-cover pair failed the "
                                           "independence re-check");
            return EnlargedSet{cand, "pair-cover"};
        }
    }

    return std::nullopt;
}

} // namespace rainbow
