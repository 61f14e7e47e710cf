#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "rainbow/graph.hpp"

namespace rainbow {

// One graph's worth of bound bookkeeping: the constructed palette size next
// to the exact quantities and the classical comparison bounds.
struct BoundRow {
    std::string name;
    int n = 0;
    int e = 0;
    int min_deg = 0;
    int diam = 0;
    int rad = 0;
    int alpha = 0;           // exact, or best proven lower bound
    bool alpha_exact = true; // false when the oracle budget ran out
    int tips = 0;            // certificate witness size (0 on the complete route)
    int k = 0;               // constructed palette size
    bool has_rc = false;
    int rc = 0;
    int two_alpha = 0; // 2*alpha - 1
    bool has_chibar = false;
    int two_chibar = 0; // 2*cliquecover - 1
    int ceil_half = 0;  // ceil(n/2)
    int rad_bound = 0;  // rad*(rad+2)
    std::string route;
    bool verified = false;
    bool budget_ok = false;
};

struct ReportOptions {
    bool with_rc = false;
    bool with_chibar = false;
    std::uint64_t alpha_budget = 50'000'000;
    std::uint64_t rc_budget = 80'000'000;
};

// Runs the constructive pipeline and the requested oracles on one graph.
// Oracle budget exhaustion degrades the row (alpha_exact=false / has_rc=false)
// instead of failing it.
BoundRow make_bound_row(const std::string& name, const Graph& g, const ReportOptions& opts);

// diam <= rc <= k <= 2a-1 <= 2cc-1 on every row, skipping absent entries.
bool report_invariants_hold(const std::vector<BoundRow>& rows);

// Structured, versioned, line-oriented serialization ("rainbow-report v1").
void write_report(std::ostream& out, const std::vector<BoundRow>& rows);
std::vector<BoundRow> read_report(std::istream& in);

// Human-readable aligned table with an invariant footer.
void print_report_table(std::ostream& out, const std::vector<BoundRow>& rows);

} // namespace rainbow
