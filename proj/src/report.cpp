#include "rainbow/report.hpp"

#include <algorithm>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "rainbow/errors.hpp"
#include "rainbow/oracles.hpp"
#include "rainbow/pipeline.hpp"
#include "rainbow/structure.hpp"

namespace rainbow {

BoundRow make_bound_row(const std::string& name, const Graph& g, const ReportOptions& opts) {
    BoundRow row;
    row.name = name;
    row.n = g.vertex_count();
    row.e = g.edge_count();
    row.min_deg = g.min_degree();
    row.diam = diameter(g);
    row.rad = radius(g);
    row.ceil_half = (row.n + 1) / 2;
    row.rad_bound = row.rad * (row.rad + 2);

    try {
        IndependenceResult res = independence_number(g, opts.alpha_budget);
        row.alpha = res.alpha;
        row.alpha_exact = true;
    } catch (const budget_exceeded& b) {
        row.alpha = static_cast<int>(b.lower);
        row.alpha_exact = false;
    }
    row.two_alpha = 2 * row.alpha - 1;

    ColoringCertificate cert = rainbow_color_bounded(g);
    row.k = cert.palette_size;
    row.route = cert.route;
    row.verified = cert.verdict.connected;
    row.budget_ok = cert.budget_ok;
    if (cert.route != "complete") row.tips = static_cast<int>(cert.witness.size());

    if (opts.with_rc) {
        try {
            row.rc = rc_exact_with_upper(g, row.k, opts.rc_budget);
            row.has_rc = true;
        } catch (const budget_exceeded&) {
            row.has_rc = false;
        }
    }
    if (opts.with_chibar) {
        try {
            row.two_chibar = 2 * clique_cover_number(g, opts.alpha_budget) - 1;
            row.has_chibar = true;
        } catch (const budget_exceeded&) {
            row.has_chibar = false;
        }
    }
    return row;
}

bool report_invariants_hold(const std::vector<BoundRow>& rows) {
    for (const BoundRow& r : rows) {
        if (!r.verified) return false;
        if (r.has_rc && (r.diam > r.rc || r.rc > r.k)) return false;
        if (r.alpha_exact && r.k > r.two_alpha) return false;
        if (r.alpha_exact && r.has_chibar && r.two_alpha > r.two_chibar) return false;
    }
    return true;
}

void write_report(std::ostream& out, const std::vector<BoundRow>& rows) {
    out << "rainbow-report v1\n";
    out << "columns name n e delta diam rad alpha alpha_exact tips k rc "
           "two_alpha two_chibar three_quarters_n ceil_half rad_bound route "
           "verified budget_ok\n";
    for (const BoundRow& r : rows) {
        out << "row " << r.name << ' ' << r.n << ' ' << r.e << ' ' << r.min_deg << ' '
            << r.diam << ' ' << r.rad << ' ' << r.alpha << ' ' << (r.alpha_exact ? 1 : 0)
            << ' ' << r.tips << ' ' << r.k << ' ';
        if (r.has_rc) out << r.rc;
        else out << '-';
        out << ' ' << r.two_alpha << ' ';
        if (r.has_chibar) out << r.two_chibar;
        else out << '-';
        std::ostringstream q;
        q << std::fixed << std::setprecision(2) << (3.0 * r.n / 4.0);
        out << ' ' << q.str() << ' ' << r.ceil_half << ' ' << r.rad_bound << ' ' << r.route
            << ' ' << (r.verified ? 1 : 0) << ' ' << (r.budget_ok ? 1 : 0) << "\n";
    }
    out << "footer rows=" << rows.size()
        << " invariants_ok=" << (report_invariants_hold(rows) ? 1 : 0) << "\n";
}

std::vector<BoundRow> read_report(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || line != "rainbow-report v1")
        throw std::invalid_argument("report: unknown header: " + line);
    if (!std::getline(in, line) || line.rfind("columns ", 0) != 0)
        throw std::invalid_argument("report: missing columns line");
    std::vector<BoundRow> rows;
    while (std::getline(in, line)) {
        if (line.rfind("footer ", 0) == 0) break;
        std::istringstream ss(line);
        std::string tag;
        ss >> tag;
        if (tag != "row") throw std::invalid_argument("report: expected row line: " + line);
        BoundRow r;
        std::string rc_s, chibar_s, quarters_s;
        int alpha_exact = 0, verified = 0, budget_ok = 0;
        if (!(ss >> r.name >> r.n >> r.e >> r.min_deg >> r.diam >> r.rad >> r.alpha >>
              alpha_exact >> r.tips >> r.k >> rc_s >> r.two_alpha >> chibar_s >> quarters_s >>
              r.ceil_half >> r.rad_bound >> r.route >> verified >> budget_ok))
            throw std::invalid_argument("report: malformed row: " + line);
        r.alpha_exact = alpha_exact != 0;
        r.verified = verified != 0;
        r.budget_ok = budget_ok != 0;
        if (rc_s != "-") { r.has_rc = true; r.rc = std::stoi(rc_s); }
        if (chibar_s != "-") { r.has_chibar = true; r.two_chibar = std::stoi(chibar_s); }
        rows.push_back(std::move(r));
    }
    return rows;
}

void print_report_table(std::ostream& out, const std::vector<BoundRow>& rows) {
    out << std::left << std::setw(18) << "name" << std::right << std::setw(5) << "n"
        << std::setw(6) << "e" << std::setw(4) << "d" << std::setw(6) << "diam" << std::setw(5)
        << "rad" << std::setw(7) << "alpha" << std::setw(5) << "|Y|" << std::setw(4) << "k"
        << std::setw(5) << "rc" << std::setw(7) << "2a-1" << std::setw(7) << "2cc-1"
        << std::setw(7) << "3n/4" << std::setw(6) << "n/2^" << std::setw(9) << "r(r+2)"
        << "  " << std::left << std::setw(35) << "route" << "ok\n";
    for (const BoundRow& r : rows) {
        std::string alpha_s = (r.alpha_exact ? "" : ">=") + std::to_string(r.alpha);
        out << std::left << std::setw(18) << r.name << std::right << std::setw(5) << r.n
            << std::setw(6) << r.e << std::setw(4) << r.min_deg << std::setw(6) << r.diam
            << std::setw(5) << r.rad << std::setw(7) << alpha_s << std::setw(5) << r.tips
            << std::setw(4) << r.k << std::setw(5) << (r.has_rc ? std::to_string(r.rc) : "-")
            << std::setw(7) << r.two_alpha << std::setw(7)
            << (r.has_chibar ? std::to_string(r.two_chibar) : "-");
        std::ostringstream q;
        q << std::fixed << std::setprecision(2) << (3.0 * r.n / 4.0);
        out << std::setw(7) << q.str() << std::setw(6) << r.ceil_half << std::setw(9)
            << r.rad_bound << "  " << std::left << std::setw(34) << r.route << ' '
            << (r.verified ? "yes" : "NO") << "\n";
    }
    out << (report_invariants_hold(rows) ? "all bound invariants hold"
                                         : "BOUND INVARIANT VIOLATION")
        << " across " << rows.size() << " rows\n";
}

} // namespace rainbow
