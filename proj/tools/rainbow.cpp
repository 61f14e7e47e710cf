#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "rainbow/certificate.hpp"
#include "rainbow/coloring.hpp"
#include "rainbow/errors.hpp"
#include "rainbow/families.hpp"
#include "rainbow/graph.hpp"
#include "rainbow/oracles.hpp"
#include "rainbow/pipeline.hpp"
#include "rainbow/report.hpp"
#include "rainbow/structure.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitVerification = 3;
constexpr int kExitBudget = 4;

struct GenArgs {
    std::string family;
    int n = 0, t = 0, s = 0;
    double p = 0.0;
    std::uint64_t seed = 1;
    std::string output;
};

struct ColorArgs {
    std::string input;
    std::string output;
    std::string certificate;
};

struct VerifyArgs {
    std::string graph_path;
    std::string coloring_path;
};

struct ExactArgs {
    std::string input;
    std::string which = "all";
    std::uint64_t alpha_budget = 50'000'000;
    std::uint64_t rc_budget = 80'000'000;
};

struct ReportArgs {
    std::string sweep;
    std::vector<int> t_list, s_list, n_list;
    double p = 0.3;
    std::uint64_t seed = 1;
    std::string dir;
    std::string output;
    bool with_rc = false;
    bool with_chibar = false;
    std::uint64_t alpha_budget = 50'000'000;
    std::uint64_t rc_budget = 80'000'000;
};

int run_gen(const GenArgs& a) {
    std::map<std::string, double> params;
    if (a.n > 0) params["n"] = a.n;
    if (a.t > 0) params["t"] = a.t;
    if (a.s > 0) params["s"] = a.s;
    if (a.p > 0.0) params["p"] = a.p;
    params["seed"] = static_cast<double>(a.seed);
    rainbow::Graph g = rainbow::generate_family(a.family, params);
    if (a.output.empty()) {
        rainbow::write_edge_list(std::cout, g);
        std::cerr << "family=" << a.family << " n=" << g.vertex_count()
                  << " e=" << g.edge_count() << "\n";
    } else {
        rainbow::write_edge_list_file(a.output, g);
        std::cout << "family=" << a.family << " n=" << g.vertex_count()
                  << " e=" << g.edge_count() << " file=" << a.output << "\n";
    }
    return kExitOk;
}

int run_color(const ColorArgs& a) {
    rainbow::Graph g = rainbow::read_edge_list_file(a.input);
    if (!g.is_connected()) {
        std::cerr << "error: input graph is disconnected\n";
        return kExitUsage;
    }
    rainbow::ColoringCertificate cert = rainbow::rainbow_color_bounded(g);
    if (!a.output.empty()) rainbow::write_coloring_file(a.output, cert.coloring);
    if (!a.certificate.empty()) rainbow::write_certificate_file(a.certificate, cert);
    std::cout << "k=" << cert.palette_size << " route=" << cert.route
              << " verified=" << (cert.verdict.connected ? "true" : "false")
              << " budget_ok=" << (cert.budget_ok ? "true" : "false")
              << " witness_size=" << cert.witness.size() << "\n";
    return (cert.verdict.connected && cert.budget_ok) ? kExitOk : kExitVerification;
}

int run_verify(const VerifyArgs& a) {
    rainbow::Graph g = rainbow::read_edge_list_file(a.graph_path);
    rainbow::EdgeColoring col = rainbow::read_coloring_file(a.coloring_path);
    // Edge-set mismatch is a usage error, reported before the solver runs.
    std::vector<std::string> missing, extra;
    for (const rainbow::Edge& e : g.edges())
        if (col.color_of(e) == 0)
            missing.push_back(std::to_string(e.u) + "-" + std::to_string(e.v));
    for (const auto& [e, c] : col.colors)
        if (!g.adjacent(e.u, e.v))
            extra.push_back(std::to_string(e.u) + "-" + std::to_string(e.v));
    if (!missing.empty() || !extra.empty()) {
        for (const std::string& s : missing) std::cerr << "uncolored edge: " << s << "\n";
        for (const std::string& s : extra) std::cerr << "colored non-edge: " << s << "\n";
        return kExitUsage;
    }
    rainbow::RainbowVerdict v = rainbow::is_rainbow_connected(g, col);
    if (v.connected) {
        std::cout << "connected (all pairs joined by a rainbow path)\n";
        return kExitOk;
    }
    std::cout << "not rainbow connected; " << v.violations.size() << " violating pair(s):\n";
    for (const auto& [x, y] : v.violations) std::cout << "  " << x << " " << y << "\n";
    return kExitVerification;
}

int run_exact(const ExactArgs& a) {
    rainbow::Graph g = rainbow::read_edge_list_file(a.input);
    bool budget_hit = false;
    auto want = [&](const std::string& w) { return a.which == "all" || a.which == w; };
    if (want("alpha")) {
        try {
            rainbow::IndependenceResult r = rainbow::independence_number(g, a.alpha_budget);
            std::cout << "alpha=" << r.alpha << " witness=";
            for (std::size_t i = 0; i < r.witness.size(); ++i)
                std::cout << (i ? "," : "") << r.witness[i];
            std::cout << "\n";
        } catch (const rainbow::budget_exceeded& b) {
            std::cout << "alpha in [" << b.lower << "," << b.upper << "] (budget exhausted)\n";
            budget_hit = true;
        }
    }
    if (want("rc")) {
        try {
            rainbow::RcResult r = rainbow::rc_exact(g, a.rc_budget);
            std::cout << "rc=" << r.rc << "\n";
        } catch (const rainbow::budget_exceeded& b) {
            std::cout << "rc in [" << b.lower << "," << b.upper << "] (budget exhausted)\n";
            budget_hit = true;
        }
    }
    if (want("chibar")) {
        try {
            std::cout << "clique_cover=" << rainbow::clique_cover_number(g, a.alpha_budget)
                      << "\n";
        } catch (const rainbow::budget_exceeded& b) {
            std::cout << "clique_cover in [" << b.lower << "," << b.upper
                      << "] (budget exhausted)\n";
            budget_hit = true;
        }
    }
    return budget_hit ? kExitBudget : kExitOk;
}

int run_report(const ReportArgs& a) {
    rainbow::ReportOptions opts;
    opts.with_rc = a.with_rc;
    opts.with_chibar = a.with_chibar;
    opts.alpha_budget = a.alpha_budget;
    opts.rc_budget = a.rc_budget;

    std::vector<std::pair<std::string, rainbow::Graph>> instances;
    if (!a.dir.empty()) {
        std::vector<std::filesystem::path> files;
        for (const auto& entry : std::filesystem::directory_iterator(a.dir))
            if (entry.is_regular_file()) files.push_back(entry.path());
        std::sort(files.begin(), files.end());
        for (const auto& f : files)
            instances.emplace_back(f.filename().string(), rainbow::read_edge_list_file(f.string()));
    } else if (!a.sweep.empty()) {
        auto one = [&](std::map<std::string, double> params, const std::string& name) {
            params["p"] = a.p;
            params["seed"] = static_cast<double>(a.seed);
            instances.emplace_back(name, rainbow::generate_family(a.sweep, params));
        };
        if (a.sweep == "example3") {
            for (int s : a.s_list) one({{"s", double(s)}}, a.sweep + "-s" + std::to_string(s));
        } else if (a.sweep == "example1" || a.sweep == "example2") {
            for (int t : a.t_list)
                for (int s : a.s_list)
                    one({{"t", double(t)}, {"s", double(s)}},
                        a.sweep + "-t" + std::to_string(t) + "-s" + std::to_string(s));
        } else {
            for (int n : a.n_list) one({{"n", double(n)}}, a.sweep + "-n" + std::to_string(n));
        }
    } else {
        std::cerr << "error: report needs --sweep or --dir\n";
        return kExitUsage;
    }
    if (instances.empty()) {
        std::cerr << "error: no instances to report on\n";
        return kExitUsage;
    }

    bool any_failed = false;
    std::vector<rainbow::BoundRow> rows;
    for (const auto& [name, g] : instances) {
        try {
            rows.push_back(rainbow::make_bound_row(name, g, opts));
        } catch (const rainbow::verification_failure& vf) {
            rainbow::BoundRow r;
            r.name = name;
            r.n = g.vertex_count();
            r.e = g.edge_count();
            r.route = vf.route;
            r.verified = false;
            rows.push_back(r);
            any_failed = true;
        }
        if (!rows.back().verified) any_failed = true;
    }
    rainbow::print_report_table(std::cout, rows);
    if (!a.output.empty()) {
        std::ofstream out(a.output);
        if (!out) {
            std::cerr << "error: cannot open " << a.output << "\n";
            return kExitUsage;
        }
        rainbow::write_report(out, rows);
    }
    return any_failed ? kExitVerification : kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"rainbow connection bound toolkit"};
    app.require_subcommand(1);

    GenArgs gen;
    CLI::App* cmd_gen = app.add_subcommand("gen", "generate a graph family instance");
    cmd_gen->add_option("family", gen.family,
                        "path|cycle|complete|example1|example2|example3|random")
        ->required();
    cmd_gen->add_option("--n", gen.n, "vertex count (path/cycle/complete/random)");
    cmd_gen->add_option("--t", gen.t, "block parameter (example1/example2)");
    cmd_gen->add_option("--s", gen.s, "clique size parameter (example1/example2/example3)");
    cmd_gen->add_option("--p", gen.p, "edge probability (random)");
    cmd_gen->add_option("--seed", gen.seed, "random seed");
    cmd_gen->add_option("--output", gen.output, "edge-list output path (default stdout)");

    ColorArgs color;
    CLI::App* cmd_color = app.add_subcommand("color", "construct a bounded rainbow coloring");
    cmd_color->add_option("--input", color.input, "edge-list input")->required();
    cmd_color->add_option("--output", color.output, "coloring output path");
    cmd_color->add_option("--certificate", color.certificate, "certificate sidecar path");

    VerifyArgs verify;
    CLI::App* cmd_verify = app.add_subcommand("verify", "check a coloring for rainbow connectivity");
    cmd_verify->add_option("--graph", verify.graph_path, "edge-list input")->required();
    cmd_verify->add_option("--coloring", verify.coloring_path, "coloring input")->required();

    ExactArgs exact;
    CLI::App* cmd_exact = app.add_subcommand("exact", "run the exact oracles");
    cmd_exact->add_option("--input", exact.input, "edge-list input")->required();
    cmd_exact->add_option("--which", exact.which, "alpha|rc|chibar|all")
        ->check(CLI::IsMember({"alpha", "rc", "chibar", "all"}));
    cmd_exact->add_option("--alpha-budget", exact.alpha_budget, "node budget for alpha/chibar");
    cmd_exact->add_option("--rc-budget", exact.rc_budget, "node budget for rc");

    ReportArgs report;
    CLI::App* cmd_report = app.add_subcommand("report", "bound comparison table over a sweep");
    cmd_report->add_option("--sweep", report.sweep, "family to sweep");
    cmd_report->add_option("--t-list", report.t_list, "t values")->delimiter(',');
    cmd_report->add_option("--s-list", report.s_list, "s values")->delimiter(',');
    cmd_report->add_option("--n-list", report.n_list, "n values")->delimiter(',');
    cmd_report->add_option("--p", report.p, "edge probability (random sweep)");
    cmd_report->add_option("--seed", report.seed, "random seed (random sweep)");
    cmd_report->add_option("--dir", report.dir, "directory of edge-list files");
    cmd_report->add_option("--output", report.output, "structured report output path");
    cmd_report->add_flag("--with-rc", report.with_rc, "compute exact rc per row");
    cmd_report->add_flag("--with-chibar", report.with_chibar, "compute clique cover per row");
    cmd_report->add_option("--alpha-budget", report.alpha_budget, "node budget for alpha/chibar");
    cmd_report->add_option("--rc-budget", report.rc_budget, "node budget for rc");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (cmd_gen->parsed()) return run_gen(gen);
        if (cmd_color->parsed()) return run_color(color);
        if (cmd_verify->parsed()) return run_verify(verify);
        if (cmd_exact->parsed()) return run_exact(exact);
        if (cmd_report->parsed()) return run_report(report);
    } catch (const rainbow::budget_exceeded& b) {
        std::cerr << "error: search budget exhausted, best interval [" << b.lower << ","
                  << b.upper << "]\n";
        return kExitBudget;
    } catch (const rainbow::verification_failure& vf) {
        std::cerr << "error: " << vf.what() << "\n";
        return kExitVerification;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitVerification;
    }
    return kExitUsage;
}
