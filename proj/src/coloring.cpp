#include "rainbow/coloring.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace rainbow {

bool EdgeColoring::covers(const Graph& g) const {
    for (const Edge& e : g.edges())
        if (colors.find(e) == colors.end()) return false;
    return true;
}

std::set<int> EdgeColoring::used_colors() const {
    std::set<int> used;
    for (const auto& [e, c] : colors) used.insert(c);
    return used;
}

void EdgeColoring::refresh_surjectivity() {
    non_surjective = static_cast<int>(used_colors().size()) != k;
}

EdgeColoring read_coloring(std::istream& in) {
    EdgeColoring col;
    std::string line;
    int lineno = 0;
    bool have_header = false;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue;
        if (first == "c") {
            std::string kv;
            if (!(ls >> kv) || kv.rfind("k=", 0) != 0)
                throw std::invalid_argument("line " + std::to_string(lineno) + ": expected 'c k=<int>'");
            col.k = std::stoi(kv.substr(2));
            if (col.k < 0) throw std::invalid_argument("negative palette size");
            have_header = true;
            continue;
        }
        if (!have_header)
            throw std::invalid_argument("coloring file must start with a 'c k=' header");
        int a = std::stoi(first), b, c;
        if (!(ls >> b >> c))
            throw std::invalid_argument("line " + std::to_string(lineno) + ": expected 'u v c'");
        if (a == b) throw std::invalid_argument("line " + std::to_string(lineno) + ": self-loop");
        if (c < 1 || c > col.k)
            throw std::invalid_argument("line " + std::to_string(lineno) + ": color " +
                                        std::to_string(c) + " outside 1.." + std::to_string(col.k));
        Edge e(a, b);
        if (col.colors.count(e))
            throw std::invalid_argument("line " + std::to_string(lineno) + ": duplicate edge");
        col.colors[e] = c;
    }
    if (!have_header) throw std::invalid_argument("coloring file missing 'c k=' header");
    col.refresh_surjectivity();
    return col;
}

EdgeColoring read_coloring_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_coloring(in);
}

void write_coloring(std::ostream& out, const EdgeColoring& col) {
    out << "c k=" << col.k << "\n";
    for (const auto& [e, c] : col.colors) out << e.u << " " << e.v << " " << c << "\n";
}

void write_coloring_file(const std::string& path, const EdgeColoring& col) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    write_coloring(out, col);
}

} // namespace rainbow
