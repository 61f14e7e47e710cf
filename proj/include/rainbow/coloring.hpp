#pragma once

#include <iosfwd>
#include <map>
#include <set>
#include <string>

#include "rainbow/graph.hpp"

namespace rainbow {

// Assignment of colors 1..k to edges.  k is the declared palette size; some
// constructions reserve colors they end up not using, in which case
// non_surjective is set instead of silently shrinking the palette.
struct EdgeColoring {
    std::map<Edge, int> colors;
    int k = 0;
    bool non_surjective = false;

    int color_of(const Edge& e) const {
        auto it = colors.find(e);
        return it == colors.end() ? 0 : it->second;
    }
    void assign(const Edge& e, int c) { colors[e] = c; }
    bool covers(const Graph& g) const;            // every edge of g colored
    std::set<int> used_colors() const;
    // Re-derives the non_surjective flag from the assignment.
    void refresh_surjectivity();
};

// Coloring file format: header line "c k=<k>", then one "u v c" triple per
// line in canonical edge order.  Colors must lie in 1..k.
EdgeColoring read_coloring(std::istream& in);
EdgeColoring read_coloring_file(const std::string& path);
void write_coloring(std::ostream& out, const EdgeColoring& col);
void write_coloring_file(const std::string& path, const EdgeColoring& col);

} // namespace rainbow
