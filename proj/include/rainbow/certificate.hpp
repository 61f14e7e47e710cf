#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "rainbow/coloring.hpp"
#include "rainbow/oracles.hpp"

namespace rainbow {

// A rainbow coloring together with the evidence that makes it a bound proof:
// the witness independent set, the branch of the construction that produced
// it, the verifier's verdict, and whether the palette respects the
// 2*|witness|-1 budget.
struct ColoringCertificate {
    EdgeColoring coloring;
    int palette_size = 0;
    std::vector<int> witness;
    std::string route;
    RainbowVerdict verdict;
    bool budget_ok = false;
    bool fallback_used = false;
};

// Line-oriented sidecar serialization ("rainbow-certificate v1").
void write_certificate(std::ostream& out, const ColoringCertificate& cert);
ColoringCertificate read_certificate(std::istream& in);
void write_certificate_file(const std::string& path, const ColoringCertificate& cert);
ColoringCertificate read_certificate_file(const std::string& path);

} // namespace rainbow
