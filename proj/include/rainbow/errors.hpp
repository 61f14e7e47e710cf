#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <utility>

namespace rainbow {

struct EdgeColoring;

// Search budget ran out before an exact answer was established.  Carries the
// best interval known at the point of exhaustion so callers can report a
// partial result instead of silently truncating.
struct budget_exceeded : std::runtime_error {
    long long lower;   // best proven lower bound
    long long upper;   // best known upper bound (-1 if none)
    budget_exceeded(const std::string& what, long long lo, long long hi)
        : std::runtime_error(what), lower(lo), upper(hi) {}
};

// A constructed coloring or vertex set failed its own self-check.  These are
// hard errors by design: a failure here points at a gap between the intended
// construction and what it actually guarantees, so we keep enough context to
// investigate (which branch ran, which pair of vertices has no rainbow path).
struct verification_failure : std::runtime_error {
    std::string route;          // construction branch that produced the object
    std::pair<int, int> pair;   // violating vertex pair (-1,-1 if not pairwise)
    std::string detail;
    // Rejected coloring, when one exists, so a caller can inspect or attempt a
    // bounded repair without re-running the construction.
    std::shared_ptr<const EdgeColoring> attempt;
    verification_failure(const std::string& r, std::pair<int, int> p, const std::string& d,
                         std::shared_ptr<const EdgeColoring> a = nullptr)
        : std::runtime_error("verification failed on route " + r + ": " + d),
          route(r), pair(p), detail(d), attempt(std::move(a)) {}
};

} // namespace rainbow
