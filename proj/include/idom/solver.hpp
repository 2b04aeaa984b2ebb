#pragma once

#include <optional>
#include <vector>

#include "idom/graph.hpp"
#include "idom/labeling.hpp"

namespace idom {

struct SolveOptions {
    /// Wall-clock budget for one call. A non-positive budget expires
    /// immediately and yields the fallback certificate.
    double budget_secs = 60.0;
    /// When set, forces certificate determinism on or off. Unset picks
    /// deterministic extraction for n <= 20 and first-found above.
    std::optional<bool> deterministic;
};

/// Exact-solve outcome. optimal = true means value is proven; a blown budget
/// leaves optimal = false and value is only an upper bound (the certificate
/// is still a valid labeling of that weight).
struct SolveResult {
    int value = 0;
    Labeling certificate;
    bool optimal = true;
};

struct DominationResult {
    int value = 0;
    std::vector<int> certificate;  // sorted vertex set
    bool optimal = true;
};

/// Minimum weight of an Italian labeling (every 0-vertex sees neighborhood
/// weight >= 2). Branch and bound; decomposes into connected components. In
/// deterministic mode the certificate is the lexicographically smallest
/// optimal labeling.
SolveResult gamma_italian(const Graph& g, const SolveOptions& options = {});

/// Minimum weight of a Roman labeling (every 0-vertex has a 2-neighbor).
SolveResult gamma_roman(const Graph& g, const SolveOptions& options = {});

/// Minimum size of a dominating set.
DominationResult gamma_domination(const Graph& g, const SolveOptions& options = {});

/// Reference implementation: scans all 3^n labelings (n <= 15). The
/// certificate is the lexicographically smallest optimal labeling.
SolveResult brute_force_gamma_italian(const Graph& g);

/// All minimum-weight Italian labelings in lexicographic order (n <= 12).
std::vector<Labeling> enumerate_minimum_idfs(const Graph& g);

}  // namespace idom
