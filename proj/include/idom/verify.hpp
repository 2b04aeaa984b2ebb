#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "idom/graph.hpp"
#include "idom/solver.hpp"

namespace idom {

enum class CheckStatus { pass, fail, budget_exceeded };

std::string to_string(CheckStatus status);

/// One verified instance (or one aggregated exhaustive sweep). certificate
/// holds a revalidatable labeling for single-instance rows and is empty for
/// aggregate rows unless a counterexample needs preserving.
struct TheoremReport {
    std::string theorem;
    std::string instance;
    std::string expected;
    std::string computed;
    std::string certificate;
    CheckStatus status = CheckStatus::pass;
};

/// Knobs for the verification suite. Every cap is additionally clamped by
/// max_n, so max_n = 1 shrinks the whole suite to its degenerate core.
/// Identical configs (including seed) produce byte-identical reports.
struct SuiteConfig {
    std::uint64_t seed = 1;
    int max_n = MAX_VERTICES;
    int budget_secs = 60;  // per solve

    int path_max_n = 16;            // T1
    int corona_pairs = 50;          // T2 sample count
    int corona_max_ng = 5;          // T2 root-graph size cap
    int bounds_samples = 100;       // T3 sample count
    int bounds_max_n = 8;           // T3 graph size cap
    int realize_max_n = 6;          // T4
    int iff_exhaustive_max_n = 5;   // T5/T6 full labeled-graph sweeps
    int iff_random_max_n = 8;       // T5/T6 random extension (from 6 up)
    int iff_random_samples = 25;    // per size
    int bipartite_max_pq = 4;       // T7
    int double_exhaustive_max_n = 4;  // T8 connected sweep
    int double_random_samples = 20;   // T8 random extension
    int double_random_n = 5;          // T8 random graph size
    int path_corona_max_n = 9;      // T9 solver range
    int cycle_corona_max_n = 9;     // T10 solver range
    int witness_max_n = 30;         // T9 witness-only range
    int lemma_max_n = 6;            // L1/L2/L3 exhaustive sweeps
    int twin_max_n = 6;             // TT/FT exhaustive sweeps
};

struct SuiteSummary {
    int pass = 0;
    int fail = 0;
    int exceeded = 0;
};

struct SuiteReport {
    SuiteConfig config;
    std::vector<TheoremReport> results;
    SuiteSummary summary;
};

/// Shared state across checks: every graph solved for gamma_I is recorded
/// (keyed by its graph6 form) so the closing sandwich audit can revisit it.
class SuiteContext {
public:
    explicit SuiteContext(const SuiteConfig& config) : config_(config) {}

    /// Solves gamma_I under the configured budget and records the instance.
    SolveResult italian(const Graph& g);

    void record(const Graph& g, int gamma_italian_value);
    const std::map<std::string, int>& instances() const { return instances_; }
    const SuiteConfig& config() const { return config_; }

private:
    SuiteConfig config_;
    std::map<std::string, int> instances_;
};

/// The checks, in suite order: T1..T10 the closed forms, L1..L3 the local
/// rewrite lemmas, TT/FT the twin-addition deltas, SANDWICH the
/// gamma <= gamma_I <= gamma_R <= 2*gamma audit over everything solved.
const std::vector<std::string>& theorem_ids();

/// Runs one check. params may override the config's instance range and is
/// interpreted per check: a single {max_n} for T1/T4/T5/T6/T9/T10/L*/TT/FT,
/// {samples, max_ng} for T2, {samples, max_n} for T3, {max_pq} for T7,
/// {exhaustive_max_n, random_samples} for T8. Empty params use the config.
/// The config's global max_n still clamps every size cap, overridden or not.
/// Unknown ids raise std::invalid_argument.
std::vector<TheoremReport> check_theorem(const std::string& theorem_id,
                                         const std::vector<int>& params,
                                         const SuiteConfig& config,
                                         SuiteContext& ctx);

/// Convenience overload with a private context (no cross-check sandwich).
std::vector<TheoremReport> check_theorem(const std::string& theorem_id,
                                         const std::vector<int>& params,
                                         const SuiteConfig& config);

/// Runs every check in order and aggregates the summary.
SuiteReport run_suite(const SuiteConfig& config);

/// Stable JSON rendering: {"suite": {...}, "results": [...], "summary": ...}.
/// Field order, row order and formatting are fixed, so equal reports render
/// to identical bytes.
std::string report_json(const SuiteReport& report);

}  // namespace idom
