#ifndef DCP_VERIFY_HPP
#define DCP_VERIFY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dcp/graph.hpp"
#include "dcp/psi_exact.hpp"
#include "dcp/solver.hpp"

namespace dcp {

enum class VerifyMode { Exhaustive, Sampled, LowerBoundOnly };

const char* verify_mode_name(VerifyMode m);

// Which (family, n) pairs are verifiable at desk scale, and how.
std::optional<VerifyMode> feasible_mode(Family fam, long long n);

// All nonincreasing class-size tuples with r >= 2 parts and sum <= cap,
// in decreasing sum order then lexicographic.
std::vector<std::vector<long long>> multipartite_instances(long long cap);

struct InstanceRow {
    FamilySpec spec;
    VerifyMode mode = VerifyMode::Exhaustive;
    long long formula = 0;
    std::optional<long long> exact;      // absent in sampled/lower-bound-only rows
    std::optional<long long> lower;      // proven lower bound when exact absent
    bool agree = false;
    bool worst_certified = false;        // extremal config decided unsolvable
    bool has_worst = false;              // a generator/fixture applies to this row
    double seconds = 0.0;
    std::string note;
};

struct VerificationReport {
    std::vector<InstanceRow> rows;
    bool overall_pass = false;           // every row agrees and certifies
};

struct VerifyOptions {
    int sample_trials = 200;
    std::uint64_t seed = 0;
    int threads = 1;
    SolverOptions solver;
    unsigned long long max_configs = 10'000'000;
};

// Oracle-vs-formula sweep over family instances lo..hi (for Multipartite the
// range is ignored and all instances with sum <= 6 run). mode_override forces
// Sampled/LowerBoundOnly past the feasibility table; otherwise infeasible
// ranges are refused with Error(Infeasible).
VerificationReport verify_family(Family fam, long long lo, long long hi,
                                 std::optional<VerifyMode> mode_override,
                                 const VerifyOptions& opts = {});

// --- property suites ---

struct SuiteResult {
    std::string name;
    bool pass = false;
    unsigned long long checks = 0;
    std::uint64_t seed = 0;
    std::string detail;                  // first failure description
};

// Small family graphs used by the randomized suites.
std::vector<FamilySpec> suite_graph_pool();

// Exhaustive: all family graphs with <= 6 vertices, totals <= 6, dropping a
// pebble from a solvable configuration never flips an unsolvable one back.
// Extra seeded trials run on larger configurations.
SuiteResult suite_monotonicity(int trials, std::uint64_t seed);

// Every solvable decision's witness replays to a domination cover.
SuiteResult suite_witness_replay(int trials, std::uint64_t seed);

// All pruning on vs off decide identically: exhaustive over totals <= 8 on
// P5, C5, W4, B2, K4.
SuiteResult suite_pruning_equivalence();

// Single-vertex worst case attains psi on C3..C7.
SuiteResult suite_single_vertex_worst();

SuiteResult run_suite(const std::string& name, int trials, std::uint64_t seed);

std::vector<std::string> suite_names();

} // namespace dcp

#endif
