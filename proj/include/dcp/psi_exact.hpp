#ifndef DCP_PSI_EXACT_HPP
#define DCP_PSI_EXACT_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "dcp/graph.hpp"
#include "dcp/pebbles.hpp"
#include "dcp/solver.hpp"

namespace dcp {

// Weak compositions of k into n parts, streamed in the order
// [k,0,...,0], ..., [0,...,0,k] (first coordinate decreasing first).
class CompositionStream {
public:
    CompositionStream(int n, long long k);

    bool valid() const { return valid_; }
    const std::vector<long long>& current() const { return cur_; }
    void advance();

    // C(k+n-1, n-1), saturating at ULLONG_MAX on overflow.
    static unsigned long long count(int n, long long k);

private:
    std::vector<long long> cur_;
    bool valid_;
};

enum class PsiMethod { Exhaustive, Sampled, Formula };

const char* psi_method_name(PsiMethod m);

struct PsiStats {
    unsigned long long configs_tested = 0;
    std::uint64_t solver_nodes_total = 0;
};

struct SampleCertificate {
    int trials = 0;
    std::uint64_t seed = 0;
};

struct PsiResult {
    std::optional<long long> value;       // exact psi when method == Exhaustive/Formula
    long long lower = 1;                  // proven lower bound
    std::optional<long long> upper;       // exact, or sampled evidence (see method)
    PsiMethod method = PsiMethod::Exhaustive;
    std::optional<Configuration> witness_bad_config; // unsolvable at value-1 when available
    PsiStats stats;
    std::optional<SampleCertificate> sample;
};

struct PsiOptions {
    std::optional<long long> hint;            // default: formula value if family known, else 1
    unsigned long long max_configs = 10'000'000;
    int sample_trials = 1000;
    std::uint64_t seed = 0;
    bool symmetry_reduction = true;           // cycles: rotation; complete: sorted counts
    SolverOptions solver;
};

// Exact psi by layer enumeration: smallest k with every k-pebble
// configuration solvable, anchored by an unsolvable witness at k-1.
// Valid by solvability monotonicity. Switches to sampled bounds when a
// layer exceeds max_configs.
PsiResult psi_exact(const Graph& g, const PsiOptions& opts = {});

// Over all vertices v, the largest k such that k pebbles all on v is
// unsolvable; ties break to the smallest vertex id.
std::pair<int, long long> max_unsolvable_single_vertex(const Graph& g,
                                                       const SolverOptions& opts = {});

// Seeded uniform draw from the weak compositions of k into n parts, via the
// stars-and-bars bijection: Floyd-sample n-1 distinct bar positions among
// k+n-1 slots, gaps give the counts. Randomness comes from splitmix64 with
// rejection-based bounded draws, so runs reproduce across platforms.
Configuration sample_configuration(int n, long long k, std::uint64_t& rng_state);

// splitmix64 step and unbiased bounded draw; exposed for tests.
std::uint64_t splitmix64(std::uint64_t& state);
std::uint64_t bounded_rand(std::uint64_t& state, std::uint64_t bound);

} // namespace dcp

#endif
