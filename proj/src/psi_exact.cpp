#include "dcp/psi_exact.hpp"

#include <algorithm>
#include <climits>
#include <set>

#include "dcp/formulas.hpp"

namespace dcp {

const char* psi_method_name(PsiMethod m) {
    switch (m) {
        case PsiMethod::Exhaustive: return "exhaustive";
        case PsiMethod::Sampled: return "sampled";
        case PsiMethod::Formula: return "formula";
    }
    return "?";
}

CompositionStream::CompositionStream(int n, long long k) : valid_(true) {
    if (n < 1) throw Error(ErrorKind::InvalidParameter, "composition stream needs n >= 1");
    if (k < 0) throw Error(ErrorKind::InvalidParameter, "composition stream needs k >= 0");
    cur_.assign(n, 0);
    cur_[0] = k;
}

void CompositionStream::advance() {
    int n = static_cast<int>(cur_.size());
    // move one unit from the rightmost nonzero among the first n-1 slots,
    // sweeping everything to its right back onto the next slot
    int j = -1;
    for (int i = n - 2; i >= 0; --i)
        if (cur_[i] > 0) {
            j = i;
            break;
        }
    if (j < 0) {
        valid_ = false;
        return;
    }
    long long tail = 0;
    for (int i = j + 1; i < n; ++i) {
        tail += cur_[i];
        cur_[i] = 0;
    }
    cur_[j] -= 1;
    cur_[j + 1] = tail + 1;
}

unsigned long long CompositionStream::count(int n, long long k) {
    // C(k+n-1, n-1), saturating
    unsigned long long r = 1;
    for (long long i = 1; i <= n - 1; ++i) {
        unsigned long long num = static_cast<unsigned long long>(k + i);
        if (r > ULLONG_MAX / num) return ULLONG_MAX;
        r = r * num / static_cast<unsigned long long>(i);
    }
    return r;
}

std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t bounded_rand(std::uint64_t& state, std::uint64_t bound) {
    if (bound == 0) throw Error(ErrorKind::InvalidParameter, "bounded_rand needs bound > 0");
    std::uint64_t threshold = (0 - bound) % bound; // rejection zone for unbiased draws
    for (;;) {
        std::uint64_t r = splitmix64(state);
        if (r >= threshold) return r % bound;
    }
}

Configuration sample_configuration(int n, long long k, std::uint64_t& rng_state) {
    if (n < 1 || k < 0)
        throw Error(ErrorKind::InvalidParameter, "sample_configuration needs n >= 1, k >= 0");
    // Floyd's algorithm: n-1 distinct bar positions among k+n-1 slots
    std::uint64_t slots = static_cast<std::uint64_t>(k) + n - 1;
    std::set<std::uint64_t> bars;
    for (std::uint64_t i = slots - (n - 1); i < slots; ++i) {
        std::uint64_t r = bounded_rand(rng_state, i + 1);
        if (!bars.insert(r).second) bars.insert(i);
    }
    Configuration c = Configuration::zeros(n);
    std::uint64_t prev = 0;
    int part = 0;
    for (std::uint64_t b : bars) {
        c.counts[part++] = static_cast<long long>(b - prev);
        prev = b + 1;
    }
    c.counts[part] = static_cast<long long>(slots - prev);
    return c;
}

namespace {

bool canonical_under_rotation(const std::vector<long long>& v) {
    int n = static_cast<int>(v.size());
    for (int s = 1; s < n; ++s)
        for (int i = 0; i < n; ++i) {
            long long rot = v[(i + s) % n];
            if (rot < v[i]) return false; // a strictly smaller rotation exists
            if (rot > v[i]) break;
        }
    return true;
}

bool canonical_sorted(const std::vector<long long>& v) {
    return std::is_sorted(v.begin(), v.end(), std::greater<long long>());
}

enum class Reduction { None, Rotation, Sort };

Reduction pick_reduction(const Graph& g, const PsiOptions& opts) {
    if (!opts.symmetry_reduction || !g.family) return Reduction::None;
    switch (g.family->family) {
        case Family::Cycle: return Reduction::Rotation;
        case Family::Complete: return Reduction::Sort;
        default: return Reduction::None;
    }
}

struct LayerResult {
    bool all_solvable;
    std::optional<Configuration> counterexample; // first in enumeration order
};

LayerResult run_layer(const Graph& g, long long k, Reduction red, const PsiOptions& opts,
                      PsiStats& stats) {
    unsigned long long layer_size = CompositionStream::count(g.n, k);
    if (layer_size > opts.max_configs)
        throw Error(ErrorKind::Infeasible,
                    "layer k=" + std::to_string(k) + " has " + std::to_string(layer_size) +
                        " configurations, over the cap of " + std::to_string(opts.max_configs));
    for (CompositionStream cs(g.n, k); cs.valid(); cs.advance()) {
        const auto& counts = cs.current();
        if (red == Reduction::Rotation && !canonical_under_rotation(counts)) continue;
        if (red == Reduction::Sort && !canonical_sorted(counts)) continue;
        Configuration c{counts};
        Decision d = solvable(g, c, opts.solver);
        ++stats.configs_tested;
        stats.solver_nodes_total += d.stats.nodes_expanded;
        if (d.outcome == Outcome::Unknown)
            throw Error(ErrorKind::Budget, "solver budget exhausted during exact enumeration");
        if (d.outcome == Outcome::Unsolvable) return {false, c};
    }
    return {true, std::nullopt};
}

PsiResult psi_sampled(const Graph& g, long long hint, const PsiOptions& opts,
                      long long known_lower, std::optional<Configuration> known_witness) {
    PsiResult r;
    r.method = PsiMethod::Sampled;
    r.lower = known_lower;
    r.witness_bad_config = std::move(known_witness);
    r.sample = SampleCertificate{opts.sample_trials, opts.seed};
    std::uint64_t rng = opts.seed;
    // evidence at the hint layer
    bool hint_clean = true;
    for (int t = 0; t < opts.sample_trials; ++t) {
        Configuration c = sample_configuration(g.n, hint, rng);
        Decision d = solvable(g, c, opts.solver);
        ++r.stats.configs_tested;
        r.stats.solver_nodes_total += d.stats.nodes_expanded;
        if (d.outcome == Outcome::Unknown)
            throw Error(ErrorKind::Budget, "solver budget exhausted during sampling");
        if (d.outcome == Outcome::Unsolvable) {
            hint_clean = false;
            r.lower = std::max(r.lower, hint + 1); // a proven lower bound
            if (!r.witness_bad_config) r.witness_bad_config = c;
            break;
        }
    }
    if (hint_clean) r.upper = hint; // statistical evidence only, method says Sampled
    // probe one layer below for a proven lower bound
    if (hint >= 1 && r.lower <= hint) {
        for (int t = 0; t < opts.sample_trials; ++t) {
            Configuration c = sample_configuration(g.n, hint - 1, rng);
            Decision d = solvable(g, c, opts.solver);
            ++r.stats.configs_tested;
            r.stats.solver_nodes_total += d.stats.nodes_expanded;
            if (d.outcome == Outcome::Unknown)
                throw Error(ErrorKind::Budget, "solver budget exhausted during sampling");
            if (d.outcome == Outcome::Unsolvable) {
                r.lower = std::max(r.lower, hint);
                if (!r.witness_bad_config) r.witness_bad_config = c;
                break;
            }
        }
    }
    if (r.upper && r.lower > *r.upper) r.upper.reset();
    return r;
}

} // namespace

PsiResult psi_exact(const Graph& g, const PsiOptions& opts) {
    long long hint = 1;
    if (opts.hint) {
        hint = std::max<long long>(1, *opts.hint);
    } else if (g.family) {
        try {
            hint = psi_formula(*g.family);
        } catch (const Error&) {
            hint = 1;
        }
    }

    Reduction red = pick_reduction(g, opts);
    PsiResult r;
    r.method = PsiMethod::Exhaustive;

    long long proven_lower = 1; // an unsolvable layer at t proves psi >= t+1
    std::optional<Configuration> best_witness;
    try {
        long long k = hint;
        LayerResult first = run_layer(g, k, red, opts, r.stats);
        if (first.all_solvable) {
            // scan downward: by monotonicity the first k-1 with a
            // counterexample pins psi = k
            while (k >= 1) {
                LayerResult below = run_layer(g, k - 1, red, opts, r.stats);
                if (!below.all_solvable) {
                    r.value = k;
                    r.witness_bad_config = below.counterexample;
                    break;
                }
                --k;
            }
            if (!r.value) {
                // k reached 0 with every layer solvable; impossible on a
                // nonempty graph since the empty configuration never covers
                throw Error(ErrorKind::InvalidParameter, "exact scan reached k=0 all-solvable");
            }
        } else {
            best_witness = first.counterexample;
            proven_lower = k + 1;
            while (true) {
                ++k;
                LayerResult layer = run_layer(g, k, red, opts, r.stats);
                if (layer.all_solvable) {
                    r.value = k;
                    r.witness_bad_config = best_witness;
                    break;
                }
                best_witness = layer.counterexample;
                proven_lower = k + 1;
            }
        }
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::Infeasible) throw;
        PsiResult s = psi_sampled(g, hint, opts, proven_lower, std::move(best_witness));
        s.stats.configs_tested += r.stats.configs_tested;
        s.stats.solver_nodes_total += r.stats.solver_nodes_total;
        return s;
    }

    r.lower = *r.value;
    r.upper = *r.value;
    return r;
}

std::pair<int, long long> max_unsolvable_single_vertex(const Graph& g,
                                                       const SolverOptions& opts) {
    auto dist = distance_matrix(g);
    int best_v = 0;
    long long best_k = -1;
    for (int v = 0; v < g.n; ++v) {
        // enough pebbles on v to hand one to every vertex; always solvable
        long long cap = 0;
        for (int w = 0; w < g.n; ++w) cap += 1LL << dist[v][w];
        long long first_solvable = -1;
        for (long long k = 1; k <= cap; ++k) {
            Configuration c = Configuration::zeros(g.n);
            c.counts[v] = k;
            Decision d = solvable(g, c, opts);
            if (d.outcome == Outcome::Unknown)
                throw Error(ErrorKind::Budget, "solver budget exhausted");
            if (d.outcome == Outcome::Solvable) {
                first_solvable = k;
                break;
            }
        }
        if (first_solvable < 0)
            throw Error(ErrorKind::Budget, "single-vertex scan found no solvable k");
        long long k_unsolv = first_solvable - 1;
        if (k_unsolv > best_k) {
            best_k = k_unsolv;
            best_v = v;
        }
    }
    return {best_v, best_k};
}

} // namespace dcp
