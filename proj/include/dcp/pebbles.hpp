#ifndef DCP_PEBBLES_HPP
#define DCP_PEBBLES_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "dcp/graph.hpp"

namespace dcp {

// Dense per-vertex pebble counts, bound to a graph of the same size.
// Immutable use intended: apply_move returns a new value.
struct Configuration {
    std::vector<long long> counts;

    static Configuration zeros(int n) { return Configuration{std::vector<long long>(n, 0)}; }

    int size() const { return static_cast<int>(counts.size()); }
    long long total() const;
    std::vector<int> support() const;

    // Canonical total order (lexicographic on counts) for deterministic
    // memoization and reporting.
    bool operator==(const Configuration& o) const { return counts == o.counts; }
    bool operator<(const Configuration& o) const { return counts < o.counts; }
};

struct PebblingMove {
    int from = 0;
    int to = 0;
    bool operator==(const PebblingMove& o) const { return from == o.from && to == o.to; }
};

// Ordered move sequence serving as a solvability certificate.
struct Strategy {
    std::vector<PebblingMove> moves;
};

// Removes two pebbles from m.from and places one on the adjacent m.to.
// Throws Error(InsufficientPebbles/NotAdjacent/VertexOutOfRange/SizeMismatch).
Configuration apply_move(const Configuration& c, PebblingMove m, const Graph& g);

// True iff support(c) is a dominating set of g.
bool is_domination_cover(const Graph& g, const Configuration& c);

// Folds apply_move over s. Fails atomically on the first illegal move with
// Error(IllegalMove) carrying its index.
Configuration replay(const Graph& g, const Configuration& start, const Strategy& s);

// --- wire formats (bit-exact CLI contracts) ---

// JSON object {"counts": [c0, c1, ...]}.
std::string config_to_json(const Configuration& c);
Configuration config_from_json(const std::string& text);

// Compact text form "v:count" pairs separated by commas, ascending vertex id,
// zero-count vertices omitted; the empty string is the all-zero configuration.
std::string config_to_compact(const Configuration& c);
Configuration config_from_compact(const std::string& text, int n);

// JSON object {"moves": [[from,to], ...]}.
std::string strategy_to_json(const Strategy& s);
Strategy strategy_from_json(const std::string& text);

} // namespace dcp

#endif
