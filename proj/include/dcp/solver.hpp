#ifndef DCP_SOLVER_HPP
#define DCP_SOLVER_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "dcp/graph.hpp"
#include "dcp/pebbles.hpp"

namespace dcp {

struct SolverOptions {
    std::uint64_t max_nodes = 100'000'000;  // explicit "unknown" beyond this
    bool prune_dominance = true;            // downward-closure vs known-unsolvable configs
    bool prune_potential = true;            // weight-function necessary condition
    std::size_t dominance_cap = 100'000;    // store entries, ring eviction
};

struct SearchStats {
    std::uint64_t nodes_expanded = 0;
    std::uint64_t memo_hits = 0;
    std::uint64_t peak_frontier = 0;   // max DFS stack depth
    std::uint64_t dominance_prunes = 0;
    std::uint64_t potential_prunes = 0;
    std::uint64_t visited_states = 0;  // failed-memo size at exit
};

enum class Outcome { Solvable, Unsolvable, Unknown };

const char* outcome_name(Outcome o);

// Exact decision; witness present iff Solvable, and replaying it from the
// start configuration reaches a domination cover.
struct Decision {
    Outcome outcome = Outcome::Unknown;
    std::optional<Strategy> witness;
    SearchStats stats;

    bool solvable() const { return outcome == Outcome::Solvable; }
};

// Depth-first search over configuration space with goal test before
// expansion, a failed-state memo, dominance pruning and a conservative
// potential bound. Deterministic: moves expand in lexicographic (from, to)
// order, so witness and stats are reproducible.
Decision solvable(const Graph& g, const Configuration& c, const SolverOptions& opts = {});

// Independent certificate check: replays s and tests the final configuration
// for domination cover. Shares only apply_move with the search.
bool verify_strategy(const Graph& g, const Configuration& c, const Strategy& s,
                     std::string* diagnostic = nullptr);

} // namespace dcp

#endif
