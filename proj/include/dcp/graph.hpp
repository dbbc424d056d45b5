#ifndef DCP_GRAPH_HPP
#define DCP_GRAPH_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dcp/error.hpp"

namespace dcp {

enum class Family { Path, Cycle, Complete, Multipartite, Wheel, BTree };

const char* family_name(Family f);
Family family_from_name(const std::string& name);

// Symbolic description of a graph family instance. params holds the single
// size/height parameter, or the nonincreasing class sizes for Multipartite.
struct FamilySpec {
    Family family;
    std::vector<long long> params;

    static FamilySpec parse(const std::string& text); // e.g. "path:6", "multipartite:4,2"
    std::string to_string() const;
    long long vertex_count() const;
    void validate() const; // throws Error(InvalidParameter) on bad bounds
};

// Undirected simple connected graph, vertices 0..n-1, sorted neighbor lists.
// Immutable after construction; safe to share across threads.
struct Graph {
    int n = 0;
    std::vector<std::vector<int>> adj;
    std::vector<std::string> labels;        // optional tags ("hub", "root", ...)
    std::optional<FamilySpec> family;

    bool has_edge(int u, int v) const;
    long long edge_count() const;
    bool same_topology(const Graph& other) const; // n + adjacency equal
};

// Validates symmetry-by-construction: no self-loops, no duplicate edges,
// connected. Throws Error on violation.
Graph make_graph(int n, const std::vector<std::pair<int, int>>& edges);

// Canonical family graphs with the documented vertex numbering:
// Path/Cycle 0..n-1 in order; Wheel hub = 0, rim 1..n; BTree root = 0 in
// level order; Multipartite classes blocked in the given size order.
Graph build_family(const FamilySpec& spec);

// True iff every vertex of g is in s or adjacent to a member of s.
bool is_dominating(const Graph& g, const std::vector<int>& s);

// All-pairs hop distances by BFS.
std::vector<std::vector<int>> distance_matrix(const Graph& g);

// Text edge-list format: one "u v" pair per line, 0-based ids, '#' comments
// and blank lines ignored. parse(emit(g)) == g up to neighbor ordering.
Graph parse_edge_list(const std::string& text);
std::string emit_edge_list(const Graph& g);

// Best-effort DOT output for human inspection; not round-tripped.
std::string emit_dot(const Graph& g);

} // namespace dcp

#endif
