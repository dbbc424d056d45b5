#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "dcp/graph.hpp"
#include "dcp/psi_exact.hpp"
#include "dcp/verify.hpp"

using namespace dcp;

namespace {

std::vector<int> degree_sequence(const Graph& g) {
    std::vector<int> d;
    for (const auto& a : g.adj) d.push_back(static_cast<int>(a.size()));
    return d;
}

} // namespace

TEST_CASE("family builders produce the documented shapes") {
    Graph p4 = build_family({Family::Path, {4}});
    CHECK(p4.n == 4);
    CHECK(p4.edge_count() == 3);
    CHECK(degree_sequence(p4) == std::vector<int>{1, 2, 2, 1});

    // W3 is K4: every degree 3
    Graph w3 = build_family({Family::Wheel, {3}});
    CHECK(w3.n == 4);
    for (int v = 0; v < 4; ++v) CHECK(w3.adj[v].size() == 3);

    Graph b2 = build_family({Family::BTree, {2}});
    CHECK(b2.n == 7);
    CHECK(b2.edge_count() == 6);
    CHECK(b2.adj[0].size() == 2);
    int leaves = 0;
    for (int v = 0; v < b2.n; ++v)
        if (b2.adj[v].size() == 1) ++leaves;
    CHECK(leaves == 4);
    CHECK(b2.labels[0] == "root");
    CHECK(b2.labels[3] == "bottom-row");
}

TEST_CASE("vertex and edge counts per family") {
    for (long long n = 1; n <= 7; ++n) {
        Graph g = build_family({Family::Path, {n}});
        CHECK(g.edge_count() == n - 1);
    }
    for (long long n = 3; n <= 8; ++n) {
        Graph g = build_family({Family::Cycle, {n}});
        CHECK(g.edge_count() == n);
    }
    for (long long n = 3; n <= 7; ++n) {
        Graph g = build_family({Family::Wheel, {n}});
        CHECK(g.n == n + 1);
        CHECK(g.edge_count() == 2 * n);
    }
    for (long long h = 0; h <= 4; ++h) {
        Graph g = build_family({Family::BTree, {h}});
        CHECK(g.n == (1LL << (h + 1)) - 1);
        CHECK(g.edge_count() == (1LL << (h + 1)) - 2);
    }
    for (long long n = 1; n <= 6; ++n) {
        Graph g = build_family({Family::Complete, {n}});
        CHECK(g.edge_count() == n * (n - 1) / 2);
    }
    // multipartite: sum of pairwise class products
    Graph k42 = build_family({Family::Multipartite, {4, 2}});
    CHECK(k42.n == 6);
    CHECK(k42.edge_count() == 8);
    Graph k221 = build_family({Family::Multipartite, {2, 2, 1}});
    CHECK(k221.edge_count() == 4 + 2 + 2);
}

TEST_CASE("family parameter bounds are rejected") {
    CHECK_THROWS_AS(build_family({Family::Path, {0}}), Error);
    CHECK_THROWS_AS(build_family({Family::Cycle, {2}}), Error);
    CHECK_THROWS_AS(build_family({Family::Wheel, {2}}), Error);
    CHECK_THROWS_AS(build_family({Family::BTree, {-1}}), Error);
    CHECK_THROWS_AS(build_family({Family::Multipartite, {2, 3}}), Error); // not nonincreasing
    CHECK_THROWS_AS(build_family({Family::Multipartite, {3}}), Error);    // r < 2
    CHECK_THROWS_AS(build_family({Family::Multipartite, {3, 0}}), Error);
}

TEST_CASE("family spec parse/print round trip") {
    for (const char* s : {"path:6", "cycle:5", "complete:4", "wheel:3", "btree:2",
                          "multipartite:4,2,1"}) {
        CHECK(FamilySpec::parse(s).to_string() == s);
    }
    CHECK_THROWS_AS(FamilySpec::parse("grid:3"), Error);
    CHECK_THROWS_AS(FamilySpec::parse("path"), Error);
    CHECK_THROWS_AS(FamilySpec::parse("path:x"), Error);
}

TEST_CASE("is_dominating examples") {
    Graph p4 = build_family({Family::Path, {4}});
    CHECK_FALSE(is_dominating(p4, {0}));
    CHECK(is_dominating(p4, {0, 2}));

    Graph w5 = build_family({Family::Wheel, {5}});
    CHECK(is_dominating(w5, {0})); // hub alone dominates the wheel

    CHECK_THROWS_AS(is_dominating(p4, {7}), Error);
}

TEST_CASE("is_dominating basics: full set always, empty set never on nonempty graphs") {
    for (const auto& spec : suite_graph_pool()) {
        Graph g = build_family(spec);
        std::vector<int> all(g.n);
        for (int v = 0; v < g.n; ++v) all[v] = v;
        CHECK(is_dominating(g, all));
        CHECK_FALSE(is_dominating(g, {}));
    }
}

TEST_CASE("is_dominating agrees with a direct closed-neighborhood union") {
    std::uint64_t rng = 7;
    for (const auto& spec : suite_graph_pool()) {
        Graph g = build_family(spec);
        for (int trial = 0; trial < 100; ++trial) {
            std::vector<int> s;
            for (int v = 0; v < g.n; ++v)
                if (bounded_rand(rng, 2)) s.push_back(v);
            std::set<int> covered;
            for (int v : s) {
                covered.insert(v);
                for (int w : g.adj[v]) covered.insert(w);
            }
            CHECK(is_dominating(g, s) == (static_cast<int>(covered.size()) == g.n));
        }
    }
}

TEST_CASE("distance matrix examples and metric properties") {
    Graph p3 = build_family({Family::Path, {3}});
    CHECK(distance_matrix(p3)[0][2] == 2);

    Graph c5 = build_family({Family::Cycle, {5}});
    CHECK(distance_matrix(c5)[0][3] == 2); // shorter way around

    Graph k5 = build_family({Family::Complete, {5}});
    auto dk = distance_matrix(k5);
    for (int u = 0; u < 5; ++u)
        for (int v = 0; v < 5; ++v) CHECK(dk[u][v] == (u == v ? 0 : 1));

    Graph b3 = build_family({Family::BTree, {3}});
    auto d = distance_matrix(b3);
    for (int u = 0; u < b3.n; ++u) {
        CHECK(d[u][u] == 0);
        for (int v = 0; v < b3.n; ++v) {
            CHECK(d[u][v] == d[v][u]);
            for (int w = 0; w < b3.n; ++w) CHECK(d[u][w] <= d[u][v] + d[v][w]);
        }
    }
}

TEST_CASE("edge list parse examples") {
    Graph p3 = parse_edge_list("0 1\n1 2");
    CHECK(p3.n == 3);
    CHECK(p3.same_topology(build_family({Family::Path, {3}})));

    CHECK_THROWS_AS(parse_edge_list("0 1\n0 1"), Error);   // duplicate
    CHECK_THROWS_AS(parse_edge_list("0 0"), Error);        // self-loop
    CHECK_THROWS_AS(parse_edge_list("0 1 2"), Error);      // malformed
    CHECK_THROWS_AS(parse_edge_list("0 1\n2 3"), Error);   // disconnected
    CHECK_THROWS_AS(parse_edge_list(""), Error);

    // error kinds are distinct
    try {
        parse_edge_list("0 1\n0 1");
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::DuplicateEdge);
    }
    try {
        parse_edge_list("0 1\n2 3");
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Disconnected);
    }
    try {
        parse_edge_list("3 3");
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::SelfLoop);
    }

    // comments and blank lines ignored
    Graph g = parse_edge_list("# a triangle\n0 1\n\n1 2 # last two\n0 2\n");
    CHECK(g.n == 3);
    CHECK(g.edge_count() == 3);
}

TEST_CASE("edge list emit is canonical and round-trips") {
    CHECK(emit_edge_list(build_family({Family::Cycle, {3}})) == "0 1\n0 2\n1 2");
    for (const auto& spec : suite_graph_pool()) {
        Graph g = build_family(spec);
        if (g.edge_count() == 0) continue; // single-vertex graphs have no edge-list form
        Graph back = parse_edge_list(emit_edge_list(g));
        CHECK(back.same_topology(g));
    }
}

TEST_CASE("dot emission mentions every edge") {
    Graph w4 = build_family({Family::Wheel, {4}});
    std::string dot = emit_dot(w4);
    CHECK(dot.find("graph G {") == 0);
    CHECK(dot.find("0 -- 1;") != std::string::npos);
    CHECK(dot.find("hub") != std::string::npos);
}

TEST_CASE("make_graph rejects bad input") {
    CHECK_THROWS_AS(make_graph(0, {}), Error);
    CHECK_THROWS_AS(make_graph(2, {{0, 5}}), Error);
    // single vertex, no edges: connected by convention
    Graph k1 = make_graph(1, {});
    CHECK(k1.n == 1);
}

TEST_CASE("garbage edge-list lines are rejected, not skipped") {
    CHECK_THROWS_AS(parse_edge_list("0 1\nab cd"), Error);
    CHECK_THROWS_AS(parse_edge_list("0 1\n1"), Error);
    try {
        parse_edge_list("0 1\nxy zw");
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::MalformedInput);
    }
}
