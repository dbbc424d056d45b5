#include "dcp/graph.hpp"

#include <algorithm>
#include <queue>
#include <sstream>

namespace dcp {

const char* family_name(Family f) {
    switch (f) {
        case Family::Path: return "path";
        case Family::Cycle: return "cycle";
        case Family::Complete: return "complete";
        case Family::Multipartite: return "multipartite";
        case Family::Wheel: return "wheel";
        case Family::BTree: return "btree";
    }
    return "?";
}

Family family_from_name(const std::string& name) {
    if (name == "path") return Family::Path;
    if (name == "cycle") return Family::Cycle;
    if (name == "complete") return Family::Complete;
    if (name == "multipartite") return Family::Multipartite;
    if (name == "wheel") return Family::Wheel;
    if (name == "btree") return Family::BTree;
    throw Error(ErrorKind::MalformedInput, "unknown family: " + name);
}

FamilySpec FamilySpec::parse(const std::string& text) {
    auto colon = text.find(':');
    if (colon == std::string::npos || colon == 0 || colon + 1 >= text.size())
        throw Error(ErrorKind::MalformedInput, "family spec must look like 'path:6': " + text);
    std::string name = text.substr(0, colon);
    std::string rest = text.substr(colon + 1);

    FamilySpec spec;
    spec.family = family_from_name(name);

    std::stringstream ss(rest);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            size_t pos = 0;
            long long v = std::stoll(tok, &pos);
            if (pos != tok.size()) throw std::invalid_argument(tok);
            spec.params.push_back(v);
        } catch (const std::exception&) {
            throw Error(ErrorKind::MalformedInput, "bad family parameter: " + tok);
        }
    }
    if (spec.params.empty())
        throw Error(ErrorKind::MalformedInput, "family spec missing parameter: " + text);
    if (spec.family != Family::Multipartite && spec.params.size() != 1)
        throw Error(ErrorKind::MalformedInput,
                    "family " + name + " takes exactly one parameter");
    spec.validate();
    return spec;
}

std::string FamilySpec::to_string() const {
    std::string out = family_name(family);
    out += ':';
    for (size_t i = 0; i < params.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(params[i]);
    }
    return out;
}

void FamilySpec::validate() const {
    auto bad = [&](const std::string& why) {
        throw Error(ErrorKind::InvalidParameter, "bad " + std::string(family_name(family)) +
                                                     " parameters: " + why);
    };
    switch (family) {
        case Family::Path:
            if (params[0] < 1) bad("path needs n >= 1");
            break;
        case Family::Cycle:
            if (params[0] < 3) bad("cycle needs n >= 3");
            break;
        case Family::Complete:
            if (params[0] < 1) bad("complete needs n >= 1");
            break;
        case Family::Wheel:
            if (params[0] < 3) bad("wheel needs n >= 3 rim vertices");
            break;
        case Family::BTree:
            if (params[0] < 0) bad("btree needs height >= 0");
            if (params[0] > 20) bad("btree height capped at 20");
            break;
        case Family::Multipartite: {
            if (params.size() < 2) bad("multipartite needs at least two class sizes");
            for (size_t i = 0; i < params.size(); ++i) {
                if (params[i] < 1) bad("class sizes must be >= 1");
                if (i && params[i] > params[i - 1]) bad("class sizes must be nonincreasing");
            }
            break;
        }
    }
    if (family != Family::Multipartite && family != Family::BTree && params[0] > 1'000'000)
        bad("size capped at 1e6");
}

long long FamilySpec::vertex_count() const {
    switch (family) {
        case Family::Path:
        case Family::Cycle:
        case Family::Complete: return params[0];
        case Family::Wheel: return params[0] + 1;
        case Family::BTree: return (1LL << (params[0] + 1)) - 1;
        case Family::Multipartite: {
            long long s = 0;
            for (long long p : params) s += p;
            return s;
        }
    }
    return 0;
}

bool Graph::has_edge(int u, int v) const {
    if (u < 0 || u >= n || v < 0 || v >= n) return false;
    return std::binary_search(adj[u].begin(), adj[u].end(), v);
}

long long Graph::edge_count() const {
    long long deg = 0;
    for (const auto& a : adj) deg += static_cast<long long>(a.size());
    return deg / 2;
}

bool Graph::same_topology(const Graph& other) const {
    return n == other.n && adj == other.adj;
}

namespace {

bool connected(int n, const std::vector<std::vector<int>>& adj) {
    if (n <= 0) return false;
    std::vector<char> seen(n, 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    int cnt = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : adj[v])
            if (!seen[w]) {
                seen[w] = 1;
                ++cnt;
                q.push(w);
            }
    }
    return cnt == n;
}

} // namespace

Graph make_graph(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 1) throw Error(ErrorKind::InvalidParameter, "graph needs at least one vertex");
    Graph g;
    g.n = n;
    g.adj.assign(n, {});
    g.labels.assign(n, "");
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw Error(ErrorKind::VertexOutOfRange,
                        "edge endpoint out of range: " + std::to_string(u) + " " +
                            std::to_string(v));
        if (u == v)
            throw Error(ErrorKind::SelfLoop, "self-loop at vertex " + std::to_string(u));
        g.adj[u].push_back(v);
        g.adj[v].push_back(u);
    }
    for (int v = 0; v < n; ++v) {
        auto& a = g.adj[v];
        std::sort(a.begin(), a.end());
        if (std::adjacent_find(a.begin(), a.end()) != a.end())
            throw Error(ErrorKind::DuplicateEdge,
                        "duplicate edge at vertex " + std::to_string(v));
    }
    if (!connected(n, g.adj))
        throw Error(ErrorKind::Disconnected, "graph is not connected");
    return g;
}

Graph build_family(const FamilySpec& spec) {
    spec.validate();
    std::vector<std::pair<int, int>> edges;
    long long nv = spec.vertex_count();
    if (nv > 5'000'000)
        throw Error(ErrorKind::InvalidParameter, "family instance too large to build");
    int n = static_cast<int>(nv);

    switch (spec.family) {
        case Family::Path:
            for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
            break;
        case Family::Cycle:
            for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
            break;
        case Family::Complete:
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) edges.push_back({i, j});
            break;
        case Family::Wheel: {
            int rim = static_cast<int>(spec.params[0]);
            for (int i = 1; i <= rim; ++i) {
                edges.push_back({0, i});
                edges.push_back({i, i == rim ? 1 : i + 1});
            }
            break;
        }
        case Family::BTree:
            for (int v = 1; v < n; ++v) edges.push_back({(v - 1) / 2, v});
            break;
        case Family::Multipartite: {
            std::vector<int> start;
            int acc = 0;
            for (long long s : spec.params) {
                start.push_back(acc);
                acc += static_cast<int>(s);
            }
            start.push_back(acc);
            for (size_t a = 0; a < spec.params.size(); ++a)
                for (size_t b = a + 1; b < spec.params.size(); ++b)
                    for (int u = start[a]; u < start[a + 1]; ++u)
                        for (int v = start[b]; v < start[b + 1]; ++v) edges.push_back({u, v});
            break;
        }
    }

    // n == 1 families (P1, K1, B0) have no edges; make_graph accepts them.
    Graph g = make_graph(n, edges);
    g.family = spec;
    if (spec.family == Family::Wheel) g.labels[0] = "hub";
    if (spec.family == Family::BTree) {
        g.labels[0] = "root";
        int h = static_cast<int>(spec.params[0]);
        for (int v = (1 << h) - 1; v < n; ++v) g.labels[v] = "bottom-row";
    }
    return g;
}

bool is_dominating(const Graph& g, const std::vector<int>& s) {
    std::vector<char> covered(g.n, 0);
    for (int v : s) {
        if (v < 0 || v >= g.n)
            throw Error(ErrorKind::VertexOutOfRange, "vertex id out of range: " + std::to_string(v));
        covered[v] = 1;
        for (int w : g.adj[v]) covered[w] = 1;
    }
    for (int v = 0; v < g.n; ++v)
        if (!covered[v]) return false;
    return true;
}

std::vector<std::vector<int>> distance_matrix(const Graph& g) {
    std::vector<std::vector<int>> d(g.n, std::vector<int>(g.n, -1));
    for (int s = 0; s < g.n; ++s) {
        d[s][s] = 0;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int w : g.adj[v])
                if (d[s][w] < 0) {
                    d[s][w] = d[s][v] + 1;
                    q.push(w);
                }
        }
    }
    return d;
}

Graph parse_edge_list(const std::string& text) {
    std::vector<std::pair<int, int>> edges;
    int max_id = -1;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::istringstream ls(line);
        long long u, v;
        std::string extra;
        if (!(ls >> u) || !(ls >> v) || (ls >> extra))
            throw Error(ErrorKind::MalformedInput,
                        "line " + std::to_string(lineno) + ": expected 'u v'");
        if (u < 0 || v < 0 || u > 1'000'000 || v > 1'000'000)
            throw Error(ErrorKind::MalformedInput,
                        "line " + std::to_string(lineno) + ": vertex id out of range");
        edges.push_back({static_cast<int>(u), static_cast<int>(v)});
        max_id = std::max(max_id, static_cast<int>(std::max(u, v)));
    }
    if (edges.empty())
        throw Error(ErrorKind::MalformedInput, "edge list is empty");
    return make_graph(max_id + 1, edges);
}

std::string emit_edge_list(const Graph& g) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < g.n; ++u)
        for (int v : g.adj[u])
            if (u < v) edges.push_back({u, v});
    std::sort(edges.begin(), edges.end());
    std::string out;
    for (size_t i = 0; i < edges.size(); ++i) {
        if (i) out += '\n';
        out += std::to_string(edges[i].first) + ' ' + std::to_string(edges[i].second);
    }
    return out;
}

std::string emit_dot(const Graph& g) {
    std::string out = "graph G {\n";
    for (int v = 0; v < g.n; ++v) {
        if (!g.labels.empty() && !g.labels[v].empty())
            out += "  " + std::to_string(v) + " [label=\"" + std::to_string(v) + ":" +
                   g.labels[v] + "\"];\n";
    }
    for (int u = 0; u < g.n; ++u)
        for (int v : g.adj[u])
            if (u < v) out += "  " + std::to_string(u) + " -- " + std::to_string(v) + ";\n";
    out += "}\n";
    return out;
}

} // namespace dcp
