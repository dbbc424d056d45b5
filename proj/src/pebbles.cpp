#include "dcp/pebbles.hpp"

#include <sstream>

#include "json.hpp"

namespace dcp {

long long Configuration::total() const {
    long long t = 0;
    for (long long c : counts) t += c;
    return t;
}

std::vector<int> Configuration::support() const {
    std::vector<int> s;
    for (int v = 0; v < size(); ++v)
        if (counts[v] > 0) s.push_back(v);
    return s;
}

namespace {

void check_bound(const Configuration& c, const Graph& g) {
    if (c.size() != g.n)
        throw Error(ErrorKind::SizeMismatch,
                    "configuration has " + std::to_string(c.size()) + " entries, graph has " +
                        std::to_string(g.n) + " vertices");
}

} // namespace

Configuration apply_move(const Configuration& c, PebblingMove m, const Graph& g) {
    check_bound(c, g);
    if (m.from < 0 || m.from >= g.n || m.to < 0 || m.to >= g.n)
        throw Error(ErrorKind::VertexOutOfRange,
                    "move endpoint out of range: " + std::to_string(m.from) + "->" +
                        std::to_string(m.to));
    if (!g.has_edge(m.from, m.to))
        throw Error(ErrorKind::NotAdjacent, "vertices " + std::to_string(m.from) + " and " +
                                                std::to_string(m.to) + " are not adjacent");
    if (c.counts[m.from] < 2)
        throw Error(ErrorKind::InsufficientPebbles,
                    "vertex " + std::to_string(m.from) + " holds " +
                        std::to_string(c.counts[m.from]) + " pebbles, need 2");
    Configuration out = c;
    out.counts[m.from] -= 2;
    out.counts[m.to] += 1;
    return out;
}

bool is_domination_cover(const Graph& g, const Configuration& c) {
    check_bound(c, g);
    return is_dominating(g, c.support());
}

Configuration replay(const Graph& g, const Configuration& start, const Strategy& s) {
    Configuration cur = start;
    for (size_t i = 0; i < s.moves.size(); ++i) {
        try {
            cur = apply_move(cur, s.moves[i], g);
        } catch (const Error& e) {
            throw Error(ErrorKind::IllegalMove,
                        "illegal move at index " + std::to_string(i) + ": " + e.what(),
                        static_cast<long long>(i));
        }
    }
    return cur;
}

// --- wire formats ---

using nlohmann::json;

std::string config_to_json(const Configuration& c) {
    json j;
    j["counts"] = c.counts;
    return j.dump();
}

Configuration config_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw Error(ErrorKind::MalformedInput, std::string("bad configuration JSON: ") + e.what());
    }
    if (!j.contains("counts") || !j["counts"].is_array())
        throw Error(ErrorKind::MalformedInput, "configuration JSON needs a \"counts\" array");
    Configuration c;
    for (const auto& v : j["counts"]) {
        if (!v.is_number_integer() || v.get<long long>() < 0)
            throw Error(ErrorKind::MalformedInput, "counts must be nonnegative integers");
        c.counts.push_back(v.get<long long>());
    }
    return c;
}

std::string config_to_compact(const Configuration& c) {
    std::string out;
    for (int v = 0; v < c.size(); ++v) {
        if (c.counts[v] == 0) continue;
        if (!out.empty()) out += ',';
        out += std::to_string(v) + ':' + std::to_string(c.counts[v]);
    }
    return out;
}

Configuration config_from_compact(const std::string& text, int n) {
    Configuration c = Configuration::zeros(n);
    if (text.empty()) return c;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto colon = item.find(':');
        if (colon == std::string::npos)
            throw Error(ErrorKind::MalformedInput, "compact config item needs 'v:count': " + item);
        try {
            size_t p1 = 0, p2 = 0;
            long long v = std::stoll(item.substr(0, colon), &p1);
            long long cnt = std::stoll(item.substr(colon + 1), &p2);
            if (p1 != colon || p2 != item.size() - colon - 1) throw std::invalid_argument(item);
            if (v < 0 || v >= n)
                throw Error(ErrorKind::VertexOutOfRange,
                            "compact config vertex out of range: " + std::to_string(v));
            if (cnt < 0)
                throw Error(ErrorKind::MalformedInput, "negative count in compact config");
            c.counts[v] += cnt;
        } catch (const Error&) {
            throw;
        } catch (const std::exception&) {
            throw Error(ErrorKind::MalformedInput, "bad compact config item: " + item);
        }
    }
    return c;
}

std::string strategy_to_json(const Strategy& s) {
    json moves = json::array();
    for (const auto& m : s.moves) moves.push_back({m.from, m.to});
    json j;
    j["moves"] = moves;
    return j.dump();
}

Strategy strategy_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw Error(ErrorKind::MalformedInput, std::string("bad strategy JSON: ") + e.what());
    }
    if (!j.contains("moves") || !j["moves"].is_array())
        throw Error(ErrorKind::MalformedInput, "strategy JSON needs a \"moves\" array");
    Strategy s;
    for (const auto& m : j["moves"]) {
        if (!m.is_array() || m.size() != 2 || !m[0].is_number_integer() ||
            !m[1].is_number_integer())
            throw Error(ErrorKind::MalformedInput, "each move must be a [from,to] pair");
        s.moves.push_back({m[0].get<int>(), m[1].get<int>()});
    }
    return s;
}

} // namespace dcp
