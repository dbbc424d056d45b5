#include "dcp/solver.hpp"

#include <algorithm>
#include <array>
#include <cstring>
#include <string>
#include <unordered_set>
#include <vector>

namespace dcp {

const char* outcome_name(Outcome o) {
    switch (o) {
        case Outcome::Solvable: return "solvable";
        case Outcome::Unsolvable: return "unsolvable";
        case Outcome::Unknown: return "unknown";
    }
    return "?";
}

namespace {

using u128 = unsigned __int128;

constexpr int kAncestorWindow = 32;   // on-stack dominance comparisons per node
constexpr int kDominanceWindow = 64;  // store entries scanned per query
constexpr int kDominanceInsertDepth = 24;

inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Open-addressing set of nonzero u128 keys (0 is the empty-slot sentinel;
// the all-zero configuration never enters the search).
class U128Set {
public:
    U128Set() : slots_(1 << 12, 0), mask_((1 << 12) - 1) {}

    bool contains(u128 k) const {
        std::size_t i = probe(k);
        return slots_[i] == k;
    }

    void insert(u128 k) {
        std::size_t i = probe(k);
        if (slots_[i] == k) return;
        slots_[i] = k;
        if (++count_ * 10 >= slots_.size() * 7) grow();
    }

    std::size_t size() const { return count_; }

private:
    std::size_t probe(u128 k) const {
        std::size_t i = hash(k) & mask_;
        while (slots_[i] != 0 && slots_[i] != k) i = (i + 1) & mask_;
        return i;
    }

    static std::uint64_t hash(u128 k) {
        return mix64(static_cast<std::uint64_t>(k)) ^
               mix64(static_cast<std::uint64_t>(k >> 64) * 0x9e3779b97f4a7c15ULL + 1);
    }

    void grow() {
        std::vector<u128> old;
        old.swap(slots_);
        slots_.assign(old.size() * 2, 0);
        mask_ = slots_.size() - 1;
        for (u128 k : old)
            if (k != 0) {
                std::size_t i = hash(k) & mask_;
                while (slots_[i] != 0) i = (i + 1) & mask_;
                slots_[i] = k;
            }
    }

    std::vector<u128> slots_;
    std::size_t mask_;
    std::size_t count_ = 0;
};

// Ring store of failed configurations for downward-closure pruning; eviction
// only costs speed, never correctness.
struct FastDominanceStore {
    std::vector<std::array<std::uint8_t, 16>> entries;
    std::vector<std::int32_t> totals;
    std::size_t cap = 0;
    std::size_t next = 0;
    std::size_t filled = 0;

    void init(std::size_t c) {
        cap = std::max<std::size_t>(c, 1);
    }

    void insert(const long long* cnt, int n, long long total) {
        std::array<std::uint8_t, 16> e{};
        for (int i = 0; i < n; ++i) e[i] = static_cast<std::uint8_t>(cnt[i]);
        if (entries.size() < cap) {
            entries.push_back(e);
            totals.push_back(static_cast<std::int32_t>(total));
        } else {
            entries[next % cap] = e;
            totals[next % cap] = static_cast<std::int32_t>(total);
        }
        next = (next + 1) % std::max<std::size_t>(cap, 1);
        filled = entries.size();
    }

    bool covers(const long long* cnt, int n, long long total) const {
        std::size_t m = std::min<std::size_t>(filled, kDominanceWindow);
        for (std::size_t j = 0; j < m; ++j) {
            std::size_t idx = (next + filled - 1 - j) % filled;
            if (totals[idx] < total) continue;
            const auto& e = entries[idx];
            bool leq = true;
            for (int i = 0; i < n; ++i)
                if (cnt[i] > e[i]) {
                    leq = false;
                    break;
                }
            if (leq) return true;
        }
        return false;
    }
};

struct FastStore {
    U128Set memo;
    FastDominanceStore dom;

    void init(int, std::size_t dom_cap) { dom.init(dom_cap); }

    static u128 pack(const long long* cnt, int n) {
        u128 k = 0;
        for (int i = n - 1; i >= 0; --i) k = (k << 8) | static_cast<std::uint8_t>(cnt[i]);
        return k;
    }

    bool memo_contains(const long long* cnt, int n) const { return memo.contains(pack(cnt, n)); }
    void memo_insert(const long long* cnt, int n) { memo.insert(pack(cnt, n)); }
    std::size_t memo_size() const { return memo.size(); }

    bool dom_covers(const long long* cnt, int n, long long total) const {
        return dom.covers(cnt, n, total);
    }
    void dom_insert(const long long* cnt, int n, long long total) { dom.insert(cnt, n, total); }
};

struct WideStore {
    std::unordered_set<std::string> memo;
    std::vector<std::vector<long long>> dom_entries;
    std::vector<long long> dom_totals;
    std::size_t dom_cap = 0;
    std::size_t dom_next = 0;

    void init(int, std::size_t cap) { dom_cap = std::max<std::size_t>(cap, 1); }

    static std::string pack(const long long* cnt, int n) {
        std::string s(static_cast<std::size_t>(n) * sizeof(long long), '\0');
        std::memcpy(s.data(), cnt, s.size());
        return s;
    }

    bool memo_contains(const long long* cnt, int n) const {
        return memo.count(pack(cnt, n)) != 0;
    }
    void memo_insert(const long long* cnt, int n) { memo.insert(pack(cnt, n)); }
    std::size_t memo_size() const { return memo.size(); }

    bool dom_covers(const long long* cnt, int n, long long total) const {
        std::size_t filled = dom_entries.size();
        std::size_t m = std::min<std::size_t>(filled, kDominanceWindow);
        for (std::size_t j = 0; j < m; ++j) {
            std::size_t idx = (dom_next + filled - 1 - j) % filled;
            if (dom_totals[idx] < total) continue;
            const auto& e = dom_entries[idx];
            bool leq = true;
            for (int i = 0; i < n; ++i)
                if (cnt[i] > e[i]) {
                    leq = false;
                    break;
                }
            if (leq) return true;
        }
        return false;
    }

    void dom_insert(const long long* cnt, int n, long long total) {
        std::vector<long long> e(cnt, cnt + n);
        if (dom_entries.size() < dom_cap) {
            dom_entries.push_back(std::move(e));
            dom_totals.push_back(total);
        } else {
            dom_entries[dom_next % dom_cap] = std::move(e);
            dom_totals[dom_next % dom_cap] = total;
        }
        dom_next = (dom_next + 1) % dom_cap;
    }
};

struct SearchOutcome {
    Outcome outcome;
    Strategy witness;
    SearchStats stats;
};

template <class Store>
SearchOutcome run_search(const Graph& g, const std::vector<long long>& start,
                         const SolverOptions& opts) {
    const int n = g.n;
    const int nb = (n + 63) / 64;

    // closed-neighborhood bit rows for the goal test
    std::vector<std::uint64_t> nbr(static_cast<std::size_t>(n) * nb, 0);
    auto setbit = [&](int row, int v) { nbr[row * nb + v / 64] |= 1ULL << (v % 64); };
    for (int v = 0; v < n; ++v) {
        setbit(v, v);
        for (int w : g.adj[v]) setbit(v, w);
    }
    std::vector<std::uint64_t> full(nb, 0);
    for (int v = 0; v < n; ++v) full[v / 64] |= 1ULL << (v % 64);

    long long total = 0;
    for (long long c : start) total += c;

    // potential bound tables: weight 2^(SHIFT - d(u, N[w])), exact in 64 bits
    bool potential_on = opts.prune_potential;
    int shift = 0;
    std::vector<long long> wpot;
    std::vector<long long> phi;
    if (potential_on) {
        auto dist = distance_matrix(g);
        std::vector<int> dmin(static_cast<std::size_t>(n) * n, 0);
        for (int u = 0; u < n; ++u)
            for (int w = 0; w < n; ++w) {
                int best = dist[u][w];
                for (int x : g.adj[w]) best = std::min(best, dist[u][x]);
                dmin[u * n + w] = best;
                shift = std::max(shift, best);
            }
        if (shift > 40 || total > (1LL << 20)) {
            potential_on = false; // keep the weights exact
        } else {
            wpot.assign(static_cast<std::size_t>(n) * n, 0);
            for (int u = 0; u < n; ++u)
                for (int w = 0; w < n; ++w)
                    wpot[u * n + w] = 1LL << (shift - dmin[u * n + w]);
            phi.assign(n, 0);
            for (int w = 0; w < n; ++w) {
                long long s = 0;
                for (int u = 0; u < n; ++u) s += start[u] * wpot[u * n + w];
                phi[w] = s;
            }
        }
    }
    const long long phi_threshold = 1LL << shift;

    std::vector<long long> cnt = start;

    auto goal = [&]() {
        for (int b = 0; b < nb; ++b) {
            std::uint64_t dom = 0;
            for (int v = 0; v < n; ++v)
                if (cnt[v] > 0) dom |= nbr[v * nb + b];
            if (dom != full[b]) return false;
        }
        return true;
    };

    auto apply = [&](PebblingMove m) {
        cnt[m.from] -= 2;
        cnt[m.to] += 1;
        total -= 1;
        if (potential_on)
            for (int w = 0; w < n; ++w)
                phi[w] += wpot[m.to * n + w] - 2 * wpot[m.from * n + w];
    };
    auto undo = [&](PebblingMove m) {
        cnt[m.from] += 2;
        cnt[m.to] -= 1;
        total += 1;
        if (potential_on)
            for (int w = 0; w < n; ++w)
                phi[w] -= wpot[m.to * n + w] - 2 * wpot[m.from * n + w];
    };
    auto potential_bad = [&]() {
        if (!potential_on) return false;
        for (int w = 0; w < n; ++w)
            if (phi[w] < phi_threshold) return true;
        return false;
    };

    SearchStats stats;
    Store store;
    store.init(n, opts.dominance_cap);

    // ring of recent ancestor snapshots for on-stack downward-closure pruning
    std::vector<long long> anc(static_cast<std::size_t>(kAncestorWindow) * n, 0);
    std::vector<std::size_t> anc_depth(kAncestorWindow, static_cast<std::size_t>(-1));
    auto anc_save = [&](std::size_t depth) {
        std::copy(cnt.begin(), cnt.end(), anc.begin() + (depth % kAncestorWindow) * n);
        anc_depth[depth % kAncestorWindow] = depth;
    };
    auto ancestor_covers = [&](std::size_t depth) {
        std::size_t lo = depth > kAncestorWindow ? depth - kAncestorWindow : 0;
        for (std::size_t d = depth; d-- > lo;) {
            if (anc_depth[d % kAncestorWindow] != d) continue; // overwritten by a deeper branch
            const long long* a = anc.data() + (d % kAncestorWindow) * n;
            bool leq = true;
            for (int i = 0; i < n; ++i)
                if (cnt[i] > a[i]) {
                    leq = false;
                    break;
                }
            if (leq) return true;
        }
        return false;
    };

    struct Frame {
        int from;
        int aidx;
        PebblingMove lead;
    };
    std::vector<Frame> stack;
    std::vector<PebblingMove> path;

    // root: the goal test on the initial configuration happened in solvable();
    // a root that fails the potential bound is already proven unsolvable.
    if (potential_bad()) {
        stats.potential_prunes = 1;
        return {Outcome::Unsolvable, {}, stats};
    }
    stats.nodes_expanded = 1;
    anc_save(0);
    stack.push_back({0, 0, {-1, -1}});
    stats.peak_frontier = 1;

    while (!stack.empty()) {
        Frame& f = stack.back();
        while (f.from < n && (cnt[f.from] < 2 ||
                              f.aidx >= static_cast<int>(g.adj[f.from].size()))) {
            ++f.from;
            f.aidx = 0;
        }
        if (f.from < n) {
            PebblingMove m{f.from, g.adj[f.from][f.aidx]};
            ++f.aidx;
            apply(m);
            path.push_back(m);
            if (goal()) {
                stats.visited_states = store.memo_size();
                return {Outcome::Solvable, Strategy{path}, stats};
            }
            if (stats.nodes_expanded >= opts.max_nodes) {
                stats.visited_states = store.memo_size();
                return {Outcome::Unknown, {}, stats};
            }
            ++stats.nodes_expanded;
            bool cut = false;
            if (potential_bad()) {
                ++stats.potential_prunes;
                cut = true;
            } else if (store.memo_contains(cnt.data(), n)) {
                ++stats.memo_hits;
                cut = true;
            } else if (opts.prune_dominance &&
                       (ancestor_covers(stack.size()) ||
                        store.dom_covers(cnt.data(), n, total))) {
                ++stats.dominance_prunes;
                cut = true;
            }
            if (cut) {
                undo(m);
                path.pop_back();
                continue;
            }
            anc_save(stack.size());
            stack.push_back({0, 0, m});
            stats.peak_frontier = std::max<std::uint64_t>(stats.peak_frontier, stack.size());
            continue;
        }
        // every move from this state failed: record and backtrack
        store.memo_insert(cnt.data(), n);
        if (opts.prune_dominance && stack.size() <= kDominanceInsertDepth)
            store.dom_insert(cnt.data(), n, total);
        if (f.lead.from >= 0) {
            undo(f.lead);
            path.pop_back();
        }
        stack.pop_back();
    }

    stats.visited_states = store.memo_size();
    return {Outcome::Unsolvable, {}, stats};
}

} // namespace

Decision solvable(const Graph& g, const Configuration& c, const SolverOptions& opts) {
    if (c.size() != g.n)
        throw Error(ErrorKind::SizeMismatch, "configuration not bound to this graph");
    for (long long v : c.counts)
        if (v < 0) throw Error(ErrorKind::InvalidParameter, "negative pebble count");

    Decision d;
    if (is_domination_cover(g, c)) {
        d.outcome = Outcome::Solvable;
        d.witness = Strategy{};
        return d;
    }
    long long total = c.total();
    if (total == 0) {
        d.outcome = Outcome::Unsolvable;
        return d;
    }

    SearchOutcome r = (g.n <= 16 && total <= 255)
                          ? run_search<FastStore>(g, c.counts, opts)
                          : run_search<WideStore>(g, c.counts, opts);
    d.outcome = r.outcome;
    d.stats = r.stats;
    if (r.outcome == Outcome::Solvable) d.witness = std::move(r.witness);
    return d;
}

bool verify_strategy(const Graph& g, const Configuration& c, const Strategy& s,
                     std::string* diagnostic) {
    Configuration final_cfg = Configuration::zeros(g.n);
    try {
        final_cfg = replay(g, c, s);
    } catch (const Error& e) {
        if (diagnostic) *diagnostic = e.what();
        return false;
    }
    if (!is_domination_cover(g, final_cfg)) {
        if (diagnostic) *diagnostic = "final configuration's support is not dominating";
        return false;
    }
    return true;
}

} // namespace dcp
