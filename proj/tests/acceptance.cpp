// Acceptance suite: runs every criterion at its stated tolerance and prints
// one PASS/FAIL line per criterion. Exit code 0 iff all pass.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "dcp/extremal.hpp"
#include "dcp/formulas.hpp"
#include "dcp/psi_exact.hpp"
#include "dcp/solver.hpp"
#include "dcp/verify.hpp"

using namespace dcp;

namespace {

struct Criterion {
    int id = 0;
    bool pass = true;
    std::vector<std::string> failures;
    double seconds = 0.0;

    explicit Criterion(int i) : id(i) {}

    void fail(const std::string& why) {
        pass = false;
        failures.push_back(why);
    }
};

double now_minus(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// [1] btree formula golden values, zero tolerance, < 1 s
Criterion criterion1() {
    Criterion c(1);
    auto t0 = std::chrono::steady_clock::now();
    const long long golden[] = {11,     81,      609,      4777,    38105,
                                304473, 2434969, 19478809, 155827481};
    for (int n = 2; n <= 10; ++n) {
        long long got = psi_btree(n);
        if (got != golden[n - 2])
            c.fail("psi_btree(" + std::to_string(n) + ") = " + std::to_string(got) +
                   ", want " + std::to_string(golden[n - 2]));
    }
    c.seconds = now_minus(t0);
    if (c.seconds >= 1.0) c.fail("runtime " + std::to_string(c.seconds) + "s, limit 1s");
    return c;
}

// [2] oracle-vs-formula agreement, exhaustive, zero tolerance, < 10 min total
Criterion criterion2() {
    Criterion c(2);
    auto t0 = std::chrono::steady_clock::now();

    std::vector<FamilySpec> instances;
    for (long long n = 3; n <= 6; ++n) instances.push_back({Family::Path, {n}});
    for (long long n = 3; n <= 7; ++n) instances.push_back({Family::Cycle, {n}});
    for (long long n = 3; n <= 6; ++n) instances.push_back({Family::Wheel, {n}});
    for (long long n = 1; n <= 5; ++n) instances.push_back({Family::Complete, {n}});
    for (const auto& sizes : multipartite_instances(6))
        instances.push_back({Family::Multipartite, sizes});
    for (long long h = 0; h <= 2; ++h) instances.push_back({Family::BTree, {h}});

    for (const auto& spec : instances) {
        Graph g = build_family(spec);
        long long formula = psi_formula(spec);
        PsiResult r = psi_exact(g);
        if (!r.value) {
            c.fail(spec.to_string() + ": exact computation did not finish");
            continue;
        }
        if (*r.value != formula)
            c.fail(spec.to_string() + ": formula=" + std::to_string(formula) +
                   " exact=" + std::to_string(*r.value));
    }

    // the B2 case must enumerate the full 10-pebble layer (8008 configurations)
    // and the full 11-pebble layer
    {
        Graph b2 = build_family({Family::BTree, {2}});
        unsigned long long layer10 = 0, layer11 = 0, unsolvable10 = 0, unsolvable11 = 0;
        for (CompositionStream cs(7, 10); cs.valid(); cs.advance()) {
            ++layer10;
            if (solvable(b2, Configuration{cs.current()}).outcome == Outcome::Unsolvable)
                ++unsolvable10;
        }
        for (CompositionStream cs(7, 11); cs.valid(); cs.advance()) {
            ++layer11;
            if (solvable(b2, Configuration{cs.current()}).outcome == Outcome::Unsolvable)
                ++unsolvable11;
        }
        if (layer10 != 8008)
            c.fail("B2 10-pebble layer enumerated " + std::to_string(layer10) +
                   " configurations, want 8008");
        if (unsolvable10 == 0) c.fail("B2 10-pebble layer has no unsolvable configuration");
        if (unsolvable11 != 0)
            c.fail("B2 11-pebble layer has " + std::to_string(unsolvable11) +
                   " unsolvable configurations, want 0");
        if (layer11 != 12376)
            c.fail("B2 11-pebble layer enumerated " + std::to_string(layer11) +
                   " configurations, want 12376");
    }

    c.seconds = now_minus(t0);
    if (c.seconds >= 600.0) c.fail("runtime " + std::to_string(c.seconds) + "s, limit 600s");
    return c;
}

// [3] lower-bound certifications, B3 within the default node budget
Criterion criterion3() {
    Criterion c(3);
    auto t0 = std::chrono::steady_clock::now();
    SolverOptions defaults; // max_nodes = 1e8

    auto certify = [&](const std::string& name, const FamilySpec& spec,
                       const Configuration& config) {
        Graph g = build_family(spec);
        Decision d = solvable(g, config, defaults);
        if (d.outcome != Outcome::Unsolvable)
            c.fail(name + " (total " + std::to_string(config.total()) + ") decided " +
                   outcome_name(d.outcome) + ", want unsolvable");
        return d;
    };

    {
        Configuration fig3 = Configuration::zeros(7);
        fig3.counts[3] = 1;
        fig3.counts[6] = 9;
        certify("B2 leaf split (1,9)", {Family::BTree, {2}}, fig3);
    }
    {
        Configuration fig4 = Configuration::zeros(15);
        fig4.counts[7] = 1;
        fig4.counts[9] = 1;
        fig4.counts[11] = 1;
        fig4.counts[14] = 77;
        Decision d = certify("B3 leaf split (1,1,1,77)", {Family::BTree, {3}}, fig4);
        if (d.stats.nodes_expanded >= defaults.max_nodes)
            c.fail("B3 certification exhausted the default node budget");
    }
    for (long long n = 3; n <= 7; ++n)
        certify("path_worst(" + std::to_string(n) + ")", {Family::Path, {n}},
                path_worst(n).config);
    for (long long n = 3; n <= 7; ++n)
        certify("cycle_worst(" + std::to_string(n) + ")", {Family::Cycle, {n}},
                cycle_worst(n).config);
    for (long long n = 3; n <= 6; ++n)
        certify("wheel_worst(" + std::to_string(n) + ")", {Family::Wheel, {n}},
                wheel_worst(n).config);

    c.seconds = now_minus(t0);
    return c;
}

// [4] sampled upper evidence for B3: 200 seeded 81-pebble draws, all solvable
Criterion criterion4() {
    Criterion c(4);
    auto t0 = std::chrono::steady_clock::now();
    Graph b3 = build_family({Family::BTree, {3}});
    std::uint64_t rng = 2024; // pinned seed
    for (int t = 0; t < 200; ++t) {
        Configuration cfg = sample_configuration(b3.n, 81, rng);
        Decision d = solvable(b3, cfg);
        if (d.outcome != Outcome::Solvable)
            c.fail("sample " + std::to_string(t) + " (" + config_to_compact(cfg) +
                   ") decided " + outcome_name(d.outcome));
    }
    c.seconds = now_minus(t0);
    return c;
}

// [5] property suites
Criterion criterion5() {
    Criterion c(5);
    auto t0 = std::chrono::steady_clock::now();
    SuiteResult mono = suite_monotonicity(1000, 42);
    if (!mono.pass) c.fail("monotonicity: " + mono.detail);
    SuiteResult replay = suite_witness_replay(1000, 42);
    if (!replay.pass) c.fail("witness-replay: " + replay.detail);
    SuiteResult prune = suite_pruning_equivalence();
    if (!prune.pass) c.fail("pruning-equivalence: " + prune.detail);
    SuiteResult svw = suite_single_vertex_worst();
    if (!svw.pass) c.fail("single-vertex-worst: " + svw.detail);
    c.seconds = now_minus(t0);
    return c;
}

// [6] formula-internal checks
Criterion criterion6() {
    Criterion c(6);
    auto t0 = std::chrono::steady_clock::now();
    for (long long n = 6; n <= 40; ++n)
        if (psi_path(n) - psi_path(n - 3) != (1LL << (n - 2)))
            c.fail("path recurrence fails at n=" + std::to_string(n));
    for (long long n = 3; n <= 20; ++n)
        if (psi_btree(n) < 6 * psi_btree(n - 1))
            c.fail("six-fold btree bound fails at n=" + std::to_string(n));
    for (long long n = 8; n <= 20; ++n) {
        double ratio = double(psi_btree(n)) / double(psi_btree(n - 1));
        if (std::abs(ratio - 8.0) > 0.08)
            c.fail("btree ratio " + std::to_string(ratio) + " off 8 by more than 1% at n=" +
                   std::to_string(n));
    }
    c.seconds = now_minus(t0);
    return c;
}

const char* criterion_label(int id) {
    switch (id) {
        case 1: return "btree formula golden values n=2..10";
        case 2: return "oracle-vs-formula agreement (exhaustive ranges)";
        case 3: return "lower-bound certifications (canonical bad configurations)";
        case 4: return "sampled upper evidence for B3 (200 x 81 pebbles)";
        case 5: return "property suites (monotone, replay, pruning, single-vertex)";
        case 6: return "formula-internal checks (recurrence, 6x bound, ratio->8)";
    }
    return "?";
}

} // namespace

int main() {
    std::vector<Criterion> results;
    results.push_back(criterion1());
    results.push_back(criterion2());
    results.push_back(criterion3());
    results.push_back(criterion4());
    results.push_back(criterion5());
    results.push_back(criterion6());

    int passed = 0;
    for (const auto& c : results) {
        std::printf("criterion %d: %-58s %s (%.2fs)\n", c.id, criterion_label(c.id),
                    c.pass ? "PASS" : "FAIL", c.seconds);
        for (const auto& f : c.failures) std::printf("    - %s\n", f.c_str());
        if (c.pass) ++passed;
    }
    std::printf("acceptance: %d/%zu criteria pass\n", passed, results.size());
    return passed == static_cast<int>(results.size()) ? 0 : 1;
}
