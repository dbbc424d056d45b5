#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "dcp/extremal.hpp"
#include "dcp/formulas.hpp"
#include "dcp/psi_exact.hpp"
#include "dcp/verify.hpp"

using namespace dcp;

TEST_CASE("composition stream order and counts") {
    CompositionStream cs(2, 2);
    std::vector<std::vector<long long>> seen;
    for (; cs.valid(); cs.advance()) seen.push_back(cs.current());
    std::vector<std::vector<long long>> expect = {{2, 0}, {1, 1}, {0, 2}};
    CHECK(seen == expect);

    CompositionStream cs0(3, 0);
    int count0 = 0;
    for (; cs0.valid(); cs0.advance()) {
        CHECK(cs0.current() == std::vector<long long>{0, 0, 0});
        ++count0;
    }
    CHECK(count0 == 1);

    // n=4, k=4: stream length equals C(7,3) = 35, all distinct, all sum to 4
    std::set<std::vector<long long>> distinct;
    int streamed = 0;
    for (CompositionStream c4(4, 4); c4.valid(); c4.advance()) {
        ++streamed;
        distinct.insert(c4.current());
        long long sum = 0;
        for (long long x : c4.current()) sum += x;
        CHECK(sum == 4);
    }
    CHECK(streamed == 35);
    CHECK(distinct.size() == 35);
    CHECK(CompositionStream::count(4, 4) == 35);
    CHECK(CompositionStream::count(7, 10) == 8008);
    CHECK(CompositionStream::count(1, 1'000'000) == 1);
}

TEST_CASE("psi_exact on the small families") {
    auto exact = [](const char* s) {
        Graph g = build_family(FamilySpec::parse(s));
        PsiResult r = psi_exact(g);
        REQUIRE(r.value.has_value());
        REQUIRE(r.method == PsiMethod::Exhaustive);
        return *r.value;
    };
    CHECK(exact("path:3") == 2);
    CHECK(exact("path:4") == 5);
    CHECK(exact("cycle:4") == 3);
    CHECK(exact("complete:5") == 1);
    CHECK(exact("btree:0") == 1);
    CHECK(exact("btree:1") == 2);
}

TEST_CASE("psi_exact(P4) carries an unsolvable witness of size 4") {
    Graph p4 = build_family({Family::Path, {4}});
    PsiResult r = psi_exact(p4);
    REQUIRE(r.value == 5);
    REQUIRE(r.witness_bad_config.has_value());
    CHECK(r.witness_bad_config->total() == 4);
    CHECK(solvable(p4, *r.witness_bad_config).outcome == Outcome::Unsolvable);
}

TEST_CASE("psi_exact(B2) = 11, the full-layer stress of the oracle") {
    Graph b2 = build_family({Family::BTree, {2}});
    PsiResult r = psi_exact(b2);
    CHECK(r.value == 11);
    REQUIRE(r.witness_bad_config.has_value());
    CHECK(r.witness_bad_config->total() == 10);
    // the 11-pebble layer alone has C(17,6) = 12376 configurations
    CHECK(r.stats.configs_tested >= 12376);
}

TEST_CASE("known discrepancy: exhaustive psi(C6) = 6 while the closed form gives 7") {
    Graph c6 = build_family({Family::Cycle, {6}});
    PsiResult r = psi_exact(c6);
    CHECK(r.value == 6);
    CHECK(psi_cycle(6) == 7);
    // the hint starts at the formula value; the downward scan still lands exactly
    REQUIRE(r.witness_bad_config.has_value());
    CHECK(r.witness_bad_config->total() == 5);
}

TEST_CASE("known discrepancy: multipartite s1=2 with singleton classes is 2, not 3") {
    for (const char* s : {"multipartite:2,1", "multipartite:2,1,1", "multipartite:2,2,1"}) {
        Graph g = build_family(FamilySpec::parse(s));
        PsiResult r = psi_exact(g);
        CHECK(r.value == 2);
    }
    // without singletons the s1=2 clause is right
    Graph k22 = build_family(FamilySpec::parse("multipartite:2,2"));
    CHECK(psi_exact(k22).value == 3);
    Graph k222 = build_family(FamilySpec::parse("multipartite:2,2,2"));
    CHECK(psi_exact(k222).value == 3);
}

TEST_CASE("oracle agrees with the formulas on the exhaustive ranges") {
    auto agree = [](const FamilySpec& spec) {
        Graph g = build_family(spec);
        PsiResult r = psi_exact(g);
        REQUIRE(r.value.has_value());
        CHECK(*r.value == psi_formula(spec));
    };
    for (long long n = 3; n <= 6; ++n) agree({Family::Path, {n}});
    for (long long n : {3, 4, 5, 7}) agree({Family::Cycle, {n}}); // 6 is the known exception
    for (long long n = 3; n <= 6; ++n) agree({Family::Wheel, {n}});
    for (long long n = 1; n <= 5; ++n) agree({Family::Complete, {n}});
    for (long long h = 0; h <= 2; ++h) agree({Family::BTree, {h}});
}

TEST_CASE("symmetry reduction never changes the value") {
    for (const char* s : {"cycle:5", "cycle:6", "complete:4", "complete:5"}) {
        Graph g = build_family(FamilySpec::parse(s));
        PsiOptions with;
        PsiOptions without;
        without.symmetry_reduction = false;
        PsiResult a = psi_exact(g, with);
        PsiResult b = psi_exact(g, without);
        CHECK(a.value == b.value);
        CHECK(a.stats.configs_tested < b.stats.configs_tested); // it does reduce work
    }
}

TEST_CASE("monotone frontier: layers above psi are all solvable, below have failures") {
    Graph c5 = build_family({Family::Cycle, {5}});
    long long psi = *psi_exact(c5).value;
    for (long long k = 1; k <= psi + 2; ++k) {
        bool all = true;
        for (CompositionStream cs(c5.n, k); cs.valid(); cs.advance())
            if (!solvable(c5, Configuration{cs.current()}).solvable()) {
                all = false;
                break;
            }
        CHECK(all == (k >= psi));
    }
}

TEST_CASE("max unsolvable single vertex") {
    Graph c5 = build_family({Family::Cycle, {5}});
    auto [vc, kc] = max_unsolvable_single_vertex(c5);
    CHECK(vc == 0); // every vertex ties; smallest id wins
    CHECK(kc == 3);

    Graph p4 = build_family({Family::Path, {4}});
    auto [vp, kp] = max_unsolvable_single_vertex(p4);
    CHECK(vp == 0);
    CHECK(kp == 4);

    Graph k3 = build_family({Family::Complete, {3}});
    auto [vk, kk] = max_unsolvable_single_vertex(k3);
    CHECK(vk == 0);
    CHECK(kk == 0);
}

TEST_CASE("all-on-the-end attains the path maximum (the lower-bound construction)") {
    for (long long n = 3; n <= 6; ++n) {
        Graph g = build_family({Family::Path, {n}});
        auto [v, k] = max_unsolvable_single_vertex(g);
        CHECK(v == 0);
        CHECK(k + 1 == *psi_exact(g).value);
    }
}

TEST_CASE("sampled mode reports honest bounds with a certificate") {
    Graph b3 = build_family({Family::BTree, {3}});
    PsiOptions opts;
    opts.max_configs = 1000; // far below any B3 layer, forces sampling
    opts.sample_trials = 50;
    opts.seed = 7;
    PsiResult r = psi_exact(b3, opts);
    CHECK(r.method == PsiMethod::Sampled);
    CHECK_FALSE(r.value.has_value());
    REQUIRE(r.sample.has_value());
    CHECK(r.sample->trials == 50);
    CHECK(r.sample->seed == 7);
    // 81-pebble samples on B3 are all solvable, so the hint survives as evidence
    REQUIRE(r.upper.has_value());
    CHECK(*r.upper == 81);
    CHECK(r.lower <= *r.upper);
}

TEST_CASE("seeded sampling is reproducible and well-formed") {
    std::uint64_t s1 = 123, s2 = 123;
    for (int t = 0; t < 50; ++t) {
        Configuration a = sample_configuration(6, 20, s1);
        Configuration b = sample_configuration(6, 20, s2);
        CHECK(a == b);
        CHECK(a.total() == 20);
        CHECK(a.size() == 6);
        for (long long c : a.counts) CHECK(c >= 0);
    }
    // different seeds give different streams (overwhelmingly)
    std::uint64_t s3 = 124;
    int same = 0;
    for (int t = 0; t < 20; ++t) {
        std::uint64_t s0 = 123 + 100 * t;
        Configuration a = sample_configuration(6, 20, s0);
        Configuration b = sample_configuration(6, 20, s3);
        if (a == b) ++same;
    }
    CHECK(same < 20);
}

TEST_CASE("bounded_rand stays in range and covers it") {
    std::uint64_t s = 5;
    std::set<std::uint64_t> seen;
    for (int i = 0; i < 2000; ++i) {
        std::uint64_t r = bounded_rand(s, 7);
        CHECK(r < 7);
        seen.insert(r);
    }
    CHECK(seen.size() == 7);
}

TEST_CASE("hint placement does not change the exact value") {
    Graph p5 = build_family({Family::Path, {5}});
    for (long long hint : {1LL, 3LL, 9LL, 15LL}) {
        PsiOptions opts;
        opts.hint = hint;
        CHECK(psi_exact(p5, opts).value == 9);
    }
}
