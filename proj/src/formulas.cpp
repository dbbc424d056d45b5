#include "dcp/formulas.hpp"

#include <cstdlib>
#include <string>

namespace dcp {

PathDecomposition decompose(long long n) {
    if (n < 2) throw Error(ErrorKind::InvalidParameter, "decompose needs n >= 2");
    long long r = n - 2;
    int alpha = static_cast<int>(r % 3);
    return PathDecomposition{n, alpha, (r - alpha) / 3};
}

namespace {

// 2^(m+1) * (1 - 8^-(k_m+1)) / 7 rewritten integer-exact as
// (2^(m+1) - 2^alpha_m) / 7; m+1 = alpha_m + 3(k_m+1) makes the division even.
long long path_main_term(long long m) {
    auto d = decompose(m);
    long long num = (1LL << (m + 1)) - (1LL << d.alpha);
    // exactness check, never a rounding
    if (num % 7 != 0)
        throw Error(ErrorKind::Overflow, "path main term not divisible by 7 at m=" +
                                             std::to_string(m));
    return num / 7;
}

void check_range(long long n, long long lo, long long hi, const char* what) {
    if (n < lo)
        throw Error(ErrorKind::InvalidParameter,
                    std::string(what) + " needs n >= " + std::to_string(lo));
    if (n > hi)
        throw Error(ErrorKind::Overflow, std::string(what) + " exact range capped at n = " +
                                             std::to_string(hi));
}

} // namespace

long long psi_path(long long n) {
    check_range(n, 1, 60, "psi_path");
    if (n <= 2) return 1;
    auto d = decompose(n);
    return path_main_term(n) + d.alpha / 2;
}

long long psi_cycle(long long n) {
    check_range(n, 3, 121, "psi_cycle");
    if (n % 2 == 1) {
        long long m = (n + 1) / 2; // n = 2m-1, m >= 2
        auto dm = decompose(m);
        long long phi1 = 2 * (dm.alpha / 2) - std::llabs(dm.alpha - 1);
        return 2 * path_main_term(m) + phi1;
    }
    long long m = (n + 2) / 2; // n = 2m-2, m >= 3
    auto dm = decompose(m);
    auto dm1 = decompose(m - 1);
    long long phi2 = dm.alpha / 2 + dm1.alpha / 2 -
                     std::llabs(dm.alpha - 1) * std::llabs(dm1.alpha - 1);
    return path_main_term(m) + path_main_term(m - 1) + phi2;
}

long long psi_complete(long long n) {
    if (n < 1) throw Error(ErrorKind::InvalidParameter, "psi_complete needs n >= 1");
    return 1;
}

long long psi_multipartite(const std::vector<long long>& sizes) {
    if (sizes.size() < 2)
        throw Error(ErrorKind::InvalidParameter,
                    "psi_multipartite needs r >= 2 classes (use psi_complete for r = 1)");
    for (size_t i = 0; i < sizes.size(); ++i) {
        if (sizes[i] < 1)
            throw Error(ErrorKind::InvalidParameter, "class sizes must be >= 1");
        if (i && sizes[i] > sizes[i - 1])
            throw Error(ErrorKind::InvalidParameter, "class sizes must be nonincreasing");
    }
    long long s1 = sizes[0];
    if (s1 >= 3) return s1;
    if (s1 == 2) return 3;
    return 1; // all classes singletons: the graph is complete
}

long long psi_wheel(long long n) {
    if (n < 3) throw Error(ErrorKind::InvalidParameter, "psi_wheel needs n >= 3");
    return n - 2;
}

BTreeTerms psi_btree_terms(long long n) {
    check_range(n, 0, 21, "psi_btree");
    BTreeTerms t;
    if (n == 0) {
        t.t1 = 1;
        return t;
    }
    if (n == 1) {
        t.t1 = 2;
        return t;
    }
    t.t1 = (1LL << (n - 1)) - 1;
    for (long long i = 0; i <= (n - 1) / 3; ++i) {
        long long term = 1LL << (3 * i + 1);
        // empty when the upper limit drops below 1
        for (long long j = 1; j <= n - 3 * i - 2; ++j) term += 1LL << (3 * i + 3 * j);
        t.t2 += term;
    }
    for (long long k = 1; k <= (n + 1) / 3; ++k) t.t3 += 1LL << (3 * n - 6 * k + 3);
    t.gamma = (n % 3 == 0) ? (1LL << (n - 1)) : 0;
    t.t4 = t.gamma;
    return t;
}

long long psi_btree(long long n) { return psi_btree_terms(n).total(); }

long long psi_formula(const FamilySpec& spec) {
    switch (spec.family) {
        case Family::Path: return psi_path(spec.params[0]);
        case Family::Cycle: return psi_cycle(spec.params[0]);
        case Family::Complete: return psi_complete(spec.params[0]);
        case Family::Multipartite: return psi_multipartite(spec.params);
        case Family::Wheel: return psi_wheel(spec.params[0]);
        case Family::BTree: return psi_btree(spec.params[0]);
    }
    throw Error(ErrorKind::InvalidParameter, "unknown family");
}

} // namespace dcp
