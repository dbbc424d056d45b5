#include "dcp/extremal.hpp"

#include "dcp/formulas.hpp"

namespace dcp {

ExtremalConfig path_worst(long long n) {
    if (n < 3) throw Error(ErrorKind::InvalidParameter, "path_worst needs n >= 3");
    long long pebbles = psi_path(n) - 1;
    Configuration c = Configuration::zeros(static_cast<int>(n));
    c.counts[0] = pebbles;
    return {c, pebbles == 0};
}

ExtremalConfig cycle_worst(long long n) {
    if (n < 3) throw Error(ErrorKind::InvalidParameter, "cycle_worst needs n >= 3");
    long long pebbles = psi_cycle(n) - 1;
    Configuration c = Configuration::zeros(static_cast<int>(n));
    c.counts[0] = pebbles;
    return {c, pebbles == 0};
}

ExtremalConfig wheel_worst(long long n) {
    if (n < 3) throw Error(ErrorKind::InvalidParameter, "wheel_worst needs n >= 3");
    Configuration c = Configuration::zeros(static_cast<int>(n) + 1);
    for (long long v = 1; v <= n - 3; ++v) c.counts[v] = 1;
    return {c, n == 3};
}

ExtremalConfig multipartite_worst(const std::vector<long long>& sizes) {
    long long psi = psi_multipartite(sizes); // validates shape
    (void)psi;
    if (sizes[0] < 3)
        throw Error(ErrorKind::InvalidParameter,
                    "multipartite_worst needs s1 >= 3; for s1 = 2 use the k22_bad_config "
                    "fixture found by exhaustive search");
    long long total = 0;
    for (long long s : sizes) total += s;
    Configuration c = Configuration::zeros(static_cast<int>(total));
    for (long long v = 0; v < sizes[0] - 1; ++v) c.counts[v] = 1;
    return {c, false};
}

ExtremalConfig btree_worst(long long n) {
    if (n < 2) throw Error(ErrorKind::InvalidParameter, "btree_worst needs n >= 2");
    long long total = psi_btree(n) - 1;
    long long vertices = (1LL << (n + 1)) - 1;
    long long first_leaf = (1LL << n) - 1;
    long long leaves = 1LL << n;
    Configuration c = Configuration::zeros(static_cast<int>(vertices));
    long long singles = (1LL << (n - 1)) - 1;
    for (long long i = 0; i < singles; ++i) c.counts[first_leaf + 2 * i] = 1;
    // second-rightmost leaf stays empty; the rest piles on the rightmost leaf
    c.counts[first_leaf + leaves - 1] = total - singles;
    return {c, false};
}

Configuration k22_bad_config() {
    Configuration c = Configuration::zeros(4);
    c.counts[0] = 2;
    return c;
}

} // namespace dcp
