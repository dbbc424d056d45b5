#ifndef DCP_FORMULAS_HPP
#define DCP_FORMULAS_HPP

#include <vector>

#include "dcp/graph.hpp"

namespace dcp {

// Unique decomposition n - 2 = alpha + 3k with alpha in {0,1,2}.
struct PathDecomposition {
    long long n;
    int alpha;
    long long k;
};

PathDecomposition decompose(long long n); // n >= 2

// Closed-form psi evaluators, exact 64-bit integer arithmetic. Every division
// they perform divides evenly (asserted). Domain guards keep results exact:
// paths/cycles up to n = 60 / 121, binary trees up to height 21.
long long psi_path(long long n);                                // n >= 1
long long psi_cycle(long long n);                               // n >= 3
long long psi_complete(long long n);                            // n >= 1
long long psi_multipartite(const std::vector<long long>& sizes); // r >= 2, nonincreasing
long long psi_wheel(long long n);                               // n >= 3

// The four summands of the binary-tree value plus the correction term.
struct BTreeTerms {
    long long t1 = 0, t2 = 0, t3 = 0, t4 = 0;
    long long gamma = 0; // == t4; 2^(n-1) when n % 3 == 0, else 0
    long long total() const { return t1 + t2 + t3 + t4; }
};

BTreeTerms psi_btree_terms(long long n); // n >= 0; heights 0,1 are base values
long long psi_btree(long long n);

// Dispatch on family metadata.
long long psi_formula(const FamilySpec& spec);

} // namespace dcp

#endif
