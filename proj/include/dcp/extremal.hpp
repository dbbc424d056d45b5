#ifndef DCP_EXTREMAL_HPP
#define DCP_EXTREMAL_HPP

#include <vector>

#include "dcp/pebbles.hpp"

namespace dcp {

// A lower-bound configuration of psi(family)-1 pebbles. degenerate marks the
// empty configuration of psi = 1 families (total 0, trivially unsolvable).
struct ExtremalConfig {
    Configuration config;
    bool degenerate = false;
};

// All psi-1 pebbles on vertex 0.  n >= 3.
ExtremalConfig path_worst(long long n);

// All psi-1 pebbles on vertex 0; empty for n = 3.  n >= 3.
ExtremalConfig cycle_worst(long long n);

// One pebble on each of rim vertices 1..n-3; empty for n = 3.  n >= 3.
ExtremalConfig wheel_worst(long long n);

// One pebble on each of the first s1-1 vertices of the largest class.
// Requires s1 >= 3; the s1 = 2 case has no generator here (see the
// k22_bad_config fixture).
ExtremalConfig multipartite_worst(const std::vector<long long>& sizes);

// One pebble on each of the 2^(n-1)-1 leftmost even-position bottom-row
// leaves, none on the second-rightmost leaf, remainder on the rightmost
// leaf; total psi(B_n)-1.  n >= 2.
ExtremalConfig btree_worst(long long n);

// Fixture: an unsolvable 2-pebble configuration on K_{2,2}, discovered by
// exhaustive search (two pebbles on the first vertex of the first class).
Configuration k22_bad_config();

} // namespace dcp

#endif
