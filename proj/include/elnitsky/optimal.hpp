#ifndef ELNITSKY_OPTIMAL_HPP
#define ELNITSKY_OPTIMAL_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "elnitsky/perm.hpp"

namespace elnitsky {

/// True iff w in S_{2m} has the maximal number (m) of forced right-perimeter
/// tiles: every odd position starts a descent and both interleaved
/// subsequences w(1) < w(3) < ... and w(2) < w(4) < ... increase. False for
/// odd sizes.
bool is_max_forced_right(const Permutation& w);

/// A permutation achieving the maximum, with the count made explicit;
/// forced_right_count always equals half_size.
struct OptimalWitness {
    Permutation w;
    int half_size;
    int forced_right_count;
};

/// Wraps a maximal permutation, computing its forced right-perimeter count.
/// Throws DomainViolation when w is not maximal.
OptimalWitness make_optimal_witness(const Permutation& w);

/// Embeds a 321-avoiding alternating v in S_{2m-2} into S_{2m}: odd entries
/// shift up by one, even entries shift right by two positions and up by one,
/// position 2 receives 1, position 2m-1 receives 2m. The image is fully
/// supported, alternating and 321-avoiding.
Permutation phi(const Permutation& v);

/// Inverse of phi on fully supported 321-avoiding alternating w in S_{2m}:
/// v(i) = w(i) - 1 for odd i, v(i) = w(i+2) - 1 for even i.
Permutation phi_inverse(const Permutation& w);

/// All down-up alternating 321-avoiding permutations of size 2m, sorted.
/// There are C_m of them.
std::vector<Permutation> enumerate_321_avoiding_alternating(int m);

/// The fully supported ones among the above, i.e. the permutations of S_{2m}
/// with m forced right-perimeter tiles. There are C_{m-1} of them; for
/// m >= 2 this set is the image of phi one level down.
std::vector<Permutation> enumerate_max_forced(int m);

/// C_k = binomial(2k, k)/(k+1), exact.
std::uint64_t catalan(int k);

} // namespace elnitsky

#endif
