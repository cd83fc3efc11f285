#ifndef SGC_UNLABELED_HPP
#define SGC_UNLABELED_HPP

#include <cstdint>
#include <vector>

#include "sgc/chromatic.hpp"
#include "sgc/graph.hpp"
#include "sgc/lattice.hpp"
#include "sgc/perm.hpp"
#include "sgc/polynomial.hpp"

namespace sgc {

inline constexpr int kDefaultRegionBound = 6;

// Count of proper k-colorings fixed by the action of beta (beta(sigma) ==
// sigma pointwise). Independent of the flat route: compare against
// proper_colorings_in_flat(g, beta_hat(beta), k).
long long fixed_proper_colorings(const SignedGraph& g, const SignedPermutation& beta, int k,
                                 long long budget = kDefaultBruteBudget);

// Burnside average of the quotient chromatic polynomials over the
// automorphism group; exact rational coefficients.
ExactPolynomial unlabeled_chromatic_via_quotients(const SignedGraph& g, int n_max = 8);

// The same polynomial by the flat route: for each automorphism, sum
// 2^{n-rho(p)} (k)_{n-rho(p)} over flats p of P(Sigma) contained in the
// fixed subspace, then divide by the group order. Rejects free/positive
// loops.
ExactPolynomial unlabeled_chromatic_via_flats(const SignedGraph& g, int n_max = 8);

// (-1)^n chi(-1): the number of acyclic orientations, realized as regions of
// the signed graphic arrangement. Zero when chi is identically zero.
long long acyclic_count(const SignedGraph& g, int n_max = 8);

// One region of the complement of the arrangement: the sign of every
// hyperplane at any interior point, plus one retained sample point.
struct Region {
    std::vector<std::int8_t> signs; // +1/-1 per hyperplane, arrangement order
    std::vector<long long> rep;
};

struct RegionSet {
    std::vector<EdgeHyperplane> hyperplanes; // sorted, deduplicated
    std::vector<Region> regions;             // sorted by sign vector
};

// Enumerates the regions exactly by evaluating the arrangement at all
// 2^n n! signed permutations of (1..n): each chamber of the full type-B
// arrangement holds exactly one such point and every region of a
// sub-arrangement is a union of those chambers. Rejects free/positive loops.
RegionSet regions_bruteforce(const SignedGraph& g, int n_max = kDefaultRegionBound);

// Number of regions whose closure meets the fixed subspace of beta, by
// sampling signed permutations of (1..d) in the flat's free coordinates.
// Zero when some edge hyperplane contains the whole flat.
long long regions_meeting_flat(const SignedGraph& g, const SignedPermutation& beta,
                               int n_max = kDefaultRegionBound);

// Fixedness of a region under an automorphism, decided through the retained
// representative: the image point's sign vector must equal the region's.
bool region_fixed_by(const RegionSet& rs, const SignedPermutation& beta, const Region& region);

// The companion predicate: some sample point of beta's fixed subspace lies
// in the region. Agreement of the two predicates for automorphisms is the
// fixed-region property test.
bool region_meets_flat(const RegionSet& rs, const SignedFlat& flat, const Region& region);

// Burnside average of (-1)^{|V(Sigma/beta)|} chi_{Sigma/beta}(-1) over the
// automorphism group. Errors if the average is not a nonnegative integer.
long long unlabeled_acyclic_count(const SignedGraph& g, int n_max = 8);

// Ground-truth oracles: explicit orbit partitions under the automorphism
// group, independent of any Burnside formula.
long long coloring_orbit_count(const SignedGraph& g, int k, int n_max = 8,
                               long long budget = kDefaultBruteBudget);
long long region_orbit_count(const SignedGraph& g, int n_max = 8);

// Sign vector of the arrangement at a point; entries may be zero when the
// point lies on a hyperplane.
std::vector<std::int8_t> sign_vector(const std::vector<EdgeHyperplane>& hyperplanes,
                                     const std::vector<long long>& x);

// All sample points of a flat: x_i = sign(i) * t_{block(i)} with t running
// over the signed permutations of (1..dim).
std::vector<std::vector<long long>> flat_sample_points(const SignedFlat& flat);

} // namespace sgc

#endif
