#ifndef SGC_ACTION_HPP
#define SGC_ACTION_HPP

#include "sgc/graph.hpp"
#include "sgc/perm.hpp"

namespace sgc {

// Image of a graph under a signed permutation: endpoints pass through b, the
// kind is preserved, and the sign picks up (-1) for every incidence of the
// image edge with delta. A loop meets its vertex with two incidences, so
// loop signs never change; half edges have one incidence and may flip.
SignedGraph act_on_graph(const SignedPermutation& p, const SignedGraph& g);

// True iff the image equals the graph as an edge multiset.
bool is_automorphism(const SignedPermutation& p, const SignedGraph& g);

// All signed permutations fixing the graph, by exhaustive filtering of the
// 2^n * n! candidates; deterministic, sorted by (images, delta). Contains the
// identity and is closed under composition and inverse.
std::vector<SignedPermutation> automorphism_group(const SignedGraph& g, int n_max = 8);

} // namespace sgc

#endif
