#ifndef SGC_QUOTIENT_HPP
#define SGC_QUOTIENT_HPP

#include <utility>
#include <vector>

#include "sgc/graph.hpp"
#include "sgc/perm.hpp"

namespace sgc {

// Sign convention for quotient edges.
//
// `derived` evaluates the twist (-1)^{beta_(i)+beta_(j)} at the original
// endpoints for every link whose endpoints both survive, including links
// whose endpoints share a cycle (which become loops). This is the convention
// under which the quotient's chromatic polynomial counts the proper
// colorings lying in the fixed subspace of beta.
//
// `paper_figure` is the published alternative: every edge whose endpoint set
// strictly shrinks gets sign -1, and the twist for surviving links is read
// at the cycle minima (where it is always trivial). Kept for comparison; the
// self-check demonstrates a counterexample against the fixed-subspace count.
enum class QuotientSignRule { derived, paper_figure };

struct QuotientResult {
    SignedGraph graph;
    // (cycle index s, quotient vertex label), ordered by s.
    std::vector<std::pair<int, int>> vertex_map;
    // (original edge id, quotient edge id); a bijection.
    std::vector<std::pair<int, int>> edge_map;
};

// The quotient of a signed graph by a signed permutation (which need not be
// an automorphism). Vertices are the b-cycles whose intersection with delta
// is even, relabeled contiguously; every edge pushes forward to an edge on
// the surviving cycles, degenerating to a half edge, loop or free loop when
// endpoints die or merge.
QuotientResult quotient(const SignedGraph& g, const SignedPermutation& p,
                        QuotientSignRule rule = QuotientSignRule::derived);

} // namespace sgc

#endif
