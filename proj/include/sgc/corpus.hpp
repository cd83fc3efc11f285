#ifndef SGC_CORPUS_HPP
#define SGC_CORPUS_HPP

#include <string>
#include <vector>

#include "sgc/graph.hpp"
#include "sgc/perm.hpp"

namespace sgc {

struct CorpusEntry {
    std::string name;
    SignedGraph graph;
};

// The square-with-diagonal graph used throughout the worked examples:
// links 12+, 24-, 34+, 13-, 23- on four vertices.
SignedGraph figure_graph();
// The companion permutation ((1)(23)(4), {2,3,4}).
SignedPermutation figure_perm();

// Deterministic test corpus: every signed graph with n <= 2 and at most two
// edges (exhaustive over kinds and signs, parallel edges included), the
// figure graph, and 200 seeded pseudo-random graphs with n <= 4 and up to
// five edges.
std::vector<CorpusEntry> bundled_corpus();

// Deterministic signed permutations to pair with a corpus graph: the whole
// hyperoctahedral group for n <= 2, otherwise identity plus seeded samples.
std::vector<SignedPermutation> corpus_perms_for(const SignedGraph& g, int samples = 4);

} // namespace sgc

#endif
