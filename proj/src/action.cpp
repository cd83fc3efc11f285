#include "sgc/action.hpp"

namespace sgc {

SignedGraph act_on_graph(const SignedPermutation& p, const SignedGraph& g) {
    if (p.n() != g.n()) throw ValidationError("permutation rank does not match graph");
    std::vector<EdgeRecord> out;
    out.reserve(g.edges().size());
    for (const auto& e : g.edges()) {
        switch (e.kind) {
            case EdgeKind::link: {
                int u = p.b(e.u), v = p.b(e.v);
                int flips = (p.in_delta(u) ? 1 : 0) + (p.in_delta(v) ? 1 : 0);
                out.push_back(link_edge(u, v, (flips % 2 == 0) ? e.sign : -e.sign));
                break;
            }
            case EdgeKind::loop:
                // both incidences switch together
                out.push_back(loop_edge(p.b(e.u), e.sign));
                break;
            case EdgeKind::half_edge: {
                int u = p.b(e.u);
                out.push_back(half_edge(u, p.in_delta(u) ? -e.sign : e.sign));
                break;
            }
            case EdgeKind::free_loop:
                out.push_back(free_loop_edge());
                break;
        }
    }
    return SignedGraph(g.n(), std::move(out));
}

bool is_automorphism(const SignedPermutation& p, const SignedGraph& g) {
    return act_on_graph(p, g).same_edges(g);
}

std::vector<SignedPermutation> automorphism_group(const SignedGraph& g, int n_max) {
    if (g.n() > n_max)
        throw CapacityError("automorphism enumeration bound exceeded: n=" +
                            std::to_string(g.n()) + " > " + std::to_string(n_max));
    std::vector<SignedPermutation> out;
    for_each_signed_permutation(g.n(), [&](const SignedPermutation& p) {
        if (is_automorphism(p, g)) out.push_back(p);
    }, n_max);
    return out;
}

} // namespace sgc
