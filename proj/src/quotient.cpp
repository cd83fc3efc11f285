#include "sgc/quotient.hpp"

namespace sgc {

QuotientResult quotient(const SignedGraph& g, const SignedPermutation& p,
                        QuotientSignRule rule) {
    if (p.n() != g.n()) throw ValidationError("permutation rank does not match graph");
    auto cycles = p.cycles();
    int n = g.n();
    int m = static_cast<int>(cycles.size());

    std::vector<int> cycle_of(n + 1, 0); // vertex -> cycle index (1-based)
    std::vector<int> cycle_min(m + 1, 0);
    std::vector<int> label_of_cycle(m + 1, 0); // 0 = does not survive
    std::vector<std::pair<int, int>> vertex_map;
    int next_label = 0;
    for (int s = 1; s <= m; ++s) {
        const auto& cycle = cycles[s - 1];
        int hits = 0;
        for (int i : cycle) {
            cycle_of[i] = s;
            if (p.in_delta(i)) ++hits;
        }
        cycle_min[s] = cycle.front();
        if (hits % 2 == 0) {
            label_of_cycle[s] = ++next_label;
            vertex_map.emplace_back(s, next_label);
        }
    }

    std::vector<int> beta_sub_of(n + 1, 0);
    for (int i = 1; i <= n; ++i) beta_sub_of[i] = p.beta_sub(i);

    auto survives = [&](int vertex) { return label_of_cycle[cycle_of[vertex]] != 0; };
    auto label = [&](int vertex) { return label_of_cycle[cycle_of[vertex]]; };

    // twist for an edge with surviving endpoints i, j; the paper_figure rule
    // reads beta_sub at the cycle minima instead (always even there)
    auto twist = [&](int i, int j) {
        if (rule == QuotientSignRule::paper_figure) {
            i = cycle_min[cycle_of[i]];
            j = cycle_min[cycle_of[j]];
        }
        return (beta_sub_of[i] + beta_sub_of[j]) % 2 == 0 ? +1 : -1;
    };

    std::vector<EdgeRecord> edges;
    std::vector<std::pair<int, int>> edge_map;
    edges.reserve(g.edges().size());
    for (const auto& e : g.edges()) {
        EdgeRecord out;
        switch (e.kind) {
            case EdgeKind::link: {
                bool su = survives(e.u), sv = survives(e.v);
                bool same_cycle = cycle_of[e.u] == cycle_of[e.v];
                if (su && sv && !same_cycle) {
                    out = link_edge(label(e.u), label(e.v), e.sign * twist(e.u, e.v));
                } else if (su && sv) { // same surviving cycle: endpoint set shrinks to one
                    int sign = rule == QuotientSignRule::paper_figure ? -1
                                                                      : e.sign * twist(e.u, e.v);
                    out = loop_edge(label(e.u), sign);
                } else if (su || sv) {
                    out = half_edge(label(su ? e.u : e.v), -1); // shrink rule
                } else {
                    out = free_loop_edge();
                }
                break;
            }
            case EdgeKind::loop:
                out = survives(e.u) ? loop_edge(label(e.u), e.sign) : free_loop_edge();
                break;
            case EdgeKind::half_edge:
                out = survives(e.u) ? half_edge(label(e.u), e.sign) : free_loop_edge();
                break;
            case EdgeKind::free_loop:
                out = free_loop_edge();
                break;
        }
        edges.push_back(out);
        edge_map.emplace_back(e.id, static_cast<int>(edges.size()));
    }

    return QuotientResult{SignedGraph(next_label, std::move(edges)), std::move(vertex_map),
                          std::move(edge_map)};
}

} // namespace sgc
