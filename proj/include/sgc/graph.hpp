#ifndef SGC_GRAPH_HPP
#define SGC_GRAPH_HPP

#include <tuple>
#include <vector>

#include "sgc/errors.hpp"

namespace sgc {

enum class EdgeKind { link, loop, half_edge, free_loop };

// One edge of a signed graph. Links carry two distinct endpoints, loops and
// half edges one, free loops none. The sign is ignored for free loops.
struct EdgeRecord {
    int id = 0;
    EdgeKind kind = EdgeKind::free_loop;
    int u = 0; // link: first endpoint; loop/half edge: the endpoint
    int v = 0; // link: second endpoint; unused otherwise
    int sign = +1;

    // Identity ignoring the id and endpoint order; free-loop signs collapse.
    std::tuple<int, int, int, int> key() const;
};

EdgeRecord link_edge(int u, int v, int sign);
EdgeRecord loop_edge(int u, int sign);
EdgeRecord half_edge(int u, int sign);
EdgeRecord free_loop_edge();

// A signed graph on vertices 1..n with an ordered edge multiset. Parallel
// edges with identical data stay distinct records. Immutable after
// construction.
class SignedGraph {
public:
    // Assigns ids 1..m in list order.
    SignedGraph(int n, std::vector<EdgeRecord> edges);

    int n() const { return n_; }
    const std::vector<EdgeRecord>& edges() const { return edges_; }

    bool has_free_loop() const;
    bool has_positive_loop() const;

    // Edge-multiset equality: ids and list order disregarded.
    bool same_edges(const SignedGraph& other) const;
    friend bool operator==(const SignedGraph& a, const SignedGraph& b) {
        return a.n_ == b.n_ && a.same_edges(b);
    }

private:
    int n_ = 0;
    std::vector<EdgeRecord> edges_;
};

} // namespace sgc

#endif
