#include "sgc/graph.hpp"

#include <algorithm>

namespace sgc {

namespace {

void check_sign(int sign) {
    if (sign != 1 && sign != -1) throw ValidationError("edge sign must be +1 or -1");
}

} // namespace

std::tuple<int, int, int, int> EdgeRecord::key() const {
    switch (kind) {
        case EdgeKind::link:
            return {0, std::min(u, v), std::max(u, v), sign};
        case EdgeKind::loop:
            return {1, u, u, sign};
        case EdgeKind::half_edge:
            return {2, u, u, sign};
        case EdgeKind::free_loop:
            return {3, 0, 0, 0};
    }
    throw InternalError("unreachable edge kind");
}

EdgeRecord link_edge(int u, int v, int sign) {
    check_sign(sign);
    return EdgeRecord{0, EdgeKind::link, u, v, sign};
}

EdgeRecord loop_edge(int u, int sign) {
    check_sign(sign);
    return EdgeRecord{0, EdgeKind::loop, u, 0, sign};
}

EdgeRecord half_edge(int u, int sign) {
    check_sign(sign);
    return EdgeRecord{0, EdgeKind::half_edge, u, 0, sign};
}

EdgeRecord free_loop_edge() { return EdgeRecord{0, EdgeKind::free_loop, 0, 0, +1}; }

SignedGraph::SignedGraph(int n, std::vector<EdgeRecord> edges)
    : n_(n), edges_(std::move(edges)) {
    if (n_ < 0) throw ValidationError("vertex count must be nonnegative");
    int next_id = 1;
    for (auto& e : edges_) {
        e.id = next_id++;
        auto in_range = [&](int x) { return 1 <= x && x <= n_; };
        switch (e.kind) {
            case EdgeKind::link:
                if (!in_range(e.u) || !in_range(e.v))
                    throw ValidationError("link endpoint out of range 1.." + std::to_string(n_));
                if (e.u == e.v) throw ValidationError("link endpoints must be distinct");
                check_sign(e.sign);
                break;
            case EdgeKind::loop:
            case EdgeKind::half_edge:
                if (!in_range(e.u))
                    throw ValidationError("edge endpoint out of range 1.." + std::to_string(n_));
                check_sign(e.sign);
                break;
            case EdgeKind::free_loop:
                break;
        }
    }
}

bool SignedGraph::has_free_loop() const {
    return std::any_of(edges_.begin(), edges_.end(),
                       [](const EdgeRecord& e) { return e.kind == EdgeKind::free_loop; });
}

bool SignedGraph::has_positive_loop() const {
    return std::any_of(edges_.begin(), edges_.end(), [](const EdgeRecord& e) {
        return e.kind == EdgeKind::loop && e.sign == +1;
    });
}

bool SignedGraph::same_edges(const SignedGraph& other) const {
    if (edges_.size() != other.edges_.size()) return false;
    std::vector<std::tuple<int, int, int, int>> a, b;
    a.reserve(edges_.size());
    b.reserve(edges_.size());
    for (const auto& e : edges_) a.push_back(e.key());
    for (const auto& e : other.edges_) b.push_back(e.key());
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
}

} // namespace sgc
