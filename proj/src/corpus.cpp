#include "sgc/corpus.hpp"

#include <random>

namespace sgc {

namespace {

constexpr unsigned kCorpusSeed = 0x5167C0DE;

// Every possible edge on n vertices (links, loops, half edges of both signs,
// one free loop).
std::vector<EdgeRecord> edge_universe(int n) {
    std::vector<EdgeRecord> out;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int s : {+1, -1}) out.push_back(link_edge(i, j, s));
    for (int i = 1; i <= n; ++i)
        for (int s : {+1, -1}) out.push_back(loop_edge(i, s));
    for (int i = 1; i <= n; ++i)
        for (int s : {+1, -1}) out.push_back(half_edge(i, s));
    out.push_back(free_loop_edge());
    return out;
}

EdgeRecord random_edge(std::mt19937& rng, int n) {
    // mt19937 output is pinned by the standard, so modulo keeps the corpus
    // platform-independent
    auto pick = [&](int m) { return static_cast<int>(rng() % static_cast<unsigned>(m)); };
    int sign = pick(2) == 0 ? +1 : -1;
    int roll = pick(10);
    if (n >= 2 && roll < 5) {
        int u = 1 + pick(n);
        int v = 1 + pick(n - 1);
        if (v >= u) ++v;
        return link_edge(u, v, sign);
    }
    if (roll < 7) return loop_edge(1 + pick(n), sign);
    if (roll < 9) return half_edge(1 + pick(n), sign);
    return free_loop_edge();
}

} // namespace

SignedGraph figure_graph() {
    return SignedGraph(4, {link_edge(1, 2, +1), link_edge(2, 4, -1), link_edge(3, 4, +1),
                           link_edge(1, 3, -1), link_edge(2, 3, -1)});
}

SignedPermutation figure_perm() { return SignedPermutation({1, 3, 2, 4}, {2, 3, 4}); }

std::vector<CorpusEntry> bundled_corpus() {
    std::vector<CorpusEntry> out;

    // exhaustive small graphs: multisets of <= 2 edges over the universe
    for (int n = 1; n <= 2; ++n) {
        auto universe = edge_universe(n);
        int m = static_cast<int>(universe.size());
        auto name = [&](int a, int b) {
            std::string s = "exhaustive-n" + std::to_string(n) + "-e" + std::to_string(a);
            if (b >= 0) s += "-" + std::to_string(b);
            return s;
        };
        out.push_back({"exhaustive-n" + std::to_string(n) + "-empty", SignedGraph(n, {})});
        for (int a = 0; a < m; ++a)
            out.push_back({name(a, -1), SignedGraph(n, {universe[static_cast<std::size_t>(a)]})});
        for (int a = 0; a < m; ++a)
            for (int b = a; b < m; ++b)
                out.push_back({name(a, b),
                               SignedGraph(n, {universe[static_cast<std::size_t>(a)],
                                               universe[static_cast<std::size_t>(b)]})});
    }

    out.push_back({"figure-square-diagonal", figure_graph()});

    std::mt19937 rng(kCorpusSeed);
    for (int t = 0; t < 200; ++t) {
        int n = 1 + static_cast<int>(rng() % 4);
        int m = static_cast<int>(rng() % 6);
        std::vector<EdgeRecord> edges;
        for (int e = 0; e < m; ++e) edges.push_back(random_edge(rng, n));
        out.push_back({"random-" + std::to_string(t), SignedGraph(n, std::move(edges))});
    }
    return out;
}

std::vector<SignedPermutation> corpus_perms_for(const SignedGraph& g, int samples) {
    int n = g.n();
    if (n <= 2) return all_signed_permutations(n);

    std::vector<SignedPermutation> out;
    out.push_back(SignedPermutation::identity(n));
    // seed depends only on the graph shape so pairs stay reproducible
    std::mt19937 rng(kCorpusSeed ^ (static_cast<unsigned>(n) << 8) ^
                     static_cast<unsigned>(g.edges().size()));
    for (int t = 0; t < samples; ++t) {
        std::vector<int> images(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) images[static_cast<std::size_t>(i)] = i + 1;
        for (int i = n - 1; i > 0; --i) {
            int j = static_cast<int>(rng() % static_cast<unsigned>(i + 1));
            std::swap(images[static_cast<std::size_t>(i)], images[static_cast<std::size_t>(j)]);
        }
        std::vector<int> delta;
        unsigned mask = rng() % (1u << n);
        for (int i = 1; i <= n; ++i)
            if (mask & (1u << (i - 1))) delta.push_back(i);
        out.emplace_back(std::move(images), delta);
    }
    return out;
}

} // namespace sgc
