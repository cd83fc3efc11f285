#include <doctest.h>

#include <map>
#include <set>

#include "sgc/corpus.hpp"
#include "sgc/lattice.hpp"
#include "sgc/rational.hpp"

using namespace sgc;

namespace {

// Independent oracle for the flat counts: intersect every sub-collection of
// the full type-B arrangement directly, tracking the constraint system with
// a signed union-find (vertices merge with a relative sign, or collapse to
// zero), and count distinct canonical systems. Shares nothing with the
// combinatorial enumeration in enumerate_flats.
struct SignedUnionFind {
    std::vector<int> parent;
    std::vector<int> rel_sign; // sign of x_i relative to its parent
    std::vector<char> zero;    // valid on roots

    explicit SignedUnionFind(int n)
        : parent(static_cast<std::size_t>(n)), rel_sign(static_cast<std::size_t>(n), 1),
          zero(static_cast<std::size_t>(n), 0) {
        for (int i = 0; i < n; ++i) parent[static_cast<std::size_t>(i)] = i;
    }

    // returns (root, sign of x relative to root)
    std::pair<int, int> find(int x) {
        if (parent[static_cast<std::size_t>(x)] == x) return {x, 1};
        auto [root, s] = find(parent[static_cast<std::size_t>(x)]);
        parent[static_cast<std::size_t>(x)] = root;
        rel_sign[static_cast<std::size_t>(x)] *= s;
        return {root, rel_sign[static_cast<std::size_t>(x)]};
    }

    void set_zero(int x) {
        auto [root, s] = find(x);
        (void)s;
        zero[static_cast<std::size_t>(root)] = 1;
    }

    // impose x = sign * y
    void relate(int x, int y, int sign) {
        auto [rx, sx] = find(x);
        auto [ry, sy] = find(y);
        if (rx == ry) {
            // conflicting relation forces both to zero
            if (sx != sign * sy) zero[static_cast<std::size_t>(rx)] = 1;
            return;
        }
        parent[static_cast<std::size_t>(rx)] = ry;
        rel_sign[static_cast<std::size_t>(rx)] = sx * sign * sy;
        if (zero[static_cast<std::size_t>(rx)]) zero[static_cast<std::size_t>(ry)] = 1;
    }

    // canonical form: per vertex, a zero flag or (class minimum, sign
    // relative to the class minimum); independent of merge order
    std::vector<int> canonical(int n) {
        std::map<int, std::pair<int, int>> first; // root -> (min member, its sign)
        for (int i = 0; i < n; ++i) {
            auto [root, s] = find(i);
            if (!zero[static_cast<std::size_t>(root)] && !first.count(root))
                first[root] = {i, s};
        }
        std::vector<int> key;
        for (int i = 0; i < n; ++i) {
            auto [root, s] = find(i);
            if (zero[static_cast<std::size_t>(root)]) {
                key.push_back(-1);
                key.push_back(0);
            } else {
                key.push_back(first[root].first);
                key.push_back(s * first[root].second);
            }
        }
        return key;
    }
};

long long flat_count_oracle(int n) {
    std::vector<EdgeHyperplane> all;
    for (int i = 1; i <= n; ++i) all.push_back(EdgeHyperplane::coordinate(i));
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int s : {+1, -1}) all.push_back(EdgeHyperplane::pair(i, j, s));
    std::set<std::vector<int>> seen;
    for (unsigned long mask = 0; mask < (1ul << all.size()); ++mask) {
        SignedUnionFind uf(n);
        for (std::size_t h = 0; h < all.size(); ++h) {
            if (!(mask & (1ul << h))) continue;
            if (all[h].kind == EdgeHyperplane::Kind::coordinate)
                uf.set_zero(all[h].i - 1);
            else
                uf.relate(all[h].i - 1, all[h].j - 1, all[h].sign);
        }
        seen.insert(uf.canonical(n));
    }
    return static_cast<long long>(seen.size());
}

SignedFlat block_flat(int n, std::vector<int> block, std::vector<int> signs) {
    std::vector<int> zero;
    std::vector<std::vector<int>> blocks{std::move(block)};
    std::vector<std::vector<int>> sgns{std::move(signs)};
    std::set<int> used(blocks[0].begin(), blocks[0].end());
    for (int i = 1; i <= n; ++i)
        if (!used.count(i)) {
            blocks.push_back({i});
            sgns.push_back({1});
        }
    return SignedFlat::make(n, std::move(zero), std::move(blocks), std::move(sgns));
}

SignedFlat ambient(int n) {
    std::vector<std::vector<int>> blocks;
    std::vector<std::vector<int>> signs;
    for (int i = 1; i <= n; ++i) {
        blocks.push_back({i});
        signs.push_back({1});
    }
    return SignedFlat::make(n, {}, std::move(blocks), std::move(signs));
}

SignedFlat origin(int n) {
    std::vector<int> zero;
    for (int i = 1; i <= n; ++i) zero.push_back(i);
    return SignedFlat::make(n, std::move(zero), {}, {});
}

} // namespace

TEST_CASE("flat canonical form") {
    // the block minimum always carries +1; building with flipped signs lands
    // on the same stored representative
    SignedFlat a = block_flat(2, {1, 2}, {1, -1});
    SignedFlat b = block_flat(2, {2, 1}, {1, -1});
    CHECK(a == b);
    CHECK(a.sign(1) == 1);
    CHECK(a.sign(2) == -1);
    CHECK(a.rank() == 1);
    CHECK(a.dim() == 1);
    CHECK_THROWS_AS(SignedFlat::make(2, {1}, {{1}}, {{1}}), ValidationError); // 2 uncovered
    CHECK_THROWS_AS(SignedFlat::make(1, {1}, {{1}}, {{1}}), ValidationError); // repeated
}

TEST_CASE("enumerate_flats small cases") {
    auto flats1 = enumerate_flats(1);
    REQUIRE(flats1.size() == 2);
    CHECK(flats1[0] == ambient(1));
    CHECK(flats1[1] == origin(1));

    auto flats2 = enumerate_flats(2);
    REQUIRE(flats2.size() == 6);
    // ordered by rank, then zero set, blocks, signs (plus before minus)
    CHECK(flats2[0] == ambient(2));
    CHECK(flats2[1] == block_flat(2, {1, 2}, {1, 1}));
    CHECK(flats2[2] == block_flat(2, {1, 2}, {1, -1}));
    CHECK(flats2[3] == SignedFlat::make(2, {1}, {{2}}, {{1}}));
    CHECK(flats2[4] == SignedFlat::make(2, {2}, {{1}}, {{1}}));
    CHECK(flats2[5] == origin(2));

    std::map<int, int> by_rank;
    for (const auto& f : flats2) ++by_rank[f.rank()];
    CHECK(by_rank == std::map<int, int>{{0, 1}, {1, 4}, {2, 1}});

    CHECK(enumerate_flats(0).size() == 1);
    CHECK_THROWS_AS(enumerate_flats(9), CapacityError);
}

TEST_CASE("flat counts match the subspace-intersection oracle") {
    // frozen counts 2, 6, 24, 116 were derived from this oracle
    CHECK(flat_count_oracle(1) == 2);
    CHECK(flat_count_oracle(2) == 6);
    CHECK(flat_count_oracle(3) == 24);
    CHECK(enumerate_flats(1).size() == 2);
    CHECK(enumerate_flats(2).size() == 6);
    CHECK(enumerate_flats(3).size() == 24);
    CHECK(enumerate_flats(4).size() == 116);
    CHECK(flat_count_oracle(4) == 116);
}

TEST_CASE("edge hyperplanes") {
    EdgeHyperplane h = edge_hyperplane(link_edge(1, 2, +1));
    CHECK(h == EdgeHyperplane::pair(1, 2, +1));
    CHECK(edge_hyperplane(link_edge(2, 1, -1)) == EdgeHyperplane::pair(1, 2, -1));
    CHECK(edge_hyperplane(half_edge(3, -1)) == EdgeHyperplane::coordinate(3));
    CHECK(edge_hyperplane(half_edge(3, +1)) == EdgeHyperplane::coordinate(3));
    CHECK(edge_hyperplane(loop_edge(2, -1)) == EdgeHyperplane::coordinate(2));
    CHECK_THROWS_AS(edge_hyperplane(loop_edge(2, +1)), UnsupportedEdgeError);
    CHECK_THROWS_AS(edge_hyperplane(free_loop_edge()), UnsupportedEdgeError);
}

TEST_CASE("arrangement deduplicates") {
    SignedGraph g(2, {link_edge(1, 2, +1), link_edge(2, 1, +1), loop_edge(1, -1),
                      half_edge(1, +1)});
    auto hs = arrangement(g);
    REQUIRE(hs.size() == 2);
    CHECK(hs[0] == EdgeHyperplane::coordinate(1));
    CHECK(hs[1] == EdgeHyperplane::pair(1, 2, +1));
}

TEST_CASE("flat_in_hyperplane") {
    for (const auto& h : {EdgeHyperplane::coordinate(1), EdgeHyperplane::pair(1, 2, +1),
                          EdgeHyperplane::pair(1, 2, -1)})
        CHECK_FALSE(flat_in_hyperplane(ambient(2), h));
    CHECK(flat_in_hyperplane(block_flat(2, {1, 2}, {1, -1}), EdgeHyperplane::pair(1, 2, -1)));
    CHECK_FALSE(flat_in_hyperplane(block_flat(2, {1, 2}, {1, -1}), EdgeHyperplane::pair(1, 2, +1)));
    CHECK(flat_in_hyperplane(origin(2), EdgeHyperplane::pair(1, 2, +1)));
    CHECK(flat_in_hyperplane(origin(2), EdgeHyperplane::coordinate(2)));
}

TEST_CASE("is_subflat basics") {
    for (const auto& q : enumerate_flats(2)) {
        CHECK(is_subflat(origin(2), q));
        CHECK(is_subflat(q, ambient(2)));
    }
    CHECK(is_subflat(block_flat(2, {1, 2}, {1, 1}), ambient(2)));
    CHECK_FALSE(is_subflat(block_flat(2, {1, 2}, {1, 1}), block_flat(2, {1, 2}, {1, -1})));
    CHECK_FALSE(is_subflat(block_flat(2, {1, 2}, {1, -1}), block_flat(2, {1, 2}, {1, 1})));
}

TEST_CASE("is_subflat is a partial order") {
    for (int n = 1; n <= 3; ++n) {
        auto flats = enumerate_flats(n);
        for (const auto& p : flats) {
            CHECK(is_subflat(p, p));
            for (const auto& q : flats) {
                if (is_subflat(p, q) && is_subflat(q, p)) CHECK(p == q);
                for (const auto& r : flats)
                    if (is_subflat(p, q) && is_subflat(q, r)) CHECK(is_subflat(p, r));
            }
        }
    }
}

TEST_CASE("beta_hat") {
    CHECK(beta_hat(SignedPermutation::identity(2)) == ambient(2));

    SignedPermutation beta({1, 3, 2, 4}, {2, 3, 4});
    SignedFlat f = beta_hat(beta);
    CHECK(f.zero_set == std::vector<int>{4});
    CHECK(f.blocks == std::vector<std::vector<int>>{{1}, {2, 3}});
    CHECK(f.sign(1) == 1);
    CHECK(f.sign(2) == 1);
    CHECK(f.sign(3) == -1);

    SignedFlat swap_flat = beta_hat(SignedPermutation({2, 1}, {}));
    CHECK(swap_flat == block_flat(2, {1, 2}, {1, 1}));
}

TEST_CASE("beta_hat is the fixed subspace") {
    // integer grid: x in beta_hat iff beta(x) = x
    for (int n = 1; n <= 4; ++n) {
        for_each_signed_permutation(n, [&](const SignedPermutation& p) {
            SignedFlat f = beta_hat(p);
            std::vector<long long> x(static_cast<std::size_t>(n), -2);
            while (true) {
                CHECK(point_in_flat(f, x) == (p.apply(x) == x));
                int pos = 0;
                while (pos < n && x[static_cast<std::size_t>(pos)] == 2) {
                    x[static_cast<std::size_t>(pos)] = -2;
                    ++pos;
                }
                if (pos == n) break;
                ++x[static_cast<std::size_t>(pos)];
            }
        });
    }
}

TEST_CASE("beta_hat rank counts even cycles") {
    for (int n = 1; n <= 4; ++n) {
        for_each_signed_permutation(n, [&](const SignedPermutation& p) {
            int even_cycles = 0;
            for (const auto& cycle : p.cycles()) {
                int hits = 0;
                for (int i : cycle)
                    if (p.in_delta(i)) ++hits;
                if (hits % 2 == 0) ++even_cycles;
            }
            CHECK(beta_hat(p).rank() == n - even_cycles);
        });
    }
}

TEST_CASE("p_sigma") {
    SignedGraph neg_loop(1, {loop_edge(1, -1)});
    auto ideal = p_sigma(neg_loop);
    REQUIRE(ideal.size() == 1);
    CHECK(ideal[0] == ambient(1));

    CHECK(p_sigma(SignedGraph(2, {})).size() == 6);

    SignedGraph pos_link(2, {link_edge(1, 2, +1)});
    auto ideal2 = p_sigma(pos_link);
    REQUIRE(ideal2.size() == 4);
    CHECK(ideal2[0] == ambient(2));
    CHECK(ideal2[1] == block_flat(2, {1, 2}, {1, -1}));
    CHECK(ideal2[2] == SignedFlat::make(2, {1}, {{2}}, {{1}}));
    CHECK(ideal2[3] == SignedFlat::make(2, {2}, {{1}}, {{1}}));

    CHECK_THROWS_AS(p_sigma(SignedGraph(1, {loop_edge(1, +1)})), UnsupportedEdgeError);
    CHECK_THROWS_AS(p_sigma(SignedGraph(1, {free_loop_edge()})), UnsupportedEdgeError);
}

TEST_CASE("rational points work in flats and under permutations") {
    SignedPermutation beta = SignedPermutation::from_word({-2, -1, 3});
    std::vector<Rational> x{Rational(1, 2), Rational(-1, 2), Rational(7, 3)};
    CHECK(beta.apply(x) == x);
    CHECK(point_in_flat(beta_hat(beta), x));
    std::vector<Rational> y{Rational(1, 2), Rational(1, 2), Rational(0)};
    CHECK_FALSE(point_in_flat(beta_hat(beta), y));
}

TEST_CASE("p_sigma is an order ideal toward the ambient space") {
    int checked = 0;
    for (const auto& entry : bundled_corpus()) {
        if (entry.graph.n() > 3) continue;
        if (entry.graph.has_free_loop() || entry.graph.has_positive_loop()) continue;
        auto ideal = p_sigma(entry.graph);
        auto in_ideal = [&](const SignedFlat& f) {
            for (const auto& p : ideal)
                if (p == f) return true;
            return false;
        };
        for (const auto& p : ideal)
            for (const auto& q : enumerate_flats(entry.graph.n()))
                if (is_subflat(p, q)) CHECK(in_ideal(q));
        ++checked;
    }
    CHECK(checked > 50);
}
