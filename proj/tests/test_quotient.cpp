#include <doctest.h>

#include <random>

#include "sgc/chromatic.hpp"
#include "sgc/corpus.hpp"
#include "sgc/io.hpp"
#include "sgc/quotient.hpp"

using namespace sgc;

TEST_CASE("figure quotient under the derived rule") {
    QuotientResult q = quotient(figure_graph(), figure_perm());

    // cycles (1), (23), (4); the first two survive
    CHECK(q.graph.n() == 2);
    CHECK(q.vertex_map == std::vector<std::pair<int, int>>{{1, 1}, {2, 2}});
    CHECK(q.edge_map == std::vector<std::pair<int, int>>{{1, 1}, {2, 2}, {3, 3}, {4, 4}, {5, 5}});

    REQUIRE(q.graph.edges().size() == 5);
    const auto& e = q.graph.edges();
    // 12+ -> link 12 with twist (-1)^{0+2}
    CHECK(e[0].kind == EdgeKind::link);
    CHECK(e[0].sign == +1);
    // 24- and 34+ lose the dead vertex 4 and shrink to half edges at 2
    CHECK(e[1].kind == EdgeKind::half_edge);
    CHECK(e[1].u == 2);
    CHECK(e[1].sign == -1);
    CHECK(e[2].kind == EdgeKind::half_edge);
    CHECK(e[2].u == 2);
    CHECK(e[2].sign == -1);
    // 13-: endpoints in different surviving cycles, twist (-1)^{0+1}
    CHECK(e[3].kind == EdgeKind::link);
    CHECK(std::min(e[3].u, e[3].v) == 1);
    CHECK(std::max(e[3].u, e[3].v) == 2);
    CHECK(e[3].sign == +1);
    // 23-: same surviving cycle, loop with twist (-1)^{2+1}
    CHECK(e[4].kind == EdgeKind::loop);
    CHECK(e[4].u == 2);
    CHECK(e[4].sign == +1);

    // the positive loop kills every coloring, matching the fixed-subspace count
    CHECK(chromatic_polynomial(q.graph).is_zero());
}

TEST_CASE("figure quotient under the paper-figure rule") {
    QuotientResult q = quotient(figure_graph(), figure_perm(), QuotientSignRule::paper_figure);
    const auto& e = q.graph.edges();
    REQUIRE(e.size() == 5);
    CHECK(e[0].sign == +1); // link 12: twist at cycle minima is trivial
    CHECK(e[3].kind == EdgeKind::link);
    CHECK(e[3].sign == -1); // keeps the printed sign
    CHECK(e[4].kind == EdgeKind::loop);
    CHECK(e[4].sign == -1); // shrink rule
    CHECK_FALSE(chromatic_polynomial(q.graph).is_zero());
}

TEST_CASE("quotient by the identity is the graph itself") {
    for (const auto& entry : bundled_corpus()) {
        if (entry.graph.n() > 3) continue;
        QuotientResult q = quotient(entry.graph, SignedPermutation::identity(entry.graph.n()));
        CHECK(q.graph == entry.graph);
        CHECK(q.graph.n() == entry.graph.n());
        for (const auto& [s, label] : q.vertex_map) CHECK(s == label);
    }
}

TEST_CASE("quotient vertex count is the number of even cycles") {
    for (int n = 1; n <= 5; ++n) {
        SignedGraph empty(n, {});
        for_each_signed_permutation(n, [&](const SignedPermutation& p) {
            int even = 0;
            for (const auto& cycle : p.cycles()) {
                int hits = 0;
                for (int i : cycle)
                    if (p.in_delta(i)) ++hits;
                if (hits % 2 == 0) ++even;
            }
            CHECK(quotient(empty, p).graph.n() == even);
        });
    }
}

TEST_CASE("endpoint sets never grow") {
    auto endpoints = [](const EdgeRecord& e) {
        switch (e.kind) {
            case EdgeKind::link: return 2;
            case EdgeKind::loop:
            case EdgeKind::half_edge: return 1;
            case EdgeKind::free_loop: return 0;
        }
        return 0;
    };
    std::mt19937 rng(23);
    for (const auto& entry : bundled_corpus()) {
        if (entry.graph.n() > 4 || rng() % 4 != 0) continue;
        for (const auto& beta : corpus_perms_for(entry.graph)) {
            QuotientResult q = quotient(entry.graph, beta);
            REQUIRE(q.graph.edges().size() == entry.graph.edges().size());
            for (std::size_t i = 0; i < q.graph.edges().size(); ++i)
                CHECK(endpoints(q.graph.edges()[i]) <= endpoints(entry.graph.edges()[i]));
        }
    }
}

TEST_CASE("quotient chromatic polynomial counts colorings in the fixed subspace") {
    // the module's correctness oracle, at unit-test scale
    int pairs = 0;
    for (const auto& entry : bundled_corpus()) {
        if (entry.graph.n() > 2) continue;
        for (const auto& beta : all_signed_permutations(entry.graph.n())) {
            SignedFlat fixed = beta_hat(beta);
            ExactPolynomial chi = chromatic_polynomial(quotient(entry.graph, beta).graph);
            for (int k = 0; k <= 3; ++k)
                CHECK(chi.evaluate(Rational(k)).as_integer() ==
                      proper_colorings_in_flat(entry.graph, fixed, k));
            ++pairs;
        }
    }
    CHECK(pairs >= 200);
}

TEST_CASE("dimension mismatch") {
    CHECK_THROWS_AS(quotient(SignedGraph(2, {}), SignedPermutation::identity(3)),
                    ValidationError);
}
