#include "sgc/chromatic.hpp"

#include <functional>

namespace sgc {

namespace {

// Visits every sigma in [-k,k]^n.
void for_each_coloring(int n, int k, const std::function<void(const Coloring&)>& fn) {
    Coloring sigma(static_cast<std::size_t>(n), -k);
    while (true) {
        fn(sigma);
        int pos = 0;
        while (pos < n && sigma[static_cast<std::size_t>(pos)] == k) {
            sigma[static_cast<std::size_t>(pos)] = -k;
            ++pos;
        }
        if (pos == n) break;
        ++sigma[static_cast<std::size_t>(pos)];
    }
}

} // namespace

void ensure_coloring_budget(int n, int k, long long budget) {
    if (k < 0) throw ValidationError("k must be nonnegative");
    long long total = 1;
    long long base = 2ll * k + 1;
    for (int i = 0; i < n; ++i) {
        if (total > budget / base)
            throw CapacityError("brute-force budget exceeded: (2k+1)^n > " +
                                std::to_string(budget));
        total *= base;
    }
}

bool is_proper(const SignedGraph& g, const Coloring& sigma) {
    if (static_cast<int>(sigma.size()) != g.n())
        throw ValidationError("coloring length does not match graph");
    for (const auto& e : g.edges()) {
        switch (e.kind) {
            case EdgeKind::link: {
                long long a = sigma[static_cast<std::size_t>(e.u - 1)];
                long long b = sigma[static_cast<std::size_t>(e.v - 1)];
                if (a == e.sign * b) return false;
                break;
            }
            case EdgeKind::loop:
                if (e.sign == +1) return false;
                if (sigma[static_cast<std::size_t>(e.u - 1)] == 0) return false;
                break;
            case EdgeKind::half_edge:
                if (sigma[static_cast<std::size_t>(e.u - 1)] == 0) return false;
                break;
            case EdgeKind::free_loop:
                return false;
        }
    }
    return true;
}

long long count_colorings_bruteforce(const SignedGraph& g, int k, long long budget) {
    ensure_coloring_budget(g.n(), k, budget);
    long long count = 0;
    for_each_coloring(g.n(), k, [&](const Coloring& sigma) {
        if (is_proper(g, sigma)) ++count;
    });
    return count;
}

long long proper_colorings_in_flat(const SignedGraph& g, const SignedFlat& flat, int k,
                                   long long budget) {
    if (flat.n != g.n()) throw ValidationError("flat dimension does not match graph");
    ensure_coloring_budget(g.n(), k, budget);
    long long count = 0;
    for_each_coloring(g.n(), k, [&](const Coloring& sigma) {
        if (is_proper(g, sigma) && point_in_flat(flat, sigma)) ++count;
    });
    return count;
}

ExactPolynomial chromatic_polynomial(const SignedGraph& g, int n_max) {
    if (g.has_free_loop() || g.has_positive_loop()) return ExactPolynomial();
    ExactPolynomial out;
    std::vector<ExactPolynomial> term_by_dim(static_cast<std::size_t>(g.n()) + 1);
    std::vector<bool> have(static_cast<std::size_t>(g.n()) + 1, false);
    for (const auto& p : p_sigma(g, n_max)) {
        auto d = static_cast<std::size_t>(p.dim());
        if (!have[d]) {
            term_by_dim[d] = falling_factorial(p.dim()) * Rational(1ll << p.dim());
            have[d] = true;
        }
        out += term_by_dim[d];
    }
    return out;
}

std::vector<long long> whitney_numbers(const SignedGraph& g, int n_max) {
    if (g.has_free_loop() || g.has_positive_loop())
        throw UnsupportedEdgeError("Whitney numbers need a graph without free or positive loops");
    std::vector<long long> w(static_cast<std::size_t>(g.n()) + 1, 0);
    for (const auto& p : p_sigma(g, n_max)) ++w[static_cast<std::size_t>(p.rank())];
    return w;
}

ExactPolynomial chromatic_polynomial_from_whitney(const SignedGraph& g, int n_max) {
    auto w = whitney_numbers(g, n_max);
    int n = g.n();
    ExactPolynomial out;
    for (int i = 0; i <= n; ++i) {
        long long count = w[static_cast<std::size_t>(n - i)];
        if (count == 0) continue;
        out += falling_factorial(i) * Rational(count * (1ll << i));
    }
    return out;
}

} // namespace sgc
