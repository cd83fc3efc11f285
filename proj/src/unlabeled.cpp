#include "sgc/unlabeled.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "sgc/action.hpp"
#include "sgc/quotient.hpp"

namespace sgc {

namespace {

// Union-find over 0..n-1.
struct DisjointSets {
    std::vector<int> parent;
    explicit DisjointSets(std::size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    }
    void unite(int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); }
    long long count_roots() {
        long long c = 0;
        for (std::size_t i = 0; i < parent.size(); ++i)
            if (find(static_cast<int>(i)) == static_cast<int>(i)) ++c;
        return c;
    }
};

void for_each_coloring_local(int n, int k, const std::function<void(const Coloring&)>& fn) {
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

// Signed permutations of (1..d) as integer vectors, in a fixed order.
std::vector<std::vector<long long>> signed_permutation_points(int d) {
    std::vector<std::vector<long long>> out;
    std::vector<long long> values(static_cast<std::size_t>(d));
    std::iota(values.begin(), values.end(), 1);
    do {
        for (unsigned long mask = 0; mask < (1ul << d); ++mask) {
            std::vector<long long> point = values;
            for (int i = 0; i < d; ++i)
                if (mask & (1ul << i)) point[static_cast<std::size_t>(i)] = -point[static_cast<std::size_t>(i)];
            out.push_back(std::move(point));
        }
    } while (std::next_permutation(values.begin(), values.end()));
    return out;
}

long long checked_nonnegative_integer(const Rational& r, const char* what) {
    if (!r.is_nonnegative_integer())
        throw InternalError(std::string(what) + " is not a nonnegative integer: " + r.str());
    return r.as_integer();
}

} // namespace

long long fixed_proper_colorings(const SignedGraph& g, const SignedPermutation& beta, int k,
                                 long long budget) {
    if (beta.n() != g.n()) throw ValidationError("permutation rank does not match graph");
    ensure_coloring_budget(g.n(), k, budget);
    long long count = 0;
    for_each_coloring_local(g.n(), k, [&](const Coloring& sigma) {
        if (is_proper(g, sigma) && beta.apply(sigma) == sigma) ++count;
    });
    return count;
}

ExactPolynomial unlabeled_chromatic_via_quotients(const SignedGraph& g, int n_max) {
    auto group = automorphism_group(g, n_max);
    ExactPolynomial sum;
    for (const auto& beta : group)
        sum += chromatic_polynomial(quotient(g, beta).graph, n_max);
    return sum / Rational(static_cast<long long>(group.size()));
}

ExactPolynomial unlabeled_chromatic_via_flats(const SignedGraph& g, int n_max) {
    if (g.has_free_loop() || g.has_positive_loop())
        throw UnsupportedEdgeError(
            "flat-route unlabeled chromatic needs a graph without free or positive loops");
    auto group = automorphism_group(g, n_max);
    auto ideal = p_sigma(g, n_max);
    ExactPolynomial sum;
    for (const auto& beta : group) {
        SignedFlat fixed = beta_hat(beta);
        for (const auto& p : ideal)
            if (is_subflat(p, fixed))
                sum += falling_factorial(p.dim()) * Rational(1ll << p.dim());
    }
    return sum / Rational(static_cast<long long>(group.size()));
}

long long acyclic_count(const SignedGraph& g, int n_max) {
    ExactPolynomial chi = chromatic_polynomial(g, n_max);
    if (chi.is_zero()) return 0;
    Rational value = chi.evaluate(Rational(-1));
    if (g.n() % 2 != 0) value = -value;
    return checked_nonnegative_integer(value, "acyclic orientation count");
}

std::vector<std::int8_t> sign_vector(const std::vector<EdgeHyperplane>& hyperplanes,
                                     const std::vector<long long>& x) {
    std::vector<std::int8_t> out;
    out.reserve(hyperplanes.size());
    for (const auto& h : hyperplanes) {
        long long v = h.kind == EdgeHyperplane::Kind::coordinate
                          ? x[static_cast<std::size_t>(h.i - 1)]
                          : x[static_cast<std::size_t>(h.i - 1)] -
                                h.sign * x[static_cast<std::size_t>(h.j - 1)];
        out.push_back(v > 0 ? std::int8_t{1} : v < 0 ? std::int8_t{-1} : std::int8_t{0});
    }
    return out;
}

std::vector<std::vector<long long>> flat_sample_points(const SignedFlat& flat) {
    int d = flat.dim();
    std::vector<std::vector<long long>> out;
    for (const auto& t : signed_permutation_points(d)) {
        std::vector<long long> x(static_cast<std::size_t>(flat.n), 0);
        for (std::size_t bi = 0; bi < flat.blocks.size(); ++bi)
            for (int i : flat.blocks[bi])
                x[static_cast<std::size_t>(i - 1)] = flat.sign(i) * t[bi];
        out.push_back(std::move(x));
    }
    return out;
}

RegionSet regions_bruteforce(const SignedGraph& g, int n_max) {
    if (g.n() > std::min(n_max, 20))
        throw CapacityError("region enumeration bound exceeded: n=" + std::to_string(g.n()) +
                            " > " + std::to_string(std::min(n_max, 20)));
    RegionSet rs;
    rs.hyperplanes = arrangement(g);
    std::map<std::vector<std::int8_t>, std::vector<long long>> found;
    for (const auto& x : signed_permutation_points(g.n())) {
        auto sv = sign_vector(rs.hyperplanes, x);
        if (std::find(sv.begin(), sv.end(), 0) != sv.end())
            throw InternalError("region sample point landed on a hyperplane");
        found.emplace(std::move(sv), x); // keeps the first representative
    }
    for (auto& [sv, rep] : found) rs.regions.push_back(Region{sv, rep});
    return rs;
}

long long regions_meeting_flat(const SignedGraph& g, const SignedPermutation& beta, int n_max) {
    if (beta.n() != g.n()) throw ValidationError("permutation rank does not match graph");
    if (g.n() > std::min(n_max, 20))
        throw CapacityError("region enumeration bound exceeded: n=" + std::to_string(g.n()) +
                            " > " + std::to_string(std::min(n_max, 20)));
    auto hyperplanes = arrangement(g);
    SignedFlat fixed = beta_hat(beta);
    std::set<std::vector<std::int8_t>> distinct;
    for (const auto& x : flat_sample_points(fixed)) {
        auto sv = sign_vector(hyperplanes, x);
        // a zero entry at a generic sample marks a hyperplane containing the
        // flat; then no region meets it at all
        if (std::find(sv.begin(), sv.end(), 0) != sv.end()) return 0;
        distinct.insert(std::move(sv));
    }
    return static_cast<long long>(distinct.size());
}

bool region_fixed_by(const RegionSet& rs, const SignedPermutation& beta, const Region& region) {
    return sign_vector(rs.hyperplanes, beta.apply(region.rep)) == region.signs;
}

bool region_meets_flat(const RegionSet& rs, const SignedFlat& flat, const Region& region) {
    for (const auto& x : flat_sample_points(flat))
        if (sign_vector(rs.hyperplanes, x) == region.signs) return true;
    return false;
}

long long unlabeled_acyclic_count(const SignedGraph& g, int n_max) {
    auto group = automorphism_group(g, n_max);
    Rational sum(0);
    for (const auto& beta : group) {
        QuotientResult q = quotient(g, beta);
        ExactPolynomial chi = chromatic_polynomial(q.graph, n_max);
        Rational value = chi.evaluate(Rational(-1));
        if (q.graph.n() % 2 != 0) value = -value;
        sum += value;
    }
    return checked_nonnegative_integer(sum / Rational(static_cast<long long>(group.size())),
                                       "unlabeled acyclic count");
}

long long coloring_orbit_count(const SignedGraph& g, int k, int n_max, long long budget) {
    auto group = automorphism_group(g, n_max);
    ensure_coloring_budget(g.n(), k, budget);
    std::vector<Coloring> proper;
    std::map<Coloring, int> index;
    for_each_coloring_local(g.n(), k, [&](const Coloring& sigma) {
        if (is_proper(g, sigma)) {
            index.emplace(sigma, static_cast<int>(proper.size()));
            proper.push_back(sigma);
        }
    });
    DisjointSets sets(proper.size());
    for (const auto& beta : group) {
        for (std::size_t i = 0; i < proper.size(); ++i) {
            Coloring image = beta.apply(proper[i]);
            auto it = index.find(image);
            if (it == index.end())
                throw InternalError("automorphism mapped a proper coloring to an improper one");
            sets.unite(static_cast<int>(i), it->second);
        }
    }
    return sets.count_roots();
}

long long region_orbit_count(const SignedGraph& g, int n_max) {
    auto group = automorphism_group(g, n_max);
    RegionSet rs = regions_bruteforce(g, std::min(n_max, kDefaultRegionBound));
    std::map<std::vector<std::int8_t>, int> index;
    for (std::size_t i = 0; i < rs.regions.size(); ++i)
        index.emplace(rs.regions[i].signs, static_cast<int>(i));
    DisjointSets sets(rs.regions.size());
    for (const auto& beta : group) {
        for (std::size_t i = 0; i < rs.regions.size(); ++i) {
            auto sv = sign_vector(rs.hyperplanes, beta.apply(rs.regions[i].rep));
            auto it = index.find(sv);
            if (it == index.end())
                throw InternalError("automorphism mapped a region off the region list");
            sets.unite(static_cast<int>(i), it->second);
        }
    }
    return sets.count_roots();
}

} // namespace sgc
