#ifndef SGC_CHROMATIC_HPP
#define SGC_CHROMATIC_HPP

#include <vector>

#include "sgc/graph.hpp"
#include "sgc/lattice.hpp"
#include "sgc/polynomial.hpp"

namespace sgc {

// A coloring assigns an integer to each vertex; entry i-1 is the color of
// vertex i. k-colorings take values in [-k, k].
using Coloring = std::vector<long long>;

inline constexpr long long kDefaultBruteBudget = 10'000'000;

// Properness: sigma(i) != sign * sigma(j) on links, sigma(i) != 0 on negative
// loops and half edges; false for every coloring if a free loop or positive
// loop is present.
bool is_proper(const SignedGraph& g, const Coloring& sigma);

// Throws CapacityError when (2k+1)^n exceeds the budget.
void ensure_coloring_budget(int n, int k, long long budget = kDefaultBruteBudget);

// Exact count by full enumeration of [-k,k]^n; the master oracle. Errors out
// when (2k+1)^n exceeds the budget.
long long count_colorings_bruteforce(const SignedGraph& g, int k,
                                     long long budget = kDefaultBruteBudget);

// Count of proper colorings lying in a given flat, again by enumeration.
long long proper_colorings_in_flat(const SignedGraph& g, const SignedFlat& flat, int k,
                                   long long budget = kDefaultBruteBudget);

// The signed chromatic polynomial via the flat sum over the order ideal
// P(Sigma): sum of 2^{n-rho(p)} (k)_{n-rho(p)}. Graphs with a free or
// positive loop yield the zero polynomial.
ExactPolynomial chromatic_polynomial(const SignedGraph& g, int n_max = 8);

// W_i = number of flats of P(Sigma) with rank i, for i = 0..n. Rejects
// free/positive loops.
std::vector<long long> whitney_numbers(const SignedGraph& g, int n_max = 8);

// The same polynomial assembled from the Whitney numbers,
// sum_i W_{n-i} 2^i (k)_i; the grouped counterpart of the flat sum.
ExactPolynomial chromatic_polynomial_from_whitney(const SignedGraph& g, int n_max = 8);

} // namespace sgc

#endif
