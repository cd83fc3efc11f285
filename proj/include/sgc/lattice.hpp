#ifndef SGC_LATTICE_HPP
#define SGC_LATTICE_HPP

#include <cstdint>
#include <vector>

#include "sgc/graph.hpp"
#include "sgc/perm.hpp"

namespace sgc {

// A flat of the type-B intersection lattice in dimension n: a zero set Z plus
// a set partition of the remaining vertices into blocks whose coordinates
// agree up to fixed signs. Stored canonically:
//   - zero_set sorted; blocks sorted by minimum, elements sorted;
//   - the minimum of every block carries sign +1 (a flat's sign data is only
//     determined up to one global flip per block, so this picks the stored
//     representative).
// Geometrically: x_i = 0 on Z, x_i = sign(i) * t_B for i in block B, with one
// free parameter t_B per block.
struct SignedFlat {
    int n = 0;
    std::vector<int> zero_set;
    std::vector<std::vector<int>> blocks;
    std::vector<std::int8_t> sign_of; // index i-1: +1/-1 on blocks, 0 on zero set

    // Normalizes and validates; signs is a parallel structure to blocks.
    static SignedFlat make(int n, std::vector<int> zero_set,
                           std::vector<std::vector<int>> blocks,
                           std::vector<std::vector<int>> signs);

    int dim() const { return static_cast<int>(blocks.size()); }
    int rank() const { return n - dim(); }
    int sign(int i) const { return sign_of[static_cast<std::size_t>(i - 1)]; }

    bool is_ambient() const { return zero_set.empty() && dim() == n; }

    friend bool operator==(const SignedFlat& a, const SignedFlat& b) {
        return a.n == b.n && a.zero_set == b.zero_set && a.blocks == b.blocks &&
               a.sign_of == b.sign_of;
    }
    friend bool operator!=(const SignedFlat& a, const SignedFlat& b) { return !(a == b); }
    // Orders by (rank, zero_set, blocks, signs); enumeration output order.
    friend bool operator<(const SignedFlat& a, const SignedFlat& b);
};

// One hyperplane of the type-B arrangement: x_i = sign * x_j (i < j) or
// x_i = 0.
struct EdgeHyperplane {
    enum class Kind { coordinate, pair };
    Kind kind = Kind::coordinate;
    int i = 0;
    int j = 0;    // pair only, i < j
    int sign = 0; // pair only, +1 or -1

    static EdgeHyperplane coordinate(int i);
    static EdgeHyperplane pair(int i, int j, int sign);

    friend bool operator==(const EdgeHyperplane& a, const EdgeHyperplane& b) {
        return a.kind == b.kind && a.i == b.i && a.j == b.j && a.sign == b.sign;
    }
    friend bool operator<(const EdgeHyperplane& a, const EdgeHyperplane& b);
};

// The hyperplane encoding one edge's properness constraint. Free loops and
// positive loops have none and are rejected.
EdgeHyperplane edge_hyperplane(const EdgeRecord& e);

// The signed graphic arrangement: one hyperplane per edge, deduplicated and
// sorted. Rejects graphs with free or positive loops.
std::vector<EdgeHyperplane> arrangement(const SignedGraph& g);

// All flats in dimension n, ordered by (rank, zero_set, blocks, signs).
// Includes the ambient space and the origin.
std::vector<SignedFlat> enumerate_flats(int n, int n_max = 8);

// True iff the flat lies inside the hyperplane (the constraint holds
// identically on the flat).
bool flat_in_hyperplane(const SignedFlat& p, const EdgeHyperplane& h);

// True iff p is contained in q as subspaces (p above q in the lattice's
// reverse-containment order).
bool is_subflat(const SignedFlat& p, const SignedFlat& q);

// The fixed subspace of a signed permutation, as a flat: cycles with odd
// switching intersection collapse to zero, even cycles become blocks with
// signs (-1)^{beta_sub}.
SignedFlat beta_hat(const SignedPermutation& p);

// The order ideal of flats lying in no edge hyperplane of the graph; the
// strata that carry proper colorings. Rejects free/positive loops.
std::vector<SignedFlat> p_sigma(const SignedGraph& g, int n_max = 8);

// Membership of an explicit point in a flat.
template <typename T>
bool point_in_flat(const SignedFlat& p, const std::vector<T>& x) {
    if (static_cast<int>(x.size()) != p.n)
        throw ValidationError("point dimension does not match flat");
    for (int z : p.zero_set)
        if (!(x[static_cast<std::size_t>(z - 1)] == T(0))) return false;
    for (const auto& block : p.blocks) {
        int first = block.front();
        T ref = x[static_cast<std::size_t>(first - 1)];
        if (p.sign(first) < 0) ref = -ref;
        for (std::size_t t = 1; t < block.size(); ++t) {
            int i = block[t];
            T val = x[static_cast<std::size_t>(i - 1)];
            if (p.sign(i) < 0) val = -val;
            if (!(val == ref)) return false;
        }
    }
    return true;
}

} // namespace sgc

#endif
