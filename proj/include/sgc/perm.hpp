#ifndef SGC_PERM_HPP
#define SGC_PERM_HPP

#include <algorithm>
#include <functional>
#include <vector>

#include "sgc/errors.hpp"

namespace sgc {

// Signed permutation (b, delta): permutation b of [n] plus switching set
// delta, an element of the hyperoctahedral group. Acts on R^n by sending
// e_i to +-e_{b(i)}, flipping the sign exactly when b(i) lies in delta.
class SignedPermutation {
public:
    // images[i-1] = b(i); delta holds the switched coordinates.
    SignedPermutation(std::vector<int> images, const std::vector<int>& delta);
    static SignedPermutation identity(int n);

    int n() const { return static_cast<int>(images_.size()); }
    int b(int i) const { return images_[static_cast<std::size_t>(i - 1)]; }
    int b_inverse(int i) const { return inverse_[static_cast<std::size_t>(i - 1)]; }
    bool in_delta(int i) const { return delta_mask_[static_cast<std::size_t>(i - 1)] != 0; }
    std::vector<int> delta() const;
    bool is_identity() const;

    // y with y[b(i)] = (-1)^{[b(i) in delta]} x[i].
    template <typename T>
    std::vector<T> apply(const std::vector<T>& x) const {
        if (static_cast<int>(x.size()) != n())
            throw ValidationError("point dimension does not match permutation");
        std::vector<T> y(x.size());
        for (int i = 1; i <= n(); ++i) {
            int j = b(i);
            T val = x[static_cast<std::size_t>(i - 1)];
            y[static_cast<std::size_t>(j - 1)] = in_delta(j) ? -val : val;
        }
        return y;
    }

    // Disjoint cycles of b covering 1..n, ordered by minimal element; each
    // cycle starts at its minimum and follows b.
    std::vector<std::vector<int>> cycles() const;

    // With k the minimum of i's cycle and l minimal with b^l(k) = i, the
    // count |delta ∩ {b(k), b^2(k), ..., b^l(k)=i}|. For i = k this is the
    // size of delta's intersection with the whole cycle.
    int beta_sub(int i) const;

    friend bool operator==(const SignedPermutation& a, const SignedPermutation& b) {
        return a.images_ == b.images_ && a.delta_mask_ == b.delta_mask_;
    }
    friend bool operator!=(const SignedPermutation& a, const SignedPermutation& b) {
        return !(a == b);
    }
    // (images, delta-as-bitmask); the order the enumeration visits
    friend bool operator<(const SignedPermutation& a, const SignedPermutation& b) {
        if (a.images_ != b.images_) return a.images_ < b.images_;
        return std::lexicographical_compare(a.delta_mask_.rbegin(), a.delta_mask_.rend(),
                                            b.delta_mask_.rbegin(), b.delta_mask_.rend());
    }

    // Signed one-line form: word[i-1] = +-b(i), negative iff b(i) in delta.
    std::vector<int> to_word() const;
    static SignedPermutation from_word(const std::vector<int>& word);

private:
    std::vector<int> images_;
    std::vector<int> inverse_;
    std::vector<unsigned char> delta_mask_;
};

// compose(f, g) acts as f after g.
SignedPermutation compose(const SignedPermutation& f, const SignedPermutation& g);
SignedPermutation invert(const SignedPermutation& p);

// Visits all 2^n * n! signed permutations in a fixed order (images
// lexicographic, then delta as an ascending bitmask). Guarded by n_max.
void for_each_signed_permutation(int n, const std::function<void(const SignedPermutation&)>& fn,
                                 int n_max = 8);
std::vector<SignedPermutation> all_signed_permutations(int n, int n_max = 8);

} // namespace sgc

#endif
