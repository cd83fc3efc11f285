#include "sgc/perm.hpp"

#include <algorithm>
#include <numeric>

namespace sgc {

SignedPermutation::SignedPermutation(std::vector<int> images, const std::vector<int>& delta)
    : images_(std::move(images)) {
    int n = static_cast<int>(images_.size());
    std::vector<unsigned char> seen(static_cast<std::size_t>(n), 0);
    inverse_.assign(static_cast<std::size_t>(n), 0);
    for (int i = 1; i <= n; ++i) {
        int j = b(i);
        if (j < 1 || j > n || seen[static_cast<std::size_t>(j - 1)])
            throw ValidationError("images do not form a bijection of 1..n");
        seen[static_cast<std::size_t>(j - 1)] = 1;
        inverse_[static_cast<std::size_t>(j - 1)] = i;
    }
    delta_mask_.assign(static_cast<std::size_t>(n), 0);
    for (int d : delta) {
        if (d < 1 || d > n) throw ValidationError("switching set element out of range");
        delta_mask_[static_cast<std::size_t>(d - 1)] = 1;
    }
}

SignedPermutation SignedPermutation::identity(int n) {
    std::vector<int> im(static_cast<std::size_t>(n));
    std::iota(im.begin(), im.end(), 1);
    return SignedPermutation(std::move(im), {});
}

std::vector<int> SignedPermutation::delta() const {
    std::vector<int> out;
    for (int i = 1; i <= n(); ++i)
        if (in_delta(i)) out.push_back(i);
    return out;
}

bool SignedPermutation::is_identity() const {
    for (int i = 1; i <= n(); ++i)
        if (b(i) != i || in_delta(i)) return false;
    return true;
}

std::vector<std::vector<int>> SignedPermutation::cycles() const {
    std::vector<std::vector<int>> out;
    std::vector<unsigned char> visited(static_cast<std::size_t>(n()), 0);
    for (int start = 1; start <= n(); ++start) {
        if (visited[static_cast<std::size_t>(start - 1)]) continue;
        std::vector<int> cycle;
        int cur = start;
        do {
            visited[static_cast<std::size_t>(cur - 1)] = 1;
            cycle.push_back(cur);
            cur = b(cur);
        } while (cur != start);
        out.push_back(std::move(cycle));
    }
    return out; // starts are scanned in increasing order, so cycles are min-sorted
}

int SignedPermutation::beta_sub(int i) const {
    if (i < 1 || i > n()) throw ValidationError("beta_sub index out of range");
    int k = i;
    for (int cur = b(i); cur != i; cur = b(cur)) k = std::min(k, cur);
    // walk b(k), b^2(k), ... up to i, counting delta hits
    int count = 0;
    int cur = k;
    do {
        cur = b(cur);
        if (in_delta(cur)) ++count;
    } while (cur != i);
    return count;
}

std::vector<int> SignedPermutation::to_word() const {
    std::vector<int> w(static_cast<std::size_t>(n()));
    for (int i = 1; i <= n(); ++i) {
        int j = b(i);
        w[static_cast<std::size_t>(i - 1)] = in_delta(j) ? -j : j;
    }
    return w;
}

SignedPermutation SignedPermutation::from_word(const std::vector<int>& word) {
    std::vector<int> images;
    std::vector<int> delta;
    images.reserve(word.size());
    for (int a : word) {
        if (a == 0) throw ValidationError("permutation word entries must be nonzero");
        images.push_back(std::abs(a));
        if (a < 0) delta.push_back(-a);
    }
    return SignedPermutation(std::move(images), delta);
}

SignedPermutation compose(const SignedPermutation& f, const SignedPermutation& g) {
    if (f.n() != g.n()) throw ValidationError("composing permutations of different rank");
    int n = f.n();
    std::vector<int> images(static_cast<std::size_t>(n));
    std::vector<int> delta;
    for (int i = 1; i <= n; ++i)
        images[static_cast<std::size_t>(i - 1)] = f.b(g.b(i));
    // j is switched in f∘g iff exactly one of: j in delta_f, f^{-1}(j) in delta_g
    for (int j = 1; j <= n; ++j)
        if (f.in_delta(j) != g.in_delta(f.b_inverse(j))) delta.push_back(j);
    return SignedPermutation(std::move(images), delta);
}

SignedPermutation invert(const SignedPermutation& p) {
    int n = p.n();
    std::vector<int> images(static_cast<std::size_t>(n));
    std::vector<int> delta;
    for (int j = 1; j <= n; ++j)
        images[static_cast<std::size_t>(j - 1)] = p.b_inverse(j);
    for (int i = 1; i <= n; ++i)
        if (p.in_delta(p.b(i))) delta.push_back(i);
    return SignedPermutation(std::move(images), delta);
}

void for_each_signed_permutation(int n, const std::function<void(const SignedPermutation&)>& fn,
                                 int n_max) {
    if (n > std::min(n_max, 20)) // 2^n n! candidates; 20 is far past feasible
        throw CapacityError("signed permutation enumeration bound exceeded: n=" +
                            std::to_string(n) + " > " + std::to_string(std::min(n_max, 20)));
    std::vector<int> images(static_cast<std::size_t>(n));
    std::iota(images.begin(), images.end(), 1);
    do {
        for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
            std::vector<int> delta;
            for (int i = 1; i <= n; ++i)
                if (mask & (1ul << (i - 1))) delta.push_back(i);
            fn(SignedPermutation(images, delta));
        }
    } while (std::next_permutation(images.begin(), images.end()));
}

std::vector<SignedPermutation> all_signed_permutations(int n, int n_max) {
    std::vector<SignedPermutation> out;
    for_each_signed_permutation(n, [&](const SignedPermutation& p) { out.push_back(p); }, n_max);
    return out;
}

} // namespace sgc
