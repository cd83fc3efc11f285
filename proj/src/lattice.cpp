#include "sgc/lattice.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <tuple>

namespace sgc {

namespace {

// Sort key encodes signs with + before -, so the all-plus flat sorts first
// among flats sharing a partition.
std::tuple<int, const std::vector<int>&, const std::vector<std::vector<int>>&, std::vector<int>>
flat_key(const SignedFlat& f) {
    std::vector<int> signs;
    for (const auto& block : f.blocks)
        for (int i : block) signs.push_back(f.sign(i) > 0 ? 0 : 1);
    return {f.rank(), f.zero_set, f.blocks, std::move(signs)};
}

} // namespace

bool operator<(const SignedFlat& a, const SignedFlat& b) { return flat_key(a) < flat_key(b); }

SignedFlat SignedFlat::make(int n, std::vector<int> zero_set,
                            std::vector<std::vector<int>> blocks,
                            std::vector<std::vector<int>> signs) {
    if (signs.size() != blocks.size())
        throw ValidationError("one sign list per block required");
    SignedFlat f;
    f.n = n;
    f.sign_of.assign(static_cast<std::size_t>(n), 0);
    std::vector<unsigned char> used(static_cast<std::size_t>(n), 0);
    auto touch = [&](int i) {
        if (i < 1 || i > n) throw ValidationError("flat element out of range");
        if (used[static_cast<std::size_t>(i - 1)])
            throw ValidationError("flat element repeated");
        used[static_cast<std::size_t>(i - 1)] = 1;
    };

    std::sort(zero_set.begin(), zero_set.end());
    for (int z : zero_set) touch(z);
    f.zero_set = std::move(zero_set);

    for (std::size_t bi = 0; bi < blocks.size(); ++bi) {
        auto& block = blocks[bi];
        auto& sgn = signs[bi];
        if (block.empty()) throw ValidationError("empty flat block");
        if (sgn.size() != block.size())
            throw ValidationError("sign list length must match block");
        std::vector<std::pair<int, int>> elems;
        for (std::size_t t = 0; t < block.size(); ++t) {
            if (sgn[t] != 1 && sgn[t] != -1) throw ValidationError("flat sign must be +1 or -1");
            touch(block[t]);
            elems.emplace_back(block[t], sgn[t]);
        }
        std::sort(elems.begin(), elems.end());
        int flip = elems.front().second; // force +1 on the block minimum
        std::vector<int> sorted_block;
        for (auto [i, s] : elems) {
            sorted_block.push_back(i);
            f.sign_of[static_cast<std::size_t>(i - 1)] = static_cast<std::int8_t>(s * flip);
        }
        blocks[bi] = std::move(sorted_block);
    }
    for (int i = 1; i <= n; ++i)
        if (!used[static_cast<std::size_t>(i - 1)])
            throw ValidationError("flat does not cover vertex " + std::to_string(i));
    std::sort(blocks.begin(), blocks.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    f.blocks = std::move(blocks);
    return f;
}

EdgeHyperplane EdgeHyperplane::coordinate(int i) {
    EdgeHyperplane h;
    h.kind = Kind::coordinate;
    h.i = i;
    return h;
}

EdgeHyperplane EdgeHyperplane::pair(int i, int j, int sign) {
    if (i == j) throw ValidationError("pair hyperplane needs distinct indices");
    if (sign != 1 && sign != -1) throw ValidationError("pair hyperplane sign must be +1 or -1");
    EdgeHyperplane h;
    h.kind = Kind::pair;
    h.i = std::min(i, j); // x_i = s x_j is symmetric in i,j for both signs
    h.j = std::max(i, j);
    h.sign = sign;
    return h;
}

bool operator<(const EdgeHyperplane& a, const EdgeHyperplane& b) {
    auto key = [](const EdgeHyperplane& h) {
        return std::tuple(h.kind == EdgeHyperplane::Kind::coordinate ? 0 : 1, h.i, h.j,
                          h.sign > 0 ? 0 : 1);
    };
    return key(a) < key(b);
}

EdgeHyperplane edge_hyperplane(const EdgeRecord& e) {
    switch (e.kind) {
        case EdgeKind::link:
            return EdgeHyperplane::pair(e.u, e.v, e.sign);
        case EdgeKind::loop:
            if (e.sign == +1)
                throw UnsupportedEdgeError("positive loop has no hyperplane");
            return EdgeHyperplane::coordinate(e.u);
        case EdgeKind::half_edge:
            return EdgeHyperplane::coordinate(e.u); // either sign constrains to x_i != 0
        case EdgeKind::free_loop:
            throw UnsupportedEdgeError("free loop has no hyperplane");
    }
    throw InternalError("unreachable edge kind");
}

std::vector<EdgeHyperplane> arrangement(const SignedGraph& g) {
    std::vector<EdgeHyperplane> out;
    out.reserve(g.edges().size());
    for (const auto& e : g.edges()) out.push_back(edge_hyperplane(e));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

namespace {

std::vector<SignedFlat> build_flats(int n) {
    std::vector<SignedFlat> out;

    std::vector<int> rest;
    std::vector<int> zero;
    // growth string over `rest`: block of rest[t] is rgs[t] <= 1 + max so far
    std::vector<int> rgs;

    auto emit_partition = [&]() {
        int nblocks = rgs.empty() ? 0 : *std::max_element(rgs.begin(), rgs.end()) + 1;
        std::vector<std::vector<int>> blocks(static_cast<std::size_t>(nblocks));
        for (std::size_t t = 0; t < rest.size(); ++t)
            blocks[static_cast<std::size_t>(rgs[t])].push_back(rest[t]);
        // odometer over per-block sign patterns; the block minimum stays +1
        std::vector<std::vector<int>> signs(blocks.size());
        for (std::size_t bi = 0; bi < blocks.size(); ++bi)
            signs[bi].assign(blocks[bi].size(), 1);
        while (true) {
            out.push_back(SignedFlat::make(n, zero, blocks, signs));
            std::size_t bi = 0;
            for (; bi < blocks.size(); ++bi) {
                bool carried = true;
                for (std::size_t t = 1; t < signs[bi].size(); ++t) {
                    if (signs[bi][t] == 1) {
                        signs[bi][t] = -1;
                        for (std::size_t s = 1; s < t; ++s) signs[bi][s] = 1;
                        carried = false;
                        break;
                    }
                }
                if (!carried) break;
                for (std::size_t t = 1; t < signs[bi].size(); ++t) signs[bi][t] = 1;
            }
            if (bi == blocks.size()) break;
        }
    };

    std::function<void(std::size_t, int)> recurse = [&](std::size_t t, int max_used) {
        if (t == rest.size()) {
            emit_partition();
            return;
        }
        for (int bidx = 0; bidx <= max_used + 1; ++bidx) {
            rgs[t] = bidx;
            recurse(t + 1, std::max(max_used, bidx));
        }
    };

    for (unsigned long zmask = 0; zmask < (1ul << n); ++zmask) {
        zero.clear();
        rest.clear();
        for (int i = 1; i <= n; ++i) {
            if (zmask & (1ul << (i - 1)))
                zero.push_back(i);
            else
                rest.push_back(i);
        }
        rgs.assign(rest.size(), 0);
        if (rest.empty()) {
            emit_partition();
        } else {
            recurse(0, -1);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Node-stable cache: flat lists are pure functions of n and get hit once per
// quotient inside the Burnside sums.
const std::vector<SignedFlat>& cached_flats(int n, int n_max) {
    if (n > std::min(n_max, 20)) // the flat count explodes long before this
        throw CapacityError("flat enumeration bound exceeded: n=" + std::to_string(n) + " > " +
                            std::to_string(std::min(n_max, 20)));
    static std::mutex mu;
    static std::map<int, std::vector<SignedFlat>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, build_flats(n)).first;
    return it->second;
}

} // namespace

std::vector<SignedFlat> enumerate_flats(int n, int n_max) { return cached_flats(n, n_max); }

bool flat_in_hyperplane(const SignedFlat& p, const EdgeHyperplane& h) {
    auto in_zero = [&](int i) { return p.sign(i) == 0; };
    if (h.kind == EdgeHyperplane::Kind::coordinate) return in_zero(h.i);
    if (in_zero(h.i) && in_zero(h.j)) return true;
    if (in_zero(h.i) || in_zero(h.j)) return false;
    // same block and matching relative sign
    for (const auto& block : p.blocks) {
        bool has_i = std::binary_search(block.begin(), block.end(), h.i);
        bool has_j = std::binary_search(block.begin(), block.end(), h.j);
        if (has_i != has_j) return false;
        if (has_i && has_j) return p.sign(h.i) * p.sign(h.j) == h.sign;
    }
    return false;
}

bool is_subflat(const SignedFlat& p, const SignedFlat& q) {
    if (p.n != q.n) throw ValidationError("comparing flats of different dimension");
    for (int z : q.zero_set)
        if (p.sign(z) != 0) return false;
    for (const auto& block : q.blocks) {
        // the whole block must land in p's zero set, or inside one p-block
        // with q's relative signs preserved
        int first = block.front();
        if (p.sign(first) == 0) {
            for (int i : block)
                if (p.sign(i) != 0) return false;
            continue;
        }
        // relative signs: p.sign(i)*p.sign(first) must equal q.sign(i)*q.sign(first)
        const std::vector<int>* pblock = nullptr;
        for (const auto& cand : p.blocks)
            if (std::binary_search(cand.begin(), cand.end(), first)) {
                pblock = &cand;
                break;
            }
        if (pblock == nullptr) throw InternalError("flat sign data inconsistent with blocks");
        for (int i : block) {
            if (!std::binary_search(pblock->begin(), pblock->end(), i)) return false;
            if (p.sign(i) * p.sign(first) != q.sign(i) * q.sign(first)) return false;
        }
    }
    return true;
}

SignedFlat beta_hat(const SignedPermutation& p) {
    std::vector<int> zero;
    std::vector<std::vector<int>> blocks;
    std::vector<std::vector<int>> signs;
    for (const auto& cycle : p.cycles()) {
        int hits = 0;
        for (int i : cycle)
            if (p.in_delta(i)) ++hits;
        if (hits % 2 != 0) {
            zero.insert(zero.end(), cycle.begin(), cycle.end());
        } else {
            std::vector<int> sgn;
            sgn.reserve(cycle.size());
            for (int i : cycle) sgn.push_back(p.beta_sub(i) % 2 == 0 ? 1 : -1);
            blocks.push_back(cycle);
            signs.push_back(std::move(sgn));
        }
    }
    return SignedFlat::make(p.n(), std::move(zero), std::move(blocks), std::move(signs));
}

std::vector<SignedFlat> p_sigma(const SignedGraph& g, int n_max) {
    auto hyperplanes = arrangement(g);
    std::vector<SignedFlat> out;
    for (const auto& f : cached_flats(g.n(), n_max)) {
        bool avoided = std::none_of(hyperplanes.begin(), hyperplanes.end(),
                                    [&](const EdgeHyperplane& h) { return flat_in_hyperplane(f, h); });
        if (avoided) out.push_back(f);
    }
    return out;
}

} // namespace sgc
