#pragma once

// Permutations, Lie-permutations and set-partition enumeration.

#include <dynmag/ncpoly.hpp>

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <numeric>
#include <span>
#include <stdexcept>
#include <vector>

namespace dynmag {

/// Bijection of {1..n} stored as its image sequence.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> images) : images_(std::move(images)) {
        std::vector<int> sorted(images_);
        std::sort(sorted.begin(), sorted.end());
        for (std::size_t i = 0; i < sorted.size(); ++i)
            if (sorted[i] != static_cast<int>(i + 1)) throw std::invalid_argument("Permutation: not a bijection of 1..n");
    }
    static Permutation identity(int n) {
        std::vector<int> v(static_cast<std::size_t>(n));
        std::iota(v.begin(), v.end(), 1);
        return Permutation(std::move(v));
    }

    [[nodiscard]] std::size_t size() const { return images_.size(); }
    [[nodiscard]] int operator()(int i) const { return images_[static_cast<std::size_t>(i - 1)]; }
    [[nodiscard]] const std::vector<int>& images() const { return images_; }

    [[nodiscard]] int descents() const {
        int d = 0;
        for (std::size_t i = 0; i + 1 < images_.size(); ++i) d += images_[i] > images_[i + 1] ? 1 : 0;
        return d;
    }
    [[nodiscard]] int ascents() const {
        int a = 0;
        for (std::size_t i = 0; i + 1 < images_.size(); ++i) a += images_[i] < images_[i + 1] ? 1 : 0;
        return a;
    }

    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> images_;
};

/// Calls f(const Permutation&) for every permutation of {1..n} in
/// lexicographic order.
template <class F>
void for_each_permutation(int n, F&& f) {
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    do {
        f(Permutation(v));
    } while (std::next_permutation(v.begin(), v.end()));
}

/// Ordered blocks of distinct indices. Each block ends in its maximum and the
/// block maxima increase.
class LiePermutation {
public:
    using Block = std::vector<int>;

    LiePermutation() = default;
    explicit LiePermutation(std::vector<Block> blocks) : blocks_(std::move(blocks)) {
        int last_max = 0;
        std::vector<int> seen;
        for (const auto& b : blocks_) {
            if (b.empty()) throw std::invalid_argument("LiePermutation: empty block");
            const int mx = *std::max_element(b.begin(), b.end());
            if (b.back() != mx) throw std::invalid_argument("LiePermutation: block must end in its maximum");
            if (mx <= last_max) throw std::invalid_argument("LiePermutation: block maxima must increase");
            last_max = mx;
            seen.insert(seen.end(), b.begin(), b.end());
        }
        std::sort(seen.begin(), seen.end());
        for (std::size_t i = 0; i < seen.size(); ++i)
            if (seen[i] != static_cast<int>(i + 1)) throw std::invalid_argument("LiePermutation: blocks must partition 1..n");
    }

    [[nodiscard]] const std::vector<Block>& blocks() const { return blocks_; }
    [[nodiscard]] std::size_t block_count() const { return blocks_.size(); }
    [[nodiscard]] std::size_t size() const {
        std::size_t n = 0;
        for (const auto& b : blocks_) n += b.size();
        return n;
    }

    /// Concatenates the blocks from last to first.
    [[nodiscard]] Permutation to_permutation() const {
        std::vector<int> seq;
        for (auto it = blocks_.rbegin(); it != blocks_.rend(); ++it) seq.insert(seq.end(), it->begin(), it->end());
        return Permutation(std::move(seq));
    }

    /// Inverse of to_permutation: the prefix up to the overall maximum is the
    /// last block, then the prefix of the rest up to its maximum, and so on.
    static LiePermutation from_permutation(const Permutation& p) {
        std::vector<int> rest = p.images();
        std::vector<Block> reversed;
        while (!rest.empty()) {
            auto mx = std::max_element(rest.begin(), rest.end());
            reversed.emplace_back(rest.begin(), mx + 1);
            rest.erase(rest.begin(), mx + 1);
        }
        std::reverse(reversed.begin(), reversed.end());
        return LiePermutation(std::move(reversed));
    }

    friend auto operator<=>(const LiePermutation&, const LiePermutation&) = default;

private:
    std::vector<Block> blocks_;
};

/// Exhaustive list of the Lie-permutations of {1..n}, built directly from the
/// definition: choose the block holding the largest remaining element, then
/// recurse on what is left.
inline std::vector<LiePermutation> enumerate_lie_permutations(int n) {
    if (n < 0) throw std::invalid_argument("enumerate_lie_permutations: n must be >= 0");
    std::vector<LiePermutation> out;
    std::vector<std::vector<int>> blocks_rev;
    std::function<void(std::vector<int>)> rec = [&](std::vector<int> remaining) {
        if (remaining.empty()) {
            std::vector<std::vector<int>> blocks(blocks_rev.rbegin(), blocks_rev.rend());
            out.emplace_back(std::move(blocks));
            return;
        }
        const int top = remaining.back();
        std::vector<int> others(remaining.begin(), remaining.end() - 1);
        const std::size_t m = others.size();
        // every subset of the others, arranged in every order, precedes `top`
        for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
            std::vector<int> chosen, rest;
            for (std::size_t i = 0; i < m; ++i) ((mask >> i) & 1U ? chosen : rest).push_back(others[i]);
            do {
                std::vector<int> block(chosen);
                block.push_back(top);
                blocks_rev.push_back(std::move(block));
                rec(rest);
                blocks_rev.pop_back();
            } while (std::next_permutation(chosen.begin(), chosen.end()));
        }
    };
    std::vector<int> all(static_cast<std::size_t>(n));
    std::iota(all.begin(), all.end(), 1);
    rec(all);
    std::sort(out.begin(), out.end());
    return out;
}

/// Calls f(blocks) for every ordered list of disjoint nonempty blocks covering
/// `items`, each block listing its items in the given (increasing) order.
template <class F>
void for_each_ordered_partition(std::span<const int> items, F&& f) {
    const std::size_t m = items.size();
    std::vector<std::vector<int>> blocks;
    std::function<void(std::size_t)> rec = [&](std::size_t used) {
        const std::size_t full = (std::size_t{1} << m) - 1;
        if (used == full) {
            f(static_cast<const std::vector<std::vector<int>>&>(blocks));
            return;
        }
        const std::size_t free = full & ~used;
        for (std::size_t sub = free; sub != 0; sub = (sub - 1) & free) {
            std::vector<int> block;
            for (std::size_t i = 0; i < m; ++i)
                if ((sub >> i) & 1U) block.push_back(items[i]);
            blocks.push_back(std::move(block));
            rec(used | sub);
            blocks.pop_back();
        }
    };
    rec(0);
}

/// Calls f(blocks) for every set partition of `items`, blocks ordered by their
/// first element (so by minimum when items increase). max_block bounds the
/// block size.
template <class F>
void for_each_set_partition(std::span<const int> items, F&& f, std::size_t max_block = static_cast<std::size_t>(-1)) {
    const std::size_t m = items.size();
    std::vector<std::vector<int>> blocks;
    std::function<void(std::size_t)> rec = [&](std::size_t used) {
        const std::size_t full = (std::size_t{1} << m) - 1;
        if (used == full) {
            f(static_cast<const std::vector<std::vector<int>>&>(blocks));
            return;
        }
        std::size_t first = 0;
        while ((used >> first) & 1U) ++first;
        const std::size_t free = full & ~used & ~(std::size_t{1} << first);
        // submasks of `free`, including the empty one
        for (std::size_t sub = free;; sub = (sub - 1) & free) {
            if (static_cast<std::size_t>(__builtin_popcountll(sub)) + 1 <= max_block) {
                std::vector<int> block{items[first]};
                for (std::size_t i = first + 1; i < m; ++i)
                    if ((sub >> i) & 1U) block.push_back(items[i]);
                blocks.push_back(std::move(block));
                rec(used | sub | (std::size_t{1} << first));
                blocks.pop_back();
            }
            if (sub == 0) break;
        }
    };
    rec(0);
}

/// Number of ordered set partitions of an m-set.
inline unsigned long long fubini_number(unsigned m) {
    // a(m) = sum_{k=1}^{m} C(m,k) a(m-k), a(0) = 1
    std::vector<unsigned long long> a(m + 1, 0);
    a[0] = 1;
    for (unsigned i = 1; i <= m; ++i) {
        unsigned long long c = 1;
        for (unsigned k = 1; k <= i; ++k) {
            c = c * (i - k + 1) / k;
            a[i] += c * a[i - k];
        }
    }
    return a[m];
}

}  // namespace dynmag
