#include <dynmag/combinatorics.hpp>

#include <gtest/gtest.h>

#include <set>

using namespace dynmag;

namespace {

unsigned long long fact(int n) { return n <= 1 ? 1ULL : static_cast<unsigned long long>(n) * fact(n - 1); }

// Bell numbers from the Bell triangle.
unsigned long long bell(int n) {
    std::vector<unsigned long long> row{1};
    for (int i = 0; i < n; ++i) {
        std::vector<unsigned long long> next{row.back()};
        for (auto x : row) next.push_back(next.back() + x);
        row = next;
    }
    return row.front();
}

// Ordered set partitions: sum_k k! S(n,k) with Stirling numbers of the
// second kind from their recurrence.
unsigned long long ordered_bell(int n) {
    std::vector<std::vector<unsigned long long>> s(static_cast<std::size_t>(n + 1), std::vector<unsigned long long>(static_cast<std::size_t>(n + 1), 0));
    s[0][0] = 1;
    for (int i = 1; i <= n; ++i)
        for (int k = 1; k <= i; ++k) s[i][k] = static_cast<unsigned long long>(k) * s[i - 1][k] + s[i - 1][k - 1];
    unsigned long long total = 0;
    for (int k = 0; k <= n; ++k) total += fact(k) * s[n][k];
    return total;
}

}  // namespace

TEST(Permutation, Statistics) {
    const Permutation id = Permutation::identity(4);
    EXPECT_EQ(id.descents(), 0);
    EXPECT_EQ(id.ascents(), 3);
    const Permutation p({3, 1, 4, 2});
    EXPECT_EQ(p.descents(), 2);
    EXPECT_EQ(p.ascents(), 1);
    EXPECT_EQ(p(3), 4);
    EXPECT_THROW(Permutation({1, 1}), std::invalid_argument);
}

TEST(Permutation, EnumerationCount) {
    for (int n = 1; n <= 6; ++n) {
        std::set<std::vector<int>> seen;
        for_each_permutation(n, [&](const Permutation& p) { seen.insert(p.images()); });
        EXPECT_EQ(seen.size(), fact(n));
    }
}

TEST(LiePermutation, Invariants) {
    EXPECT_NO_THROW(LiePermutation({{1}, {2, 3}}));
    EXPECT_NO_THROW(LiePermutation({{2}, {1, 3}}));
    EXPECT_THROW(LiePermutation({{2, 1}, {3}}), std::invalid_argument);  // block must end in max
    EXPECT_THROW(LiePermutation({{3}, {1, 2}}), std::invalid_argument);  // maxima increase
    EXPECT_THROW(LiePermutation({{1}, {3}}), std::invalid_argument);     // not a partition
}

TEST(LiePermutation, CountIsFactorial) {
    EXPECT_EQ(enumerate_lie_permutations(0).size(), 1U);
    EXPECT_EQ(enumerate_lie_permutations(3).size(), 6U);
    EXPECT_EQ(enumerate_lie_permutations(5).size(), 120U);
    for (int n = 1; n <= 8; ++n) EXPECT_EQ(enumerate_lie_permutations(n).size(), fact(n));
}

TEST(LiePermutation, SequenceMapIsBijection) {
    for (int n = 1; n <= 7; ++n) {
        std::set<std::vector<int>> images;
        for (const auto& ip : enumerate_lie_permutations(n)) {
            const Permutation p = ip.to_permutation();
            images.insert(p.images());
            EXPECT_EQ(LiePermutation::from_permutation(p), ip);
        }
        EXPECT_EQ(images.size(), fact(n));
    }
}

TEST(LiePermutation, EnumerationMatchesFilteredOrderedPartitions) {
    // independent route: all ordered partitions into arbitrary sequences,
    // filtered by the defining conditions
    for (int n = 1; n <= 5; ++n) {
        std::set<LiePermutation> filtered;
        for_each_permutation(n, [&](const Permutation& p) {
            const auto& seq = p.images();
            for (unsigned cuts = 0; cuts < (1U << (n - 1)); ++cuts) {
                std::vector<std::vector<int>> blocks{{seq[0]}};
                for (int i = 1; i < n; ++i) {
                    if ((cuts >> (i - 1)) & 1U) blocks.emplace_back();
                    blocks.back().push_back(seq[static_cast<std::size_t>(i)]);
                }
                try {
                    filtered.insert(LiePermutation(blocks));
                } catch (const std::invalid_argument&) {
                }
            }
        });
        const auto listed = enumerate_lie_permutations(n);
        EXPECT_EQ(std::set<LiePermutation>(listed.begin(), listed.end()), filtered);
    }
}

TEST(Partitions, OrderedCountsAreFubini) {
    for (int m = 0; m <= 7; ++m) {
        std::vector<int> items(static_cast<std::size_t>(m));
        std::iota(items.begin(), items.end(), 1);
        unsigned long long count = 0;
        std::set<std::vector<std::vector<int>>> seen;
        for_each_ordered_partition(items, [&](const std::vector<std::vector<int>>& b) {
            ++count;
            seen.insert(b);
            for (const auto& block : b) EXPECT_TRUE(std::is_sorted(block.begin(), block.end()));
        });
        EXPECT_EQ(count, ordered_bell(m));
        EXPECT_EQ(seen.size(), count);
        EXPECT_EQ(fubini_number(static_cast<unsigned>(m)), ordered_bell(m));
    }
}

TEST(Partitions, SetCountsAreBell) {
    for (int m = 1; m <= 8; ++m) {
        std::vector<int> items(static_cast<std::size_t>(m));
        std::iota(items.begin(), items.end(), 0);
        unsigned long long count = 0;
        for_each_set_partition(items, [&](const std::vector<std::vector<int>>& blocks) {
            ++count;
            for (std::size_t i = 1; i < blocks.size(); ++i) EXPECT_LT(blocks[i - 1].front(), blocks[i].front());
        });
        EXPECT_EQ(count, bell(m));
    }
}

TEST(Partitions, BlockSizeBound) {
    std::vector<int> items{0, 1, 2, 3};
    unsigned long long count = 0;
    for_each_set_partition(items, [&](const std::vector<std::vector<int>>& blocks) {
        ++count;
        for (const auto& b : blocks) EXPECT_LE(b.size(), 2U);
    }, 2);
    EXPECT_EQ(count, 10U);  // 1 + 6 + 3
}
