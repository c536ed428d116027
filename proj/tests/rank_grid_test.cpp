// Copyright 2026 The subsel Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <random>

#include "subsel/core_index.hpp"
#include "subsel/rank_grid.hpp"
#include "test_support.hpp"

namespace subsel {
namespace {

TEST(RankBitVector, RankAcrossSuperblocks) {
    RankBitVector bv(1500);
    for (std::size_t i = 0; i < 1500; i += 3) bv.set(i);
    bv.build_rank();
    for (std::size_t i = 0; i <= 1500; ++i) ASSERT_EQ(bv.rank1(i), (i + 2) / 3) << i;
}

TEST(RankGrid, BananaCounts) {
    EnhancedIndex index("banana");
    RankGrid grid(index.forward().sa_array());
    // ISA = [4,3,6,2,5,1]
    EXPECT_EQ(grid.count_le(1, 6, 3), 3);
    EXPECT_EQ(grid.count_le(2, 4, 3), 2);
    EXPECT_EQ(grid.count_le(3, 3, 5), 0);
    EXPECT_EQ(grid.successor_in_band(1, 6, {1, 3}), 2);
    EXPECT_EQ(grid.successor_in_band(3, 6, {1, 3}), 4);
    EXPECT_EQ(grid.predecessor_in_band(1, 5, {1, 3}), 4);
    EXPECT_EQ(grid.successor_in_band(5, 5, {1, 3}), std::nullopt);
    EXPECT_EQ(grid.successor_in_band(1, 6, {3, 2}), std::nullopt);
}

TEST(RankGrid, RecoversSuffixArray) {
    EnhancedIndex index("mississippi");
    RankGrid grid(index.forward().sa_array());
    for (pos_t r = 1; r <= index.size(); ++r) EXPECT_EQ(grid.position_at_rank(r), index.sa(r));
}

TEST(RankGridProperty, MatchesDirectScans) {
    std::mt19937_64 rng(11);
    for (int round = 0; round < 40; ++round) {
        const std::string t = testing::random_text(rng, 1 + rng() % 700, 1 + round % 5);
        EnhancedIndex index(t);
        RankGrid grid(index.forward().sa_array());
        const pos_t n = index.size();
        for (int q = 0; q < 200; ++q) {
            const pos_t i = 1 + static_cast<pos_t>(rng() % n), j = i + static_cast<pos_t>(rng() % (n - i + 1));
            const pos_t a = 1 + static_cast<pos_t>(rng() % n), b = a + static_cast<pos_t>(rng() % (n - a + 1));
            pos_t count = 0;
            std::optional<pos_t> first, last;
            for (pos_t p = i; p <= j; ++p) {
                if (index.isa(p) <= b) ++count;
                if (index.isa(p) >= a && index.isa(p) <= b) {
                    if (!first) first = p;
                    last = p;
                }
            }
            ASSERT_EQ(grid.count_le(i, j, b), count);
            ASSERT_EQ(grid.successor_in_band(i, j, {a, b}), first);
            ASSERT_EQ(grid.predecessor_in_band(i, j, {a, b}), last);
        }
    }
}

}  // namespace
}  // namespace subsel
