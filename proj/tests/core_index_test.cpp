// Copyright 2026 The subsel Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <random>
#include <string>

#include "subsel/core_index.hpp"
#include "subsel/oracle.hpp"
#include "test_support.hpp"

namespace subsel {
namespace {

std::vector<pos_t> sa_of(const EnhancedIndex& index) {
    std::vector<pos_t> out;
    for (pos_t r = 1; r <= index.size(); ++r) out.push_back(index.sa(r));
    return out;
}

pos_t direct_lcp(std::string_view t, Range x, Range y) {
    pos_t l = 0;
    while (l < x.length() && l < y.length() && t[x.first - 1 + l] == t[y.first - 1 + l]) ++l;
    return l;
}

pos_t direct_lcs(std::string_view t, Range x, Range y) {
    pos_t l = 0;
    while (l < x.length() && l < y.length() && t[x.last - 1 - l] == t[y.last - 1 - l]) ++l;
    return l;
}

TEST(CoreIndex, BananaArrays) {
    EnhancedIndex index("banana");
    EXPECT_EQ(sa_of(index), (std::vector<pos_t>{6, 4, 2, 1, 5, 3}));
    std::vector<pos_t> isa;
    for (pos_t p = 1; p <= 6; ++p) isa.push_back(index.isa(p));
    EXPECT_EQ(isa, (std::vector<pos_t>{4, 3, 6, 2, 5, 1}));
}

TEST(CoreIndex, SingleLetter) {
    EnhancedIndex index("a");
    EXPECT_EQ(index.sa(1), 1);
    EXPECT_EQ(index.isa(1), 1);
    EXPECT_EQ(index.lcp({1, 1}, {1, 1}), 1);
}

TEST(CoreIndex, EmptyTextRejected) { EXPECT_THROW(EnhancedIndex(""), std::invalid_argument); }

TEST(CoreIndex, LongestCommonPrefixAndSuffix) {
    EnhancedIndex banana("banana");
    EXPECT_EQ(banana.lcp({2, 4}, {4, 6}), 3);
    EXPECT_EQ(banana.lcp({1, 6}, {2, 6}), 0);
    EXPECT_EQ(banana.lcs({1, 4}, {3, 6}), 3);
    EXPECT_EQ(banana.lcs({1, 2}, {1, 6}), 1);
    EnhancedIndex abba("abba");
    EXPECT_EQ(abba.lcs({1, 2}, {3, 4}), 0);
    EXPECT_EQ(abba.lcs({1, 1}, {4, 4}), 1);
}

TEST(CoreIndex, Compare) {
    EnhancedIndex index("banana");
    EXPECT_TRUE(index.compare({2, 4}, {4, 6}) == 0);
    EXPECT_TRUE(index.compare({6, 6}, {2, 4}) < 0); // "a" < "ana"
    EXPECT_TRUE(index.compare({3, 3}, {1, 6}) > 0); // "n" > "banana"
}

TEST(CoreIndex, Powers) {
    EnhancedIndex ab("ababab");
    EXPECT_EQ(ab.prefix_power({1, 2}, {1, 6}), 3);
    EXPECT_EQ(ab.prefix_power({1, 2}, {2, 6}), 0);
    EnhancedIndex aaa("aaa");
    EXPECT_EQ(aaa.prefix_power({1, 2}, {1, 3}), 1);
    EXPECT_EQ(aaa.suffix_power({1, 1}, {1, 3}), 3);
    EnhancedIndex banana("banana");
    EXPECT_EQ(banana.suffix_power({2, 3}, {1, 5}), 2);
}

TEST(CoreIndex, RankInterval) {
    EnhancedIndex index("banana");
    EXPECT_EQ(index.rank_interval({2, 3}), (RankRange{2, 3}));
    EXPECT_EQ(index.rank_interval({6, 6}), (RankRange{1, 3}));
    EXPECT_EQ(index.rank_interval({1, 6}), (RankRange{4, 4}));
}

TEST(CoreIndex, RangeErrors) {
    EnhancedIndex index("banana");
    EXPECT_THROW(index.lcp({0, 2}, {1, 1}), std::out_of_range);
    EXPECT_THROW(index.lcp({3, 2}, {1, 1}), std::out_of_range);
    EXPECT_THROW(index.min_rank_position(1, 7), std::out_of_range);
}

TEST(CoreIndexProperty, AgreesWithDirectScans) {
    std::mt19937_64 rng(7);
    for (int round = 0; round < 60; ++round) {
        const std::string t = round % 4 == 3 ? testing::repetitive_text(rng, 1 + rng() % 90, 2)
                                             : testing::random_text(rng, 1 + rng() % 90, 1 + round % 4);
        EnhancedIndex index(t);
        const pos_t n = index.size();

        const auto sorted = oracle::sorted_suffixes(t, 1, n);
        ASSERT_EQ(sa_of(index), std::vector<pos_t>(sorted.begin(), sorted.end()));

        for (int q = 0; q < 300; ++q) {
            const pos_t a = 1 + static_cast<pos_t>(rng() % n), b = a + static_cast<pos_t>(rng() % (n - a + 1));
            const pos_t c = 1 + static_cast<pos_t>(rng() % n), d = c + static_cast<pos_t>(rng() % (n - c + 1));
            const Range x{a, b}, y{c, d};
            ASSERT_EQ(index.lcp(x, y), direct_lcp(t, x, y));
            ASSERT_EQ(index.lcs(x, y), direct_lcs(t, x, y));
            const int expect = oracle::compare(oracle::substring(t, a, b), oracle::substring(t, c, d));
            ASSERT_EQ(index.compare(x, y) < 0, expect < 0);
            ASSERT_EQ(index.compare(x, y) == 0, expect == 0);

            pos_t lo = a, hi = a;
            for (pos_t p = a; p <= b; ++p) {
                if (index.isa(p) < index.isa(lo)) lo = p;
                if (index.isa(p) > index.isa(hi)) hi = p;
            }
            ASSERT_EQ(index.min_rank_position(a, b), lo);
            ASSERT_EQ(index.max_rank_position(a, b), hi);

            pos_t power = 0;
            while ((power + 1) * x.length() <= y.length() &&
                   t.compare(static_cast<std::size_t>(c - 1 + power * x.length()), static_cast<std::size_t>(x.length()),
                             t, static_cast<std::size_t>(a - 1), static_cast<std::size_t>(x.length())) == 0) {
                ++power;
            }
            ASSERT_EQ(index.prefix_power(x, y), power);

            pos_t tail = 0;
            while ((tail + 1) * x.length() <= y.length() &&
                   t.compare(static_cast<std::size_t>(d - (tail + 1) * x.length()), static_cast<std::size_t>(x.length()),
                             t, static_cast<std::size_t>(a - 1), static_cast<std::size_t>(x.length())) == 0) {
                ++tail;
            }
            ASSERT_EQ(index.suffix_power(x, y), tail);

            const RankRange ranks = index.rank_interval(x);
            for (pos_t r = 1; r <= n; ++r) {
                const pos_t p = index.sa(r);
                const bool has_prefix = p + x.length() - 1 <= n && direct_lcp(t, {p, p + x.length() - 1}, x) == x.length();
                ASSERT_EQ(has_prefix, ranks.first <= r && r <= ranks.last) << t << " r=" << r;
            }
        }
    }
}

}  // namespace
}  // namespace subsel
