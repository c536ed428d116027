// Copyright 2026 The subsel Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <bit>
#include <random>

#include "subsel/oracle.hpp"
#include "subsel/prefix_suffix.hpp"
#include "test_support.hpp"

namespace subsel {
namespace {

struct Fixture {
    explicit Fixture(std::string t) : index(std::move(t)), grid(index.forward().sa_array()) {}
    std::vector<pos_t> lengths(Range s, Range sp) const { return flatten(prefix_suffix(index, grid, s, sp)); }
    EnhancedIndex index;
    RankGrid grid;
};

TEST(Intersect, Examples) {
    EXPECT_EQ(intersect({4, 2, 3}, {6, 2, 3}, 1, 100), (Progression{6, 2, 2}));
    EXPECT_EQ(intersect({4, 2, 3}, {5, 2, 3}, 1, 100), std::nullopt);
    EXPECT_EQ(intersect({5, 1, 1}, {5, 2, 2}, 1, 100), (Progression{5, 2, 1}));
    EXPECT_EQ(intersect({3, 4, 10}, {5, 6, 10}, 1, 100), (Progression{11, 12, 3}));
    EXPECT_EQ(intersect({3, 4, 10}, {5, 6, 10}, 12, 30), (Progression{23, 12, 1}));
}

TEST(IntersectProperty, MatchesEnumeration) {
    std::mt19937_64 rng(1);
    for (int round = 0; round < 20000; ++round) {
        const Progression a{static_cast<pos_t>(rng() % 30), static_cast<pos_t>(1 + rng() % 9), static_cast<pos_t>(1 + rng() % 8)};
        const Progression b{static_cast<pos_t>(rng() % 30), static_cast<pos_t>(1 + rng() % 9), static_cast<pos_t>(1 + rng() % 8)};
        const pos_t lo = static_cast<pos_t>(rng() % 40), hi = lo + static_cast<pos_t>(rng() % 60);
        std::vector<pos_t> want;
        for (pos_t s = 0; s < a.count; ++s) {
            const pos_t x = a.at(s);
            if (x < lo || x > hi) continue;
            for (pos_t u = 0; u < b.count; ++u) {
                if (b.at(u) == x) want.push_back(x);
            }
        }
        const auto got = intersect(a, b, lo, hi);
        ASSERT_EQ(got ? flatten({*got}) : std::vector<pos_t>{}, want);
    }
}

TEST(PrefixSuffix, Examples) {
    Fixture banana("banana");
    EXPECT_EQ(banana.lengths({2, 6}, {1, 6}), (std::vector<pos_t>{1, 3, 5}));
    EXPECT_EQ(banana.lengths({1, 6}, {1, 6}).back(), 6);
    EXPECT_EQ(banana.lengths({1, 1}, {2, 2}), (std::vector<pos_t>{}));
    Fixture unary(std::string(40, 'a'));
    const auto all = prefix_suffix(unary.index, unary.grid, {1, 40}, {1, 40});
    EXPECT_EQ(flatten(all).size(), 40u);
    for (const auto& p : all) EXPECT_EQ(p.count == 1 || p.diff == 1, true);
}

TEST(PrefixSuffixProperty, ExhaustiveSmall) {
    std::mt19937_64 rng(2);
    for (int round = 0; round < 12; ++round) {
        const std::string t = round % 2 ? testing::repetitive_text(rng, 1 + rng() % 40, 2)
                                        : testing::random_text(rng, 1 + rng() % 40, 1 + round % 3);
        Fixture f(t);
        const pos_t n = f.index.size();
        for (pos_t a = 1; a <= n; ++a) {
            for (pos_t b = a; b <= n; ++b) {
                for (pos_t c = 1; c <= n; ++c) {
                    for (pos_t d = c; d <= n; ++d) {
                        const auto ps = prefix_suffix(f.index, f.grid, {a, b}, {c, d});
                        const pos_t bound = std::min(b - a + 1, d - c + 1);
                        ASSERT_LE(ps.size(), static_cast<std::size_t>(2 * (std::bit_width(static_cast<std::uint64_t>(bound)) - 1) + 4));
                        ASSERT_EQ(flatten(ps), oracle::borders(oracle::substring(t, a, b), oracle::substring(t, c, d)))
                            << t << " [" << a << "," << b << "] [" << c << "," << d << "]";
                    }
                }
            }
        }
    }
}

TEST(PrefixSuffixProperty, RandomPairsLongerTexts) {
    std::mt19937_64 rng(4);
    for (int round = 0; round < 10; ++round) {
        const std::string t = round % 2 ? testing::repetitive_text(rng, 512, 2) : testing::fibonacci_word(512);
        Fixture f(t);
        for (int q = 0; q < 3000; ++q) {
            const pos_t a = 1 + static_cast<pos_t>(rng() % 512), b = a + static_cast<pos_t>(rng() % (513 - a));
            const pos_t c = 1 + static_cast<pos_t>(rng() % 512), d = c + static_cast<pos_t>(rng() % (513 - c));
            ASSERT_EQ(f.lengths({a, b}, {c, d}), oracle::borders(oracle::substring(t, a, b), oracle::substring(t, c, d)));
        }
    }
}

}  // namespace
}  // namespace subsel
