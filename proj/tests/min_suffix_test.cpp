// Copyright 2026 The subsel Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <random>

#include "subsel/min_suffix.hpp"
#include "subsel/oracle.hpp"
#include "test_support.hpp"

namespace subsel {
namespace {

TEST(CanonicalSubstrings, Lengths) {
    EXPECT_EQ(canonical_length(8, 1), 1);
    EXPECT_EQ(canonical_length(8, 2), 2);
    EXPECT_EQ(canonical_length(8, 3), 3);
    EXPECT_EQ(canonical_length(8, 4), 4);
    EXPECT_EQ(canonical_length(7, 5), 7);
    EXPECT_EQ(canonical_length(7, 4), 5);
}

TEST(CanonicalSubstrings, StartOnChunkBoundaries) {
    for (pos_t j = 1; j <= 200; ++j) {
        for (int l = 2; canonical_length(j, l) <= j; ++l) {
            const pos_t chunk = pos_t{1} << (l / 2 - 1);
            EXPECT_EQ((j - canonical_length(j, l)) % chunk, 0) << j << ' ' << l;
            EXPECT_LT(canonical_length(j, l - 1), canonical_length(j, l));
        }
    }
}

TEST(CanonicalSubstrings, Alpha) {
    EXPECT_EQ(canonical_alpha(4, 5), 1);
    EXPECT_EQ(canonical_alpha(1, 8), 5);
    EXPECT_EQ(canonical_alpha(1, 5), 3);
    EXPECT_EQ(canonical_alpha(3, 3), 0);
    for (pos_t i = 1; i <= 100; ++i) {
        for (pos_t j = i + 1; j <= 100; ++j) {
            int expect = 0;
            while (canonical_length(j, expect + 1) < j - i + 1) ++expect;
            ASSERT_EQ(canonical_alpha(i, j), expect) << i << ' ' << j;
        }
    }
}

TEST(PrefixMinimalSuffixes, Examples) {
    EXPECT_EQ(min_suffix_lengths_of_prefixes("abaab"), (std::vector<std::uint32_t>{1, 2, 1, 1, 3}));
    EXPECT_EQ(min_suffix_lengths_of_prefixes("cba"), (std::vector<std::uint32_t>{1, 1, 1}));
    EXPECT_EQ(min_suffix_lengths_of_prefixes("aaaa"), (std::vector<std::uint32_t>{1, 1, 1, 1}));
    EXPECT_THROW(min_suffix_lengths_of_prefixes(""), std::invalid_argument);
}

TEST(PrefixMinimalSuffixesProperty, MatchesBruteForce) {
    std::mt19937_64 rng(3);
    for (int round = 0; round < 400; ++round) {
        const std::string w = round % 2 ? testing::repetitive_text(rng, 1 + rng() % 60, 1 + round % 3)
                                        : testing::random_text(rng, 1 + rng() % 60, 1 + round % 4);
        const auto got = min_suffix_lengths_of_prefixes(w);
        const auto want = oracle::min_suffix_lengths_of_prefixes(w);
        ASSERT_EQ(got.size(), want.size());
        for (std::size_t k = 0; k < got.size(); ++k) ASSERT_EQ(got[k], want[k]) << w << " at " << k;
    }
}

TEST(MinSuffix, Examples) {
    EnhancedIndex d("dcccabab");
    auto idx = MinSuffixIndex::build(d, 1);
    EXPECT_EQ(idx.query(d, 1, 8), (Suffix{7, 2}));
    EXPECT_EQ(idx.query(d, 3, 3), (Suffix{3, 1}));
    EnhancedIndex b("banana");
    EXPECT_EQ(MinSuffixIndex::build(b, 2).query(b, 1, 6), (Suffix{6, 1}));
}

TEST(MinSuffix, TauClampedAndValidated) {
    EnhancedIndex index("abcabcabcabcabcab");
    EXPECT_EQ(MinSuffixIndex::build(index, 99).tau(), 4);
    EXPECT_THROW(MinSuffixIndex::build(index, 0), std::invalid_argument);
    EXPECT_THROW(MinSuffixIndex::from_words(17, 5, std::vector<std::uint64_t>(17)), FormatError);
}

TEST(MinSuffixProperty, AllQueriesEveryTau) {
    std::mt19937_64 rng(5);
    for (int round = 0; round < 30; ++round) {
        const std::string t = round % 3 == 2 ? testing::repetitive_text(rng, 2 + rng() % 120, 2)
                                             : testing::random_text(rng, 2 + rng() % 120, 1 + round % 4);
        EnhancedIndex index(t);
        const pos_t n = index.size();
        for (int tau = 1; tau <= MinSuffixIndex::max_tau(n); ++tau) {
            const auto idx = MinSuffixIndex::build(index, tau);
            for (pos_t j = 1; j <= n; ++j) {
                const auto want = oracle::min_suffix_starts_ending_at(t, j);
                for (pos_t i = 1; i <= j; ++i) {
                    QueryStats stats;
                    ASSERT_EQ(idx.query(index, i, j, &stats).start, want[static_cast<std::size_t>(i - 1)])
                        << t << " tau=" << tau << " (" << i << ", " << j << ")";
                    ASSERT_LE(stats.candidates, static_cast<std::uint64_t>(2 * tau + 2));
                }
            }
        }
    }
}

TEST(MinSuffixProperty, BitsMatchDefinition) {
    std::mt19937_64 rng(9);
    for (int round = 0; round < 20; ++round) {
        const std::string t = testing::repetitive_text(rng, 2 + rng() % 150, 1 + round % 3);
        EnhancedIndex index(t);
        const pos_t n = index.size();
        for (int tau = 1; tau <= 3; ++tau) {
            const auto idx = MinSuffixIndex::build(index, tau);
            for (pos_t j = 1; j <= n; ++j) {
                for (int b = 1; b <= canonical_alpha(1, j) / tau; ++b) {
                    bool expect = b == 1;
                    if (b > 1) {
                        const auto longer = oracle::min_suffix(t, j - canonical_length(j, tau * b) + 1, j);
                        expect = longer.second > canonical_length(j, tau * (b - 1));
                    }
                    ASSERT_EQ(idx.bit(j, b), expect) << t << " j=" << j << " b=" << b << " tau=" << tau;
                }
            }
        }
    }
}

}  // namespace
}  // namespace subsel
