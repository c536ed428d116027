// Copyright 2026 The subsel Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "subsel/serialize.hpp"
#include "test_support.hpp"

namespace subsel {
namespace {

std::string bytes_of(const SubstringIndex& index) {
    std::ostringstream out;
    save_index(index, out);
    return out.str();
}

SubstringIndex reload(const std::string& bytes) { return load_index(std::span<const char>(bytes.data(), bytes.size())); }

TEST(Serialize, RoundTripAnswersIdentically) {
    std::mt19937_64 rng(71);
    for (int round = 0; round < 12; ++round) {
        const std::string t = round % 2 ? testing::repetitive_text(rng, 1 + rng() % 200, 2)
                                        : testing::random_text(rng, 1 + rng() % 200, 1 + round % 4);
        const SubstringIndex original(t, 1 + round % 3);
        const SubstringIndex copy = reload(bytes_of(original));
        ASSERT_EQ(copy.text(), original.text());
        ASSERT_EQ(copy.tau(), original.tau());
        const pos_t n = original.size();
        for (int q = 0; q < 300; ++q) {
            const pos_t i = 1 + static_cast<pos_t>(rng() % n), j = i + static_cast<pos_t>(rng() % (n - i + 1));
            const pos_t k = 1 + static_cast<pos_t>(rng() % (j - i + 1));
            ASSERT_EQ(copy.min_suffix(i, j), original.min_suffix(i, j));
            ASSERT_EQ(copy.max_suffix(i, j), original.max_suffix(i, j));
            ASSERT_EQ(copy.select(i, j, k), original.select(i, j, k));
            ASSERT_EQ(copy.lyndon(i, j), original.lyndon(i, j));
        }
        ASSERT_EQ(bytes_of(copy), bytes_of(original));
    }
}

TEST(Serialize, HeaderLayout) {
    const std::string bytes = bytes_of(SubstringIndex("banana"));
    EXPECT_EQ(bytes.substr(0, 8), "SUBSEL01");
    std::uint32_t version = 0;
    std::uint64_t n = 0;
    std::memcpy(&version, bytes.data() + 8, 4);
    std::memcpy(&n, bytes.data() + 16, 8);
    EXPECT_EQ(version, 1u);
    EXPECT_EQ(n, 6u);
}

TEST(Serialize, RejectsDamage) {
    const std::string good = bytes_of(SubstringIndex("mississippi", 2));
    EXPECT_NO_THROW(reload(good));

    std::string bad = good;
    bad[0] = 'X';
    EXPECT_THROW(reload(bad), FormatError);

    bad = good;
    bad[8] = 2;  // version
    EXPECT_THROW(reload(bad), FormatError);

    bad = good;
    bad[bad.size() - 3] ^= 0x40;  // payload byte, caught by its checksum
    EXPECT_THROW(reload(bad), FormatError);

    EXPECT_THROW(reload(good.substr(0, good.size() - 1)), FormatError);
    EXPECT_THROW(reload(good.substr(0, 20)), FormatError);
    EXPECT_THROW(reload(""), FormatError);
}

TEST(Serialize, EveryPayloadByteIsCovered) {
    const std::string good = bytes_of(SubstringIndex("abracadabra"));
    const std::size_t payload = io::kHeaderBytes + io::kEntryBytes * io::kSectionCount;
    for (std::size_t at = payload; at < good.size(); ++at) {
        std::string bad = good;
        bad[at] ^= 0x01;
        ASSERT_THROW(reload(bad), FormatError) << "byte " << at;
    }
}

}  // namespace
}  // namespace subsel
