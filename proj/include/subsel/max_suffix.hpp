// Copyright 2026 The subsel Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <bit>
#include <cassert>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "subsel/common.hpp"
#include "subsel/core_index.hpp"
#include "subsel/min_suffix.hpp"

namespace subsel {

/// For every position p (1-based, entry p-1): the first j at which p stops
/// being j-active, or n+1 if it never does. p is j-active iff p <= j < D(p).
///
/// With q the nearest position right of p whose full suffix is larger,
/// D(p) = q + lcp(T[p..], T[q..]): from there on T[q..j] beats T[p..j], and no
/// position before q can overtake p earlier.
inline std::vector<std::uint32_t> death_times(const EnhancedIndex& index) {
    const pos_t n = index.size();
    const auto isa = index.forward().isa_array();
    std::vector<std::uint32_t> death(static_cast<std::size_t>(n));
    std::vector<std::uint32_t> stack;
    for (pos_t p = n; p >= 1; --p) {
        const std::uint32_t rank = isa[static_cast<std::size_t>(p - 1)];
        while (!stack.empty() && isa[stack.back() - 1] < rank) stack.pop_back();
        if (stack.empty()) {
            death[static_cast<std::size_t>(p - 1)] = static_cast<std::uint32_t>(n + 1);
        } else {
            const pos_t q = stack.back();
            death[static_cast<std::size_t>(p - 1)] = static_cast<std::uint32_t>(q + index.suffix_lcp(p, q));
        }
        stack.push_back(static_cast<std::uint32_t>(p));
    }
    return death;
}

/// One block of the nice partition of [1, j]. `slot` = 2*level + idx, idx 0
/// being the rightmost block of length 2^level.
struct PartitionBlock {
    pos_t first = 0;
    pos_t last = 0;
    int slot = 0;

    int level() const { return slot / 2; }
    bool operator==(const PartitionBlock&) const = default;
};

/// The nice partition of [1, j] for j = 2^{K+1} - 1 + e (0 <= e < 2^{K+1}):
/// one block of length 2^t for every t <= K, plus a second one where bit t of
/// e is set. Blocks are laid out longest first.
struct NicePartition {
    int top = 0;              // K
    std::uint64_t extra = 0;  // e

    static NicePartition of(pos_t j) {
        const int top = static_cast<int>(std::bit_width(static_cast<std::uint64_t>(j + 1))) - 2;
        return NicePartition{top, static_cast<std::uint64_t>(j + 1) - (std::uint64_t{2} << top)};
    }
    static NicePartition decode(std::uint64_t word) {
        return NicePartition{static_cast<int>(word >> 32), word & 0xffffffffULL};
    }
    std::uint64_t encode() const { return (static_cast<std::uint64_t>(top) << 32) | extra; }

    pos_t end() const { return static_cast<pos_t>((std::uint64_t{2} << top) - 1 + extra); }
    int count(int level) const { return level > top ? 0 : 1 + static_cast<int>((extra >> level) & 1); }

    /// Total length of the blocks shorter than 2^level.
    pos_t below(int level) const {
        const std::uint64_t span = std::uint64_t{1} << level;
        return static_cast<pos_t>(span - 1 + (extra & (span - 1)));
    }

    PartitionBlock block(int slot) const {
        const int level = slot / 2, idx = slot % 2;
        const pos_t len = pos_t{1} << level;
        const pos_t last = end() - below(level) - idx * len;
        return PartitionBlock{last - len + 1, last, slot};
    }

    PartitionBlock locate(pos_t i) const {
        const pos_t gap = end() - i;
        int level = static_cast<int>(std::bit_width(static_cast<std::uint64_t>(gap + 1))) - 1;
        if (below(level) > gap) --level;
        const int idx = static_cast<int>((gap - below(level)) >> level);
        return block(2 * level + idx);
    }

    /// Blocks left to right.
    std::vector<PartitionBlock> blocks() const {
        std::vector<PartitionBlock> out;
        for (int level = top; level >= 0; --level) {
            for (int idx = count(level) - 1; idx >= 0; --idx) out.push_back(block(2 * level + idx));
        }
        return out;
    }
};

/// Constant-time maximal-suffix queries. For every j the structure stores the
/// nice partition of [1, j] and a bit per block telling whether the block
/// holds a j-active position (2n words in total).
class MaxSuffixIndex {
public:
    MaxSuffixIndex() = default;

    static MaxSuffixIndex build(const EnhancedIndex& index, BuildStats* stats = nullptr) {
        const pos_t n = index.size();
        const auto death = death_times(index);

        // Positions bucketed by the step at which they leave the active set.
        std::vector<std::uint32_t> head(static_cast<std::size_t>(n + 2), 0), next(static_cast<std::size_t>(n + 1), 0);
        for (pos_t p = 1; p <= n; ++p) {
            const std::uint32_t d = death[static_cast<std::size_t>(p - 1)];
            if (d > n) continue;
            next[static_cast<std::size_t>(p)] = head[d];
            head[d] = static_cast<std::uint32_t>(p);
            if (stats) ++stats->events;
        }

        MaxSuffixIndex result;
        result.snapshots_.resize(2 * static_cast<std::size_t>(n));
        std::array<std::array<std::uint32_t, 3>, 64> live{};  // active positions per block, [level][idx]
        std::array<int, 64> blocks{};
        std::uint64_t active = 0;
        auto refresh = [&](int level) {
            for (int idx = 0; idx < 2; ++idx) {
                const std::uint64_t bit = std::uint64_t{1} << (2 * level + idx);
                if (idx < blocks[static_cast<std::size_t>(level)] && live[static_cast<std::size_t>(level)][static_cast<std::size_t>(idx)] > 0) {
                    active |= bit;
                } else {
                    active &= ~bit;
                }
            }
        };
        auto push = [&](int level, std::uint32_t count) {
            auto& row = live[static_cast<std::size_t>(level)];
            row[2] = row[1];
            row[1] = row[0];
            row[0] = count;
            ++blocks[static_cast<std::size_t>(level)];
        };

        for (pos_t j = 1; j <= n; ++j) {
            push(0, 1);
            int level = 0;
            while (blocks[static_cast<std::size_t>(level)] == 3) {
                auto& row = live[static_cast<std::size_t>(level)];
                const std::uint32_t merged = row[1] + row[2];
                row[1] = row[2] = 0;
                blocks[static_cast<std::size_t>(level)] = 1;
                refresh(level);
                push(level + 1, merged);
                if (stats) ++stats->merges;
                ++level;
            }
            refresh(level);

            const NicePartition part = NicePartition::of(j);
            for (std::uint32_t p = head[static_cast<std::size_t>(j)]; p != 0; p = next[p]) {
                const PartitionBlock b = part.locate(p);
                auto& count = live[static_cast<std::size_t>(b.level())][static_cast<std::size_t>(b.slot % 2)];
                assert(count > 0);
                --count;
                refresh(b.level());
                if (stats) ++stats->removals;
            }
            result.snapshots_[2 * static_cast<std::size_t>(j - 1)] = part.encode();
            result.snapshots_[2 * static_cast<std::size_t>(j - 1) + 1] = active;
        }
        return result;
    }

    static MaxSuffixIndex from_words(pos_t n, std::vector<std::uint64_t> words) {
        if (static_cast<pos_t>(words.size()) != 2 * n) throw FormatError("max-suffix snapshots: wrong length");
        for (pos_t j = 1; j <= n; ++j) {
            const NicePartition part = NicePartition::decode(words[2 * static_cast<std::size_t>(j - 1)]);
            if (part.top < 0 || part.top > 31 || part.extra >= (std::uint64_t{2} << part.top) || part.end() != j) {
                throw FormatError("max-suffix snapshots: partition descriptor does not describe [1, j]");
            }
            const std::uint64_t active = words[2 * static_cast<std::size_t>(j - 1) + 1];
            if (!(active & 1)) throw FormatError("max-suffix snapshots: block [j, j] must be active");
        }
        MaxSuffixIndex result;
        result.snapshots_ = std::move(words);
        return result;
    }

    pos_t size() const { return static_cast<pos_t>(snapshots_.size() / 2); }
    std::span<const std::uint64_t> words() const { return snapshots_; }

    NicePartition partition(pos_t j) const { return NicePartition::decode(snapshots_[2 * static_cast<std::size_t>(j - 1)]); }
    std::uint64_t active_word(pos_t j) const { return snapshots_[2 * static_cast<std::size_t>(j - 1) + 1]; }

    PartitionBlock locate_block(pos_t j, pos_t i) const {
        detail::require_range(i, j, size(), "locate_block");
        return partition(j).locate(i);
    }

    /// Leftmost block right of `slot` holding a j-active position.
    std::optional<PartitionBlock> next_active_block(pos_t j, int slot) const {
        detail::require_position(j, size(), "next_active_block");
        const std::uint64_t below = active_word(j) & ((std::uint64_t{1} << slot) - 1);
        if (slot <= 0 || below == 0) return std::nullopt;
        return partition(j).block(static_cast<int>(std::bit_width(below)) - 1);
    }

    /// Start of the maximal suffix of T[i0..j], assuming it starts in [bl, br].
    /// Whatever the assumption, the result lies in [i0, j].
    static pos_t max_in_block(const EnhancedIndex& index, pos_t i0, pos_t bl, pos_t br, pos_t j, QueryStats* stats = nullptr) {
        assert(i0 <= bl && bl <= br && br <= j);
        assert(j - bl + 1 <= 2 * (j - br + 1));
        const pos_t p1 = index.max_rank_position(bl, br);
        if (stats) ++stats->primitives;
        if (p1 == bl) return p1;
        const pos_t p2 = index.max_rank_position(bl, p1 - 1);
        const pos_t common = index.lcp(Range{p1, j}, Range{p2, j});
        if (stats) stats->primitives += 2;
        if (common < j - p1 + 1) return p1;
        const pos_t period = p1 - p2;
        const pos_t power = index.suffix_power(Range{p2, p1 - 1}, Range{i0, p1 - 1});
        if (stats) ++stats->primitives;
        return p1 - power * period;
    }

    /// Start and length of the maximal suffix of T[i..j].
    Suffix query(const EnhancedIndex& index, pos_t i, pos_t j, QueryStats* stats = nullptr) const {
        detail::require_range(i, j, size(), "max_suffix");
        const PartitionBlock home = locate_block(j, i);
        pos_t best = max_in_block(index, i, i, home.last, j, stats);
        if (stats) stats->primitives += 2;
        if (const auto right = next_active_block(j, home.slot)) {
            const pos_t other = max_in_block(index, i, right->first, right->last, j, stats);
            if (stats) ++stats->primitives;
            if (index.compare(Range{other, j}, Range{best, j}) > 0) best = other;
        }
        return Suffix{best, j - best + 1};
    }

private:
    std::vector<std::uint64_t> snapshots_;  // (descriptor, active word) per j
};

}  // namespace subsel
