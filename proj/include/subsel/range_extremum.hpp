// Copyright 2026 The subsel Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <bit>
#include <cassert>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace subsel {

/// Constant-time range argmin/argmax over an immutable array of 32-bit values.
///
/// Values are split into 64-element blocks. Inside a block, each element keeps a
/// bitmask of the monotone stack of candidates seen while scanning the block up
/// to it; the extremum of [l, r] is then the lowest stack bit at or after l.
/// Whole blocks are covered by a sparse table over block extrema. Space is two
/// words per element plus (n / 64) log n words.
///
/// The structure does not own the values; every query takes the same span the
/// structure was built from.
template <class Better>
class RangeExtremum {
public:
    RangeExtremum() = default;

    explicit RangeExtremum(std::span<const std::uint32_t> values) : size_(values.size()) {
        stack_masks_.resize(size_);
        for (std::size_t begin = 0; begin < size_; begin += kBlock) {
            const std::size_t end = std::min(size_, begin + kBlock);
            std::uint64_t mask = 0;
            for (std::size_t i = begin; i < end; ++i) {
                while (mask != 0) {
                    const std::size_t top = begin + (63 - std::countl_zero(mask));
                    if (!better_(values[i], values[top])) break;
                    mask &= ~(std::uint64_t{1} << (top - begin));
                }
                mask |= std::uint64_t{1} << (i - begin);
                stack_masks_[i] = mask;
            }
        }

        const std::size_t blocks = (size_ + kBlock - 1) / kBlock;
        if (blocks == 0) return;
        table_.emplace_back(blocks);
        for (std::size_t b = 0; b < blocks; ++b) {
            table_[0][b] = static_cast<std::uint32_t>(in_block(b * kBlock, std::min(size_, (b + 1) * kBlock) - 1));
        }
        for (std::size_t k = 1; (std::size_t{1} << k) <= blocks; ++k) {
            const std::size_t half = std::size_t{1} << (k - 1);
            const std::size_t count = blocks - (std::size_t{1} << k) + 1;
            std::vector<std::uint32_t> level(count);
            for (std::size_t b = 0; b < count; ++b) {
                level[b] = pick(values, table_[k - 1][b], table_[k - 1][b + half]);
            }
            table_.push_back(std::move(level));
        }
    }

    std::size_t size() const { return size_; }

    /// Index of the extremum of values[l..r] (0-based, inclusive).
    std::size_t arg(std::span<const std::uint32_t> values, std::size_t l, std::size_t r) const {
        assert(l <= r && r < size_ && values.size() == size_);
        const std::size_t bl = l / kBlock, br = r / kBlock;
        if (bl == br) return in_block(l, r);
        std::size_t best = pick(values, in_block(l, (bl + 1) * kBlock - 1), in_block(br * kBlock, r));
        if (bl + 1 < br) {
            const std::size_t lo = bl + 1, hi = br - 1;
            const int k = std::bit_width(hi - lo + 1) - 1;
            const std::size_t mid = pick(values, table_[k][lo], table_[k][hi + 1 - (std::size_t{1} << k)]);
            best = pick(values, best, mid);
        }
        return best;
    }

    std::uint32_t value(std::span<const std::uint32_t> values, std::size_t l, std::size_t r) const {
        return values[arg(values, l, r)];
    }

    // Raw parts, for tests of the space bound.
    std::size_t table_words() const {
        std::size_t words = 0;
        for (const auto& level : table_) words += level.size();
        return words;
    }

private:
    static constexpr std::size_t kBlock = 64;

    std::size_t in_block(std::size_t l, std::size_t r) const {
        const std::size_t begin = l - l % kBlock;
        const std::uint64_t mask = stack_masks_[r] & (~std::uint64_t{0} << (l - begin));
        return begin + static_cast<std::size_t>(std::countr_zero(mask));
    }

    std::uint32_t pick(std::span<const std::uint32_t> values, std::size_t a, std::size_t b) const {
        return static_cast<std::uint32_t>(better_(values[b], values[a]) ? b : a);
    }

    std::size_t size_ = 0;
    std::vector<std::uint64_t> stack_masks_;
    std::vector<std::vector<std::uint32_t>> table_;
    [[no_unique_address]] Better better_{};
};

using RangeMin = RangeExtremum<std::less<>>;
using RangeMax = RangeExtremum<std::greater<>>;

}  // namespace subsel
