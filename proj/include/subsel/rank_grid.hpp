// Copyright 2026 The subsel Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "subsel/common.hpp"

namespace subsel {

/// Static bit vector with rank in O(1): cumulative counts every 512 bits, a
/// 16-bit count per word inside its superblock, and one popcount.
class RankBitVector {
public:
    RankBitVector() = default;

    explicit RankBitVector(std::size_t bits) : size_(bits), words_((bits + 63) / 64, 0) {}

    void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
    bool operator[](std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1; }
    std::size_t size() const { return size_; }

    /// Must be called after the last `set`.
    void build_rank() {
        superblocks_.assign(words_.size() / kWordsPerSuperblock + 1, 0);
        std::uint64_t total = 0;
        for (std::size_t w = 0; w < words_.size(); ++w) {
            if (w % kWordsPerSuperblock == 0) superblocks_[w / kWordsPerSuperblock] = total;
            total += static_cast<std::uint64_t>(std::popcount(words_[w]));
        }
        if (words_.size() % kWordsPerSuperblock == 0) superblocks_.back() = total;
        build_word_counts();
    }

    /// Number of ones in [0, i).
    std::size_t rank1(std::size_t i) const {
        const std::size_t word = i / 64;
        std::size_t ones = superblocks_[word / kWordsPerSuperblock] + word_counts_[word];
        if (i % 64 != 0) ones += static_cast<std::size_t>(std::popcount(words_[word] & ((std::uint64_t{1} << (i % 64)) - 1)));
        return ones;
    }
    std::size_t rank0(std::size_t i) const { return i - rank1(i); }

    std::span<const std::uint64_t> words() const { return words_; }
    std::span<const std::uint64_t> superblocks() const { return superblocks_; }

    static RankBitVector from_parts(std::size_t bits, std::vector<std::uint64_t> words,
                                    std::vector<std::uint64_t> superblocks) {
        RankBitVector v;
        v.size_ = bits;
        v.words_ = std::move(words);
        v.superblocks_ = std::move(superblocks);
        if (v.words_.size() != (bits + 63) / 64 || v.superblocks_.size() != v.words_.size() / kWordsPerSuperblock + 1) {
            throw FormatError("bit vector: payload sizes do not match its length");
        }
        RankBitVector check(bits);
        check.words_ = v.words_;
        check.build_rank();
        if (check.superblocks_ != v.superblocks_) throw FormatError("bit vector: rank directory does not match its bits");
        v.build_word_counts();
        return v;
    }

private:
    static constexpr std::size_t kWordsPerSuperblock = 8;

    // Ones before each word, counted from the start of its superblock.
    void build_word_counts() {
        word_counts_.assign(words_.size() + 1, 0);
        std::uint16_t run = 0;
        for (std::size_t w = 0; w < words_.size(); ++w) {
            if (w % kWordsPerSuperblock == 0) run = 0;
            word_counts_[w] = run;
            run = static_cast<std::uint16_t>(run + std::popcount(words_[w]));
        }
        if (words_.size() % kWordsPerSuperblock != 0) word_counts_[words_.size()] = run;
    }

    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
    std::vector<std::uint64_t> superblocks_;
    std::vector<std::uint16_t> word_counts_;
};

/// The point set {(m, ISA[m])} of a text, answering range counting and
/// position successor/predecessor inside a rank band in O(log n).
///
/// Stored as a wavelet matrix over SA (rank -> position), i.e. the same grid
/// indexed by rank. A position window [lo, hi] becomes a value band, so
/// "leftmost position with rank in [rlo, rhi]" is the smallest value >= lo in
/// the index range [rlo, rhi].
class RankGrid {
public:
    RankGrid() = default;

    /// `sa` holds 0-based positions indexed by 0-based rank.
    explicit RankGrid(std::span<const std::uint32_t> sa) : size_(sa.size()) {
        levels_ = std::max(1, static_cast<int>(std::bit_width(size_ > 0 ? size_ - 1 : 0)));
        std::vector<std::uint32_t> cur(sa.begin(), sa.end()), next(size_);
        bits_.resize(static_cast<std::size_t>(levels_));
        zeros_.resize(static_cast<std::size_t>(levels_));
        for (int level = levels_ - 1; level >= 0; --level) {
            auto& bv = bits_[static_cast<std::size_t>(level)];
            bv = RankBitVector(size_);
            std::size_t zeros = 0;
            for (std::size_t r = 0; r < size_; ++r) {
                if ((cur[r] >> level) & 1) {
                    bv.set(r);
                } else {
                    ++zeros;
                }
            }
            bv.build_rank();
            zeros_[static_cast<std::size_t>(level)] = zeros;
            std::size_t z = 0, o = zeros;
            for (std::size_t r = 0; r < size_; ++r) {
                if ((cur[r] >> level) & 1) {
                    next[o++] = cur[r];
                } else {
                    next[z++] = cur[r];
                }
            }
            cur.swap(next);
        }
    }

    static RankGrid from_parts(std::size_t size, std::vector<RankBitVector> bits, std::vector<std::uint64_t> zeros) {
        RankGrid g;
        g.size_ = size;
        g.levels_ = static_cast<int>(bits.size());
        if (g.levels_ != std::max(1, static_cast<int>(std::bit_width(size > 0 ? size - 1 : 0))) ||
            zeros.size() != bits.size()) {
            throw FormatError("rank grid: level count does not match the text length");
        }
        for (std::size_t l = 0; l < bits.size(); ++l) {
            if (bits[l].size() != size || zeros[l] > size) throw FormatError("rank grid: level size mismatch");
        }
        g.bits_ = std::move(bits);
        g.zeros_ = std::move(zeros);
        return g;
    }

    pos_t size() const { return static_cast<pos_t>(size_); }
    int levels() const { return levels_; }
    const std::vector<RankBitVector>& level_bits() const { return bits_; }
    const std::vector<std::uint64_t>& level_zeros() const { return zeros_; }

    /// Position stored at 1-based rank `rank`, i.e. SA[rank].
    pos_t position_at_rank(pos_t rank) const {
        detail::require_position(rank, size(), "position_at_rank");
        std::size_t r = static_cast<std::size_t>(rank - 1);
        std::uint32_t value = 0;
        for (int level = levels_ - 1; level >= 0; --level) {
            const auto& bv = bits_[static_cast<std::size_t>(level)];
            if (bv[r]) {
                value |= std::uint32_t{1} << level;
                r = zeros_[static_cast<std::size_t>(level)] + bv.rank1(r);
            } else {
                r = bv.rank0(r);
            }
        }
        return static_cast<pos_t>(value) + 1;
    }

    /// |{ m in [i, j] : ISA[m] <= rho }|.
    pos_t count_le(pos_t i, pos_t j, pos_t rho) const {
        detail::require_range(i, j, size(), "count_le");
        detail::require_position(rho, size(), "count_le rank");
        const std::size_t hi = static_cast<std::size_t>(rho);
        return static_cast<pos_t>(count_less(0, hi, static_cast<std::uint64_t>(j)) -
                                  count_less(0, hi, static_cast<std::uint64_t>(i - 1)));
    }

    /// Smallest position p in [lo, hi] with ISA[p] in `band`.
    std::optional<pos_t> successor_in_band(pos_t lo, pos_t hi, RankRange band) const {
        detail::require_range(lo, hi, size(), "successor_in_band");
        if (band.empty()) return std::nullopt;
        detail::require_range(band.first, band.last, size(), "successor_in_band ranks");
        const std::size_t a = static_cast<std::size_t>(band.first - 1), b = static_cast<std::size_t>(band.last);
        const std::size_t below = count_less(a, b, static_cast<std::uint64_t>(lo - 1));
        if (below == b - a) return std::nullopt;
        const pos_t p = static_cast<pos_t>(kth_smallest(a, b, below)) + 1;
        if (p > hi) return std::nullopt;
        return p;
    }

    /// Largest position p in [lo, hi] with ISA[p] in `band`.
    std::optional<pos_t> predecessor_in_band(pos_t lo, pos_t hi, RankRange band) const {
        detail::require_range(lo, hi, size(), "predecessor_in_band");
        if (band.empty()) return std::nullopt;
        detail::require_range(band.first, band.last, size(), "predecessor_in_band ranks");
        const std::size_t a = static_cast<std::size_t>(band.first - 1), b = static_cast<std::size_t>(band.last);
        const std::size_t upto = count_less(a, b, static_cast<std::uint64_t>(hi));
        if (upto == 0) return std::nullopt;
        const pos_t p = static_cast<pos_t>(kth_smallest(a, b, upto - 1)) + 1;
        if (p < lo) return std::nullopt;
        return p;
    }

private:
    /// Number of values < x among entries [a, b) (0-based values).
    std::size_t count_less(std::size_t a, std::size_t b, std::uint64_t x) const {
        if (x >> levels_) return b - a;
        std::size_t result = 0;
        for (int level = levels_ - 1; level >= 0; --level) {
            const auto& bv = bits_[static_cast<std::size_t>(level)];
            const std::size_t za = bv.rank0(a), zb = bv.rank0(b);
            if ((x >> level) & 1) {
                result += zb - za;
                const std::size_t z = zeros_[static_cast<std::size_t>(level)];
                a = z + (a - za);
                b = z + (b - zb);
            } else {
                a = za;
                b = zb;
            }
        }
        return result;
    }

    /// k-th smallest (0-based) value among entries [a, b).
    std::uint32_t kth_smallest(std::size_t a, std::size_t b, std::size_t k) const {
        std::uint32_t value = 0;
        for (int level = levels_ - 1; level >= 0; --level) {
            const auto& bv = bits_[static_cast<std::size_t>(level)];
            const std::size_t za = bv.rank0(a), zb = bv.rank0(b);
            if (k < zb - za) {
                a = za;
                b = zb;
            } else {
                k -= zb - za;
                value |= std::uint32_t{1} << level;
                const std::size_t z = zeros_[static_cast<std::size_t>(level)];
                a = z + (a - za);
                b = z + (b - zb);
            }
        }
        return value;
    }

    std::size_t size_ = 0;
    int levels_ = 0;
    std::vector<RankBitVector> bits_;
    std::vector<std::uint64_t> zeros_;
};

}  // namespace subsel
