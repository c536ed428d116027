// Copyright 2026 The subsel Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "subsel/common.hpp"
#include "subsel/range_extremum.hpp"
#include "subsel/suffix_array.hpp"

namespace subsel {

/// Suffix array, inverse suffix array and LCP array of one string, with
/// range-extremum structures over LCP and ISA. All public members use 1-based
/// positions and ranks.
class SuffixStructure {
public:
    SuffixStructure() = default;

    explicit SuffixStructure(std::string text) : text_(std::move(text)) {
        check_length(static_cast<pos_t>(text_.size()));
        sa_ = build_suffix_array(text_);
        isa_ = invert_permutation(sa_);
        lcp_ = build_lcp_array(text_, sa_, isa_);
        build_rmq();
    }

    /// Rebuilds the derived range structures around stored arrays. Arrays are
    /// 0-based (ranks and positions) as produced by the constructor.
    static SuffixStructure from_arrays(std::string text, std::vector<std::uint32_t> sa,
                                       std::vector<std::uint32_t> isa, std::vector<std::uint32_t> lcp) {
        const std::size_t n = text.size();
        if (n == 0 || sa.size() != n || isa.size() != n || lcp.size() != n) {
            throw FormatError("suffix structure: array sizes do not match the text");
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (sa[r] >= n || isa[sa[r]] != r) throw FormatError("suffix structure: SA and ISA are not inverse");
        }
        SuffixStructure s;
        s.text_ = std::move(text);
        s.sa_ = std::move(sa);
        s.isa_ = std::move(isa);
        s.lcp_ = std::move(lcp);
        s.build_rmq();
        return s;
    }

    pos_t size() const { return static_cast<pos_t>(text_.size()); }
    std::string_view text() const { return text_; }
    unsigned char at(pos_t p) const { return static_cast<unsigned char>(text_[static_cast<std::size_t>(p - 1)]); }

    pos_t sa(pos_t rank) const { return sa_[static_cast<std::size_t>(rank - 1)] + pos_t{1}; }
    pos_t isa(pos_t p) const { return isa_[static_cast<std::size_t>(p - 1)] + pos_t{1}; }

    std::span<const std::uint32_t> sa_array() const { return sa_; }
    std::span<const std::uint32_t> isa_array() const { return isa_; }
    std::span<const std::uint32_t> lcp_array() const { return lcp_; }

    /// lcp of the full suffixes T[p..] and T[q..].
    pos_t suffix_lcp(pos_t p, pos_t q) const {
        if (p == q) return size() - p + 1;
        std::size_t a = isa_[static_cast<std::size_t>(p - 1)], b = isa_[static_cast<std::size_t>(q - 1)];
        if (a > b) std::swap(a, b);
        return lcp_rmq_.value(lcp_, a + 1, b);
    }

    pos_t lcp(Range x, Range y) const {
        check(x);
        check(y);
        return std::min({suffix_lcp(x.first, y.first), x.length(), y.length()});
    }

    std::strong_ordering compare(Range x, Range y) const {
        const pos_t l = lcp(x, y);
        if (l == x.length() || l == y.length()) return x.length() <=> y.length();
        return at(x.first + l) <=> at(y.first + l);
    }

    std::strong_ordering compare_suffixes(pos_t p, pos_t q) const {
        detail::require_position(p, size(), "compare_suffixes");
        detail::require_position(q, size(), "compare_suffixes");
        return isa_[static_cast<std::size_t>(p - 1)] <=> isa_[static_cast<std::size_t>(q - 1)];
    }

    /// Position in [i, j] whose full suffix has the smallest rank.
    pos_t min_rank_position(pos_t i, pos_t j) const {
        detail::require_range(i, j, size(), "min_rank_position");
        return static_cast<pos_t>(isa_min_.arg(isa_, static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1))) + 1;
    }

    pos_t max_rank_position(pos_t i, pos_t j) const {
        detail::require_range(i, j, size(), "max_rank_position");
        return static_cast<pos_t>(isa_max_.arg(isa_, static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1))) + 1;
    }

    /// Largest a such that x^a is a prefix of y.
    pos_t prefix_power(Range x, Range y) const {
        check(x);
        check(y);
        const pos_t period = x.length();
        if (lcp(x, y) < period) return 0;
        if (y.first + period > y.last) return 1;
        return 1 + lcp(y, Range{y.first + period, y.last}) / period;
    }

    /// Ranks of all suffixes having T[x.first..x.last] as a prefix.
    RankRange rank_interval(Range x) const {
        check(x);
        const auto need = static_cast<std::uint32_t>(x.length());
        const std::size_t home = isa_[static_cast<std::size_t>(x.first - 1)];

        // Both ends are found by galloping away from home, then bisecting the
        // last step, so short intervals cost O(log of their size).
        auto reaches_left = [&](std::size_t r) { return r == home || lcp_rmq_.value(lcp_, r + 1, home) >= need; };
        auto reaches_right = [&](std::size_t r) { return r == home || lcp_rmq_.value(lcp_, home + 1, r) >= need; };

        std::size_t good = home, bad = home, step = 1;
        bool bounded = false;
        while (good > 0) {
            const std::size_t probe = good >= step ? good - step : 0;
            if (!reaches_left(probe)) {
                bad = probe;
                bounded = true;
                break;
            }
            good = probe;
            step *= 2;
        }
        std::size_t lo = bounded ? bad + 1 : good, hi = good;
        while (lo < hi) {
            const std::size_t mid = lo + (hi - lo) / 2;
            if (reaches_left(mid)) {
                hi = mid;
            } else {
                lo = mid + 1;
            }
        }
        const std::size_t first = lo;

        const std::size_t top = text_.size() - 1;
        good = home;
        step = 1;
        bounded = false;
        while (good < top) {
            const std::size_t probe = std::min(top, good + step);
            if (!reaches_right(probe)) {
                bad = probe;
                bounded = true;
                break;
            }
            good = probe;
            step *= 2;
        }
        lo = good;
        hi = bounded ? bad - 1 : good;
        while (lo < hi) {
            const std::size_t mid = lo + (hi - lo + 1) / 2;
            if (reaches_right(mid)) {
                lo = mid;
            } else {
                hi = mid - 1;
            }
        }
        return RankRange{static_cast<pos_t>(first) + 1, static_cast<pos_t>(lo) + 1};
    }

private:
    static void check_length(pos_t n) {
        if (n == 0) throw std::invalid_argument("text must not be empty");
        if (n > kMaxTextLength) throw std::length_error("text longer than 2^31 - 1 bytes");
    }

    void check(Range x) const { detail::require_range(x.first, x.last, size(), "substring"); }

    void build_rmq() {
        lcp_rmq_ = RangeMin(lcp_);
        isa_min_ = RangeMin(isa_);
        isa_max_ = RangeMax(isa_);
    }

    std::string text_;
    std::vector<std::uint32_t> sa_;
    std::vector<std::uint32_t> isa_;
    std::vector<std::uint32_t> lcp_;
    RangeMin lcp_rmq_;
    RangeMin isa_min_;
    RangeMax isa_max_;
};

/// Suffix structures of T and of its reverse. Every comparison primitive on
/// substrings of T runs in constant time; `rank_interval` takes O(log n).
class EnhancedIndex {
public:
    EnhancedIndex() = default;

    explicit EnhancedIndex(std::string text)
        : forward_(text), reverse_(std::string(text.rbegin(), text.rend())) {}

    EnhancedIndex(SuffixStructure forward, SuffixStructure reverse)
        : forward_(std::move(forward)), reverse_(std::move(reverse)) {
        if (forward_.size() != reverse_.size() ||
            !std::equal(forward_.text().begin(), forward_.text().end(), reverse_.text().rbegin())) {
            throw FormatError("reverse structure does not match the text");
        }
    }

    pos_t size() const { return forward_.size(); }
    std::string_view text() const { return forward_.text(); }
    unsigned char at(pos_t p) const { return forward_.at(p); }

    const SuffixStructure& forward() const { return forward_; }
    const SuffixStructure& reverse() const { return reverse_; }

    pos_t sa(pos_t rank) const { return forward_.sa(rank); }
    pos_t isa(pos_t p) const { return forward_.isa(p); }

    pos_t lcp(Range x, Range y) const { return forward_.lcp(x, y); }
    pos_t lcs(Range x, Range y) const { return reverse_.lcp(mirror(x), mirror(y)); }
    std::strong_ordering compare(Range x, Range y) const { return forward_.compare(x, y); }
    std::strong_ordering compare_suffixes(pos_t p, pos_t q) const { return forward_.compare_suffixes(p, q); }
    pos_t suffix_lcp(pos_t p, pos_t q) const { return forward_.suffix_lcp(p, q); }

    pos_t min_rank_position(pos_t i, pos_t j) const { return forward_.min_rank_position(i, j); }
    pos_t max_rank_position(pos_t i, pos_t j) const { return forward_.max_rank_position(i, j); }

    pos_t prefix_power(Range x, Range y) const { return forward_.prefix_power(x, y); }
    /// Largest a such that x^a is a suffix of y.
    pos_t suffix_power(Range x, Range y) const { return reverse_.prefix_power(mirror(x), mirror(y)); }

    RankRange rank_interval(Range x) const { return forward_.rank_interval(x); }

private:
    Range mirror(Range x) const { return Range{size() - x.last + 1, size() - x.first + 1}; }

    SuffixStructure forward_;
    SuffixStructure reverse_;
};

}  // namespace subsel
