// Copyright 2026 The subsel Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

#include "subsel/common.hpp"
#include "subsel/core_index.hpp"
#include "subsel/rank_grid.hpp"

namespace subsel {

/// {smallest + t*diff : 0 <= t < count}.
struct Progression {
    pos_t smallest = 0;
    pos_t diff = 1;
    pos_t count = 0;

    pos_t largest() const { return smallest + (count - 1) * diff; }
    pos_t at(pos_t t) const { return smallest + t * diff; }
    bool operator==(const Progression&) const = default;
};

/// Members of `a` and `b` inside [lo, hi], or nothing.
inline std::optional<Progression> intersect(const Progression& a, const Progression& b, pos_t lo, pos_t hi) {
    if (a.count <= 0 || b.count <= 0) return std::nullopt;
    const pos_t lower = std::max({lo, a.smallest, b.smallest});
    const pos_t upper = std::min({hi, a.largest(), b.largest()});
    if (lower > upper) return std::nullopt;

    const __int128 da = a.count > 1 ? a.diff : 1, db = b.count > 1 ? b.diff : 1;
    // Solve x = a.smallest (mod da), x = b.smallest (mod db).
    __int128 old_r = da, r = db, old_s = 1, s = 0;
    while (r != 0) {
        const __int128 q = old_r / r;
        old_r -= q * r;
        std::swap(old_r, r);
        old_s -= q * s;
        std::swap(old_s, s);
    }
    const __int128 g = old_r;
    const __int128 delta = static_cast<__int128>(b.smallest) - a.smallest;
    if (delta % g != 0) return std::nullopt;
    const __int128 step = da / g * db;
    const __int128 mod = db / g;
    __int128 t = (delta / g) % mod * (old_s % mod) % mod;
    if (t < 0) t += mod;
    __int128 x = a.smallest + da * t;
    // First solution >= lower.
    if (x < lower) {
        x += (lower - x + step - 1) / step * step;
    } else {
        x -= (x - lower) / step * step;
    }
    if (x > upper) return std::nullopt;
    return Progression{static_cast<pos_t>(x), static_cast<pos_t>(step), static_cast<pos_t>((upper - x) / step + 1)};
}

/// Starting positions in [lo, hi] of occurrences of T[anchor], as one
/// progression. Correct when hi - lo <= |anchor| / 2, where two occurrences at
/// distance d force period d and all occurrences are d apart.
inline std::optional<Progression> anchor_occurrences(const EnhancedIndex& index, const RankGrid& grid, Range anchor,
                                                     pos_t lo, pos_t hi) {
    const RankRange band = index.rank_interval(anchor);
    std::optional<pos_t> first, second, last;
    if (band.last - band.first < 16) {
        // Few occurrences overall: read them off the suffix array.
        std::array<pos_t, 16> hits{};
        std::size_t count = 0;
        for (pos_t r = band.first; r <= band.last; ++r) {
            const pos_t p = index.sa(r);
            if (lo <= p && p <= hi) hits[count++] = p;
        }
        if (count == 0) return std::nullopt;
        std::sort(hits.begin(), hits.begin() + static_cast<std::ptrdiff_t>(count));
        first = hits[0];
        last = hits[count - 1];
        if (count > 1) second = hits[1];
    } else {
        first = grid.successor_in_band(lo, hi, band);
        if (!first) return std::nullopt;
        last = grid.predecessor_in_band(lo, hi, band);
        if (*last != *first) second = grid.successor_in_band(*first + 1, hi, band);
    }
    if (!second) return Progression{*first, 1, 1};
    const pos_t diff = *second - *first;
    return Progression{*first, diff, (*last - *first) / diff + 1};
}

/// All lengths l <= min(|s|, |sp|) such that the length-l prefix of T[s] equals
/// the length-l suffix of T[sp], as increasing disjoint progressions.
inline std::vector<Progression> prefix_suffix(const EnhancedIndex& index, const RankGrid& grid, Range s, Range sp) {
    detail::require_range(s.first, s.last, index.size(), "prefix_suffix");
    detail::require_range(sp.first, sp.last, index.size(), "prefix_suffix");
    const pos_t bound = std::min(s.length(), sp.length());
    std::vector<Progression> out;
    for (pos_t len = 1; len <= std::min<pos_t>(3, bound); ++len) {
        if (index.lcp(Range{s.first, s.first + len - 1}, Range{sp.last - len + 1, sp.last}) == len) {
            out.push_back(Progression{len, 1, 1});
        }
    }
    for (pos_t base = 4; base <= bound; base *= 2) {
        const pos_t half = base / 2;
        for (const pos_t lo : {base, base + half}) {
            if (lo > bound) break;
            const pos_t hi = std::min(lo + half - 1, bound);
            // First lo letters of the candidate occur at sp.last - l + 1 ...
            const auto head = anchor_occurrences(index, grid, Range{s.first, s.first + lo - 1}, sp.last - hi + 1, sp.last - lo + 1);
            if (!head) continue;
            // ... and its last lo letters at s.first + l - lo.
            const auto tail = anchor_occurrences(index, grid, Range{sp.last - lo + 1, sp.last}, s.first, s.first + hi - lo);
            if (!tail) continue;
            const Progression from_head{sp.last + 1 - head->largest(), head->diff, head->count};
            const Progression from_tail{tail->smallest - s.first + lo, tail->diff, tail->count};
            if (const auto both = intersect(from_head, from_tail, lo, hi)) out.push_back(*both);
        }
    }
    return out;
}

inline std::vector<pos_t> flatten(const std::vector<Progression>& progressions) {
    std::vector<pos_t> out;
    for (const auto& p : progressions) {
        for (pos_t t = 0; t < p.count; ++t) out.push_back(p.at(t));
    }
    return out;
}

}  // namespace subsel
