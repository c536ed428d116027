// Copyright 2026 The subsel Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <vector>

#include "subsel/common.hpp"
#include "subsel/core_index.hpp"
#include "subsel/prefix_suffix.hpp"
#include "subsel/rank_grid.hpp"

namespace subsel {

/// Number of members s in [0, p.count) whose suffix T[j - p.largest() + 1 + s*diff ..]
/// is larger than T[l..]. Members are the prefix-suffix lengths of one
/// progression, longest first.
inline pos_t count_larger_members(const EnhancedIndex& index, const Progression& p, pos_t j, pos_t l) {
    const pos_t r = j - p.largest() + 1;
    if (p.count == 1) return index.compare_suffixes(r, l) > 0 ? 1 : 0;
    const pos_t d = p.diff;
    const Range period{l, l + d - 1};
    // T[r + s*d ..] = period^(split + ext - s) x and T[l..] = period^ext y, where
    // neither x nor y starts with the period; the sign is constant on s < split
    // and on s > split.
    const pos_t split = index.prefix_power(period, Range{r, index.size()}) -
                        index.prefix_power(period, Range{l, index.size()});
    pos_t larger = 0;
    auto band = [&](pos_t from, pos_t to) {
        from = std::max<pos_t>(from, 0);
        to = std::min<pos_t>(to, p.count - 1);
        if (from > to) return;
        if (index.compare_suffixes(r + from * d, l) > 0) larger += to - from + 1;
    };
    band(0, split - 1);
    band(split, split);
    band(split + 1, p.count - 1);
    return larger;
}

/// |{ m in [i, j] : T[m..j] <= T[l..] }|.
inline pos_t not_larger(const EnhancedIndex& index, const RankGrid& grid, pos_t i, pos_t j, pos_t l) {
    detail::require_range(i, j, index.size(), "not_larger");
    detail::require_position(l, index.size(), "not_larger");
    // Suffixes ranked above T[l..] still count when their trimmed form is a
    // prefix of T[l..].
    pos_t total = grid.count_le(i, j, index.isa(l));
    for (const auto& p : prefix_suffix(index, grid, Range{l, index.size()}, Range{i, j})) {
        total += count_larger_members(index, p, j, l);
    }
    return total;
}

/// The k-th smallest suffix of T[i..j].
inline Suffix select_suffix(const EnhancedIndex& index, const RankGrid& grid, pos_t i, pos_t j, pos_t k) {
    detail::require_range(i, j, index.size(), "select");
    if (k < 1 || k > j - i + 1) throw std::out_of_range("select: k outside [1, j - i + 1]");

    // The k-th smallest suffix is a prefix of the smallest full suffix S with
    // at least k trimmed suffixes not larger than S.
    pos_t lo = 1, hi = index.size();
    while (lo < hi) {
        const pos_t mid = lo + (hi - lo) / 2;
        if (not_larger(index, grid, i, j, index.sa(mid)) >= k) {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    const pos_t l = index.sa(lo);
    pos_t q = not_larger(index, grid, i, j, l) - k + 1;
    const auto lengths = prefix_suffix(index, grid, Range{l, index.size()}, Range{i, j});
    for (auto it = lengths.rbegin(); it != lengths.rend(); ++it) {
        if (q <= it->count) {
            const pos_t len = it->at(it->count - q);
            return Suffix{j - len + 1, len};
        }
        q -= it->count;
    }
    throw std::logic_error("select: fewer prefix-suffix lengths than expected");
}

}  // namespace subsel
