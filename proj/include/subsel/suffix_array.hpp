// Copyright 2026 The subsel Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace subsel {

/// Suffix array by prefix doubling with radix sort, O(n log n).
/// Positions and ranks are 0-based. Letters compare as unsigned bytes.
inline std::vector<std::uint32_t> build_suffix_array(std::string_view text) {
    const std::size_t n = text.size();
    std::vector<std::uint32_t> sa(n), rank(n), tmp(n);
    if (n == 0) return sa;

    std::vector<std::uint32_t> count(std::max<std::size_t>(256, n) + 1, 0);
    for (std::size_t i = 0; i < n; ++i) ++count[static_cast<unsigned char>(text[i])];
    for (std::size_t c = 1; c < 256; ++c) count[c] += count[c - 1];
    for (std::size_t i = n; i-- > 0;) sa[--count[static_cast<unsigned char>(text[i])]] = static_cast<std::uint32_t>(i);

    std::uint32_t classes = 1;
    rank[sa[0]] = 0;
    for (std::size_t r = 1; r < n; ++r) {
        if (text[sa[r]] != text[sa[r - 1]]) ++classes;
        rank[sa[r]] = classes - 1;
    }

    std::vector<std::uint32_t> order(n);
    for (std::size_t k = 1; classes < n; k <<= 1) {
        // Order by second key: suffixes without a second half come first.
        std::size_t filled = 0;
        for (std::size_t i = n - k; i < n; ++i) order[filled++] = static_cast<std::uint32_t>(i);
        for (std::size_t r = 0; r < n; ++r) {
            if (sa[r] >= k) order[filled++] = static_cast<std::uint32_t>(sa[r] - k);
        }
        // Stable counting sort by first key.
        std::fill(count.begin(), count.begin() + classes + 1, 0);
        for (std::size_t i = 0; i < n; ++i) ++count[rank[i] + 1];
        for (std::size_t c = 1; c <= classes; ++c) count[c] += count[c - 1];
        for (std::size_t r = 0; r < n; ++r) sa[count[rank[order[r]]]++] = order[r];

        auto second = [&](std::uint32_t p) -> std::int64_t {
            return p + k < n ? static_cast<std::int64_t>(rank[p + k]) : -1;
        };
        tmp[sa[0]] = 0;
        classes = 1;
        for (std::size_t r = 1; r < n; ++r) {
            const std::uint32_t a = sa[r - 1], b = sa[r];
            if (rank[a] != rank[b] || second(a) != second(b)) ++classes;
            tmp[b] = classes - 1;
        }
        rank.swap(tmp);
    }
    return sa;
}

inline std::vector<std::uint32_t> invert_permutation(std::span<const std::uint32_t> perm) {
    std::vector<std::uint32_t> inv(perm.size());
    for (std::size_t r = 0; r < perm.size(); ++r) inv[perm[r]] = static_cast<std::uint32_t>(r);
    return inv;
}

/// Kasai et al. lcp[r] = lcp(suffix sa[r-1], suffix sa[r]); lcp[0] = 0.
inline std::vector<std::uint32_t> build_lcp_array(std::string_view text, std::span<const std::uint32_t> sa,
                                                  std::span<const std::uint32_t> isa) {
    const std::size_t n = text.size();
    std::vector<std::uint32_t> lcp(n, 0);
    std::size_t h = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t r = isa[i];
        if (r == 0) {
            h = 0;
            continue;
        }
        const std::size_t j = sa[r - 1];
        while (i + h < n && j + h < n && text[i + h] == text[j + h]) ++h;
        lcp[r] = static_cast<std::uint32_t>(h);
        if (h > 0) --h;
    }
    return lcp;
}

}  // namespace subsel
