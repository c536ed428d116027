// Copyright 2026 The subsel Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

// Brute-force reference answers computed straight from the definitions. Nothing
// here uses suffix arrays or any other part of the library; positions are
// 1-based inclusive like the rest of the API, but results are plain pairs.

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string_view>
#include <utility>
#include <vector>

namespace subsel::oracle {

using Pos = std::int64_t;
using StartLength = std::pair<Pos, Pos>;

/// Three-way lexicographic comparison in unsigned byte order.
inline int compare(std::string_view a, std::string_view b) {
    const std::size_t common = std::min(a.size(), b.size());
    for (std::size_t k = 0; k < common; ++k) {
        const auto x = static_cast<unsigned char>(a[k]), y = static_cast<unsigned char>(b[k]);
        if (x != y) return x < y ? -1 : 1;
    }
    if (a.size() == b.size()) return 0;
    return a.size() < b.size() ? -1 : 1;
}

inline std::string_view substring(std::string_view t, Pos i, Pos j) {
    if (i < 1 || j < i || j > static_cast<Pos>(t.size())) throw std::out_of_range("oracle: bad substring bounds");
    return t.substr(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - i + 1));
}

/// Starts of the suffixes of T[i..j] in increasing order.
inline std::vector<Pos> sorted_suffixes(std::string_view t, Pos i, Pos j) {
    const std::string_view w = substring(t, i, j);
    std::vector<Pos> starts;
    for (Pos p = i; p <= j; ++p) starts.push_back(p);
    std::stable_sort(starts.begin(), starts.end(), [&](Pos a, Pos b) {
        return compare(w.substr(static_cast<std::size_t>(a - i)), w.substr(static_cast<std::size_t>(b - i))) < 0;
    });
    return starts;
}

inline StartLength min_suffix(std::string_view t, Pos i, Pos j) {
    const std::string_view w = substring(t, i, j);
    Pos best = j;
    for (Pos p = j - 1; p >= i; --p) {
        if (compare(w.substr(static_cast<std::size_t>(p - i)), w.substr(static_cast<std::size_t>(best - i))) < 0) best = p;
    }
    return {best, j - best + 1};
}

inline StartLength max_suffix(std::string_view t, Pos i, Pos j) {
    const std::string_view w = substring(t, i, j);
    Pos best = j;
    for (Pos p = j - 1; p >= i; --p) {
        if (compare(w.substr(static_cast<std::size_t>(p - i)), w.substr(static_cast<std::size_t>(best - i))) > 0) best = p;
    }
    return {best, j - best + 1};
}

inline StartLength select(std::string_view t, Pos i, Pos j, Pos k) {
    const auto order = sorted_suffixes(t, i, j);
    if (k < 1 || k > static_cast<Pos>(order.size())) throw std::out_of_range("oracle: k out of range");
    const Pos start = order[static_cast<std::size_t>(k - 1)];
    return {start, j - start + 1};
}

/// For a fixed j: entry (i - 1) holds the minimal suffix start of T[i..j], for all i <= j.
inline std::vector<Pos> min_suffix_starts_ending_at(std::string_view t, Pos j) {
    std::vector<Pos> out(static_cast<std::size_t>(j));
    Pos best = j;
    for (Pos p = j; p >= 1; --p) {
        if (compare(substring(t, p, j), substring(t, best, j)) < 0) best = p;
        out[static_cast<std::size_t>(p - 1)] = best;
    }
    return out;
}

inline std::vector<Pos> max_suffix_starts_ending_at(std::string_view t, Pos j) {
    std::vector<Pos> out(static_cast<std::size_t>(j));
    Pos best = j;
    for (Pos p = j; p >= 1; --p) {
        if (compare(substring(t, p, j), substring(t, best, j)) > 0) best = p;
        out[static_cast<std::size_t>(p - 1)] = best;
    }
    return out;
}

/// Calls visit(i, order) for i = j, j-1, ..., 1 where `order` lists the starts
/// of the suffixes of T[i..j] in increasing order.
template <class Visit>
void for_each_sorted_suffixes_ending_at(std::string_view t, Pos j, Visit&& visit) {
    std::vector<Pos> order;
    for (Pos p = j; p >= 1; --p) {
        const std::string_view s = substring(t, p, j);
        auto at = std::lower_bound(order.begin(), order.end(), s, [&](Pos q, std::string_view x) {
            return compare(substring(t, q, j), x) < 0;
        });
        order.insert(at, p);
        visit(p, static_cast<const std::vector<Pos>&>(order));
    }
}

/// Positions p <= j such that no p' in (p, j] has T[p'..j] > T[p..j].
inline std::vector<Pos> active_positions(std::string_view t, Pos j) {
    std::vector<Pos> out;
    for (Pos p = 1; p <= j; ++p) {
        bool active = true;
        for (Pos q = p + 1; q <= j && active; ++q) {
            if (compare(substring(t, q, j), substring(t, p, j)) > 0) active = false;
        }
        if (active) out.push_back(p);
    }
    return out;
}

/// Lengths l <= min(|s|, |sp|) with s[0..l) == sp[|sp|-l..|sp|), increasing.
inline std::vector<Pos> borders(std::string_view s, std::string_view sp) {
    std::vector<Pos> out;
    for (std::size_t l = 1; l <= std::min(s.size(), sp.size()); ++l) {
        if (s.substr(0, l) == sp.substr(sp.size() - l)) out.push_back(static_cast<Pos>(l));
    }
    return out;
}

/// |{ m in [i, j] : T[m..j] <= T[l..] }|.
inline Pos not_larger(std::string_view t, Pos i, Pos j, Pos l) {
    const std::string_view target = substring(t, l, static_cast<Pos>(t.size()));
    Pos count = 0;
    for (Pos m = i; m <= j; ++m) {
        if (compare(substring(t, m, j), target) <= 0) ++count;
    }
    return count;
}

/// Lyndon factors of T[i..j] as (start, length), left to right, by Duval's algorithm.
inline std::vector<StartLength> lyndon_factors(std::string_view t, Pos i, Pos j) {
    const std::string_view w = substring(t, i, j);
    std::vector<StartLength> out;
    std::size_t k = 0;
    while (k < w.size()) {
        std::size_t a = k, b = k + 1;
        while (b < w.size() && static_cast<unsigned char>(w[a]) <= static_cast<unsigned char>(w[b])) {
            a = static_cast<unsigned char>(w[a]) < static_cast<unsigned char>(w[b]) ? k : a + 1;
            ++b;
        }
        while (k <= a) {
            out.emplace_back(i + static_cast<Pos>(k), static_cast<Pos>(b - a));
            k += b - a;
        }
    }
    return out;
}

/// Entry t: length of the minimal suffix of w[0..t].
inline std::vector<Pos> min_suffix_lengths_of_prefixes(std::string_view w) {
    std::vector<Pos> out;
    for (std::size_t end = 1; end <= w.size(); ++end) {
        const auto [start, length] = min_suffix(w, 1, static_cast<Pos>(end));
        out.push_back(length);
        (void)start;
    }
    return out;
}

}  // namespace subsel::oracle
