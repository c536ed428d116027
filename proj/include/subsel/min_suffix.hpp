// Copyright 2026 The subsel Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <span>
#include <string_view>
#include <vector>

#include "subsel/common.hpp"
#include "subsel/core_index.hpp"

namespace subsel {

/// Counters filled in by the index builders when requested.
struct BuildStats {
    std::uint64_t duval_work = 0;   // letters scanned by the prefix minimal-suffix passes
    std::uint64_t duval_levels = 0; // chunk levels processed
    std::uint64_t events = 0;       // scheduled deactivations of maximal-suffix candidates
    std::uint64_t removals = 0;     // deactivations applied
    std::uint64_t merges = 0;       // partition block merges
};

/// Counters filled in by queries when requested.
struct QueryStats {
    std::uint64_t candidates = 0;  // candidate starts compared by a minimal-suffix query
    std::uint64_t primitives = 0;  // constant-time index primitives used by a maximal-suffix query
};

/// |S_j^l|: length of the l-th canonical substring ending at j. For l >= 2 it
/// starts at a multiple-of-2^m boundary (1-based: position = 1 mod 2^m) where
/// m = floor(l/2) - 1.
constexpr pos_t canonical_length(pos_t j, int l) {
    if (l <= 1) return 1;
    const int m = l / 2 - 1;
    const pos_t chunk = pos_t{1} << m;
    return (l % 2 == 0 ? 2 : 3) * chunk + (j & (chunk - 1));
}

/// Largest l such that S_j^l is a proper suffix of T[i..j]; 0 when i == j.
constexpr int canonical_alpha(pos_t i, pos_t j) {
    const pos_t len = j - i + 1;
    if (len <= 1) return 0;
    const int m = std::bit_width(static_cast<std::uint64_t>(len)) - 1;
    for (int l = 2 * m + 1; l > 2 * m - 1; --l) {
        if (canonical_length(j, l) < len) return l;
    }
    return 2 * m - 1;
}

/// out[t] = length of the minimal non-empty suffix of w[0..t], for all t.
///
/// Duval's factorization scan: while w[i..k] has the form u^q u' with u Lyndon
/// and u' a proper prefix of u, the last Lyndon factor of the prefix is |u| if
/// u' is empty and otherwise the last factor of u', which was recorded when the
/// scan first passed i + |u'| - 1. Each position is recorded the first time it
/// is consumed; rescans after a factor is emitted only revisit older positions.
inline void min_suffix_lengths_of_prefixes(std::string_view w, std::span<std::uint32_t> out) {
    const std::size_t n = w.size();
    std::size_t filled = 0;
    std::size_t i = 0;
    while (i < n) {
        if (filled == i) out[filled++] = 1;
        std::size_t scan = i + 1, cmp = i;
        while (scan < n && static_cast<unsigned char>(w[cmp]) <= static_cast<unsigned char>(w[scan])) {
            if (static_cast<unsigned char>(w[cmp]) < static_cast<unsigned char>(w[scan])) {
                cmp = i;
                if (filled == scan) out[filled++] = static_cast<std::uint32_t>(scan - i + 1);
            } else {
                ++cmp;
                if (filled == scan) {
                    const std::size_t period = scan + 1 - cmp;
                    const std::size_t tail = (scan - i + 1) % period;
                    out[filled++] = tail == 0 ? static_cast<std::uint32_t>(period) : out[i + tail - 1];
                }
            }
            ++scan;
        }
        const std::size_t period = scan - cmp;
        while (i <= cmp) i += period;
    }
}

inline std::vector<std::uint32_t> min_suffix_lengths_of_prefixes(std::string_view w) {
    if (w.empty()) throw std::invalid_argument("min_suffix_lengths_of_prefixes: empty input");
    std::vector<std::uint32_t> out(w.size());
    min_suffix_lengths_of_prefixes(w, out);
    return out;
}

/// Minimal-suffix structure with trade-off parameter tau: one 64-bit word per
/// position j whose bit (l-1) is B_j[l], set iff l = 1 or the minimal suffix of
/// S_j^{tau*l} is longer than S_j^{tau*(l-1)}. Queries cost O(tau), building
/// O(n log n / tau).
class MinSuffixIndex {
public:
    MinSuffixIndex() = default;

    static int max_tau(pos_t n) { return std::max(1, static_cast<int>(std::bit_width(static_cast<std::uint64_t>(n))) - 1); }

    /// `tau` above floor(log2 n) is clamped; check `tau()` afterwards.
    static MinSuffixIndex build(const EnhancedIndex& index, int tau, BuildStats* stats = nullptr) {
        if (tau < 1) throw std::invalid_argument("tau must be at least 1");
        const pos_t n = index.size();
        MinSuffixIndex result;
        result.tau_ = std::min(tau, max_tau(n));
        tau = result.tau_;
        result.words_.assign(static_cast<std::size_t>(n), 0);

        for (pos_t j = 1; j <= n; ++j) {
            if (canonical_alpha(1, j) / tau >= 1) result.words_[static_cast<std::size_t>(j - 1)] = 1;
        }

        // Bit indices b >= 2 refer to l = tau*b, grouped by chunk level m = floor(l/2) - 1.
        std::map<int, std::vector<int>> levels;
        const int top = canonical_alpha(1, n);
        for (int b = 2; tau * b <= top; ++b) levels[(tau * b) / 2 - 1].push_back(tau * b);

        const std::string_view text = index.text();
        std::vector<std::uint32_t> lengths;
        for (const auto& [m, ls] : levels) {
            const pos_t chunk = pos_t{1} << m;
            lengths.resize(static_cast<std::size_t>(std::min<pos_t>(4 * chunk, n)));
            if (stats) ++stats->duval_levels;
            for (pos_t start = 1; start <= n; start += chunk) {
                const pos_t window = std::min<pos_t>(4 * chunk, n - start + 1);
                min_suffix_lengths_of_prefixes(text.substr(static_cast<std::size_t>(start - 1), static_cast<std::size_t>(window)),
                                               std::span(lengths).first(static_cast<std::size_t>(window)));
                if (stats) stats->duval_work += static_cast<std::uint64_t>(window);
                for (int l : ls) {
                    // S_j^l starts here for j = start - 1 + base*chunk + r, r in [0, chunk).
                    const pos_t base = (l % 2 == 0 ? 2 : 3) * chunk;
                    const int bit = l / tau;
                    for (pos_t r = 0; r < chunk; ++r) {
                        const pos_t j = start - 1 + base + r;
                        if (j > n) break;
                        if (canonical_alpha(1, j) / tau < bit) continue;
                        const pos_t len = base + r;
                        if (static_cast<pos_t>(lengths[static_cast<std::size_t>(len - 1)]) > canonical_length(j, l - tau)) {
                            result.words_[static_cast<std::size_t>(j - 1)] |= std::uint64_t{1} << (bit - 1);
                        }
                    }
                }
            }
        }
        return result;
    }

    static MinSuffixIndex from_words(pos_t n, int tau, std::vector<std::uint64_t> words) {
        if (tau < 1 || tau > max_tau(n) || static_cast<pos_t>(words.size()) != n) {
            throw FormatError("min-suffix words: tau or length out of range");
        }
        MinSuffixIndex result;
        result.tau_ = tau;
        result.words_ = std::move(words);
        return result;
    }

    int tau() const { return tau_; }
    std::span<const std::uint64_t> words() const { return words_; }

    /// B_j[l] for 1 <= l <= floor(alpha(1, j) / tau).
    bool bit(pos_t j, int l) const { return (words_[static_cast<std::size_t>(j - 1)] >> (l - 1)) & 1; }

    /// Start and length of the minimal non-empty suffix of T[i..j].
    Suffix query(const EnhancedIndex& index, pos_t i, pos_t j, QueryStats* stats = nullptr) const {
        detail::require_range(i, j, index.size(), "min_suffix");
        if (i == j) {
            if (stats) stats->candidates += 1;
            return Suffix{j, 1};
        }
        const int alpha = canonical_alpha(i, j);
        pos_t best = index.min_rank_position(i, j);
        std::uint64_t considered = 1;
        auto consider = [&](int l) {
            const pos_t c = index.min_rank_position(j - canonical_length(j, l) + 1, j);
            ++considered;
            if (c != best && index.compare(Range{c, j}, Range{best, j}) < 0) best = c;
        };

        const int blocks = alpha / tau_;
        if (blocks >= 1) {
            const std::uint64_t mask = blocks >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << blocks) - 1;
            const int h = std::bit_width(words_[static_cast<std::size_t>(j - 1)] & mask);
            for (int l = (h - 1) * tau_ + 1; l <= h * tau_; ++l) consider(l);
            for (int l = tau_ * blocks; l <= alpha; ++l) {
                if (l > h * tau_) consider(l);
            }
        } else {
            for (int l = 1; l <= alpha; ++l) consider(l);
        }
        if (stats) stats->candidates += considered;
        return Suffix{best, j - best + 1};
    }

private:
    int tau_ = 1;
    std::vector<std::uint64_t> words_;
};

}  // namespace subsel
