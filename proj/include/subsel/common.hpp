// Copyright 2026 The subsel Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace subsel {

/// Text positions and lengths. Positions are 1-based and ranges inclusive,
/// so T[i..j] is `Range{i, j}`.
using pos_t = std::int64_t;

inline constexpr pos_t kMaxTextLength = std::numeric_limits<std::int32_t>::max();

struct Range {
    pos_t first = 1;
    pos_t last = 0;

    constexpr pos_t length() const { return last - first + 1; }
    friend constexpr bool operator==(const Range&, const Range&) = default;
};

/// Inclusive interval of 1-based suffix-array ranks.
struct RankRange {
    pos_t first = 1;
    pos_t last = 0;

    bool empty() const { return first > last; }
    friend constexpr bool operator==(const RankRange&, const RankRange&) = default;
};

/// A suffix of a query substring T[i..j]: it occupies T[start..start+length-1]
/// and ends at j.
struct Suffix {
    pos_t start = 0;
    pos_t length = 0;

    friend constexpr bool operator==(const Suffix&, const Suffix&) = default;
};

/// Thrown by the index loader on malformed or corrupted files.
class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {

inline void require_range(pos_t i, pos_t j, pos_t n, const char* what) {
    if (i < 1 || j > n || i > j) {
        throw std::out_of_range(std::string(what) + ": range [" + std::to_string(i) + ", " +
                                std::to_string(j) + "] outside [1, " + std::to_string(n) + "]");
    }
}

inline void require_position(pos_t p, pos_t n, const char* what) {
    if (p < 1 || p > n) {
        throw std::out_of_range(std::string(what) + ": position " + std::to_string(p) +
                                " outside [1, " + std::to_string(n) + "]");
    }
}

}  // namespace detail
}  // namespace subsel
