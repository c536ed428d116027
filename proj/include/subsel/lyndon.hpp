// Copyright 2026 The subsel Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <vector>

#include "subsel/common.hpp"
#include "subsel/core_index.hpp"
#include "subsel/min_suffix.hpp"

namespace subsel {

/// One run of equal factors: T[start..start + exponent*length - 1] = (T[start..start+length-1])^exponent.
struct LyndonRun {
    pos_t start = 0;
    pos_t length = 0;
    pos_t exponent = 0;

    bool operator==(const LyndonRun&) const = default;
};

/// Lyndon factorization of T[i..j] in run-length form, left to right. The
/// last factor of any string is its minimal suffix, so factors are peeled off
/// from the right, each run with one suffix-power query.
inline std::vector<LyndonRun> lyndon_factorization(const EnhancedIndex& index, const MinSuffixIndex& minsuf,
                                                   pos_t i, pos_t j) {
    detail::require_range(i, j, index.size(), "lyndon");
    std::vector<LyndonRun> runs;
    pos_t end = j;
    while (end >= i) {
        const Suffix v = minsuf.query(index, i, end);
        const pos_t exponent = index.suffix_power(Range{v.start, end}, Range{i, end});
        runs.push_back(LyndonRun{end - exponent * v.length + 1, v.length, exponent});
        end -= exponent * v.length;
    }
    std::reverse(runs.begin(), runs.end());
    return runs;
}

}  // namespace subsel
