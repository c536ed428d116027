// Copyright 2026 The subsel Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include "subsel/common.hpp"
#include "subsel/core_index.hpp"
#include "subsel/lyndon.hpp"
#include "subsel/max_suffix.hpp"
#include "subsel/min_suffix.hpp"
#include "subsel/prefix_suffix.hpp"
#include "subsel/rank_grid.hpp"
#include "subsel/suffix_select.hpp"

namespace subsel {

/// All query structures over one text.
class SubstringIndex {
public:
    SubstringIndex() = default;

    /// `tau` is clamped to [1, floor(log2 n)].
    explicit SubstringIndex(std::string text, int tau = 1, BuildStats* stats = nullptr)
        : index_(std::move(text)),
          grid_(index_.forward().sa_array()),
          minsuf_(MinSuffixIndex::build(index_, std::max(1, tau), stats)),
          maxsuf_(MaxSuffixIndex::build(index_, stats)) {}

    SubstringIndex(EnhancedIndex index, RankGrid grid, MinSuffixIndex minsuf, MaxSuffixIndex maxsuf)
        : index_(std::move(index)), grid_(std::move(grid)), minsuf_(std::move(minsuf)), maxsuf_(std::move(maxsuf)) {
        if (grid_.size() != index_.size() || minsuf_.words().size() != static_cast<std::size_t>(index_.size()) ||
            maxsuf_.size() != index_.size()) {
            throw FormatError("index parts disagree on the text length");
        }
    }

    pos_t size() const { return index_.size(); }
    std::string_view text() const { return index_.text(); }
    int tau() const { return minsuf_.tau(); }

    const EnhancedIndex& index() const { return index_; }
    const RankGrid& grid() const { return grid_; }
    const MinSuffixIndex& min_suffix_index() const { return minsuf_; }
    const MaxSuffixIndex& max_suffix_index() const { return maxsuf_; }

    Suffix min_suffix(pos_t i, pos_t j, QueryStats* stats = nullptr) const { return minsuf_.query(index_, i, j, stats); }
    Suffix max_suffix(pos_t i, pos_t j, QueryStats* stats = nullptr) const { return maxsuf_.query(index_, i, j, stats); }
    Suffix select(pos_t i, pos_t j, pos_t k) const { return select_suffix(index_, grid_, i, j, k); }
    pos_t not_larger(pos_t i, pos_t j, pos_t l) const { return subsel::not_larger(index_, grid_, i, j, l); }
    std::vector<LyndonRun> lyndon(pos_t i, pos_t j) const { return lyndon_factorization(index_, minsuf_, i, j); }
    std::vector<Progression> prefix_suffix(Range s, Range sp) const { return subsel::prefix_suffix(index_, grid_, s, sp); }

private:
    EnhancedIndex index_;
    RankGrid grid_;
    MinSuffixIndex minsuf_;
    MaxSuffixIndex maxsuf_;
};

}  // namespace subsel
