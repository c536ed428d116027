// Copyright 2026 The subsel Authors
// SPDX-License-Identifier: Apache-2.0

// Builds an index over a short text and prints a few substring queries.

#include <iostream>
#include <string>

#include "subsel/subsel.hpp"

int main(int argc, char** argv) {
    const std::string text = argc > 1 ? argv[1] : "dcccababb";
    const subsel::SubstringIndex index(text, 2);
    const subsel::pos_t n = index.size();

    auto show = [&](subsel::pos_t start, subsel::pos_t length) {
        return text.substr(static_cast<std::size_t>(start - 1), static_cast<std::size_t>(length));
    };

    std::cout << "text: " << text << "\n";
    const auto lo = index.min_suffix(1, n);
    const auto hi = index.max_suffix(1, n);
    std::cout << "minimal suffix: " << show(lo.start, lo.length) << " at " << lo.start << "\n";
    std::cout << "maximal suffix: " << show(hi.start, hi.length) << " at " << hi.start << "\n";

    std::cout << "suffixes of T[1.." << n << "] in order:";
    for (subsel::pos_t k = 1; k <= n; ++k) {
        const auto s = index.select(1, n, k);
        std::cout << ' ' << show(s.start, s.length);
    }
    std::cout << "\nLyndon factorization:";
    for (const auto& run : index.lyndon(1, n)) {
        std::cout << " (" << show(run.start, run.length) << ")";
        if (run.exponent > 1) std::cout << '^' << run.exponent;
    }
    std::cout << "\n";
}
