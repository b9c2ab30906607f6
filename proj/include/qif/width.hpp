// Copyright 2026 The qif authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QIF_WIDTH_HPP
#define QIF_WIDTH_HPP

#include <cstddef>
#include <vector>

#include "qif/nfa.hpp"
#include "qif/numeric.hpp"

namespace qif {

struct WidthLimits {
  std::size_t max_subsets = 200000;      // determinization cap
  std::size_t max_level_words = 200000;  // enumeration cap (brute force)
  double budget_seconds = 0;             // 0: no wall-clock bound
};

// Size of a maximum antichain of L(a) restricted to words of length n,
// under the lexicographic order induced by the letter poset. Computed by
// dynamic programming over lazily determinized state sets: a family of
// pairwise-incomparable words splits, at each branching point, along a set
// of pairwise-incomparable letters, and the branches are independent.
BigInt exact_width(const OrderedNfa& a, int n, const WidthLimits& limits = {});

// Widths for every length 0..n_max in one pass (shared determinization).
// May return fewer than n_max+1 entries when the time budget runs out.
std::vector<BigInt> width_table(const OrderedNfa& a, int n_max,
                                const WidthLimits& limits = {});

// All words of length n accepted by a, in lexicographic id order.
std::vector<Word> enumerate_level(const OrderedNfa& a, int n,
                                  std::size_t cap = 200000);

// Certificate pair produced by the matching-based oracle: an explicit
// antichain and an explicit chain cover of equal size.
struct DilworthCertificate {
  std::size_t width = 0;
  std::vector<std::size_t> antichain;            // indices into the word list
  std::vector<std::vector<std::size_t>> chains;  // partition of all indices
};

DilworthCertificate max_antichain_dilworth(const std::vector<Word>& words,
                                           const LetterPoset& poset);

// Independent oracle for exact_width: enumerate the level, then take the
// maximum antichain via minimum chain cover.
BigInt width_bruteforce(const OrderedNfa& a, int n, std::size_t cap = 200000);

}  // namespace qif

#endif  // QIF_WIDTH_HPP
