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

#ifndef QIF_POSET_HPP
#define QIF_POSET_HPP

#include <string>
#include <utility>
#include <vector>

namespace qif {

// A word is a sequence of letter ids into some LetterPoset.
using Word = std::vector<int>;

// Strict partial order on a finite letter set. The relation handed to the
// constructor must already be irreflexive and transitive; both are checked.
struct LetterPoset {
  std::vector<std::string> letters;
  std::vector<std::vector<bool>> lt;  // lt[i][j]: letter i strictly below j

  LetterPoset() = default;
  LetterPoset(std::vector<std::string> names,
              const std::vector<std::pair<int, int>>& strict_pairs);

  // No two letters related.
  static LetterPoset discrete(std::vector<std::string> names);
  // sigma carries the linear order given by its own sequence; gamma letters
  // are incomparable with everything. The returned poset lists sigma first.
  static LetterPoset sigma_gamma(const std::vector<std::string>& sigma,
                                 const std::vector<std::string>& gamma);

  std::size_t size() const { return letters.size(); }
  int index_of(const std::string& name) const;  // -1 when absent
  bool less(int i, int j) const;
  bool comparable(int i, int j) const { return i == j || less(i, j) || less(j, i); }
};

// Order on equal-or-unequal-length words induced by the letter order: the
// empty word is below everything, and two words compare by their first
// differing position. Distinct words whose first difference is an unordered
// letter pair are Incomparable.
enum class LexOutcome { Less, Greater, Equal, Incomparable };

LexOutcome lex_compare(const Word& a, const Word& b, const LetterPoset& poset);

// True iff every pair of entries is Incomparable or the very same word.
bool is_antichain(const std::vector<Word>& words, const LetterPoset& poset);

}  // namespace qif

#endif  // QIF_POSET_HPP
