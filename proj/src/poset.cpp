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

#include "qif/poset.hpp"

#include <algorithm>
#include <set>

#include "qif/error.hpp"

namespace qif {

LetterPoset::LetterPoset(std::vector<std::string> names,
                         const std::vector<std::pair<int, int>>& strict_pairs)
    : letters(std::move(names)) {
  const int n = static_cast<int>(letters.size());
  {
    std::set<std::string> seen(letters.begin(), letters.end());
    if (static_cast<int>(seen.size()) != n)
      fail(ErrorCode::Validation, "duplicate letter name in poset");
  }
  lt.assign(n, std::vector<bool>(n, false));
  for (const auto& [i, j] : strict_pairs) {
    if (i < 0 || i >= n || j < 0 || j >= n)
      fail(ErrorCode::Validation, "poset pair out of range");
    if (i == j) fail(ErrorCode::Validation, "poset relation is not irreflexive");
    lt[i][j] = true;
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (lt[i][j] && lt[j][i])
        fail(ErrorCode::Validation, "poset relation is not antisymmetric");
      if (!lt[i][j]) continue;
      for (int k = 0; k < n; ++k)
        if (lt[j][k] && !lt[i][k])
          fail(ErrorCode::Validation, "poset relation is not transitive");
    }
}

LetterPoset LetterPoset::discrete(std::vector<std::string> names) {
  return LetterPoset(std::move(names), {});
}

LetterPoset LetterPoset::sigma_gamma(const std::vector<std::string>& sigma,
                                     const std::vector<std::string>& gamma) {
  std::vector<std::string> names = sigma;
  names.insert(names.end(), gamma.begin(), gamma.end());
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < static_cast<int>(sigma.size()); ++i)
    for (int j = i + 1; j < static_cast<int>(sigma.size()); ++j)
      pairs.emplace_back(i, j);
  return LetterPoset(std::move(names), pairs);
}

int LetterPoset::index_of(const std::string& name) const {
  const auto it = std::find(letters.begin(), letters.end(), name);
  return it == letters.end() ? -1 : static_cast<int>(it - letters.begin());
}

bool LetterPoset::less(int i, int j) const {
  if (i < 0 || j < 0 || i >= static_cast<int>(size()) || j >= static_cast<int>(size()))
    fail(ErrorCode::Domain, "letter id outside poset");
  return lt[i][j];
}

LexOutcome lex_compare(const Word& a, const Word& b, const LetterPoset& poset) {
  const std::size_t common = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < common; ++i) {
    const int x = a[i], y = b[i];
    if (x == y) {
      if (x < 0 || x >= static_cast<int>(poset.size()))
        fail(ErrorCode::Domain, "letter id outside poset");
      continue;
    }
    if (poset.less(x, y)) return LexOutcome::Less;
    if (poset.less(y, x)) return LexOutcome::Greater;
    return LexOutcome::Incomparable;
  }
  if (a.size() == b.size()) return LexOutcome::Equal;
  return a.size() < b.size() ? LexOutcome::Less : LexOutcome::Greater;
}

bool is_antichain(const std::vector<Word>& words, const LetterPoset& poset) {
  for (std::size_t i = 0; i < words.size(); ++i)
    for (std::size_t j = i + 1; j < words.size(); ++j) {
      // Equal is only reachable for identical words, which are permitted.
      const LexOutcome o = lex_compare(words[i], words[j], poset);
      if (o == LexOutcome::Less || o == LexOutcome::Greater) return false;
    }
  return true;
}

}  // namespace qif
