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

#include "qif/nfa.hpp"

#include <algorithm>
#include <set>

#include "qif/error.hpp"

namespace qif {

OrderedNfa OrderedNfa::make(std::vector<std::string> states,
                            std::vector<int> initial,
                            std::vector<bool> accepting,
                            const std::vector<std::string>& sigma,
                            const std::vector<std::string>& gamma) {
  OrderedNfa a;
  a.states = std::move(states);
  a.initial = std::move(initial);
  a.accepting = std::move(accepting);
  a.poset = LetterPoset::sigma_gamma(sigma, gamma);
  for (int i = 0; i < static_cast<int>(sigma.size()); ++i)
    a.input_letters.push_back(i);
  for (int i = 0; i < static_cast<int>(gamma.size()); ++i)
    a.output_letters.push_back(static_cast<int>(sigma.size()) + i);
  a.sigma_gamma_shape = true;
  a.delta.assign(a.states.size(),
                 std::vector<std::vector<int>>(a.poset.size()));
  std::sort(a.initial.begin(), a.initial.end());
  a.validate();
  return a;
}

OrderedNfa OrderedNfa::make_general(std::vector<std::string> states,
                                    std::vector<int> initial,
                                    std::vector<bool> accepting,
                                    LetterPoset poset) {
  OrderedNfa a;
  a.states = std::move(states);
  a.initial = std::move(initial);
  a.accepting = std::move(accepting);
  a.poset = std::move(poset);
  a.sigma_gamma_shape = false;
  a.delta.assign(a.states.size(),
                 std::vector<std::vector<int>>(a.poset.size()));
  std::sort(a.initial.begin(), a.initial.end());
  a.validate();
  return a;
}

void OrderedNfa::add_transition(int src, int letter, int dst) {
  const int n = static_cast<int>(states.size());
  if (src < 0 || src >= n || dst < 0 || dst >= n)
    fail(ErrorCode::Validation, "transition endpoint outside state set");
  if (letter < 0 || letter >= static_cast<int>(poset.size()))
    fail(ErrorCode::Validation, "transition letter outside alphabet");
  auto& lst = delta[src][letter];
  const auto it = std::lower_bound(lst.begin(), lst.end(), dst);
  if (it == lst.end() || *it != dst) lst.insert(it, dst);
}

const std::vector<int>& OrderedNfa::targets(int src, int letter) const {
  if (src < 0 || src >= static_cast<int>(states.size()))
    fail(ErrorCode::Domain, "state id outside automaton");
  if (letter < 0 || letter >= static_cast<int>(poset.size()))
    fail(ErrorCode::Domain, "letter id outside alphabet");
  return delta[src][letter];
}

std::size_t OrderedNfa::transition_count() const {
  std::size_t n = 0;
  for (const auto& row : delta)
    for (const auto& lst : row) n += lst.size();
  return n;
}

void OrderedNfa::validate() const {
  const int n = static_cast<int>(states.size());
  {
    std::set<std::string> seen(states.begin(), states.end());
    if (static_cast<int>(seen.size()) != n)
      fail(ErrorCode::Validation, "duplicate state name");
  }
  if (static_cast<int>(accepting.size()) != n)
    fail(ErrorCode::Validation, "accepting vector size mismatch");
  for (std::size_t i = 0; i + 1 < initial.size(); ++i)
    if (initial[i] == initial[i + 1])
      fail(ErrorCode::Validation, "duplicate initial state");
  for (int s : initial)
    if (s < 0 || s >= n) fail(ErrorCode::Validation, "initial state outside state set");
  if (static_cast<int>(delta.size()) != n)
    fail(ErrorCode::Validation, "delta size mismatch");
  for (const auto& row : delta) {
    if (row.size() != poset.size())
      fail(ErrorCode::Validation, "delta row size mismatch");
    for (const auto& lst : row)
      for (int t : lst)
        if (t < 0 || t >= n)
          fail(ErrorCode::Validation, "transition target outside state set");
  }
  if (sigma_gamma_shape &&
      input_letters.size() + output_letters.size() != poset.size())
    fail(ErrorCode::Validation, "letter partition does not cover the alphabet");
}

OrderedNfa OrderedNfa::with_input_order(const std::vector<int>& new_order) const {
  if (!sigma_gamma_shape)
    fail(ErrorCode::Unsupported, "input reordering needs a sigma/gamma alphabet");
  std::vector<int> sorted_old = input_letters, sorted_new = new_order;
  std::sort(sorted_old.begin(), sorted_old.end());
  std::sort(sorted_new.begin(), sorted_new.end());
  if (sorted_old != sorted_new)
    fail(ErrorCode::Domain, "new order must permute the input letters");
  OrderedNfa a = *this;
  a.input_letters = new_order;
  for (auto& row : a.poset.lt) std::fill(row.begin(), row.end(), false);
  for (std::size_t i = 0; i < new_order.size(); ++i)
    for (std::size_t j = i + 1; j < new_order.size(); ++j)
      a.poset.lt[new_order[i]][new_order[j]] = true;
  return a;
}

}  // namespace qif
