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

#ifndef QIF_NFA_HPP
#define QIF_NFA_HPP

#include <string>
#include <vector>

#include "qif/poset.hpp"

namespace qif {

// Nondeterministic finite automaton over a partially ordered alphabet.
//
// The common shape pairs a linearly ordered block of "input" letters with a
// block of mutually incomparable "output" letters; that is what the observer
// construction produces and what the text format describes. Automata with an
// arbitrary letter poset are also representable (sigma_gamma_shape false);
// they cannot be serialized but all width and growth operations accept them.
struct OrderedNfa {
  std::vector<std::string> states;
  std::vector<int> initial;       // sorted, no duplicates
  std::vector<bool> accepting;    // indexed by state
  LetterPoset poset;
  std::vector<int> input_letters;   // ids into poset, in linear order
  std::vector<int> output_letters;  // ids into poset
  bool sigma_gamma_shape = false;
  // delta[state][letter] = sorted target list (possibly empty)
  std::vector<std::vector<std::vector<int>>> delta;

  static OrderedNfa make(std::vector<std::string> states,
                         std::vector<int> initial,
                         std::vector<bool> accepting,
                         const std::vector<std::string>& sigma,
                         const std::vector<std::string>& gamma);
  static OrderedNfa make_general(std::vector<std::string> states,
                                 std::vector<int> initial,
                                 std::vector<bool> accepting,
                                 LetterPoset poset);

  void add_transition(int src, int letter, int dst);
  const std::vector<int>& targets(int src, int letter) const;
  std::size_t state_count() const { return states.size(); }
  std::size_t letter_count() const { return poset.size(); }
  std::size_t transition_count() const;
  void validate() const;

  // Same automaton with the linear order over the input letters replaced by
  // the order in which `new_order` lists them (a permutation of the current
  // input letters). Only defined for sigma/gamma shaped automata.
  OrderedNfa with_input_order(const std::vector<int>& new_order) const;
};

}  // namespace qif

#endif  // QIF_NFA_HPP
