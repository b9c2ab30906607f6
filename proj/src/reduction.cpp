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

#include "qif/reduction.hpp"

#include <map>
#include <set>

#include "qif/error.hpp"

namespace qif {

OrderedNfa build_observer_nfa(const Sdfst& t) {
  t.validate();
  {
    std::set<std::string> in(t.bob_in.begin(), t.bob_in.end());
    for (const std::string& g : t.bob_out)
      if (in.count(g))
        fail(ErrorCode::Validation,
             "bob input and output alphabets share letter '" + g + "'");
  }
  const int n_main = static_cast<int>(t.state_count());

  // Auxiliary (state, bob output) stages, discovered in a fixed scan order.
  std::map<std::pair<int, int>, int> aux_id;
  std::vector<std::pair<int, int>> aux_list;
  for (int q = 0; q < n_main; ++q)
    for (std::size_t b = 0; b < t.bob_in.size(); ++b)
      for (std::size_t a = 0; a < t.alice_in.size(); ++a) {
        const Sdfst::Cell& c = t.cells[q][a][b];
        const std::pair<int, int> key{c.next, c.bob_out};
        if (aux_id.emplace(key, n_main + static_cast<int>(aux_list.size())).second)
          aux_list.push_back(key);
      }

  std::vector<std::string> names = t.states;
  std::vector<bool> accepting = t.accepting;
  for (const auto& [q, g] : aux_list) {
    names.push_back("(" + t.states[q] + "," + t.bob_out[g] + ")");
    accepting.push_back(false);
  }

  OrderedNfa a = OrderedNfa::make(std::move(names), {t.initial},
                                  std::move(accepting), t.bob_in, t.bob_out);
  const int n_inputs = static_cast<int>(t.bob_in.size());
  for (int q = 0; q < n_main; ++q)
    for (std::size_t b = 0; b < t.bob_in.size(); ++b)
      for (std::size_t a_letter = 0; a_letter < t.alice_in.size(); ++a_letter) {
        const Sdfst::Cell& c = t.cells[q][a_letter][b];
        const int aux = aux_id.at({c.next, c.bob_out});
        a.add_transition(q, static_cast<int>(b), aux);
        a.add_transition(aux, n_inputs + c.bob_out, c.next);
      }
  return a;
}

Word flatten(const Observation& y, const Sdfst& t, const OrderedNfa& observer) {
  if (!observer.sigma_gamma_shape ||
      observer.input_letters.size() != t.bob_in.size() ||
      observer.output_letters.size() != t.bob_out.size())
    fail(ErrorCode::Domain, "observer does not match the transducer");
  Word w;
  w.reserve(2 * y.size());
  for (const auto& [b, g] : y) {
    if (b < 0 || b >= static_cast<int>(t.bob_in.size()) || g < 0 ||
        g >= static_cast<int>(t.bob_out.size()))
      fail(ErrorCode::Domain, "observation letter outside the alphabets");
    w.push_back(observer.input_letters[b]);
    w.push_back(observer.output_letters[g]);
  }
  return w;
}

}  // namespace qif
