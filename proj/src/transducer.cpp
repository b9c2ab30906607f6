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

#include "qif/transducer.hpp"

#include <algorithm>
#include <set>

#include "qif/error.hpp"

namespace qif {

namespace {

void check_letters(const std::vector<std::string>& letters, const char* what) {
  if (letters.empty())
    fail(ErrorCode::Validation, std::string("empty ") + what + " alphabet");
  std::set<std::string> seen(letters.begin(), letters.end());
  if (seen.size() != letters.size())
    fail(ErrorCode::Validation, std::string("duplicate ") + what + " letter");
}

}  // namespace

void Sdfst::init_cells() {
  cells.assign(states.size(),
               std::vector<std::vector<Cell>>(
                   alice_in.size(), std::vector<Cell>(bob_in.size())));
}

void Sdfst::validate() const {
  if (states.empty()) fail(ErrorCode::Validation, "transducer has no states");
  {
    std::set<std::string> seen(states.begin(), states.end());
    if (seen.size() != states.size())
      fail(ErrorCode::Validation, "duplicate state name");
  }
  if (initial < 0 || initial >= static_cast<int>(states.size()))
    fail(ErrorCode::Validation, "initial state outside state set");
  if (accepting.size() != states.size())
    fail(ErrorCode::Validation, "accepting vector size mismatch");
  check_letters(alice_in, "alice input");
  check_letters(bob_in, "bob input");
  check_letters(alice_out, "alice output");
  check_letters(bob_out, "bob output");
  if (cells.size() != states.size())
    fail(ErrorCode::Validation, "transition table size mismatch");
  for (std::size_t q = 0; q < states.size(); ++q) {
    if (cells[q].size() != alice_in.size())
      fail(ErrorCode::Validation, "transition table size mismatch");
    for (std::size_t a = 0; a < alice_in.size(); ++a) {
      if (cells[q][a].size() != bob_in.size())
        fail(ErrorCode::Validation, "transition table size mismatch");
      for (std::size_t b = 0; b < bob_in.size(); ++b) {
        const Cell& c = cells[q][a][b];
        if (c.next == -1 || c.alice_out == -1 || c.bob_out == -1)
          fail(ErrorCode::Validation,
               "missing transition at state '" + states[q] + "' on (" +
                   alice_in[a] + ", " + bob_in[b] + ")");
        if (c.next < 0 || c.next >= static_cast<int>(states.size()) ||
            c.alice_out < 0 || c.alice_out >= static_cast<int>(alice_out.size()) ||
            c.bob_out < 0 || c.bob_out >= static_cast<int>(bob_out.size()))
          fail(ErrorCode::Validation,
               "transition at state '" + states[q] + "' on (" + alice_in[a] +
                   ", " + bob_in[b] + ") leaves the declared sets");
      }
    }
  }
}

bool Sdfst::all_accepting() const {
  return std::all_of(accepting.begin(), accepting.end(),
                     [](bool b) { return b; });
}

Strategy Strategy::constant(Side side, int horizon, int letter) {
  Strategy s(side, horizon);
  s.fn_ = [letter](const OwnTrace&) { return letter; };
  return s;
}

Strategy Strategy::from_table(Side side, int horizon,
                              std::map<OwnTrace, int> table) {
  Strategy s(side, horizon);
  s.table_ = std::move(table);
  return s;
}

Strategy Strategy::from_function(Side side, int horizon,
                                 std::function<int(const OwnTrace&)> f) {
  Strategy s(side, horizon);
  s.fn_ = std::move(f);
  return s;
}

int Strategy::choose(const OwnTrace& trace) const {
  if (static_cast<int>(trace.size()) >= horizon_)
    fail(ErrorCode::Domain, "strategy queried beyond its horizon");
  if (table_) {
    const auto it = table_->find(trace);
    if (it == table_->end())
      fail(ErrorCode::Domain, "strategy queried outside its decision table");
    return it->second;
  }
  return fn_(trace);
}

const std::map<OwnTrace, int>* Strategy::table() const {
  return table_ ? &*table_ : nullptr;
}

std::string Strategy::canonical_text(const Sdfst& t) const {
  if (!table_) fail(ErrorCode::Domain, "no table form for this strategy");
  const auto& in = side_ == Side::Alice ? t.alice_in : t.bob_in;
  const auto& out = side_ == Side::Alice ? t.alice_out : t.bob_out;
  std::string s;
  for (const auto& [trace, letter] : *table_) {
    if (!s.empty()) s += "; ";
    if (trace.empty()) {
      s += "_";
    } else {
      for (const auto& [i, o] : trace) s += "(" + in[i] + "," + out[o] + ")";
    }
    s += "->" + in[letter];
  }
  return s;
}

FullTrace run(const Sdfst& t, const Strategy& alice, const Strategy& bob, int k) {
  t.validate();
  if (k < 0) fail(ErrorCode::Domain, "negative round count");
  if (alice.side() != Side::Alice || bob.side() != Side::Bob)
    fail(ErrorCode::Domain, "strategy side mismatch");
  if (alice.horizon() < k || bob.horizon() < k)
    fail(ErrorCode::Domain, "strategy horizon shorter than the run");
  FullTrace w;
  OwnTrace va, vb;
  int q = t.initial;
  for (int i = 0; i < k; ++i) {
    FullStep s;
    s.alice_in = alice.choose(va);
    s.bob_in = bob.choose(vb);
    if (s.alice_in < 0 || s.alice_in >= static_cast<int>(t.alice_in.size()) ||
        s.bob_in < 0 || s.bob_in >= static_cast<int>(t.bob_in.size()))
      fail(ErrorCode::Domain, "strategy chose a letter outside the alphabet");
    const Sdfst::Cell& c = t.cells[q][s.alice_in][s.bob_in];
    s.alice_out = c.alice_out;
    s.bob_out = c.bob_out;
    w.push_back(s);
    va.emplace_back(s.alice_in, s.alice_out);
    vb.emplace_back(s.bob_in, s.bob_out);
    q = c.next;
  }
  return w;
}

bool consistent(const FullTrace& w, const Sdfst& t, const Strategy& alice,
                const Strategy& bob) {
  t.validate();
  if (alice.horizon() < static_cast<int>(w.size()) ||
      bob.horizon() < static_cast<int>(w.size()))
    fail(ErrorCode::Domain, "strategy horizon shorter than the trace");
  OwnTrace va, vb;
  int q = t.initial;
  for (const FullStep& s : w) {
    if (s.alice_in < 0 || s.alice_in >= static_cast<int>(t.alice_in.size()) ||
        s.bob_in < 0 || s.bob_in >= static_cast<int>(t.bob_in.size()))
      return false;
    const Sdfst::Cell& c = t.cells[q][s.alice_in][s.bob_in];
    if (s.alice_out != c.alice_out || s.bob_out != c.bob_out) return false;
    if (alice.choose(va) != s.alice_in) return false;
    if (bob.choose(vb) != s.bob_in) return false;
    va.emplace_back(s.alice_in, s.alice_out);
    vb.emplace_back(s.bob_in, s.bob_out);
    q = c.next;
  }
  return t.accepting[q];
}

Observation observe(const FullTrace& w) {
  Observation y;
  y.reserve(w.size());
  for (const FullStep& s : w) y.emplace_back(s.bob_in, s.bob_out);
  return y;
}

OwnTrace alice_view(const FullTrace& w) {
  OwnTrace v;
  v.reserve(w.size());
  for (const FullStep& s : w) v.emplace_back(s.alice_in, s.alice_out);
  return v;
}

std::string observation_text(const Sdfst& t, const Observation& y) {
  std::string s;
  for (const auto& [b, g] : y) s += "(" + t.bob_in[b] + "," + t.bob_out[g] + ")";
  return s.empty() ? "_" : s;
}

namespace {

// One level of the strategy game tree: configurations reachable under the
// decisions fixed so far, grouped by the deciding side's own trace. The
// opponent is unconstrained, so each group carries every machine state any
// opponent behaviour can force.
struct Frontier {
  // own trace -> sorted set of machine states
  std::map<OwnTrace, std::vector<int>> groups;
};

Frontier advance(const Sdfst& t, Side side, const Frontier& f,
                 const std::map<OwnTrace, int>& decisions) {
  Frontier out;
  for (const auto& [trace, qs] : f.groups) {
    const int own = decisions.at(trace);
    for (const int q : qs) {
      if (side == Side::Bob) {
        for (std::size_t a = 0; a < t.alice_in.size(); ++a) {
          const Sdfst::Cell& c = t.cells[q][a][own];
          OwnTrace next = trace;
          next.emplace_back(own, c.bob_out);
          out.groups[next].push_back(c.next);
        }
      } else {
        for (std::size_t b = 0; b < t.bob_in.size(); ++b) {
          const Sdfst::Cell& c = t.cells[q][own][b];
          OwnTrace next = trace;
          next.emplace_back(own, c.alice_out);
          out.groups[next].push_back(c.next);
        }
      }
    }
  }
  for (auto& [trace, qs] : out.groups) {
    std::sort(qs.begin(), qs.end());
    qs.erase(std::unique(qs.begin(), qs.end()), qs.end());
  }
  return out;
}

// Walks the decision tree for one side: at each level pick a letter for
// every reachable own trace (traces in map order, letters in id order),
// then descend. `leaf` sees the final frontier and the full decision table.
template <typename Leaf>
void for_each_strategy(const Sdfst& t, Side side, int k, long long max_leaves,
                       Leaf&& leaf) {
  t.validate();
  if (k < 0) fail(ErrorCode::Domain, "negative horizon");
  const int n_letters = static_cast<int>(
      side == Side::Bob ? t.bob_in.size() : t.alice_in.size());
  long long leaves = 0;
  std::map<OwnTrace, int> decisions;

  auto level = [&](auto&& self, const Frontier& f, int depth) -> void {
    if (depth == k) {
      if (++leaves > max_leaves)
        fail(ErrorCode::Budget, "strategy enumeration budget exceeded");
      leaf(f, decisions);
      return;
    }
    std::vector<OwnTrace> traces;
    traces.reserve(f.groups.size());
    for (const auto& [trace, qs] : f.groups) traces.push_back(trace);
    // Assign letters to this level's traces, then recurse one level down.
    auto assign = [&](auto&& assign_self, std::size_t i) -> void {
      if (i == traces.size()) {
        self(self, advance(t, side, f, decisions), depth + 1);
        return;
      }
      for (int letter = 0; letter < n_letters; ++letter) {
        decisions[traces[i]] = letter;
        assign_self(assign_self, i + 1);
      }
      decisions.erase(traces[i]);
    };
    assign(assign, 0);
  };

  Frontier root;
  root.groups[{}] = {t.initial};
  level(level, root, 0);
}

}  // namespace

std::vector<Strategy> enumerate_strategies(const Sdfst& t, Side side, int k,
                                           const EnumBudget& budget) {
  std::vector<Strategy> out;
  for_each_strategy(t, side, k, budget.max_strategies,
                    [&](const Frontier&, const std::map<OwnTrace, int>& d) {
                      out.push_back(Strategy::from_table(side, k, d));
                    });
  return out;
}

LeakageResult leakage_bruteforce(const Sdfst& t, int k, const EnumBudget& budget) {
  LeakageResult best;
  best.count = -1;
  for_each_strategy(
      t, Side::Bob, k, budget.max_strategies,
      [&](const Frontier& f, const std::map<OwnTrace, int>& d) {
        BigInt count = 0;
        std::vector<Observation> obs;
        for (const auto& [trace, qs] : f.groups) {
          const bool accepted = std::any_of(qs.begin(), qs.end(), [&](int q) {
            return t.accepting[q];
          });
          if (accepted) {
            ++count;
            obs.push_back(trace);
          }
        }
        if (count > best.count) {
          best.count = count;
          best.bob_witness = Strategy::from_table(Side::Bob, k, d);
          best.observations = std::move(obs);
        }
      });
  best.bits = log2_bigint(best.count);
  return best;
}

InteractiveChannel induced_channel(const Sdfst& t, int k, const EnumBudget& budget) {
  t.validate();
  if (!t.all_accepting())
    fail(ErrorCode::Domain,
         "induced channel requires every state to be accepting");
  const std::vector<Strategy> alices =
      enumerate_strategies(t, Side::Alice, k, budget);
  const std::vector<Strategy> bobs = enumerate_strategies(t, Side::Bob, k, budget);
  if (static_cast<long long>(alices.size()) *
          static_cast<long long>(bobs.size()) >
      budget.max_strategies)
    fail(ErrorCode::Budget, "strategy enumeration budget exceeded");

  // Outcomes first, so the output axis lists only realised observations.
  std::map<Observation, std::size_t> out_index;
  std::vector<std::vector<std::size_t>> outcome(
      alices.size(), std::vector<std::size_t>(bobs.size()));
  for (std::size_t ia = 0; ia < alices.size(); ++ia)
    for (std::size_t ib = 0; ib < bobs.size(); ++ib) {
      const Observation y = observe(run(t, alices[ia], bobs[ib], k));
      const auto [it, fresh] = out_index.emplace(y, out_index.size());
      outcome[ia][ib] = it->second;
    }

  std::vector<std::string> outputs(out_index.size());
  std::vector<Observation> order(out_index.size());
  for (const auto& [y, idx] : out_index) order[idx] = y;
  for (std::size_t i = 0; i < order.size(); ++i)
    outputs[i] = observation_text(t, order[i]);

  std::vector<std::string> alice_labels, bob_labels;
  alice_labels.reserve(alices.size());
  for (const Strategy& s : alices) alice_labels.push_back(s.canonical_text(t));
  bob_labels.reserve(bobs.size());
  for (const Strategy& s : bobs) bob_labels.push_back(s.canonical_text(t));

  std::vector<std::vector<std::vector<Rat>>> p(
      alices.size(),
      std::vector<std::vector<Rat>>(bobs.size(),
                                    std::vector<Rat>(outputs.size(), Rat(0))));
  for (std::size_t ia = 0; ia < alices.size(); ++ia)
    for (std::size_t ib = 0; ib < bobs.size(); ++ib)
      p[ia][ib][outcome[ia][ib]] = 1;
  return InteractiveChannel(std::move(alice_labels), std::move(bob_labels),
                            std::move(outputs), std::move(p));
}

bool realizable_observation_set(const std::vector<Observation>& xs,
                                const Sdfst& t) {
  t.validate();
  if (xs.empty()) return true;
  const std::size_t len = xs[0].size();
  for (const Observation& y : xs)
    if (y.size() != len)
      fail(ErrorCode::Domain, "observation set mixes lengths");

  // Each observation must be a Bob view of some accepted interaction.
  for (const Observation& y : xs) {
    std::vector<int> set{t.initial};
    for (const auto& [b, g] : y) {
      if (b < 0 || b >= static_cast<int>(t.bob_in.size()) || g < 0 ||
          g >= static_cast<int>(t.bob_out.size()))
        return false;
      std::vector<int> next;
      for (int q : set)
        for (std::size_t a = 0; a < t.alice_in.size(); ++a) {
          const Sdfst::Cell& c = t.cells[q][a][b];
          if (c.bob_out == g) next.push_back(c.next);
        }
      std::sort(next.begin(), next.end());
      next.erase(std::unique(next.begin(), next.end()), next.end());
      set = std::move(next);
      if (set.empty()) return false;
    }
    if (std::none_of(set.begin(), set.end(),
                     [&](int q) { return t.accepting[q]; }))
      return false;
  }

  // No two may branch on a Bob input: Bob cannot play two letters at once.
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = i + 1; j < xs.size(); ++j) {
      for (std::size_t r = 0; r < len; ++r) {
        if (xs[i][r] == xs[j][r]) continue;
        if (xs[i][r].first != xs[j][r].first) return false;
        break;  // first difference is an output letter: fine
      }
    }
  return true;
}

}  // namespace qif
