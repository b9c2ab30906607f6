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

#ifndef QIF_TRANSDUCER_HPP
#define QIF_TRANSDUCER_HPP

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qif/channel.hpp"
#include "qif/numeric.hpp"

namespace qif {

// Synchronised deterministic finite-state transducer with two users. Each
// round consumes one letter from each user and emits one letter back to
// each; the transition and output functions are total over
// states x alice_in x bob_in.
struct Sdfst {
  struct Cell {
    int next = -1;       // successor state
    int alice_out = -1;  // letter shown to Alice
    int bob_out = -1;    // letter shown to Bob
  };

  std::vector<std::string> states;
  int initial = 0;
  std::vector<bool> accepting;
  std::vector<std::string> alice_in, bob_in, alice_out, bob_out;
  // cells[q][a][b] for state q, Alice letter a, Bob letter b
  std::vector<std::vector<std::vector<Cell>>> cells;

  void init_cells();  // sizes the table with unset cells
  void validate() const;
  bool all_accepting() const;
  std::size_t state_count() const { return states.size(); }
};

enum class Side { Alice, Bob };

// What one user has seen: (own input, own output) per completed round.
using OwnTrace = std::vector<std::pair<int, int>>;
// Bob-side projection of a full trace; same layout as an OwnTrace.
using Observation = std::vector<std::pair<int, int>>;

// Deterministic user strategy up to a fixed horizon: the next input letter
// as a function of the user's own trace so far. Table-backed strategies are
// partial; querying outside the table is an error.
class Strategy {
 public:
  static Strategy constant(Side side, int horizon, int letter);
  static Strategy from_table(Side side, int horizon,
                             std::map<OwnTrace, int> table);
  static Strategy from_function(Side side, int horizon,
                                std::function<int(const OwnTrace&)> f);

  int choose(const OwnTrace& trace) const;
  Side side() const { return side_; }
  int horizon() const { return horizon_; }
  const std::map<OwnTrace, int>* table() const;
  // Stable text form: decisions sorted by trace, rendered with letter names.
  std::string canonical_text(const Sdfst& t) const;

 private:
  Strategy(Side side, int horizon) : side_(side), horizon_(horizon) {}
  Side side_;
  int horizon_;
  std::optional<std::map<OwnTrace, int>> table_;
  std::function<int(const OwnTrace&)> fn_;
};

struct FullStep {
  int alice_in = -1, bob_in = -1, alice_out = -1, bob_out = -1;
};
using FullTrace = std::vector<FullStep>;

// The unique interaction induced by a strategy pair, truncated to k rounds.
FullTrace run(const Sdfst& t, const Strategy& alice, const Strategy& bob, int k);

// Whether the trace is a word of the machine that ends in an accepting state
// and agrees with both strategies along its own projections.
bool consistent(const FullTrace& w, const Sdfst& t, const Strategy& alice,
                const Strategy& bob);

Observation observe(const FullTrace& w);     // Bob's view
OwnTrace alice_view(const FullTrace& w);

std::string observation_text(const Sdfst& t, const Observation& y);

struct EnumBudget {
  long long max_strategies = 1000000;
};

// Every deterministic strategy for one side at horizon k, restricted to
// decision points reachable against an unconstrained opponent, in a stable
// enumeration order.
std::vector<Strategy> enumerate_strategies(const Sdfst& t, Side side, int k,
                                           const EnumBudget& budget = {});

struct LeakageResult {
  BigInt count = 0;  // largest consistent-observation set over Bob strategies
  double bits = 0;   // log2(count); -inf when the count is zero
  std::optional<Strategy> bob_witness;
  std::vector<Observation> observations;  // sorted, for the witness strategy
};

// Definition-level horizon-k flow: maximise, over Bob strategies, the number
// of Bob views consistent with some Alice strategy.
LeakageResult leakage_bruteforce(const Sdfst& t, int k,
                                 const EnumBudget& budget = {});

// Channel from strategy pairs to Bob views of length k. Requires every
// state accepting, which makes each row a point mass.
InteractiveChannel induced_channel(const Sdfst& t, int k,
                                   const EnumBudget& budget = {});

// Whether some Bob strategy admits every observation in the set (all of the
// same length): each must be realisable by the machine and no two may first
// differ in a Bob input letter.
bool realizable_observation_set(const std::vector<Observation>& xs,
                                const Sdfst& t);

}  // namespace qif

#endif  // QIF_TRANSDUCER_HPP
