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

#ifndef QIF_CHANNEL_HPP
#define QIF_CHANNEL_HPP

#include <string>
#include <vector>

#include "qif/numeric.hpp"

namespace qif {

// Finite probability distribution over labelled values. Masses are exact,
// non-negative, and sum to one (checked at construction).
struct Distribution {
  std::vector<std::string> labels;
  std::vector<Rat> mass;

  Distribution() = default;
  Distribution(std::vector<std::string> labels, std::vector<Rat> mass);
  static Distribution uniform(std::vector<std::string> labels);
  std::size_t size() const { return labels.size(); }
};

// Row-stochastic matrix p(y|x).
struct ChannelMatrix {
  std::vector<std::string> inputs;
  std::vector<std::string> outputs;
  std::vector<std::vector<Rat>> rows;

  ChannelMatrix() = default;
  ChannelMatrix(std::vector<std::string> inputs,
                std::vector<std::string> outputs,
                std::vector<std::vector<Rat>> rows);
};

// Joint distribution p(x, y); masses sum to one.
struct JointDistribution {
  std::vector<std::string> xs;
  std::vector<std::string> ys;
  std::vector<std::vector<Rat>> mass;

  JointDistribution() = default;
  JointDistribution(std::vector<std::string> xs, std::vector<std::string> ys,
                    std::vector<std::vector<Rat>> mass);
};

// Channel with two input parties: p(y | x_a, x_b). Every (x_a, x_b) row is
// stochastic. `deterministic` reflects whether all entries are 0 or 1.
struct InteractiveChannel {
  std::vector<std::string> alice_inputs;
  std::vector<std::string> bob_inputs;
  std::vector<std::string> outputs;
  std::vector<std::vector<std::vector<Rat>>> p;  // [ia][ib][iy]
  bool deterministic = false;

  InteractiveChannel() = default;
  InteractiveChannel(std::vector<std::string> alice_inputs,
                     std::vector<std::string> bob_inputs,
                     std::vector<std::string> outputs,
                     std::vector<std::vector<std::vector<Rat>>> p);
};

// Gain function g(w, x) with values in [0, 1].
struct GainFunction {
  std::vector<std::string> guesses;
  std::vector<std::string> inputs;
  std::vector<std::vector<Rat>> gain;  // [w][x]

  GainFunction() = default;
  GainFunction(std::vector<std::string> guesses,
               std::vector<std::string> inputs,
               std::vector<std::vector<Rat>> gain);
};

// The *_factor functions return the exact value whose log2 is the reported
// quantity in bits; they are the form the property tests compare.

// Multiplicative increase of the adversary's best single guess about the
// prior once the output is seen.
Rat min_entropy_leakage_factor(const Distribution& prior, const ChannelMatrix& ch);
double min_entropy_leakage(const Distribution& prior, const ChannelMatrix& ch);

// Supremum of the leakage over priors: sum of column maxima.
Rat min_entropy_capacity_factor(const ChannelMatrix& ch);
double min_entropy_capacity(const ChannelMatrix& ch);

// Gain-function generalisation; errors when the prior g-vulnerability is 0.
Rat g_leakage_factor(const Distribution& prior, const ChannelMatrix& ch,
                     const GainFunction& g);
double g_leakage(const Distribution& prior, const ChannelMatrix& ch,
                 const GainFunction& g);

// Supremum, over all correlated secrets, of what the pair (X, Y) reveals:
// sum over realised outputs of the conditional row maxima taken over
// supported inputs.
Rat dalenius_leakage_factor(const JointDistribution& joint);
double dalenius_leakage(const JointDistribution& joint);

// Leakage about the pair (X_A, X_B) with independent priors: the expectation
// over Bob's input of the per-slice leakage factor.
Rat interactive_leakage_factor(const Distribution& alice_prior,
                               const Distribution& bob_prior,
                               const InteractiveChannel& ch);
double interactive_leakage(const Distribution& alice_prior,
                           const Distribution& bob_prior,
                           const InteractiveChannel& ch);

struct CapacityWitness {
  double bits = 0;
  Rat factor;
  std::string bob_input;  // a maximising deterministic Bob choice
};

// Interactive capacity; attained by a point mass on one Bob input.
CapacityWitness interactive_capacity_pure_bob(const InteractiveChannel& ch);

struct DeterministicCapacity {
  double bits = 0;
  BigInt count = 0;            // outputs reachable under the best Bob input
  std::string bob_input;
  std::vector<std::string> outputs;  // the reachable outputs for that input
};

// Capacity of a 0/1 interactive channel as a reachable-output count.
// Errors when the channel is not deterministic.
DeterministicCapacity deterministic_interactive_capacity(const InteractiveChannel& ch);

// Helpers shared by tests and the CLI.
JointDistribution joint_from(const Distribution& prior, const ChannelMatrix& ch);
Distribution x_marginal(const JointDistribution& joint);
Distribution y_marginal(const JointDistribution& joint);
ChannelMatrix slice(const InteractiveChannel& ch, std::size_t bob_index);

}  // namespace qif

#endif  // QIF_CHANNEL_HPP
