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

#include "qif/channel.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "qif/error.hpp"

namespace qif {

namespace {

void check_distinct(const std::vector<std::string>& labels, const char* what) {
  std::set<std::string> seen(labels.begin(), labels.end());
  if (seen.size() != labels.size())
    fail(ErrorCode::Validation, std::string("duplicate ") + what + " label");
}

// Maps every prior label to an input index of the channel; channel inputs
// missing from the prior get mass zero. Unknown prior labels are an error.
std::vector<Rat> align_prior(const Distribution& prior,
                             const std::vector<std::string>& inputs) {
  std::map<std::string, std::size_t> pos;
  for (std::size_t i = 0; i < inputs.size(); ++i) pos[inputs[i]] = i;
  std::vector<Rat> mass(inputs.size(), Rat(0));
  for (std::size_t i = 0; i < prior.labels.size(); ++i) {
    const auto it = pos.find(prior.labels[i]);
    if (it == pos.end())
      fail(ErrorCode::Domain,
           "prior label '" + prior.labels[i] + "' is not a channel input");
    mass[it->second] = prior.mass[i];
  }
  return mass;
}

}  // namespace

Distribution::Distribution(std::vector<std::string> l, std::vector<Rat> m)
    : labels(std::move(l)), mass(std::move(m)) {
  if (labels.size() != mass.size())
    fail(ErrorCode::Validation, "distribution label/mass size mismatch");
  if (labels.empty()) fail(ErrorCode::Validation, "empty distribution");
  check_distinct(labels, "distribution");
  Rat total = 0;
  for (const Rat& r : mass) {
    if (r < 0) fail(ErrorCode::Validation, "negative probability");
    total += r;
  }
  if (total != 1) fail(ErrorCode::Validation, "distribution does not sum to 1");
}

Distribution Distribution::uniform(std::vector<std::string> labels) {
  const std::size_t n = labels.size();
  if (n == 0) fail(ErrorCode::Validation, "empty distribution");
  return Distribution(std::move(labels),
                      std::vector<Rat>(n, Rat(1, static_cast<long>(n))));
}

ChannelMatrix::ChannelMatrix(std::vector<std::string> in,
                             std::vector<std::string> out,
                             std::vector<std::vector<Rat>> r)
    : inputs(std::move(in)), outputs(std::move(out)), rows(std::move(r)) {
  if (inputs.empty() || outputs.empty())
    fail(ErrorCode::Validation, "channel needs inputs and outputs");
  check_distinct(inputs, "input");
  check_distinct(outputs, "output");
  if (rows.size() != inputs.size())
    fail(ErrorCode::Validation, "channel row count mismatch");
  for (std::size_t x = 0; x < rows.size(); ++x) {
    if (rows[x].size() != outputs.size())
      fail(ErrorCode::Validation, "channel row length mismatch");
    Rat total = 0;
    for (const Rat& p : rows[x]) {
      if (p < 0) fail(ErrorCode::Validation, "negative channel entry");
      total += p;
    }
    if (total != 1)
      fail(ErrorCode::Validation,
           "channel row for input '" + inputs[x] + "' does not sum to 1");
  }
}

JointDistribution::JointDistribution(std::vector<std::string> x,
                                     std::vector<std::string> y,
                                     std::vector<std::vector<Rat>> m)
    : xs(std::move(x)), ys(std::move(y)), mass(std::move(m)) {
  if (xs.empty() || ys.empty()) fail(ErrorCode::Validation, "empty joint");
  check_distinct(xs, "x");
  check_distinct(ys, "y");
  if (mass.size() != xs.size())
    fail(ErrorCode::Validation, "joint row count mismatch");
  Rat total = 0;
  for (const auto& row : mass) {
    if (row.size() != ys.size())
      fail(ErrorCode::Validation, "joint row length mismatch");
    for (const Rat& p : row) {
      if (p < 0) fail(ErrorCode::Validation, "negative joint mass");
      total += p;
    }
  }
  if (total != 1) fail(ErrorCode::Validation, "joint does not sum to 1");
}

InteractiveChannel::InteractiveChannel(std::vector<std::string> a,
                                       std::vector<std::string> b,
                                       std::vector<std::string> out,
                                       std::vector<std::vector<std::vector<Rat>>> pr)
    : alice_inputs(std::move(a)),
      bob_inputs(std::move(b)),
      outputs(std::move(out)),
      p(std::move(pr)) {
  if (alice_inputs.empty() || bob_inputs.empty() || outputs.empty())
    fail(ErrorCode::Validation, "interactive channel needs both input sets and outputs");
  check_distinct(alice_inputs, "alice input");
  check_distinct(bob_inputs, "bob input");
  check_distinct(outputs, "output");
  if (p.size() != alice_inputs.size())
    fail(ErrorCode::Validation, "interactive channel row count mismatch");
  deterministic = true;
  for (std::size_t ia = 0; ia < p.size(); ++ia) {
    if (p[ia].size() != bob_inputs.size())
      fail(ErrorCode::Validation, "interactive channel row count mismatch");
    for (std::size_t ib = 0; ib < p[ia].size(); ++ib) {
      if (p[ia][ib].size() != outputs.size())
        fail(ErrorCode::Validation, "interactive channel row length mismatch");
      Rat total = 0;
      for (const Rat& q : p[ia][ib]) {
        if (q < 0) fail(ErrorCode::Validation, "negative channel entry");
        if (q != 0 && q != 1) deterministic = false;
        total += q;
      }
      if (total != 1)
        fail(ErrorCode::Validation,
             "interactive channel row (" + alice_inputs[ia] + ", " +
                 bob_inputs[ib] + ") does not sum to 1");
    }
  }
}

GainFunction::GainFunction(std::vector<std::string> w,
                           std::vector<std::string> in,
                           std::vector<std::vector<Rat>> g)
    : guesses(std::move(w)), inputs(std::move(in)), gain(std::move(g)) {
  if (guesses.empty() || inputs.empty())
    fail(ErrorCode::Validation, "gain function needs guesses and inputs");
  check_distinct(guesses, "guess");
  if (gain.size() != guesses.size())
    fail(ErrorCode::Validation, "gain row count mismatch");
  for (const auto& row : gain) {
    if (row.size() != inputs.size())
      fail(ErrorCode::Validation, "gain row length mismatch");
    for (const Rat& v : row)
      if (v < 0 || v > 1)
        fail(ErrorCode::Validation, "gain value outside [0, 1]");
  }
}

Rat min_entropy_leakage_factor(const Distribution& prior, const ChannelMatrix& ch) {
  const std::vector<Rat> mass = align_prior(prior, ch.inputs);
  Rat best_prior = 0;
  for (const Rat& m : mass) best_prior = std::max(best_prior, m);
  if (best_prior == 0) fail(ErrorCode::Validation, "prior has empty support");
  Rat num = 0;
  for (std::size_t y = 0; y < ch.outputs.size(); ++y) {
    Rat best = 0;
    for (std::size_t x = 0; x < ch.inputs.size(); ++x)
      best = std::max(best, Rat(mass[x] * ch.rows[x][y]));
    num += best;
  }
  return num / best_prior;
}

double min_entropy_leakage(const Distribution& prior, const ChannelMatrix& ch) {
  return log2_rat(min_entropy_leakage_factor(prior, ch));
}

Rat min_entropy_capacity_factor(const ChannelMatrix& ch) {
  Rat sum = 0;
  for (std::size_t y = 0; y < ch.outputs.size(); ++y) {
    Rat best = 0;
    for (std::size_t x = 0; x < ch.inputs.size(); ++x)
      best = std::max(best, ch.rows[x][y]);
    sum += best;
  }
  return sum;
}

double min_entropy_capacity(const ChannelMatrix& ch) {
  return log2_rat(min_entropy_capacity_factor(ch));
}

Rat g_leakage_factor(const Distribution& prior, const ChannelMatrix& ch,
                     const GainFunction& g) {
  if (g.inputs != ch.inputs)
    fail(ErrorCode::Domain, "gain function inputs do not match the channel");
  const std::vector<Rat> mass = align_prior(prior, ch.inputs);
  Rat vg = 0;
  for (std::size_t w = 0; w < g.guesses.size(); ++w) {
    Rat v = 0;
    for (std::size_t x = 0; x < ch.inputs.size(); ++x)
      v += mass[x] * g.gain[w][x];
    vg = std::max(vg, v);
  }
  if (vg == 0)
    fail(ErrorCode::Domain, "prior g-vulnerability is zero; leakage undefined");
  Rat num = 0;
  for (std::size_t y = 0; y < ch.outputs.size(); ++y) {
    Rat best = 0;
    for (std::size_t w = 0; w < g.guesses.size(); ++w) {
      Rat v = 0;
      for (std::size_t x = 0; x < ch.inputs.size(); ++x)
        v += mass[x] * ch.rows[x][y] * g.gain[w][x];
      best = std::max(best, v);
    }
    num += best;
  }
  return num / vg;
}

double g_leakage(const Distribution& prior, const ChannelMatrix& ch,
                 const GainFunction& g) {
  return log2_rat(g_leakage_factor(prior, ch, g));
}

Rat dalenius_leakage_factor(const JointDistribution& joint) {
  std::vector<Rat> px(joint.xs.size(), Rat(0));
  for (std::size_t x = 0; x < joint.xs.size(); ++x)
    for (std::size_t y = 0; y < joint.ys.size(); ++y) px[x] += joint.mass[x][y];
  Rat sum = 0;
  for (std::size_t y = 0; y < joint.ys.size(); ++y) {
    Rat best = 0;
    bool realised = false;
    for (std::size_t x = 0; x < joint.xs.size(); ++x) {
      if (px[x] == 0) continue;
      if (joint.mass[x][y] > 0) realised = true;
      best = std::max(best, Rat(joint.mass[x][y] / px[x]));
    }
    if (realised) sum += best;
  }
  return sum;
}

double dalenius_leakage(const JointDistribution& joint) {
  return log2_rat(dalenius_leakage_factor(joint));
}

Rat interactive_leakage_factor(const Distribution& alice_prior,
                               const Distribution& bob_prior,
                               const InteractiveChannel& ch) {
  const std::vector<Rat> bob_mass = align_prior(bob_prior, ch.bob_inputs);
  Rat total = 0;
  for (std::size_t ib = 0; ib < ch.bob_inputs.size(); ++ib) {
    if (bob_mass[ib] == 0) continue;
    total += bob_mass[ib] * min_entropy_leakage_factor(alice_prior, slice(ch, ib));
  }
  return total;
}

double interactive_leakage(const Distribution& alice_prior,
                           const Distribution& bob_prior,
                           const InteractiveChannel& ch) {
  return log2_rat(interactive_leakage_factor(alice_prior, bob_prior, ch));
}

CapacityWitness interactive_capacity_pure_bob(const InteractiveChannel& ch) {
  CapacityWitness best;
  best.factor = -1;
  for (std::size_t ib = 0; ib < ch.bob_inputs.size(); ++ib) {
    const Rat f = min_entropy_capacity_factor(slice(ch, ib));
    if (f > best.factor) {
      best.factor = f;
      best.bob_input = ch.bob_inputs[ib];
    }
  }
  best.bits = log2_rat(best.factor);
  return best;
}

DeterministicCapacity deterministic_interactive_capacity(const InteractiveChannel& ch) {
  if (!ch.deterministic)
    fail(ErrorCode::Domain,
         "reachable-output capacity requires a deterministic channel");
  DeterministicCapacity best;
  best.count = -1;
  for (std::size_t ib = 0; ib < ch.bob_inputs.size(); ++ib) {
    std::vector<std::string> outs;
    for (std::size_t y = 0; y < ch.outputs.size(); ++y) {
      bool reachable = false;
      for (std::size_t ia = 0; ia < ch.alice_inputs.size() && !reachable; ++ia)
        reachable = ch.p[ia][ib][y] == 1;
      if (reachable) outs.push_back(ch.outputs[y]);
    }
    if (BigInt(outs.size()) > best.count) {
      best.count = static_cast<long>(outs.size());
      best.bob_input = ch.bob_inputs[ib];
      best.outputs = std::move(outs);
    }
  }
  best.bits = log2_bigint(best.count);
  return best;
}

JointDistribution joint_from(const Distribution& prior, const ChannelMatrix& ch) {
  const std::vector<Rat> mass = align_prior(prior, ch.inputs);
  std::vector<std::vector<Rat>> m(ch.inputs.size(),
                                  std::vector<Rat>(ch.outputs.size(), Rat(0)));
  for (std::size_t x = 0; x < ch.inputs.size(); ++x)
    for (std::size_t y = 0; y < ch.outputs.size(); ++y)
      m[x][y] = mass[x] * ch.rows[x][y];
  return JointDistribution(ch.inputs, ch.outputs, std::move(m));
}

Distribution x_marginal(const JointDistribution& joint) {
  std::vector<Rat> mass(joint.xs.size(), Rat(0));
  for (std::size_t x = 0; x < joint.xs.size(); ++x)
    for (std::size_t y = 0; y < joint.ys.size(); ++y) mass[x] += joint.mass[x][y];
  return Distribution(joint.xs, std::move(mass));
}

Distribution y_marginal(const JointDistribution& joint) {
  std::vector<Rat> mass(joint.ys.size(), Rat(0));
  for (std::size_t x = 0; x < joint.xs.size(); ++x)
    for (std::size_t y = 0; y < joint.ys.size(); ++y) mass[y] += joint.mass[x][y];
  return Distribution(joint.ys, std::move(mass));
}

ChannelMatrix slice(const InteractiveChannel& ch, std::size_t bob_index) {
  if (bob_index >= ch.bob_inputs.size())
    fail(ErrorCode::Domain, "bob input index outside channel");
  std::vector<std::vector<Rat>> rows;
  rows.reserve(ch.alice_inputs.size());
  for (std::size_t ia = 0; ia < ch.alice_inputs.size(); ++ia)
    rows.push_back(ch.p[ia][bob_index]);
  return ChannelMatrix(ch.alice_inputs, ch.outputs, std::move(rows));
}

}  // namespace qif
