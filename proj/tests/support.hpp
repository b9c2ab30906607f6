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

// Shared test utilities: seeded random instance generators and the
// independent oracles the library is checked against.

#ifndef QIF_TESTS_SUPPORT_HPP
#define QIF_TESTS_SUPPORT_HPP

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "qif/channel.hpp"
#include "qif/nfa.hpp"
#include "qif/numeric.hpp"
#include "qif/poset.hpp"
#include "qif/transducer.hpp"

namespace qif_test {

using RNG = std::mt19937_64;
using qif::BigInt;
using qif::Rat;

inline std::vector<std::string> numbered(const std::string& stem, int n) {
  std::vector<std::string> out;
  for (int i = 0; i < n; ++i) out.push_back(stem + std::to_string(i));
  return out;
}

inline int pick(RNG& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline bool chance(RNG& rng, double p) {
  return std::uniform_real_distribution<double>(0, 1)(rng) < p;
}

// Random exact distribution from small integer weights; full support unless
// allow_zeros is set.
inline qif::Distribution random_distribution(RNG& rng,
                                             std::vector<std::string> labels,
                                             bool allow_zeros = false) {
  const int n = static_cast<int>(labels.size());
  std::vector<int> w(n);
  int total = 0;
  do {
    total = 0;
    for (int i = 0; i < n; ++i) {
      w[i] = allow_zeros ? pick(rng, 0, 8) : pick(rng, 1, 8);
      total += w[i];
    }
  } while (total == 0);
  std::vector<Rat> mass;
  for (int i = 0; i < n; ++i) mass.emplace_back(w[i], total);
  return qif::Distribution(std::move(labels), std::move(mass));
}

inline std::vector<Rat> random_stochastic_row(RNG& rng, int n) {
  std::vector<int> w(n);
  int total = 0;
  do {
    total = 0;
    for (int i = 0; i < n; ++i) {
      w[i] = pick(rng, 0, 6);
      total += w[i];
    }
  } while (total == 0);
  std::vector<Rat> row;
  for (int i = 0; i < n; ++i) row.emplace_back(w[i], total);
  return row;
}

inline qif::ChannelMatrix random_channel(RNG& rng, int nx, int ny) {
  std::vector<std::vector<Rat>> rows;
  for (int x = 0; x < nx; ++x) rows.push_back(random_stochastic_row(rng, ny));
  return qif::ChannelMatrix(numbered("x", nx), numbered("y", ny),
                            std::move(rows));
}

inline qif::JointDistribution random_joint(RNG& rng, int nx, int ny) {
  std::vector<std::vector<int>> w(nx, std::vector<int>(ny));
  int total = 0;
  do {
    total = 0;
    for (auto& row : w)
      for (int& v : row) {
        v = pick(rng, 0, 5);
        total += v;
      }
  } while (total == 0);
  std::vector<std::vector<Rat>> mass(nx);
  for (int x = 0; x < nx; ++x)
    for (int y = 0; y < ny; ++y) mass[x].emplace_back(w[x][y], total);
  return qif::JointDistribution(numbered("x", nx), numbered("y", ny),
                                std::move(mass));
}

inline qif::InteractiveChannel random_ichannel(RNG& rng, int na, int nb,
                                               int ny, bool deterministic) {
  std::vector<std::vector<std::vector<Rat>>> p(
      na, std::vector<std::vector<Rat>>(nb));
  for (int a = 0; a < na; ++a)
    for (int b = 0; b < nb; ++b) {
      if (deterministic) {
        std::vector<Rat> row(ny, Rat(0));
        row[pick(rng, 0, ny - 1)] = 1;
        p[a][b] = std::move(row);
      } else {
        p[a][b] = random_stochastic_row(rng, ny);
      }
    }
  return qif::InteractiveChannel(numbered("a", na), numbered("b", nb),
                                 numbered("y", ny), std::move(p));
}

inline qif::GainFunction random_gain(RNG& rng, int nw,
                                     std::vector<std::string> inputs) {
  std::vector<std::vector<Rat>> gain(nw);
  for (int w = 0; w < nw; ++w)
    for (std::size_t x = 0; x < inputs.size(); ++x)
      gain[w].emplace_back(pick(rng, 0, 4), 4);
  return qif::GainFunction(numbered("w", nw), std::move(inputs),
                           std::move(gain));
}

// Random transducer with two-letter alphabets and at most max_states states.
// Bob's input and output alphabets stay disjoint so the observer exists.
inline qif::Sdfst random_sdfst(RNG& rng, int max_states) {
  qif::Sdfst t;
  const int m = pick(rng, 1, max_states);
  t.states = numbered("q", m);
  t.initial = 0;
  t.accepting.resize(m);
  bool any = false;
  for (int q = 0; q < m; ++q) {
    t.accepting[q] = chance(rng, 2.0 / 3);
    any = any || t.accepting[q];
  }
  if (!any) t.accepting[pick(rng, 0, m - 1)] = true;
  t.alice_in = {"a", "b"};
  t.bob_in = {"x", "y"};
  t.alice_out = {"c", "d"};
  t.bob_out = {"u", "v"};
  t.init_cells();
  for (int q = 0; q < m; ++q)
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b) {
        auto& cell = t.cells[q][a][b];
        cell.next = pick(rng, 0, m - 1);
        cell.alice_out = pick(rng, 0, 1);
        cell.bob_out = pick(rng, 0, 1);
      }
  t.validate();
  return t;
}

// Random strict partial order: random edges on a random topological order,
// then the transitive closure.
inline qif::LetterPoset random_poset(RNG& rng, int n) {
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<std::vector<bool>> lt(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (chance(rng, 0.4)) lt[perm[i]][perm[j]] = true;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (lt[i][k] && lt[k][j]) lt[i][j] = true;
  qif::LetterPoset p;
  p.letters = numbered("l", n);
  p.lt = std::move(lt);
  return p;
}

inline qif::OrderedNfa random_nfa(RNG& rng, int max_states, int max_letters) {
  const int ns = pick(rng, 1, max_states);
  const int nl = pick(rng, 1, max_letters);
  std::vector<int> initial;
  for (int s = 0; s < ns; ++s)
    if (chance(rng, 0.5)) initial.push_back(s);
  if (initial.empty()) initial.push_back(pick(rng, 0, ns - 1));
  std::vector<bool> accepting(ns);
  for (int s = 0; s < ns; ++s) accepting[s] = chance(rng, 0.5);
  qif::OrderedNfa a = qif::OrderedNfa::make_general(
      numbered("s", ns), initial, accepting, random_poset(rng, nl));
  for (int s = 0; s < ns; ++s)
    for (int l = 0; l < nl; ++l)
      for (int t = 0; t < ns; ++t)
        if (chance(rng, 0.35)) a.add_transition(s, l, t);
  return a;
}

// Exhaustive max of the fixed-prior leakage over the 1/32 prior grid,
// refined by exact coordinate ascent: one step raises a single coordinate
// to the current maximum mass and renormalises. When no single raise
// improves the value, every matrix entry is dominated by its column's
// current best term, so the value already equals the supremum; the ascent
// therefore lands exactly, not merely within tolerance.
inline Rat capacity_grid_ascent_factor(const qif::ChannelMatrix& ch) {
  const int n = static_cast<int>(ch.inputs.size());
  const auto eval = [&](const std::vector<Rat>& mass) {
    return qif::min_entropy_leakage_factor(
        qif::Distribution(ch.inputs, mass), ch);
  };

  // all compositions of 32 into n parts
  std::vector<std::pair<Rat, std::vector<Rat>>> scored;
  std::vector<int> parts(n, 0);
  const int grid = 32;
  auto enumerate = [&](auto&& self, int i, int left) -> void {
    if (i == n - 1) {
      parts[i] = left;
      std::vector<Rat> mass;
      for (int v : parts) mass.emplace_back(v, grid);
      scored.emplace_back(eval(mass), std::move(mass));
      return;
    }
    for (int v = 0; v <= left; ++v) {
      parts[i] = v;
      self(self, i + 1, left - v);
    }
  };
  enumerate(enumerate, 0, grid);
  std::sort(scored.begin(), scored.end(),
            [](const auto& a, const auto& b) { return a.first > b.first; });

  Rat best_factor = scored.front().first;
  const int starts = std::min<int>(8, static_cast<int>(scored.size()));
  for (int s = 0; s < starts; ++s) {
    std::vector<Rat> p = scored[s].second;
    Rat value = scored[s].first;
    bool improved = true;
    // every accepted raise enlarges the set of coordinates tied with the
    // maximum, so the loop stops well before the guard does
    for (int guard = 0; improved && guard < 4 * n * n; ++guard) {
      improved = false;
      const Rat pmax = *std::max_element(p.begin(), p.end());
      for (int z = 0; z < n && !improved; ++z) {
        if (p[z] == pmax) continue;
        std::vector<Rat> cand = p;
        cand[z] = pmax;
        Rat total(0);
        for (const Rat& v : cand) total += v;
        for (Rat& v : cand) v = Rat(v / total);
        const Rat v = eval(cand);
        if (v > value) {
          value = v;
          p = std::move(cand);
          improved = true;
        }
      }
    }
    if (value > best_factor) best_factor = value;
  }
  return best_factor;
}

inline double capacity_grid_ascent(const qif::ChannelMatrix& ch) {
  return qif::log2_rat(capacity_grid_ascent_factor(ch));
}

// The dyadic correlated-secret construction: Z ranges over the 2^n cells of
// [0,1) and couples to X through the cumulative prior map. Returns the
// uniform Z prior and the channel from Z to Y.
inline std::pair<qif::Distribution, qif::ChannelMatrix> dyadic_secret(
    const qif::JointDistribution& joint, int n) {
  const qif::Distribution px = qif::x_marginal(joint);
  const std::size_t nx = joint.xs.size();
  const std::size_t ny = joint.ys.size();
  const BigInt cells = BigInt(1) << n;

  // prior intervals [c_{k-1}, c_k)
  std::vector<Rat> cum(nx + 1, Rat(0));
  for (std::size_t x = 0; x < nx; ++x) cum[x + 1] = cum[x] + px.mass[x];

  std::vector<std::vector<Rat>> rows;
  std::vector<std::string> zs;
  for (BigInt z = 0; z < cells; ++z) {
    zs.push_back("z" + z.str());
    const Rat lo(z, cells), hi(z + 1, cells);
    std::vector<Rat> row(ny, Rat(0));
    for (std::size_t x = 0; x < nx; ++x) {
      if (px.mass[x] == 0) continue;
      const Rat a = std::max(cum[x], lo), b = std::min(cum[x + 1], hi);
      if (b <= a) continue;
      const Rat weight = (b - a) * Rat(cells);  // p(x | z), cell mass 1/2^n
      for (std::size_t y = 0; y < ny; ++y)
        row[y] += weight * joint.mass[x][y] / px.mass[x];
    }
    rows.push_back(std::move(row));
  }
  qif::Distribution prior = qif::Distribution::uniform(zs);
  return {std::move(prior), qif::ChannelMatrix(zs, joint.ys, std::move(rows))};
}

}  // namespace qif_test

#endif  // QIF_TESTS_SUPPORT_HPP
