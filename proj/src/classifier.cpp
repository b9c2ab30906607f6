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

#include "qif/classifier.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <queue>
#include <sstream>

#include "qif/error.hpp"
#include "qif/reduction.hpp"

namespace qif {

namespace {

std::vector<bool> reachable_from(const OrderedNfa& a,
                                 const std::vector<int>& seeds,
                                 bool reverse) {
  std::vector<bool> seen(a.state_count(), false);
  std::queue<int> q;
  for (int s : seeds)
    if (!seen[s]) {
      seen[s] = true;
      q.push(s);
    }
  // reverse adjacency built on demand
  std::vector<std::vector<int>> radj;
  if (reverse) {
    radj.assign(a.state_count(), {});
    for (std::size_t s = 0; s < a.state_count(); ++s)
      for (const auto& lst : a.delta[s])
        for (int t : lst) radj[t].push_back(static_cast<int>(s));
  }
  while (!q.empty()) {
    const int s = q.front();
    q.pop();
    if (reverse) {
      for (int t : radj[s])
        if (!seen[t]) {
          seen[t] = true;
          q.push(t);
        }
    } else {
      for (const auto& lst : a.delta[s])
        for (int t : lst)
          if (!seen[t]) {
            seen[t] = true;
            q.push(t);
          }
    }
  }
  return seen;
}

}  // namespace

OrderedNfa trim(const OrderedNfa& a) {
  a.validate();
  std::vector<int> acc;
  for (std::size_t s = 0; s < a.state_count(); ++s)
    if (a.accepting[s]) acc.push_back(static_cast<int>(s));
  const std::vector<bool> fwd = reachable_from(a, a.initial, false);
  const std::vector<bool> bwd = reachable_from(a, acc, true);

  std::vector<int> old_to_new(a.state_count(), -1);
  std::vector<std::string> names;
  std::vector<bool> accepting;
  for (std::size_t s = 0; s < a.state_count(); ++s)
    if (fwd[s] && bwd[s]) {
      old_to_new[s] = static_cast<int>(names.size());
      names.push_back(a.states[s]);
      accepting.push_back(a.accepting[s]);
    }
  std::vector<int> initial;
  for (int s : a.initial)
    if (old_to_new[s] != -1) initial.push_back(old_to_new[s]);

  OrderedNfa out;
  out.states = std::move(names);
  out.initial = std::move(initial);
  out.accepting = std::move(accepting);
  out.poset = a.poset;
  out.input_letters = a.input_letters;
  out.output_letters = a.output_letters;
  out.sigma_gamma_shape = a.sigma_gamma_shape;
  out.delta.assign(out.states.size(),
                   std::vector<std::vector<int>>(a.poset.size()));
  for (std::size_t s = 0; s < a.state_count(); ++s) {
    if (old_to_new[s] == -1) continue;
    for (std::size_t letter = 0; letter < a.poset.size(); ++letter)
      for (int t : a.delta[s][letter])
        if (old_to_new[t] != -1)
          out.add_transition(old_to_new[s], static_cast<int>(letter),
                             old_to_new[t]);
  }
  out.validate();
  return out;
}

namespace {

// Product walk used for both the exponential witness and escape detection.
// A node tracks two equal-length runs and whether their words are still
// letter-for-letter equal or have already split on an incomparable pair;
// pairs whose first difference is comparable are abandoned.
struct ProductSearch {
  const OrderedNfa& a;
  int n;
  // parent edge per node: (prev, letter1, letter2); -2 marks "unvisited"
  struct Edge {
    int prev = -2;
    int l1 = -1, l2 = -1;
  };
  std::vector<Edge> visit;

  explicit ProductSearch(const OrderedNfa& nfa)
      : a(nfa), n(static_cast<int>(nfa.state_count())) {}

  int id(int s1, int s2, int diverged) const {
    return (s1 * n + s2) * 2 + diverged;
  }

  // BFS from (p, p, equal). Returns ids in visit order.
  std::vector<int> explore(int p) {
    visit.assign(static_cast<std::size_t>(n) * n * 2, Edge{});
    std::vector<int> order;
    std::queue<int> q;
    const int root = id(p, p, 0);
    visit[root].prev = -1;
    q.push(root);
    order.push_back(root);
    const int letters = static_cast<int>(a.poset.size());
    auto push = [&](int node, int from, int l1, int l2) {
      if (visit[node].prev != -2) return;
      visit[node] = Edge{from, l1, l2};
      q.push(node);
      order.push_back(node);
    };
    while (!q.empty()) {
      const int cur = q.front();
      q.pop();
      const int diverged = cur & 1;
      const int s2 = (cur >> 1) % n;
      const int s1 = (cur >> 1) / n;
      if (diverged == 0) {
        for (int x = 0; x < letters; ++x)
          for (int t1 : a.delta[s1][x])
            for (int t2 : a.delta[s2][x]) push(id(t1, t2, 0), cur, x, x);
        for (int x = 0; x < letters; ++x)
          for (int y = 0; y < letters; ++y) {
            if (x == y || a.poset.comparable(x, y)) continue;
            for (int t1 : a.delta[s1][x])
              for (int t2 : a.delta[s2][y]) push(id(t1, t2, 1), cur, x, y);
          }
      } else {
        for (int x = 0; x < letters; ++x)
          for (int y = 0; y < letters; ++y)
            for (int t1 : a.delta[s1][x])
              for (int t2 : a.delta[s2][y]) push(id(t1, t2, 1), cur, x, y);
      }
    }
    return order;
  }

  // Words along the parent chain to `node` (second word, first word).
  std::pair<Word, Word> words_to(int node) const {
    Word u, v;
    int cur = node;
    while (visit[cur].prev >= 0) {
      u.push_back(visit[cur].l1);
      v.push_back(visit[cur].l2);
      cur = visit[cur].prev;
    }
    std::reverse(u.begin(), u.end());
    std::reverse(v.begin(), v.end());
    return {u, v};
  }
};

}  // namespace

std::optional<ExponentialWitness> find_exponential_witness(const OrderedNfa& a) {
  a.validate();
  const int n = static_cast<int>(a.state_count());
  ProductSearch ps(a);
  for (int p = 0; p < n; ++p) {
    ps.explore(p);
    const int target = ps.id(p, p, 1);
    if (ps.visit[target].prev != -2) {
      ExponentialWitness w;
      w.state = p;
      std::tie(w.u, w.v) = ps.words_to(target);
      return w;
    }
  }
  return std::nullopt;
}

namespace {

bool word_cycles_at(const OrderedNfa& a, int state, const Word& w) {
  std::vector<int> set{state};
  for (int letter : w) {
    std::vector<int> next;
    for (int s : set)
      for (int t : a.delta[s][letter]) next.push_back(t);
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    if (next.empty()) return false;
    set = std::move(next);
  }
  return std::binary_search(set.begin(), set.end(), state);
}

// Shortest distance (in letters) between state sets, -1 when unreachable.
int bfs_distance(const OrderedNfa& a, const std::vector<int>& from,
                 const std::vector<bool>& target) {
  std::vector<int> dist(a.state_count(), -1);
  std::queue<int> q;
  for (int s : from) {
    if (dist[s] == -1) {
      dist[s] = 0;
      q.push(s);
    }
  }
  while (!q.empty()) {
    const int s = q.front();
    q.pop();
    if (target[s]) return dist[s];
    for (const auto& lst : a.delta[s])
      for (int t : lst)
        if (dist[t] == -1) {
          dist[t] = dist[s] + 1;
          q.push(t);
        }
  }
  return -1;
}

}  // namespace

bool check_witness(const OrderedNfa& a, const ExponentialWitness& w,
                   const WidthLimits& limits) {
  a.validate();
  const int n = static_cast<int>(a.state_count());
  if (w.state < 0 || w.state >= n) return false;
  if (w.u.empty() || w.u.size() != w.v.size() || w.u == w.v) return false;
  for (const Word* word : {&w.u, &w.v})
    for (int letter : *word)
      if (letter < 0 || letter >= static_cast<int>(a.poset.size()))
        return false;
  // first difference must be an incomparable pair
  std::size_t d = 0;
  while (d < w.u.size() && w.u[d] == w.v[d]) ++d;
  if (d == w.u.size()) return false;
  if (a.poset.comparable(w.u[d], w.v[d])) return false;
  if (!word_cycles_at(a, w.state, w.u) || !word_cycles_at(a, w.state, w.v))
    return false;

  // usefulness: on a path from an initial to an accepting state
  const std::vector<bool> fwd = reachable_from(a, a.initial, false);
  if (!fwd[w.state]) return false;
  std::vector<bool> at_state(n, false);
  at_state[w.state] = true;
  const int l0 = bfs_distance(a, a.initial, at_state);
  std::vector<bool> acc(n, false);
  bool has_acc = false;
  for (int s = 0; s < n; ++s)
    if (a.accepting[s]) {
      acc[s] = true;
      has_acc = true;
    }
  if (!has_acc) return false;
  const int l1 = bfs_distance(a, {w.state}, acc);
  if (l0 < 0 || l1 < 0) return false;

  // pumping the pair m times must produce at least 2^m incomparable words
  const int cycle = static_cast<int>(w.u.size());
  for (int m = 1; m <= 3; ++m) {
    const BigInt expected = BigInt(1) << m;
    if (exact_width(a, l0 + m * cycle + l1, limits) < expected) return false;
  }
  return true;
}

namespace {

struct FitOutcome {
  bool ok = true;
  std::string detail;
};

// Doubling check: along the arithmetic progression of lengths where the
// language is non-empty, the last three width ratios w(2j)/w(j) must lie
// within a factor of two of 2^k.
FitOutcome width_fit(const std::vector<BigInt>& widths, int k) {
  FitOutcome out;
  std::vector<int> nz;
  for (int i = 0; i < static_cast<int>(widths.size()); ++i)
    if (widths[i] > 0) nz.push_back(i);
  if (nz.size() <= 1) {
    if (k != 0) {
      out.ok = false;
      out.detail = "order " + std::to_string(k) +
                   " reported for a finite observable language";
    }
    return out;
  }
  const int base = nz[0];
  int step = 0;
  for (std::size_t i = 1; i < nz.size(); ++i)
    step = std::gcd(step, nz[i] - base);

  std::vector<std::pair<int, int>> pairs;  // (n, 2n-aligned index)
  for (int j = (static_cast<int>(widths.size()) - 1 - base) / (2 * step);
       j >= 1 && static_cast<int>(pairs.size()) < 3; --j) {
    const int lo = base + step * j;
    const int hi = base + 2 * step * j;
    if (hi >= static_cast<int>(widths.size())) continue;
    if (widths[lo] > 0 && widths[hi] > 0) pairs.emplace_back(lo, hi);
  }
  if (pairs.empty()) {
    if (k != 0) {
      out.ok = false;
      out.detail = "order " + std::to_string(k) +
                   " reported but no comparable doubling lengths exist";
    }
    return out;
  }
  // band [2^(k-1), 2^(k+1)]
  const Rat low = k == 0 ? Rat(1, 2) : Rat(BigInt(1) << (k - 1));
  const Rat high = Rat(BigInt(1) << (k + 1));
  for (const auto& [lo, hi] : pairs) {
    const Rat ratio(widths[hi], widths[lo]);
    if (ratio < low || ratio > high) {
      std::ostringstream os;
      os << "order " << k << " rejected by widths: w(" << hi << ")/w(" << lo
         << ") = " << widths[hi] << "/" << widths[lo]
         << " outside [2^" << (k - 1) << ", 2^" << (k + 1) << "]";
      out.ok = false;
      out.detail = os.str();
      return out;
    }
  }
  return out;
}

// Escape targets: r such that two equal-length paths from p, one returning
// to p and one ending at r, first differ on an incomparable letter pair.
std::vector<std::vector<int>> escape_targets(const OrderedNfa& a) {
  const int n = static_cast<int>(a.state_count());
  std::vector<std::vector<int>> res(n);
  ProductSearch ps(a);
  for (int p = 0; p < n; ++p) {
    ps.explore(p);
    for (int r = 0; r < n; ++r)
      if (ps.visit[ps.id(p, r, 1)].prev != -2) res[p].push_back(r);
  }
  return res;
}

int chain_order(const OrderedNfa& a) {
  const int n = static_cast<int>(a.state_count());
  if (n == 0) return 0;
  const std::vector<std::vector<int>> escapes = escape_targets(a);

  // plain reachability closure (any letters, any length >= 0)
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (int s = 0; s < n; ++s) {
    std::vector<int> seed{s};
    const std::vector<bool> r = reachable_from(a, seed, false);
    for (int t = 0; t < n; ++t) reach[s][t] = r[t];
  }
  // states that can still absorb length: some cycle lies ahead
  std::vector<bool> on_cycle(n, false);
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n && !on_cycle[s]; ++t) {
      bool edge_s_t = false;
      for (const auto& lst : a.delta[s])
        if (std::binary_search(lst.begin(), lst.end(), t)) {
          edge_s_t = true;
          break;
        }
      if (edge_s_t && reach[t][s]) on_cycle[s] = true;
    }
  std::vector<bool> can_pump(n, false);
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t)
      if (reach[s][t] && on_cycle[t]) {
        can_pump[s] = true;
        break;
      }

  // longest usable chain of escape gadgets; the relation is acyclic for
  // witness-free automata, so a cycle marks an internal contradiction
  std::vector<int> memo(n, -1), state(n, 0);
  auto value = [&](auto&& self, int p) -> int {
    if (memo[p] != -1) return memo[p];
    if (state[p] == 1)
      fail(ErrorCode::Inconsistency,
           "escape-gadget chain is cyclic on a witness-free automaton");
    state[p] = 1;
    int best = 0;
    for (int r : escapes[p]) {
      if (can_pump[r]) best = std::max(best, 1);
      for (int next = 0; next < n; ++next) {
        if (escapes[next].empty() || !reach[r][next]) continue;
        const int sub = self(self, next);
        if (sub > 0) best = std::max(best, 1 + sub);
      }
    }
    state[p] = 2;
    memo[p] = best;
    return best;
  };
  int k = 0;
  for (int p = 0; p < n; ++p)
    if (!escapes[p].empty()) k = std::max(k, value(value, p));
  return k;
}

int polynomial_order_impl(const OrderedNfa& trimmed,
                          const std::vector<BigInt>& widths,
                          const ClassifierConfig& cfg) {
  if (find_exponential_witness(trimmed))
    fail(ErrorCode::Domain,
         "polynomial order is undefined: automaton has exponential growth");
  if (static_cast<int>(widths.size()) <= cfg.fit_min_n)
    fail(ErrorCode::Budget,
         "width table too short for the order fit check");
  const int k = chain_order(trimmed);
  const FitOutcome fit = width_fit(widths, k);
  if (!fit.ok) fail(ErrorCode::Inconsistency, fit.detail);
  return k;
}

}  // namespace

int polynomial_order(const OrderedNfa& a, const ClassifierConfig& cfg) {
  a.validate();
  WidthLimits limits;
  limits.max_subsets = cfg.max_subsets;
  limits.budget_seconds = cfg.budget_seconds;
  const std::vector<BigInt> widths = width_table(a, cfg.fit_max_n, limits);
  return polynomial_order_impl(a, widths, cfg);
}

namespace {

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - t0)
      .count();
}

AnalysisReport classify_trimmed(OrderedNfa trimmed, const ClassifierConfig& cfg) {
  AnalysisReport rep;
  WidthLimits limits;
  limits.max_subsets = cfg.max_subsets;
  limits.budget_seconds = cfg.budget_seconds;

  auto t0 = std::chrono::steady_clock::now();
  const std::vector<BigInt> widths = width_table(trimmed, cfg.fit_max_n, limits);
  rep.width_ms = ms_since(t0);
  for (int n = 0; n < static_cast<int>(widths.size()); n += 2)
    rep.width_table.emplace_back(n, widths[n]);

  t0 = std::chrono::steady_clock::now();
  if (trimmed.state_count() == 0) {
    rep.verdict = Growth::Logarithmic;
    rep.order = 0;
    rep.notes.push_back("observable language is empty");
  } else if (auto w = find_exponential_witness(trimmed)) {
    if (!check_witness(trimmed, *w, limits))
      fail(ErrorCode::Inconsistency,
           "exponential witness failed its machine check");
    rep.verdict = Growth::Linear;
    rep.witness = std::move(w);
  } else {
    rep.verdict = Growth::Logarithmic;
    rep.order = polynomial_order_impl(trimmed, widths, cfg);
  }
  rep.classify_ms = ms_since(t0);
  rep.observer = std::move(trimmed);
  return rep;
}

}  // namespace

AnalysisReport classify_nfa(const OrderedNfa& a, const ClassifierConfig& cfg) {
  return classify_trimmed(trim(a), cfg);
}

AnalysisReport classify_capacity(const Sdfst& t, const ClassifierConfig& cfg) {
  const auto t0 = std::chrono::steady_clock::now();
  OrderedNfa observer = trim(build_observer_nfa(t));
  const double reduce_ms = ms_since(t0);
  AnalysisReport rep = classify_trimmed(std::move(observer), cfg);
  rep.reduce_ms = reduce_ms;
  return rep;
}

}  // namespace qif
