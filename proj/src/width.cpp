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

#include "qif/width.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <queue>

#include "qif/error.hpp"

namespace qif {

namespace {

using Clock = std::chrono::steady_clock;

struct Deadline {
  Clock::time_point end;
  bool active = false;
  explicit Deadline(double seconds) {
    if (seconds > 0) {
      end = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                               std::chrono::duration<double>(seconds));
      active = true;
    }
  }
  bool expired() const { return active && Clock::now() > end; }
};

// Lazily determinized subset graph rooted at the initial set.
struct SubsetGraph {
  std::vector<std::vector<int>> sets;        // sorted state ids per subset
  std::vector<std::vector<int>> next;        // next[id][letter] -> id or -1
  std::vector<bool> accepts;                 // subset meets accepting states
  std::map<std::vector<int>, int> index;

  int intern(std::vector<int> s, const OrderedNfa& a, std::size_t cap) {
    const auto it = index.find(s);
    if (it != index.end()) return it->second;
    if (sets.size() >= cap)
      fail(ErrorCode::Budget, "determinization exceeded the subset cap");
    const int id = static_cast<int>(sets.size());
    bool acc = false;
    for (int q : s) acc = acc || a.accepting[q];
    index.emplace(s, id);
    sets.push_back(std::move(s));
    next.emplace_back(a.poset.size(), -1);
    accepts.push_back(acc);
    return id;
  }
};

std::vector<int> step(const OrderedNfa& a, const std::vector<int>& set, int letter) {
  std::vector<int> out;
  for (int q : set)
    for (int t : a.delta[q][letter]) out.push_back(t);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Explore every subset reachable from the initial set in at most depth steps.
SubsetGraph build_subsets(const OrderedNfa& a, int depth,
                          const WidthLimits& limits, const Deadline& deadline) {
  SubsetGraph g;
  if (a.initial.empty()) return g;
  const int root = g.intern(a.initial, a, limits.max_subsets);
  std::vector<int> frontier{root};
  std::vector<int> seen_depth(1, 0);
  for (int d = 0; d < depth && !frontier.empty(); ++d) {
    if (deadline.expired())
      fail(ErrorCode::Budget, "width computation exceeded the time budget");
    std::vector<int> nxt;
    for (int id : frontier) {
      for (int letter = 0; letter < static_cast<int>(a.poset.size()); ++letter) {
        if (g.next[id][letter] != -1) continue;
        std::vector<int> succ = step(a, g.sets[id], letter);
        if (succ.empty()) continue;
        const std::size_t before = g.sets.size();
        const int sid = g.intern(std::move(succ), a, limits.max_subsets);
        g.next[id][letter] = sid;
        if (g.sets.size() > before) nxt.push_back(sid);
      }
    }
    frontier = std::move(nxt);
  }
  return g;
}

// Maximal antichains of the letters listed in `live`, as letter-id vectors.
// Small alphabets only; the sigma/gamma shape never takes this path.
std::vector<std::vector<int>> maximal_letter_antichains(
    const LetterPoset& poset, const std::vector<int>& live) {
  std::vector<std::vector<int>> all;
  std::vector<int> cur;
  const int m = static_cast<int>(live.size());
  if (m > 20) fail(ErrorCode::Budget, "alphabet too large for general poset widths");
  auto rec = [&](auto&& self, int i) -> void {
    if (i == m) {
      if (!cur.empty()) all.push_back(cur);
      return;
    }
    self(self, i + 1);
    bool ok = true;
    for (int c : cur)
      if (poset.comparable(c, live[i])) { ok = false; break; }
    if (ok) {
      cur.push_back(live[i]);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  // Keep only antichains maximal within the live set.
  std::vector<std::vector<int>> maximal;
  for (const auto& c : all) {
    bool extendable = false;
    for (int x : live) {
      if (std::find(c.begin(), c.end(), x) != c.end()) continue;
      bool incomp = true;
      for (int y : c)
        if (poset.comparable(x, y)) { incomp = false; break; }
      if (incomp) { extendable = true; break; }
    }
    if (!extendable) maximal.push_back(c);
  }
  return maximal;
}

std::vector<BigInt> width_table_impl(const OrderedNfa& a, int n_max,
                                     const WidthLimits& limits) {
  a.validate();
  if (n_max < 0) fail(ErrorCode::Domain, "negative length");
  const Deadline deadline(limits.budget_seconds);
  std::vector<BigInt> widths;

  if (a.initial.empty()) {
    widths.assign(n_max + 1, BigInt(0));
    return widths;
  }
  const SubsetGraph g = build_subsets(a, n_max, limits, deadline);
  const std::size_t S = g.sets.size();
  const int L = static_cast<int>(a.poset.size());

  // prev[s] = max antichain size of words of length m accepted from s.
  std::vector<BigInt> prev(S), cur(S);
  for (std::size_t s = 0; s < S; ++s) prev[s] = g.accepts[s] ? 1 : 0;
  widths.push_back(prev[0]);

  std::map<std::vector<int>, std::vector<std::vector<int>>> antichain_cache;

  for (int m = 1; m <= n_max; ++m) {
    if (deadline.expired()) return widths;  // partial table
    for (std::size_t s = 0; s < S; ++s) {
      BigInt best = 0;
      if (a.sigma_gamma_shape) {
        // Optimal letter antichain: every live output letter plus the best
        // single input letter (inputs are linearly ordered, outputs free).
        BigInt sum = 0;
        for (int letter : a.output_letters) {
          const int t = g.next[s][letter];
          if (t != -1) sum += prev[t];
        }
        BigInt best_input = 0;
        for (int letter : a.input_letters) {
          const int t = g.next[s][letter];
          if (t != -1 && prev[t] > best_input) best_input = prev[t];
        }
        best = sum + best_input;
      } else {
        std::vector<int> live;
        for (int letter = 0; letter < L; ++letter)
          if (g.next[s][letter] != -1) live.push_back(letter);
        auto it = antichain_cache.find(live);
        if (it == antichain_cache.end())
          it = antichain_cache
                   .emplace(live, maximal_letter_antichains(a.poset, live))
                   .first;
        for (const auto& chain_free : it->second) {
          BigInt sum = 0;
          for (int letter : chain_free) sum += prev[g.next[s][letter]];
          if (sum > best) best = sum;
        }
      }
      cur[s] = std::move(best);
    }
    std::swap(prev, cur);
    widths.push_back(prev[0]);
  }
  return widths;
}

}  // namespace

std::vector<BigInt> width_table(const OrderedNfa& a, int n_max,
                                const WidthLimits& limits) {
  return width_table_impl(a, n_max, limits);
}

BigInt exact_width(const OrderedNfa& a, int n, const WidthLimits& limits) {
  std::vector<BigInt> t = width_table_impl(a, n, limits);
  if (static_cast<int>(t.size()) <= n)
    fail(ErrorCode::Budget, "width computation exceeded the time budget");
  return t[n];
}

std::vector<Word> enumerate_level(const OrderedNfa& a, int n, std::size_t cap) {
  a.validate();
  if (n < 0) fail(ErrorCode::Domain, "negative length");
  std::vector<Word> out;
  if (a.initial.empty()) return out;

  // live[m]: state sets from which some accepted word of length m exists.
  // Kept per NFA state to prune the word search without determinizing.
  std::vector<std::vector<bool>> live(
      n + 1, std::vector<bool>(a.state_count(), false));
  for (std::size_t q = 0; q < a.state_count(); ++q) live[0][q] = a.accepting[q];
  for (int m = 1; m <= n; ++m)
    for (std::size_t q = 0; q < a.state_count(); ++q)
      for (const auto& lst : a.delta[q]) {
        for (int t : lst)
          if (live[m - 1][t]) { live[m][q] = true; break; }
        if (live[m][q]) break;
      }

  Word word;
  std::vector<int> set = a.initial;
  auto any_live = [&](const std::vector<int>& s, int m) {
    for (int q : s)
      if (live[m][q]) return true;
    return false;
  };
  auto rec = [&](auto&& self, const std::vector<int>& s, int remaining) -> void {
    if (remaining == 0) {
      for (int q : s)
        if (a.accepting[q]) {
          if (out.size() >= cap)
            fail(ErrorCode::Budget, "level enumeration exceeded the word cap");
          out.push_back(word);
          return;
        }
      return;
    }
    for (int letter = 0; letter < static_cast<int>(a.poset.size()); ++letter) {
      std::vector<int> succ = step(a, s, letter);
      if (succ.empty() || !any_live(succ, remaining - 1)) continue;
      word.push_back(letter);
      self(self, succ, remaining - 1);
      word.pop_back();
    }
  };
  if (any_live(set, n)) rec(rec, set, n);
  return out;
}

namespace {

// Hopcroft-Karp maximum matching on the comparability relation.
struct Matching {
  std::vector<int> match_l, match_r;
  int size = 0;
};

Matching hopcroft_karp(const std::vector<std::vector<int>>& adj, int n_right) {
  const int n_left = static_cast<int>(adj.size());
  Matching m;
  m.match_l.assign(n_left, -1);
  m.match_r.assign(n_right, -1);
  constexpr int INF = 1 << 30;
  std::vector<int> dist(n_left);
  auto bfs = [&]() {
    std::queue<int> q;
    bool found = false;
    for (int u = 0; u < n_left; ++u) {
      if (m.match_l[u] == -1) {
        dist[u] = 0;
        q.push(u);
      } else {
        dist[u] = INF;
      }
    }
    while (!q.empty()) {
      const int u = q.front();
      q.pop();
      for (int v : adj[u]) {
        const int w = m.match_r[v];
        if (w == -1) {
          found = true;
        } else if (dist[w] == INF) {
          dist[w] = dist[u] + 1;
          q.push(w);
        }
      }
    }
    return found;
  };
  auto dfs = [&](auto&& self, int u) -> bool {
    for (int v : adj[u]) {
      const int w = m.match_r[v];
      if (w == -1 || (dist[w] == dist[u] + 1 && self(self, w))) {
        m.match_l[u] = v;
        m.match_r[v] = u;
        return true;
      }
    }
    dist[u] = INF;
    return false;
  };
  while (bfs())
    for (int u = 0; u < n_left; ++u)
      if (m.match_l[u] == -1 && dfs(dfs, u)) ++m.size;
  return m;
}

}  // namespace

DilworthCertificate max_antichain_dilworth(const std::vector<Word>& words,
                                           const LetterPoset& poset) {
  const int n = static_cast<int>(words.size());
  // Strictly-below relation between distinct words; already transitive.
  std::vector<std::vector<int>> below(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      if (lex_compare(words[i], words[j], poset) == LexOutcome::Less)
        below[i].push_back(j);
    }
  const Matching m = hopcroft_karp(below, n);

  DilworthCertificate cert;
  cert.width = static_cast<std::size_t>(n - m.size);

  // Chains: follow matched successor links from chain heads.
  std::vector<bool> is_head(n, true);
  for (int u = 0; u < n; ++u)
    if (m.match_l[u] != -1) is_head[m.match_l[u]] = false;
  for (int u = 0; u < n; ++u) {
    if (!is_head[u]) continue;
    std::vector<std::size_t> chain;
    int cur = u;
    while (cur != -1) {
      chain.push_back(static_cast<std::size_t>(cur));
      cur = m.match_l[cur];
    }
    cert.chains.push_back(std::move(chain));
  }

  // Koenig: words whose left copy is unreachable-from-free and right copy
  // reachable form a minimum vertex cover; its complement is an antichain.
  std::vector<bool> vis_l(n, false), vis_r(n, false);
  std::queue<int> q;
  for (int u = 0; u < n; ++u)
    if (m.match_l[u] == -1) {
      vis_l[u] = true;
      q.push(u);
    }
  while (!q.empty()) {
    const int u = q.front();
    q.pop();
    for (int v : below[u]) {
      if (vis_r[v]) continue;
      vis_r[v] = true;
      const int w = m.match_r[v];
      if (w != -1 && !vis_l[w]) {
        vis_l[w] = true;
        q.push(w);
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    const bool in_cover = !vis_l[i] || vis_r[i];
    if (!in_cover) cert.antichain.push_back(static_cast<std::size_t>(i));
  }
  return cert;
}

BigInt width_bruteforce(const OrderedNfa& a, int n, std::size_t cap) {
  const std::vector<Word> words = enumerate_level(a, n, cap);
  const DilworthCertificate cert = max_antichain_dilworth(words, a.poset);
  return BigInt(cert.width);
}

}  // namespace qif
