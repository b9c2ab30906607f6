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

#ifndef QIF_CLASSIFIER_HPP
#define QIF_CLASSIFIER_HPP

#include <optional>
#include <string>
#include <vector>

#include "qif/nfa.hpp"
#include "qif/transducer.hpp"
#include "qif/width.hpp"

namespace qif {

// Long-run growth of the per-length observation count: Logarithmic flow in
// bits (polynomial antichain growth of some order k) or Linear flow in bits
// (exponential antichain growth).
enum class Growth { Logarithmic, Linear };

// Two same-length cycle labels at one state whose first difference is an
// incomparable letter pair. Pumping the pair yields 2^m pairwise
// incomparable accepted words, so growth is exponential.
struct ExponentialWitness {
  int state = -1;
  Word u, v;
};

// Restriction to states both reachable and co-reachable. Preserves the
// language; may return an automaton with no states.
OrderedNfa trim(const OrderedNfa& a);

// Canonical (shortest, lexicographically first) witness, if any. Expects a
// trimmed automaton.
std::optional<ExponentialWitness> find_exponential_witness(const OrderedNfa& a);

// Re-derives every claim an ExponentialWitness makes, including that widths
// along the pumped lengths reach 2^m for small m.
bool check_witness(const OrderedNfa& a, const ExponentialWitness& w,
                   const WidthLimits& limits = {});

struct ClassifierConfig {
  int fit_min_n = 24;   // the fit check needs widths at least this far out
  int fit_max_n = 48;   // preferred table depth
  double budget_seconds = 30.0;
  std::size_t max_subsets = 200000;
};

// Order of polynomial antichain growth for a witness-free trimmed automaton:
// the longest chain of states p with a cycle u and an escaping path v of
// equal length whose first difference is incomparable, each link reachable
// from the previous escape, with a pumpable cycle after the last link. The
// returned order must also survive a doubling check against the computed
// width table; disagreement raises Inconsistency rather than a guess.
int polynomial_order(const OrderedNfa& a, const ClassifierConfig& cfg = {});

struct AnalysisReport {
  Growth verdict = Growth::Logarithmic;
  int order = 0;  // meaningful for Logarithmic verdicts
  std::optional<ExponentialWitness> witness;
  OrderedNfa observer;                                 // trimmed
  std::vector<std::pair<int, BigInt>> width_table;     // even lengths
  double reduce_ms = 0, width_ms = 0, classify_ms = 0;
  std::vector<std::string> notes;
};

// Full pipeline: observer construction, trim, witness search, and either a
// checked witness (Linear) or a fit-checked polynomial order (Logarithmic).
AnalysisReport classify_capacity(const Sdfst& t, const ClassifierConfig& cfg = {});

// Same analysis for an already-built automaton (used for order-invariance
// checks and the CLI width command).
AnalysisReport classify_nfa(const OrderedNfa& a, const ClassifierConfig& cfg = {});

}  // namespace qif

#endif  // QIF_CLASSIFIER_HPP
