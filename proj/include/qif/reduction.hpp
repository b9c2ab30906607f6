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

#ifndef QIF_REDUCTION_HPP
#define QIF_REDUCTION_HPP

#include "qif/nfa.hpp"
#include "qif/transducer.hpp"

namespace qif {

// Automaton over Bob's letters accepting exactly the flattened Bob views of
// accepted interactions. Bob input letters become the linearly ordered
// block (declaration order); Bob output letters the incomparable block.
// Each round is read as two letters through an auxiliary (state, output)
// stage; auxiliary states are materialised only when reachable. Errors when
// Bob's input and output alphabets share a letter.
OrderedNfa build_observer_nfa(const Sdfst& t);

// Interleaves an observation into a word over the observer alphabet.
Word flatten(const Observation& y, const Sdfst& t, const OrderedNfa& observer);

}  // namespace qif

#endif  // QIF_REDUCTION_HPP
