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

#ifndef QIF_FORMATS_HPP
#define QIF_FORMATS_HPP

#include <optional>
#include <sstream>
#include <string>

#include "qif/channel.hpp"
#include "qif/nfa.hpp"
#include "qif/transducer.hpp"

namespace qif {

// Line-oriented text formats. `#` starts a comment; blank lines are ignored;
// parse errors carry 1-based line numbers.

std::string read_file(const std::string& path);

enum class InputKind { Transducer, Channel, Ichannel, Nfa };

// Decided by the first significant line: one of the four format headers.
InputKind detect_kind(const std::string& text);

// transducer / alice_in: / bob_in: / alice_out: / bob_out: / states: /
// initial: / accepting: headers, then one `q (a,b) -> q' (c,d)` line per
// cell. Duplicate cells are rejected; missing cells are reported with their
// (state, a, b) coordinates.
Sdfst parse_transducer(const std::string& text);

struct ChannelFile {
  ChannelMatrix channel;
  // optional `prior:` line (one rational per input); enables fixed-prior
  // leakage reporting in the CLI
  std::optional<Distribution> prior;
};

// channel / inputs: / outputs: / one `row x: p1 p2 ...` per input.
ChannelFile parse_channel(const std::string& text);

// ichannel / inputs: / bob_inputs: / outputs: / `row a b: p1 p2 ...` rows.
InteractiveChannel parse_ichannel(const std::string& text);

// nfa / inputs: (declaration order is the linear order) / outputs: /
// states: / initial: / accepting: / `q --x--> q'` lines.
OrderedNfa parse_nfa(const std::string& text);

// Canonical text form; parse_nfa(serialize_nfa(a)) reproduces the same
// serialization byte for byte. Only sigma/gamma shaped automata have one.
std::string serialize_nfa(const OrderedNfa& a);

// Machine-readable output: `key: value` lines opened by a `format: 1`
// version marker.
class RecordWriter {
 public:
  RecordWriter() { os_ << "format: 1\n"; }

  void field(const std::string& key, const std::string& value) {
    os_ << key << ": " << value << "\n";
  }
  void field(const std::string& key, long long value) {
    os_ << key << ": " << value << "\n";
  }
  void field(const std::string& key, const BigInt& value) {
    os_ << key << ": " << value.str() << "\n";
  }
  void field(const std::string& key, double value);

  std::string str() const { return os_.str(); }

 private:
  std::ostringstream os_;
};

// Fixed-point rendering used everywhere bits are printed (6 decimals).
std::string format_bits(double bits);

}  // namespace qif

#endif  // QIF_FORMATS_HPP
