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

#include "qif/formats.hpp"

#include <cctype>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <map>
#include <sstream>
#include <vector>

#include "qif/error.hpp"

namespace qif {

namespace {

[[noreturn]] void parse_fail(int line, const std::string& msg) {
  fail(ErrorCode::Parse, "line " + std::to_string(line) + ": " + msg);
}

struct Line {
  int no;
  std::string text;
};

// Comment-stripped, non-blank lines with their 1-based numbers.
std::vector<Line> significant_lines(const std::string& text) {
  std::vector<Line> out;
  std::istringstream is(text);
  std::string raw;
  int no = 0;
  while (std::getline(is, raw)) {
    ++no;
    const std::size_t hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    const std::size_t a = raw.find_first_not_of(" \t\r");
    if (a == std::string::npos) continue;
    const std::size_t b = raw.find_last_not_of(" \t\r");
    out.push_back(Line{no, raw.substr(a, b - a + 1)});
  }
  return out;
}

std::vector<std::string> tokens(const std::string& s) {
  std::istringstream is(s);
  std::vector<std::string> out;
  std::string t;
  while (is >> t) out.push_back(t);
  return out;
}

// Splits a file body into `key:` sections and leftover payload lines.
struct Sections {
  std::map<std::string, std::pair<int, std::vector<std::string>>> headers;
  std::vector<Line> rest;
};

Sections split_sections(const std::vector<Line>& lines,
                        const std::vector<std::string>& known_keys) {
  Sections out;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const std::vector<std::string> toks = tokens(lines[i].text);
    const std::string& first = toks.front();
    if (first.size() > 1 && first.back() == ':') {
      const std::string key = first.substr(0, first.size() - 1);
      bool known = false;
      for (const auto& k : known_keys) known = known || k == key;
      if (!known)
        parse_fail(lines[i].no, "unknown section '" + key + ":'");
      if (out.headers.count(key))
        parse_fail(lines[i].no, "duplicate '" + key + ":' section");
      out.headers[key] = {lines[i].no,
                          std::vector<std::string>(toks.begin() + 1, toks.end())};
    } else {
      out.rest.push_back(lines[i]);
    }
  }
  return out;
}

const std::vector<std::string>& require_section(const Sections& s,
                                                const std::string& key,
                                                bool nonempty) {
  const auto it = s.headers.find(key);
  if (it == s.headers.end())
    fail(ErrorCode::Parse, "missing '" + key + ":' section");
  if (nonempty && it->second.second.empty())
    parse_fail(it->second.first, "empty '" + key + ":' section");
  return it->second.second;
}

std::map<std::string, int> index_map(const std::vector<std::string>& names,
                                     const std::string& what, int line) {
  std::map<std::string, int> m;
  for (std::size_t i = 0; i < names.size(); ++i)
    if (!m.emplace(names[i], static_cast<int>(i)).second)
      parse_fail(line, "duplicate " + what + " '" + names[i] + "'");
  return m;
}

int lookup(const std::map<std::string, int>& m, const std::string& name,
           const std::string& what, int line) {
  const auto it = m.find(name);
  if (it == m.end()) parse_fail(line, "unknown " + what + " '" + name + "'");
  return it->second;
}

int header_line(const Sections& s, const std::string& key) {
  return s.headers.at(key).first;
}

Rat entry(const std::string& tok, int line) {
  try {
    return parse_rational(tok);
  } catch (const Error& e) {
    parse_fail(line, e.what());
  }
}

// Character scanner for `q (a,b) -> q' (c,d)` lines.
struct Scan {
  const std::string& s;
  int line;
  std::size_t i = 0;

  void ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  void expect(char c, const char* what) {
    ws();
    if (i >= s.size() || s[i] != c)
      parse_fail(line, std::string("expected '") + c + "' " + what);
    ++i;
  }
  void expect_arrow() {
    ws();
    if (s.compare(i, 2, "->") != 0) parse_fail(line, "expected '->'");
    i += 2;
  }
  std::string name(const char* what) {
    ws();
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j])) &&
           s[j] != '(' && s[j] != ')' && s[j] != ',')
      ++j;
    if (j == i) parse_fail(line, std::string("expected ") + what);
    std::string r = s.substr(i, j - i);
    i = j;
    return r;
  }
  void end() {
    ws();
    if (i != s.size()) parse_fail(line, "unexpected trailing text");
  }
};

const Line& kind_line(const std::vector<Line>& lines) {
  if (lines.empty()) fail(ErrorCode::Parse, "empty input");
  return lines.front();
}

void check_kind(const std::vector<Line>& lines, const std::string& kind) {
  const Line& l = kind_line(lines);
  if (tokens(l.text) != std::vector<std::string>{kind})
    parse_fail(l.no, "expected a '" + kind + "' header line");
}

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::Io, "cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

InputKind detect_kind(const std::string& text) {
  const std::vector<Line> lines = significant_lines(text);
  const Line& l = kind_line(lines);
  const std::string head = tokens(l.text).front();
  if (head == "transducer") return InputKind::Transducer;
  if (head == "channel") return InputKind::Channel;
  if (head == "ichannel") return InputKind::Ichannel;
  if (head == "nfa") return InputKind::Nfa;
  parse_fail(l.no, "unknown input kind '" + head + "'");
}

Sdfst parse_transducer(const std::string& text) {
  const std::vector<Line> lines = significant_lines(text);
  check_kind(lines, "transducer");
  const Sections sec =
      split_sections(lines, {"alice_in", "bob_in", "alice_out", "bob_out",
                             "states", "initial", "accepting"});

  Sdfst t;
  t.alice_in = require_section(sec, "alice_in", true);
  t.bob_in = require_section(sec, "bob_in", true);
  t.alice_out = require_section(sec, "alice_out", true);
  t.bob_out = require_section(sec, "bob_out", true);
  t.states = require_section(sec, "states", true);
  const auto& initial = require_section(sec, "initial", true);
  const auto& accepting = require_section(sec, "accepting", false);

  const auto state_ix = index_map(t.states, "state", header_line(sec, "states"));
  const auto ain_ix =
      index_map(t.alice_in, "letter", header_line(sec, "alice_in"));
  const auto bin_ix = index_map(t.bob_in, "letter", header_line(sec, "bob_in"));
  const auto aout_ix =
      index_map(t.alice_out, "letter", header_line(sec, "alice_out"));
  const auto bout_ix =
      index_map(t.bob_out, "letter", header_line(sec, "bob_out"));

  if (initial.size() != 1)
    parse_fail(header_line(sec, "initial"), "exactly one initial state required");
  t.initial = lookup(state_ix, initial[0], "state", header_line(sec, "initial"));
  t.accepting.assign(t.states.size(), false);
  for (const auto& name : accepting)
    t.accepting[lookup(state_ix, name, "state",
                       header_line(sec, "accepting"))] = true;
  t.init_cells();

  for (const Line& l : sec.rest) {
    Scan sc{l.text, l.no};
    const std::string src = sc.name("a state name");
    sc.expect('(', "after the state name");
    const std::string a = sc.name("an alice input letter");
    sc.expect(',', "between the input letters");
    const std::string b = sc.name("a bob input letter");
    sc.expect(')', "after the input letters");
    sc.expect_arrow();
    const std::string dst = sc.name("a state name");
    sc.expect('(', "after the successor state");
    const std::string c = sc.name("an alice output letter");
    sc.expect(',', "between the output letters");
    const std::string d = sc.name("a bob output letter");
    sc.expect(')', "after the output letters");
    sc.end();

    const int q = lookup(state_ix, src, "state", l.no);
    const int ia = lookup(ain_ix, a, "alice input", l.no);
    const int ib = lookup(bin_ix, b, "bob input", l.no);
    Sdfst::Cell& cell = t.cells[q][ia][ib];
    if (cell.next != -1)
      parse_fail(l.no, "duplicate transition at state '" + src + "' on (" + a +
                           ", " + b + ")");
    cell.next = lookup(state_ix, dst, "state", l.no);
    cell.alice_out = lookup(aout_ix, c, "alice output", l.no);
    cell.bob_out = lookup(bout_ix, d, "bob output", l.no);
  }
  t.validate();
  return t;
}

namespace {

// `row <labels...>: p1 p2 ...`; returns how many tokens the labels used.
std::vector<std::string> row_labels(const std::vector<std::string>& toks,
                                    std::size_t& next, int line) {
  std::vector<std::string> labels;
  for (next = 1; next < toks.size(); ++next) {
    const std::string& t = toks[next];
    if (t == ":") {
      ++next;
      return labels;
    }
    if (t.back() == ':') {
      labels.push_back(t.substr(0, t.size() - 1));
      ++next;
      return labels;
    }
    labels.push_back(t);
  }
  parse_fail(line, "expected ':' after the row label");
}

std::vector<Rat> row_entries(const std::vector<std::string>& toks,
                             std::size_t from, std::size_t want, int line) {
  std::vector<Rat> out;
  for (std::size_t i = from; i < toks.size(); ++i)
    out.push_back(entry(toks[i], line));
  if (out.size() != want)
    parse_fail(line, "expected " + std::to_string(want) + " entries, got " +
                         std::to_string(out.size()));
  return out;
}

}  // namespace

ChannelFile parse_channel(const std::string& text) {
  const std::vector<Line> lines = significant_lines(text);
  check_kind(lines, "channel");
  const Sections sec = split_sections(lines, {"inputs", "outputs", "prior"});
  const auto& inputs = require_section(sec, "inputs", true);
  const auto& outputs = require_section(sec, "outputs", true);
  const auto in_ix = index_map(inputs, "input", header_line(sec, "inputs"));

  std::vector<std::vector<Rat>> rows(inputs.size());
  std::vector<bool> seen(inputs.size(), false);
  for (const Line& l : sec.rest) {
    const std::vector<std::string> toks = tokens(l.text);
    if (toks.front() != "row")
      parse_fail(l.no, "expected a 'row' line");
    std::size_t next = 0;
    const std::vector<std::string> labels = row_labels(toks, next, l.no);
    if (labels.size() != 1)
      parse_fail(l.no, "channel rows take exactly one input label");
    const int x = lookup(in_ix, labels[0], "input", l.no);
    if (seen[x]) parse_fail(l.no, "duplicate row for input '" + labels[0] + "'");
    seen[x] = true;
    rows[x] = row_entries(toks, next, outputs.size(), l.no);
  }
  for (std::size_t x = 0; x < inputs.size(); ++x)
    if (!seen[x])
      fail(ErrorCode::Parse, "missing row for input '" + inputs[x] + "'");

  ChannelFile out;
  out.channel = ChannelMatrix(inputs, outputs, std::move(rows));
  if (sec.headers.count("prior")) {
    const auto& [line, toks] = sec.headers.at("prior");
    std::vector<Rat> mass;
    for (const auto& t : toks) mass.push_back(entry(t, line));
    if (mass.size() != inputs.size())
      parse_fail(line, "prior needs one entry per input");
    out.prior = Distribution(inputs, std::move(mass));
  }
  return out;
}

InteractiveChannel parse_ichannel(const std::string& text) {
  const std::vector<Line> lines = significant_lines(text);
  check_kind(lines, "ichannel");
  const Sections sec =
      split_sections(lines, {"inputs", "bob_inputs", "outputs"});
  const auto& alice = require_section(sec, "inputs", true);
  const auto& bob = require_section(sec, "bob_inputs", true);
  const auto& outputs = require_section(sec, "outputs", true);
  const auto a_ix = index_map(alice, "input", header_line(sec, "inputs"));
  const auto b_ix = index_map(bob, "input", header_line(sec, "bob_inputs"));

  std::vector<std::vector<std::vector<Rat>>> p(
      alice.size(), std::vector<std::vector<Rat>>(bob.size()));
  std::vector<std::vector<bool>> seen(alice.size(),
                                      std::vector<bool>(bob.size(), false));
  for (const Line& l : sec.rest) {
    const std::vector<std::string> toks = tokens(l.text);
    if (toks.front() != "row")
      parse_fail(l.no, "expected a 'row' line");
    std::size_t next = 0;
    const std::vector<std::string> labels = row_labels(toks, next, l.no);
    if (labels.size() != 2)
      parse_fail(l.no, "ichannel rows take an alice and a bob input label");
    const int ia = lookup(a_ix, labels[0], "alice input", l.no);
    const int ib = lookup(b_ix, labels[1], "bob input", l.no);
    if (seen[ia][ib])
      parse_fail(l.no, "duplicate row for inputs '" + labels[0] + "', '" +
                           labels[1] + "'");
    seen[ia][ib] = true;
    p[ia][ib] = row_entries(toks, next, outputs.size(), l.no);
  }
  for (std::size_t ia = 0; ia < alice.size(); ++ia)
    for (std::size_t ib = 0; ib < bob.size(); ++ib)
      if (!seen[ia][ib])
        fail(ErrorCode::Parse, "missing row for inputs '" + alice[ia] + "', '" +
                                   bob[ib] + "'");
  return InteractiveChannel(alice, bob, outputs, std::move(p));
}

OrderedNfa parse_nfa(const std::string& text) {
  const std::vector<Line> lines = significant_lines(text);
  check_kind(lines, "nfa");
  const Sections sec = split_sections(
      lines, {"inputs", "outputs", "states", "initial", "accepting"});
  const auto& inputs = require_section(sec, "inputs", false);
  const auto& outputs = require_section(sec, "outputs", false);
  const auto& states = require_section(sec, "states", false);
  const auto& initial = require_section(sec, "initial", false);
  const auto& accepting = require_section(sec, "accepting", false);

  const auto state_ix = index_map(states, "state", header_line(sec, "states"));
  std::map<std::string, int> letter_ix;
  {
    std::vector<std::string> all = inputs;
    all.insert(all.end(), outputs.begin(), outputs.end());
    letter_ix = index_map(all, "letter", header_line(sec, "inputs"));
  }

  std::vector<int> init;
  for (const auto& name : initial)
    init.push_back(lookup(state_ix, name, "state", header_line(sec, "initial")));
  std::vector<bool> acc(states.size(), false);
  for (const auto& name : accepting)
    acc[lookup(state_ix, name, "state", header_line(sec, "accepting"))] = true;

  OrderedNfa a = OrderedNfa::make(states, init, acc, inputs, outputs);
  for (const Line& l : sec.rest) {
    const std::vector<std::string> toks = tokens(l.text);
    if (toks.size() != 3 || toks[1].size() < 6 ||
        toks[1].compare(0, 2, "--") != 0 ||
        toks[1].compare(toks[1].size() - 3, 3, "-->") != 0)
      parse_fail(l.no, "expected a transition of the form q --x--> q'");
    const std::string letter = toks[1].substr(2, toks[1].size() - 5);
    a.add_transition(lookup(state_ix, toks[0], "state", l.no),
                     lookup(letter_ix, letter, "letter", l.no),
                     lookup(state_ix, toks[2], "state", l.no));
  }
  a.validate();
  return a;
}

std::string serialize_nfa(const OrderedNfa& a) {
  a.validate();
  if (!a.sigma_gamma_shape)
    fail(ErrorCode::Unsupported,
         "only automata with an input/output alphabet split serialize");
  std::ostringstream os;
  os << "nfa\n";
  os << "inputs:";
  for (int id : a.input_letters) os << ' ' << a.poset.letters[id];
  os << "\noutputs:";
  for (int id : a.output_letters) os << ' ' << a.poset.letters[id];
  os << "\nstates:";
  for (const auto& s : a.states) os << ' ' << s;
  os << "\ninitial:";
  for (int s : a.initial) os << ' ' << a.states[s];
  os << "\naccepting:";
  for (std::size_t s = 0; s < a.state_count(); ++s)
    if (a.accepting[s]) os << ' ' << a.states[s];
  os << "\n";
  std::vector<int> emitted = a.input_letters;
  emitted.insert(emitted.end(), a.output_letters.begin(),
                 a.output_letters.end());
  for (std::size_t src = 0; src < a.state_count(); ++src)
    for (int letter : emitted)
      for (int dst : a.delta[src][letter])
        os << a.states[src] << " --" << a.poset.letters[letter] << "--> "
           << a.states[dst] << "\n";
  return os.str();
}

void RecordWriter::field(const std::string& key, double value) {
  os_ << key << ": " << format_bits(value) << "\n";
}

std::string format_bits(double bits) {
  if (std::isinf(bits)) return bits < 0 ? "-inf" : "inf";
  std::ostringstream os;
  os << std::fixed << std::setprecision(6) << bits;
  return os.str();
}

}  // namespace qif
