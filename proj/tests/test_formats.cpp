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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qif/classifier.hpp"
#include "qif/error.hpp"
#include "qif/formats.hpp"
#include "qif/reduction.hpp"
#include "support.hpp"

using qif::InputKind;
using qif::OrderedNfa;
using qif::Rat;

namespace {

std::string corpus_text(const std::string& name) {
  return qif::read_file(std::string(CORPUS_DIR) + "/" + name);
}

#define CHECK_PARSE_ERROR(expr, message)                    \
  CHECK_THROWS_WITH_AS(expr, message, qif::Error)

const char* kChannelOk =
    "channel\n"
    "inputs: x1 x2 x3  # three secrets\n"
    "outputs: y1 y2\n"
    "row x2: 1/3 2/3\n"
    "row x1: 1 0\n"
    "row x3: 0/5 1\n";

const char* kIchannelOk =
    "ichannel\n"
    "inputs: a1 a2\n"
    "bob_inputs: b1 b2\n"
    "outputs: y\n"
    "row a1 b1: 1\nrow a1 b2: 1\nrow a2 b1: 1\nrow a2 b2: 1\n";

}  // namespace

TEST_CASE("file reading") {
  const std::string text = corpus_text("relay.t");
  CHECK(text.find("transducer") != std::string::npos);
  try {
    qif::read_file("/no/such/file.t");
    FAIL("expected an io error");
  } catch (const qif::Error& e) {
    CHECK(e.code() == qif::ErrorCode::Io);
    CHECK(std::string(e.what()) == "cannot open '/no/such/file.t'");
  }
}

TEST_CASE("kind detection") {
  CHECK(qif::detect_kind(corpus_text("relay.t")) == InputKind::Transducer);
  CHECK(qif::detect_kind(kChannelOk) == InputKind::Channel);
  CHECK(qif::detect_kind(kIchannelOk) == InputKind::Ichannel);
  CHECK(qif::detect_kind("nfa\nstates:\n") == InputKind::Nfa);
  // kind comes from the first significant line, so its number is reported
  CHECK_PARSE_ERROR(qif::detect_kind("# intro\n\nzebra x\n"),
                    "line 3: unknown input kind 'zebra'");
  CHECK_PARSE_ERROR(qif::detect_kind("# only comments\n"), "empty input");
}

TEST_CASE("transducer parse diagnostics carry line numbers") {
  const std::string good = corpus_text("relay.t");
  CHECK(qif::parse_transducer(good).states.size() == 1);

  CHECK_PARSE_ERROR(qif::parse_transducer("channel\n"),
                    "line 1: expected a 'transducer' header line");
  CHECK_PARSE_ERROR(qif::parse_transducer("transducer\nstuff: a\n"),
                    "line 2: unknown section 'stuff:'");
  CHECK_PARSE_ERROR(
      qif::parse_transducer("transducer\nalice_in: a\n\nalice_in: b\n"),
      "line 4: duplicate 'alice_in:' section");
  CHECK_PARSE_ERROR(
      qif::parse_transducer("transducer\nalice_in: a\nbob_in: b\n"
                            "alice_out: c\nstates: q\ninitial: q\n"),
      "missing 'bob_out:' section");
  CHECK_PARSE_ERROR(qif::parse_transducer("transducer\nalice_in:\n"),
                    "line 2: empty 'alice_in:' section");

  const std::string head =
      "transducer\nalice_in: a\nbob_in: b\nalice_out: c\nbob_out: d\n";
  CHECK_PARSE_ERROR(
      qif::parse_transducer(head + "states: q q\ninitial: q\naccepting: q\n"),
      "line 6: duplicate state 'q'");
  CHECK_PARSE_ERROR(
      qif::parse_transducer(head + "states: q\ninitial: q q\naccepting: q\n"),
      "line 7: exactly one initial state required");
  CHECK_PARSE_ERROR(
      qif::parse_transducer(head + "states: q\ninitial: zz\naccepting: q\n"),
      "line 7: unknown state 'zz'");

  const std::string decl = head + "states: q\ninitial: q\naccepting: q\n";
  CHECK_PARSE_ERROR(qif::parse_transducer(decl + "q a,b -> q (c,d)\n"),
                    "line 9: expected '(' after the state name");
  CHECK_PARSE_ERROR(qif::parse_transducer(decl + "q (a,b) q (c,d)\n"),
                    "line 9: expected '->'");
  CHECK_PARSE_ERROR(qif::parse_transducer(decl + "q (a,b) -> q (c,d) junk\n"),
                    "line 9: unexpected trailing text");
  CHECK_PARSE_ERROR(qif::parse_transducer(decl + "q (x,b) -> q (c,d)\n"),
                    "line 9: unknown alice input 'x'");
  CHECK_PARSE_ERROR(
      qif::parse_transducer(decl + "q (a,b) -> q (c,d)\nq (a,b) -> q (c,d)\n"),
      "line 10: duplicate transition at state 'q' on (a, b)");
  // a syntactically fine but incomplete table fails validation instead
  try {
    qif::parse_transducer(decl);
    FAIL("expected a validation error");
  } catch (const qif::Error& e) {
    CHECK(e.code() == qif::ErrorCode::Validation);
  }
}

TEST_CASE("channel files") {
  const qif::ChannelFile cf = qif::parse_channel(kChannelOk);
  CHECK_FALSE(cf.prior.has_value());
  CHECK(cf.channel.inputs == std::vector<std::string>{"x1", "x2", "x3"});
  CHECK(cf.channel.outputs == std::vector<std::string>{"y1", "y2"});
  CHECK(cf.channel.rows[0][0] == 1);
  CHECK(cf.channel.rows[1][0] == Rat(1, 3));
  CHECK(cf.channel.rows[1][1] == Rat(2, 3));
  CHECK(cf.channel.rows[2][0] == 0);

  const qif::ChannelFile with_prior =
      qif::parse_channel(std::string(kChannelOk) + "prior: 1/2 1/4 1/4\n");
  REQUIRE(with_prior.prior.has_value());
  CHECK(with_prior.prior->mass[0] == Rat(1, 2));
  CHECK(with_prior.prior->mass[2] == Rat(1, 4));

  CHECK_PARSE_ERROR(
      qif::parse_channel(std::string(kChannelOk) + "prior: 1/2 1/2\n"),
      "line 7: prior needs one entry per input");
  CHECK_PARSE_ERROR(qif::parse_channel("channel\ninputs: x\noutputs: y\n"),
                    "missing row for input 'x'");
  CHECK_PARSE_ERROR(
      qif::parse_channel(std::string(kChannelOk) + "row x1: 1 0\n"),
      "line 7: duplicate row for input 'x1'");
  CHECK_PARSE_ERROR(qif::parse_channel("channel\ninputs: x\noutputs: y z\n"
                                       "row x: 1\n"),
                    "line 4: expected 2 entries, got 1");
  CHECK_PARSE_ERROR(qif::parse_channel("channel\ninputs: x\noutputs: y z\n"
                                       "row x: 0.5 0.5\n"),
                    "line 4: bad rational '0.5'");
  CHECK_PARSE_ERROR(qif::parse_channel("channel\ninputs: x\noutputs: y\n"
                                       "grid x: 1\n"),
                    "line 4: expected a 'row' line");
  CHECK_PARSE_ERROR(qif::parse_channel("channel\ninputs: x\noutputs: y\n"
                                       "row x 1\n"),
                    "line 4: expected ':' after the row label");
  CHECK_PARSE_ERROR(qif::parse_channel("channel\ninputs: x y\noutputs: z\n"
                                       "row x y: 1\n"),
                    "line 4: channel rows take exactly one input label");
  // stochasticity is the matrix type's job; the error passes through
  try {
    qif::parse_channel("channel\ninputs: x\noutputs: y z\nrow x: 1/2 1/3\n");
    FAIL("expected a validation error");
  } catch (const qif::Error& e) {
    CHECK(e.code() == qif::ErrorCode::Validation);
  }

  const std::string wrong_count_oops =
      "channel\ninputs: x\noutputs: y\nrow x: 1\nprior: notanumber\n";
  CHECK_PARSE_ERROR(qif::parse_channel(wrong_count_oops),
                    "line 5: bad rational 'notanumber'");
}

TEST_CASE("interactive channel files") {
  const qif::InteractiveChannel ic = qif::parse_ichannel(kIchannelOk);
  CHECK(ic.alice_inputs == std::vector<std::string>{"a1", "a2"});
  CHECK(ic.bob_inputs == std::vector<std::string>{"b1", "b2"});
  CHECK(ic.p[1][0][0] == 1);

  CHECK_PARSE_ERROR(
      qif::parse_ichannel("ichannel\ninputs: a\nbob_inputs: b\noutputs: y\n"
                          "row a: 1\n"),
      "line 5: ichannel rows take an alice and a bob input label");
  CHECK_PARSE_ERROR(
      qif::parse_ichannel("ichannel\ninputs: a\nbob_inputs: b\noutputs: y\n"),
      "missing row for inputs 'a', 'b'");
  CHECK_PARSE_ERROR(
      qif::parse_ichannel(std::string(kIchannelOk) + "row a1 b1: 1\n"),
      "line 9: duplicate row for inputs 'a1', 'b1'");
  CHECK_PARSE_ERROR(
      qif::parse_ichannel("ichannel\ninputs: a\nbob_inputs: b\noutputs: y\n"
                          "row a zz: 1\n"),
      "line 5: unknown bob input 'zz'");
}

TEST_CASE("nfa files round-trip byte for byte") {
  const OrderedNfa relay =
      qif::trim(qif::build_observer_nfa(qif::parse_transducer(corpus_text("relay.t"))));
  const std::string once = qif::serialize_nfa(relay);
  const OrderedNfa back = qif::parse_nfa(once);
  CHECK(qif::serialize_nfa(back) == once);
  CHECK(back.states == relay.states);
  CHECK(back.initial == relay.initial);
  CHECK(back.accepting == relay.accepting);
  CHECK(back.delta == relay.delta);
  CHECK(back.poset.letters == relay.poset.letters);
  CHECK(back.poset.lt == relay.poset.lt);

  qif_test::RNG rng(211);
  for (int rep = 0; rep < 30; ++rep) {
    const int ns = qif_test::pick(rng, 1, 5);
    const std::vector<std::string> states = qif_test::numbered("s", ns);
    const std::vector<std::string> sigma =
        qif_test::numbered("in", qif_test::pick(rng, 0, 3));
    const std::vector<std::string> gamma =
        qif_test::numbered("out", qif_test::pick(rng, 0, 3));
    std::vector<int> initial;
    std::vector<bool> accepting;
    for (int s = 0; s < ns; ++s) {
      if (qif_test::chance(rng, 0.5)) initial.push_back(s);
      accepting.push_back(qif_test::chance(rng, 0.5));
    }
    if (initial.empty()) initial.push_back(0);
    OrderedNfa a = OrderedNfa::make(states, initial, accepting, sigma, gamma);
    for (int s = 0; s < ns; ++s)
      for (std::size_t l = 0; l < a.letter_count(); ++l)
        for (int t = 0; t < ns; ++t)
          if (qif_test::chance(rng, 0.3))
            a.add_transition(s, static_cast<int>(l), t);
    const std::string text = qif::serialize_nfa(a);
    CHECK(qif::serialize_nfa(qif::parse_nfa(text)) == text);
  }
}

TEST_CASE("nfa parse diagnostics") {
  const char* head =
      "nfa\ninputs: x\noutputs: u\nstates: p q\ninitial: p\naccepting: q\n";
  const OrderedNfa a =
      qif::parse_nfa(std::string(head) + "p --x--> q\nq --u--> p\n");
  CHECK(a.state_count() == 2);
  CHECK(a.transition_count() == 2);

  CHECK_PARSE_ERROR(qif::parse_nfa(std::string(head) + "p --> q\n"),
                    "line 7: expected a transition of the form q --x--> q'");
  CHECK_PARSE_ERROR(qif::parse_nfa(std::string(head) + "p --y--> q\n"),
                    "line 7: unknown letter 'y'");
  CHECK_PARSE_ERROR(qif::parse_nfa(std::string(head) + "p --x--> zz\n"),
                    "line 7: unknown state 'zz'");
  CHECK_PARSE_ERROR(
      qif::parse_nfa("nfa\ninputs: x x\noutputs:\nstates: p\ninitial:\n"
                     "accepting:\n"),
      "line 2: duplicate letter 'x'");
  CHECK_PARSE_ERROR(qif::parse_nfa("nfa\ninputs: x\noutputs: u\nstates: p\n"
                                   "accepting:\n"),
                    "missing 'initial:' section");

  // automata without the input/output split have no text form
  qif_test::RNG prng(5);
  OrderedNfa general = OrderedNfa::make_general(
      {"p"}, {0}, {true}, qif_test::random_poset(prng, 3));
  try {
    qif::serialize_nfa(general);
    FAIL("expected an unsupported error");
  } catch (const qif::Error& e) {
    CHECK(e.code() == qif::ErrorCode::Unsupported);
  }
}

TEST_CASE("record writer and bit formatting") {
  qif::RecordWriter w;
  w.field("verdict", std::string("linear"));
  w.field("n", static_cast<long long>(42));
  w.field("width", qif::BigInt("340282366920938463463374607431768211456"));
  w.field("bits", 1.0 / 3.0);
  CHECK(w.str() ==
        "format: 1\n"
        "verdict: linear\n"
        "n: 42\n"
        "width: 340282366920938463463374607431768211456\n"
        "bits: 0.333333\n");

  CHECK(qif::format_bits(0.0) == "0.000000");
  CHECK(qif::format_bits(1.5) == "1.500000");
  CHECK(qif::format_bits(qif::log2_rat(Rat(3))) == "1.584963");
  CHECK(qif::format_bits(std::numeric_limits<double>::infinity()) == "inf");
  CHECK(qif::format_bits(-std::numeric_limits<double>::infinity()) == "-inf");
}
