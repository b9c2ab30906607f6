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

#include <memory>
#include <string>

#include "qif.h"
#include "qif/formats.hpp"

namespace {

std::string corpus_path(const std::string& name) {
  return std::string(CORPUS_DIR) + "/" + name;
}

struct InputDeleter {
  void operator()(qif_input* p) const { qif_input_free(p); }
};
using Input = std::unique_ptr<qif_input, InputDeleter>;

Input load(const std::string& name) {
  qif_input* raw = nullptr;
  REQUIRE(qif_load_file(corpus_path(name).c_str(), &raw) == QIF_OK);
  REQUIRE(raw != nullptr);
  return Input(raw);
}

// takes ownership of a C string result
std::string take(char* s) {
  REQUIRE(s != nullptr);
  std::string out(s);
  qif_string_free(s);
  return out;
}

qif_options defaults() {
  qif_options o;
  qif_options_init(&o);
  return o;
}

}  // namespace

TEST_CASE("option defaults") {
  const qif_options o = defaults();
  CHECK(o.horizon == 2);
  CHECK(o.n_max == 16);
  CHECK(o.budget_strategies == 1000000);
  CHECK(o.budget_states == 200000);
  CHECK(o.budget_seconds == 30.0);
  CHECK(o.seed == 0);
  CHECK(o.format == QIF_FORMAT_TEXT);
  qif_options_init(nullptr);  // must not crash
}

TEST_CASE("loading and kind detection") {
  int kind = -1;
  const Input t = load("relay.t");
  CHECK(qif_input_kind(t.get(), &kind) == QIF_OK);
  CHECK(kind == QIF_KIND_TRANSDUCER);
  CHECK(qif_input_kind(load("identity2.ch").get(), &kind) == QIF_OK);
  CHECK(kind == QIF_KIND_CHANNEL);
  CHECK(qif_input_kind(load("switch.ich").get(), &kind) == QIF_OK);
  CHECK(kind == QIF_KIND_ICHANNEL);

  qif_input* raw = nullptr;
  CHECK(qif_load_text("nfa\ninputs: x\noutputs:\nstates: q\ninitial: q\n"
                      "accepting: q\nq --x--> q\n",
                      &raw) == QIF_OK);
  CHECK(qif_input_kind(raw, &kind) == QIF_OK);
  CHECK(kind == QIF_KIND_NFA);
  qif_input_free(raw);

  raw = nullptr;
  CHECK(qif_load_file("/no/such/file", &raw) == QIF_ERR_IO);
  CHECK(raw == nullptr);
  CHECK(std::string(qif_last_error()) == "cannot open '/no/such/file'");

  CHECK(qif_load_text("transducer\nalice_in:\n", &raw) == QIF_ERR_PARSE);
  CHECK(raw == nullptr);
  CHECK(std::string(qif_last_error()) == "line 2: empty 'alice_in:' section");

  CHECK(qif_load_text(nullptr, &raw) == QIF_ERR_ARG);
  CHECK(qif_load_file(corpus_path("relay.t").c_str(), nullptr) == QIF_ERR_ARG);
  CHECK(std::string(qif_last_error()) == "null argument");
  CHECK(qif_input_kind(nullptr, &kind) == QIF_ERR_ARG);
  qif_input_free(nullptr);  // must not crash
  qif_string_free(nullptr);
}

TEST_CASE("analyze") {
  const qif_options opts = defaults();
  char* report = nullptr;
  int verdict = -1, order = -1;

  CHECK(qif_analyze(load("relay.t").get(), &opts, &report, &verdict, &order) ==
        QIF_OK);
  CHECK(verdict == QIF_VERDICT_LINEAR);
  CHECK(order == -1);
  const std::string relay_text = take(report);
  CHECK(relay_text.find("verdict: Linear\n") != std::string::npos);
  CHECK(relay_text.find("witness state: q0\n") != std::string::npos);
  CHECK(relay_text.find("witness u: ") != std::string::npos);

  CHECK(qif_analyze(load("interrupt.t").get(), &opts, &report, &verdict,
                    &order) == QIF_OK);
  CHECK(verdict == QIF_VERDICT_LOGARITHMIC);
  CHECK(order == 2);
  CHECK(take(report).find("order: 2\n") != std::string::npos);

  CHECK(qif_analyze(load("silent.t").get(), &opts, &report, &verdict,
                    &order) == QIF_OK);
  CHECK(verdict == QIF_VERDICT_LOGARITHMIC);
  CHECK(order == 0);
  qif_string_free(report);

  qif_options records = defaults();
  records.format = QIF_FORMAT_RECORDS;
  CHECK(qif_analyze(load("interrupt.t").get(), &records, &report, &verdict,
                    &order) == QIF_OK);
  const std::string rec = take(report);
  CHECK(rec.rfind("format: 1\ncommand: analyze\nverdict: logarithmic\n"
                  "order: 2\n",
                  0) == 0);
  CHECK(rec.find("\nwidth_4: 4\n") != std::string::npos);

  CHECK(qif_analyze(load("identity2.ch").get(), &opts, &report, &verdict,
                    &order) == QIF_ERR_ARG);
  CHECK(std::string(qif_last_error()) == "analyze needs a transducer input");
  CHECK(qif_analyze(load("relay.t").get(), &opts, nullptr, &verdict, &order) ==
        QIF_ERR_ARG);
}

TEST_CASE("width tables") {
  qif_options opts = defaults();
  opts.n_max = 8;
  char* report = nullptr;

  CHECK(qif_width_table(load("relay.t").get(), &opts, &report) == QIF_OK);
  CHECK(take(report) == "n width\n0 1\n2 2\n4 4\n6 8\n8 16\n");

  // the reduced automaton gives the same table through the nfa route
  char* nfa_text = nullptr;
  CHECK(qif_reduce(load("relay.t").get(), &opts, &nfa_text) == QIF_OK);
  const std::string serialized = take(nfa_text);
  qif_input* as_nfa = nullptr;
  REQUIRE(qif_load_text(serialized.c_str(), &as_nfa) == QIF_OK);
  CHECK(qif_width_table(as_nfa, &opts, &report) == QIF_OK);
  CHECK(take(report) == "n width\n0 1\n2 2\n4 4\n6 8\n8 16\n");
  qif_input_free(as_nfa);

  qif_options records = defaults();
  records.n_max = 4;
  records.format = QIF_FORMAT_RECORDS;
  CHECK(qif_width_table(load("relay.t").get(), &records, &report) == QIF_OK);
  CHECK(take(report) ==
        "format: 1\ncommand: width\nn_max: 4\n"
        "width_0: 1\nwidth_2: 2\nwidth_4: 4\n");

  qif_options negative = defaults();
  negative.n_max = -1;
  CHECK(qif_width_table(load("relay.t").get(), &negative, &report) ==
        QIF_ERR_DOMAIN);
  CHECK(std::string(qif_last_error()) == "n_max must be non-negative");

  qif_options starved = defaults();
  starved.budget_states = 1;
  CHECK(qif_width_table(load("latch.t").get(), &starved, &report) ==
        QIF_ERR_BUDGET);

  CHECK(qif_width_table(load("identity2.ch").get(), &opts, &report) ==
        QIF_ERR_ARG);
  CHECK(std::string(qif_last_error()) ==
        "width needs a transducer or nfa input");
}

TEST_CASE("reduce emits the canonical automaton text") {
  const qif_options opts = defaults();
  char* nfa_text = nullptr;
  CHECK(qif_reduce(load("relay.t").get(), &opts, &nfa_text) == QIF_OK);
  const std::string text = take(nfa_text);
  // byte-for-byte stable through the library serializer
  CHECK(qif::serialize_nfa(qif::parse_nfa(text)) == text);
  CHECK(text.rfind("nfa\n", 0) == 0);
  CHECK(text.find("initial: q0\n") != std::string::npos);

  CHECK(qif_reduce(load("switch.ich").get(), &opts, &nfa_text) == QIF_ERR_ARG);
  CHECK(std::string(qif_last_error()) == "reduce needs a transducer input");
}

TEST_CASE("oracle cross-check") {
  char* report = nullptr;
  int equal = 0;

  for (const char* name : {"relay.t", "interrupt.t", "latch.t", "silent.t"}) {
    for (int k = 0; k <= 2; ++k) {
      qif_options opts = defaults();
      opts.horizon = k;
      equal = 0;
      CHECK(qif_oracle(load(name).get(), &opts, &report, &equal) == QIF_OK);
      CHECK(equal == 1);
      qif_string_free(report);
    }
  }

  qif_options records = defaults();
  records.format = QIF_FORMAT_RECORDS;
  CHECK(qif_oracle(load("relay.t").get(), &records, &report, &equal) == QIF_OK);
  CHECK(take(report) ==
        "format: 1\ncommand: oracle\nk: 2\n"
        "bruteforce_count: 4\nbruteforce_bits: 2.000000\n"
        "width_count: 4\nwidth_bits: 2.000000\nequal: yes\n");

  qif_options bad = defaults();
  bad.horizon = -1;
  CHECK(qif_oracle(load("relay.t").get(), &bad, &report, &equal) ==
        QIF_ERR_DOMAIN);
  CHECK(std::string(qif_last_error()) == "horizon must be non-negative");

  qif_options starved = defaults();
  starved.budget_strategies = 1;
  CHECK(qif_oracle(load("relay.t").get(), &starved, &report, &equal) ==
        QIF_ERR_BUDGET);

  CHECK(qif_oracle(load("erasure.ch").get(), &records, &report, &equal) ==
        QIF_ERR_ARG);
}

TEST_CASE("leakage of channel files") {
  const qif_options opts = defaults();
  char* report = nullptr;

  CHECK(qif_leakage(load("identity2.ch").get(), &opts, &report) == QIF_OK);
  CHECK(take(report) ==
        "capacity: 1.000000 bits\n"
        "leakage: 0.584963 bits\n"
        "dalenius: 1.000000 bits\n");

  CHECK(qif_leakage(load("erasure.ch").get(), &opts, &report) == QIF_OK);
  const std::string erasure = take(report);
  CHECK(erasure == "capacity: 0.584963 bits\n");

  CHECK(qif_leakage(load("switch.ich").get(), &opts, &report) == QIF_OK);
  CHECK(take(report) ==
        "capacity: 1.000000 bits\n"
        "bob witness: b0\n"
        "deterministic outputs: 2\n");

  qif_options records = defaults();
  records.format = QIF_FORMAT_RECORDS;
  CHECK(qif_leakage(load("identity2.ch").get(), &records, &report) == QIF_OK);
  CHECK(take(report) ==
        "format: 1\ncommand: leakage\nkind: channel\n"
        "capacity_bits: 1.000000\nleakage_bits: 0.584963\n"
        "dalenius_bits: 1.000000\n");
  CHECK(qif_leakage(load("switch.ich").get(), &records, &report) == QIF_OK);
  CHECK(take(report) ==
        "format: 1\ncommand: leakage\nkind: ichannel\n"
        "capacity_bits: 1.000000\nbob_witness: b0\n"
        "deterministic_count: 2\n");

  CHECK(qif_leakage(load("relay.t").get(), &opts, &report) == QIF_ERR_ARG);
  CHECK(std::string(qif_last_error()) ==
        "leakage needs a channel or ichannel input");
}

TEST_CASE("version string") {
  CHECK(std::string(qif_version()) == "0.1.0");
}
