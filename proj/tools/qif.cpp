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

// Command-line front end. Talks to the library exclusively through the C
// interface in qif.h.
//
// Exit codes: 0 success (analyze: Logarithmic flow), 2 analyze found Linear
// flow, 1 any error (including an oracle mismatch).

#include <cstdio>
#include <string>

#include "CLI11.hpp"
#include "qif.h"

namespace {

int fail_with(const std::string& path) {
  std::fprintf(stderr, "error: %s: %s\n", path.c_str(), qif_last_error());
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"information flow growth analysis for interactive finite-state systems"};
  app.require_subcommand(1);

  qif_options opts;
  qif_options_init(&opts);
  std::string path;
  std::string format = "text";

  const auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("file", path, "input file")->required();
    cmd->add_option("--format", format, "output format (text | records)")
        ->check(CLI::IsMember({"text", "records"}));
    cmd->add_option("--budget-seconds", opts.budget_seconds,
                    "wall-clock budget, 0 disables");
    cmd->add_option("--budget-strategies", opts.budget_strategies,
                    "strategy enumeration cap");
    cmd->add_option("--budget-states", opts.budget_states,
                    "determinization subset cap");
    cmd->add_option("--seed", opts.seed, "rng seed (reserved)");
    return cmd;
  };

  CLI::App* analyze = add_common(app.add_subcommand(
      "analyze", "classify a transducer as Logarithmic(k) or Linear flow"));
  analyze->add_option("--n-max", opts.n_max,
                      "extend the reported width table to this length");
  CLI::App* width = add_common(app.add_subcommand(
      "width", "antichain widths of the observable language at even lengths"));
  width->add_option("--n-max", opts.n_max, "deepest length to report");
  CLI::App* reduce = add_common(app.add_subcommand(
      "reduce", "emit the trimmed observer automaton in the nfa format"));
  CLI::App* oracle = add_common(app.add_subcommand(
      "oracle", "cross-check strategy brute force against observer widths"));
  oracle->add_option("--k", opts.horizon, "interaction rounds");
  CLI::App* leakage = add_common(app.add_subcommand(
      "leakage", "channel capacity and leakage measures"));

  CLI11_PARSE(app, argc, argv);
  opts.format = format == "records" ? QIF_FORMAT_RECORDS : QIF_FORMAT_TEXT;

  qif_input* input = nullptr;
  if (qif_load_file(path.c_str(), &input) != QIF_OK) return fail_with(path);

  int rc = 0;
  char* report = nullptr;
  qif_status st = QIF_OK;
  if (app.got_subcommand(analyze)) {
    int verdict = 0, order = 0;
    st = qif_analyze(input, &opts, &report, &verdict, &order);
    if (st == QIF_OK && verdict == QIF_VERDICT_LINEAR) rc = 2;
  } else if (app.got_subcommand(width)) {
    st = qif_width_table(input, &opts, &report);
  } else if (app.got_subcommand(reduce)) {
    st = qif_reduce(input, &opts, &report);
  } else if (app.got_subcommand(oracle)) {
    int equal = 0;
    st = qif_oracle(input, &opts, &report, &equal);
    if (st == QIF_OK && !equal) {
      std::fprintf(stderr, "error: %s: brute force and width disagree\n",
                   path.c_str());
      rc = 1;
    }
  } else if (app.got_subcommand(leakage)) {
    st = qif_leakage(input, &opts, &report);
  }

  if (st != QIF_OK) rc = fail_with(path);
  if (report) std::fputs(report, stdout);
  qif_string_free(report);
  qif_input_free(input);
  return rc;
}
