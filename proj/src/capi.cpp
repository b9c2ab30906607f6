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

#include "qif.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include "qif/channel.hpp"
#include "qif/classifier.hpp"
#include "qif/error.hpp"
#include "qif/formats.hpp"
#include "qif/reduction.hpp"
#include "qif/transducer.hpp"
#include "qif/width.hpp"

struct qif_input {
  qif::InputKind kind;
  std::optional<qif::Sdfst> transducer;
  std::optional<qif::ChannelFile> channel;
  std::optional<qif::InteractiveChannel> ichannel;
  std::optional<qif::OrderedNfa> nfa;
};

namespace {

thread_local std::string g_last_error;

qif_status map_code(qif::ErrorCode code) {
  switch (code) {
    case qif::ErrorCode::Parse:
      return QIF_ERR_PARSE;
    case qif::ErrorCode::Validation:
      return QIF_ERR_VALIDATION;
    case qif::ErrorCode::Domain:
      return QIF_ERR_DOMAIN;
    case qif::ErrorCode::Budget:
      return QIF_ERR_BUDGET;
    case qif::ErrorCode::Inconsistency:
      return QIF_ERR_INCONSISTENT;
    case qif::ErrorCode::Io:
      return QIF_ERR_IO;
    case qif::ErrorCode::Unsupported:
      return QIF_ERR_UNSUPPORTED;
  }
  return QIF_ERR_INTERNAL;
}

template <typename F>
qif_status guarded(F&& f) {
  try {
    f();
    return QIF_OK;
  } catch (const qif::Error& e) {
    g_last_error = e.what();
    return map_code(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return QIF_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown failure";
    return QIF_ERR_INTERNAL;
  }
}

qif_status arg_error(const char* msg) {
  g_last_error = msg;
  return QIF_ERR_ARG;
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::string join_letters(const qif::LetterPoset& poset, const qif::Word& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += poset.letters[w[i]];
  }
  return out;
}

qif::WidthLimits width_limits(const qif_options& o) {
  qif::WidthLimits limits;
  if (o.budget_states > 0)
    limits.max_subsets = static_cast<std::size_t>(o.budget_states);
  limits.budget_seconds = o.budget_seconds;
  return limits;
}

std::string render_analyze(const qif::AnalysisReport& rep, int format) {
  const qif::LetterPoset& poset = rep.observer.poset;
  if (format == QIF_FORMAT_RECORDS) {
    qif::RecordWriter rw;
    rw.field("command", "analyze");
    rw.field("verdict",
             rep.verdict == qif::Growth::Linear ? "linear" : "logarithmic");
    if (rep.verdict == qif::Growth::Logarithmic)
      rw.field("order", static_cast<long long>(rep.order));
    if (rep.witness) {
      rw.field("witness_state", rep.observer.states[rep.witness->state]);
      rw.field("witness_u", join_letters(poset, rep.witness->u));
      rw.field("witness_v", join_letters(poset, rep.witness->v));
    }
    for (const auto& [n, w] : rep.width_table)
      rw.field("width_" + std::to_string(n), w);
    rw.field("reduce_ms", rep.reduce_ms);
    rw.field("width_ms", rep.width_ms);
    rw.field("classify_ms", rep.classify_ms);
    for (const auto& note : rep.notes) rw.field("note", note);
    return rw.str();
  }
  std::ostringstream os;
  if (rep.verdict == qif::Growth::Linear) {
    os << "verdict: Linear\n";
    if (rep.witness) {
      os << "witness state: " << rep.observer.states[rep.witness->state]
         << "\n";
      os << "witness u: " << join_letters(poset, rep.witness->u) << "\n";
      os << "witness v: " << join_letters(poset, rep.witness->v) << "\n";
    }
  } else {
    os << "verdict: Logarithmic\n";
    os << "order: " << rep.order << "\n";
  }
  os << "width table:\n";
  for (const auto& [n, w] : rep.width_table)
    os << "  n=" << n << " w=" << w.str() << "\n";
  os << "timings ms: reduce=" << qif::format_bits(rep.reduce_ms)
     << " width=" << qif::format_bits(rep.width_ms)
     << " classify=" << qif::format_bits(rep.classify_ms) << "\n";
  for (const auto& note : rep.notes) os << "note: " << note << "\n";
  return os.str();
}

}  // namespace

extern "C" {

void qif_options_init(qif_options* opts) {
  if (!opts) return;
  opts->horizon = 2;
  opts->n_max = 16;
  opts->budget_strategies = 1000000;
  opts->budget_states = 200000;
  opts->budget_seconds = 30.0;
  opts->seed = 0;
  opts->format = QIF_FORMAT_TEXT;
}

qif_status qif_load_text(const char* text, qif_input** out) {
  if (!text || !out) return arg_error("null argument");
  *out = nullptr;
  return guarded([&] {
    auto in = std::make_unique<qif_input>();
    const std::string s(text);
    in->kind = qif::detect_kind(s);
    switch (in->kind) {
      case qif::InputKind::Transducer:
        in->transducer = qif::parse_transducer(s);
        break;
      case qif::InputKind::Channel:
        in->channel = qif::parse_channel(s);
        break;
      case qif::InputKind::Ichannel:
        in->ichannel = qif::parse_ichannel(s);
        break;
      case qif::InputKind::Nfa:
        in->nfa = qif::parse_nfa(s);
        break;
    }
    *out = in.release();
  });
}

qif_status qif_load_file(const char* path, qif_input** out) {
  if (!path || !out) return arg_error("null argument");
  *out = nullptr;
  std::string text;
  const qif_status st = guarded([&] { text = qif::read_file(path); });
  if (st != QIF_OK) return st;
  return qif_load_text(text.c_str(), out);
}

void qif_input_free(qif_input* input) { delete input; }

qif_status qif_input_kind(const qif_input* input, int* kind) {
  if (!input || !kind) return arg_error("null argument");
  switch (input->kind) {
    case qif::InputKind::Transducer:
      *kind = QIF_KIND_TRANSDUCER;
      break;
    case qif::InputKind::Channel:
      *kind = QIF_KIND_CHANNEL;
      break;
    case qif::InputKind::Ichannel:
      *kind = QIF_KIND_ICHANNEL;
      break;
    case qif::InputKind::Nfa:
      *kind = QIF_KIND_NFA;
      break;
  }
  return QIF_OK;
}

qif_status qif_analyze(const qif_input* input, const qif_options* opts,
                       char** report, int* verdict, int* order) {
  if (!input || !opts || !report || !verdict || !order)
    return arg_error("null argument");
  if (!input->transducer)
    return arg_error("analyze needs a transducer input");
  *report = nullptr;
  return guarded([&] {
    qif::ClassifierConfig cfg;
    cfg.budget_seconds = opts->budget_seconds;
    if (opts->budget_states > 0)
      cfg.max_subsets = static_cast<std::size_t>(opts->budget_states);
    cfg.fit_max_n = std::max(cfg.fit_max_n, opts->n_max);
    const qif::AnalysisReport rep =
        qif::classify_capacity(*input->transducer, cfg);
    *verdict = rep.verdict == qif::Growth::Linear ? QIF_VERDICT_LINEAR
                                                  : QIF_VERDICT_LOGARITHMIC;
    *order = rep.verdict == qif::Growth::Logarithmic ? rep.order : -1;
    *report = dup_string(render_analyze(rep, opts->format));
  });
}

qif_status qif_width_table(const qif_input* input, const qif_options* opts,
                           char** report) {
  if (!input || !opts || !report) return arg_error("null argument");
  if (!input->transducer && !input->nfa)
    return arg_error("width needs a transducer or nfa input");
  *report = nullptr;
  return guarded([&] {
    if (opts->n_max < 0)
      qif::fail(qif::ErrorCode::Domain, "n_max must be non-negative");
    const qif::OrderedNfa a =
        input->nfa ? *input->nfa
                   : qif::trim(qif::build_observer_nfa(*input->transducer));
    const std::vector<qif::BigInt> widths =
        qif::width_table(a, opts->n_max, width_limits(*opts));
    if (static_cast<int>(widths.size()) <= opts->n_max)
      qif::fail(qif::ErrorCode::Budget,
                "time budget exhausted after length " +
                    std::to_string(static_cast<int>(widths.size()) - 1));
    std::string text;
    if (opts->format == QIF_FORMAT_RECORDS) {
      qif::RecordWriter rw;
      rw.field("command", "width");
      rw.field("n_max", static_cast<long long>(opts->n_max));
      for (int n = 0; n <= opts->n_max; n += 2)
        rw.field("width_" + std::to_string(n), widths[n]);
      text = rw.str();
    } else {
      std::ostringstream os;
      os << "n width\n";
      for (int n = 0; n <= opts->n_max; n += 2)
        os << n << " " << widths[n].str() << "\n";
      text = os.str();
    }
    *report = dup_string(text);
  });
}

qif_status qif_reduce(const qif_input* input, const qif_options* opts,
                      char** nfa_text) {
  if (!input || !opts || !nfa_text) return arg_error("null argument");
  if (!input->transducer) return arg_error("reduce needs a transducer input");
  *nfa_text = nullptr;
  return guarded([&] {
    const qif::OrderedNfa observer =
        qif::trim(qif::build_observer_nfa(*input->transducer));
    *nfa_text = dup_string(qif::serialize_nfa(observer));
  });
}

qif_status qif_oracle(const qif_input* input, const qif_options* opts,
                      char** report, int* equal) {
  if (!input || !opts || !report || !equal) return arg_error("null argument");
  if (!input->transducer) return arg_error("oracle needs a transducer input");
  *report = nullptr;
  return guarded([&] {
    const int k = opts->horizon;
    if (k < 0) qif::fail(qif::ErrorCode::Domain, "horizon must be non-negative");
    qif::EnumBudget budget;
    if (opts->budget_strategies > 0)
      budget.max_strategies = opts->budget_strategies;
    const qif::LeakageResult lr =
        qif::leakage_bruteforce(*input->transducer, k, budget);
    const qif::OrderedNfa observer =
        qif::trim(qif::build_observer_nfa(*input->transducer));
    const qif::BigInt width =
        qif::exact_width(observer, 2 * k, width_limits(*opts));
    const bool same = lr.count == width;
    *equal = same ? 1 : 0;

    std::string text;
    if (opts->format == QIF_FORMAT_RECORDS) {
      qif::RecordWriter rw;
      rw.field("command", "oracle");
      rw.field("k", static_cast<long long>(k));
      rw.field("bruteforce_count", lr.count);
      rw.field("bruteforce_bits", lr.bits);
      rw.field("width_count", width);
      rw.field("width_bits", qif::log2_bigint(width));
      rw.field("equal", same ? "yes" : "no");
      text = rw.str();
    } else {
      std::ostringstream os;
      os << "k: " << k << "\n";
      os << "bruteforce count: " << lr.count.str() << "\n";
      os << "bruteforce bits: " << qif::format_bits(lr.bits) << "\n";
      os << "width count: " << width.str() << "\n";
      os << "width bits: " << qif::format_bits(qif::log2_bigint(width)) << "\n";
      os << "equal: " << (same ? "yes" : "no") << "\n";
      text = os.str();
    }
    *report = dup_string(text);
  });
}

qif_status qif_leakage(const qif_input* input, const qif_options* opts,
                       char** report) {
  if (!input || !opts || !report) return arg_error("null argument");
  if (!input->channel && !input->ichannel)
    return arg_error("leakage needs a channel or ichannel input");
  *report = nullptr;
  return guarded([&] {
    std::string text;
    if (input->channel) {
      const qif::ChannelFile& cf = *input->channel;
      const double capacity = qif::min_entropy_capacity(cf.channel);
      std::optional<double> leakage, dalenius;
      if (cf.prior) {
        leakage = qif::min_entropy_leakage(*cf.prior, cf.channel);
        dalenius =
            qif::dalenius_leakage(qif::joint_from(*cf.prior, cf.channel));
      }
      if (opts->format == QIF_FORMAT_RECORDS) {
        qif::RecordWriter rw;
        rw.field("command", "leakage");
        rw.field("kind", "channel");
        rw.field("capacity_bits", capacity);
        if (leakage) rw.field("leakage_bits", *leakage);
        if (dalenius) rw.field("dalenius_bits", *dalenius);
        text = rw.str();
      } else {
        std::ostringstream os;
        os << "capacity: " << qif::format_bits(capacity) << " bits\n";
        if (leakage)
          os << "leakage: " << qif::format_bits(*leakage) << " bits\n";
        if (dalenius)
          os << "dalenius: " << qif::format_bits(*dalenius) << " bits\n";
        text = os.str();
      }
    } else {
      const qif::InteractiveChannel& ch = *input->ichannel;
      const qif::CapacityWitness cw = qif::interactive_capacity_pure_bob(ch);
      std::optional<qif::DeterministicCapacity> dc;
      if (ch.deterministic) dc = qif::deterministic_interactive_capacity(ch);
      if (opts->format == QIF_FORMAT_RECORDS) {
        qif::RecordWriter rw;
        rw.field("command", "leakage");
        rw.field("kind", "ichannel");
        rw.field("capacity_bits", cw.bits);
        rw.field("bob_witness", cw.bob_input);
        if (dc) rw.field("deterministic_count", dc->count);
        text = rw.str();
      } else {
        std::ostringstream os;
        os << "capacity: " << qif::format_bits(cw.bits) << " bits\n";
        os << "bob witness: " << cw.bob_input << "\n";
        if (dc) os << "deterministic outputs: " << dc->count.str() << "\n";
        text = os.str();
      }
    }
    *report = dup_string(text);
  });
}

const char* qif_last_error(void) { return g_last_error.c_str(); }

void qif_string_free(char* s) { std::free(s); }

const char* qif_version(void) { return "0.1.0"; }

}  // extern "C"
