/* Copyright 2026 The qif authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface to the qif library: load one of the text formats, then run
 * an analysis. All functions return a qif_status; on failure the per-thread
 * message from qif_last_error() describes what went wrong. Strings returned
 * through char** are heap-allocated and released with qif_string_free().
 */

#ifndef QIF_H
#define QIF_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
  QIF_OK = 0,
  QIF_ERR_PARSE = 1,        /* malformed input text */
  QIF_ERR_VALIDATION = 2,   /* well-formed text, inconsistent object */
  QIF_ERR_DOMAIN = 3,       /* operation undefined for this input */
  QIF_ERR_BUDGET = 4,       /* configured resource cap exceeded */
  QIF_ERR_INCONSISTENT = 5, /* internal cross-check failed; result withheld */
  QIF_ERR_IO = 6,
  QIF_ERR_UNSUPPORTED = 7,
  QIF_ERR_ARG = 8,          /* bad handle, null pointer, wrong input kind */
  QIF_ERR_INTERNAL = 9
} qif_status;

typedef enum {
  QIF_KIND_TRANSDUCER = 0,
  QIF_KIND_CHANNEL = 1,
  QIF_KIND_ICHANNEL = 2,
  QIF_KIND_NFA = 3
} qif_kind;

typedef enum {
  QIF_VERDICT_LOGARITHMIC = 0, /* flow grows like k * log n */
  QIF_VERDICT_LINEAR = 1       /* flow grows linearly in n */
} qif_verdict;

typedef enum { QIF_FORMAT_TEXT = 0, QIF_FORMAT_RECORDS = 1 } qif_format;

typedef struct qif_input qif_input; /* opaque parsed artifact */

typedef struct {
  int horizon;                 /* rounds for the brute-force oracle */
  int n_max;                   /* deepest word length for width tables */
  long long budget_strategies; /* strategy-enumeration cap */
  long long budget_states;     /* determinization subset cap */
  double budget_seconds;       /* wall-clock cap, 0 disables */
  unsigned long long seed;     /* reserved for randomized commands */
  int format;                  /* qif_format for report rendering */
} qif_options;

void qif_options_init(qif_options* opts);

/* Loading: the format header on the first line picks the input kind. */
qif_status qif_load_file(const char* path, qif_input** out);
qif_status qif_load_text(const char* text, qif_input** out);
void qif_input_free(qif_input* input);
qif_status qif_input_kind(const qif_input* input, int* kind);

/* Growth classification of a transducer. Writes the rendered report, the
 * verdict, and (for logarithmic flow) the growth order. */
qif_status qif_analyze(const qif_input* input, const qif_options* opts,
                       char** report, int* verdict, int* order);

/* Exact antichain widths of the observable language at even lengths up to
 * n_max. Accepts transducer or nfa inputs. */
qif_status qif_width_table(const qif_input* input, const qif_options* opts,
                           char** report);

/* The trimmed observer automaton of a transducer, in the nfa text format. */
qif_status qif_reduce(const qif_input* input, const qif_options* opts,
                      char** nfa_text);

/* Cross-check at horizon `opts->horizon`: brute-force strategy enumeration
 * against the width of the observer automaton at twice the horizon. `equal`
 * is 1 when the two counts agree exactly. */
qif_status qif_oracle(const qif_input* input, const qif_options* opts,
                      char** report, int* equal);

/* Channel measures: capacity for channel inputs (plus fixed-prior leakage
 * and correlated-secret leakage when the file carries a prior), pure-Bob
 * capacity with a witness for interactive channels. */
qif_status qif_leakage(const qif_input* input, const qif_options* opts,
                       char** report);

const char* qif_last_error(void);
void qif_string_free(char* s);
const char* qif_version(void);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* QIF_H */
