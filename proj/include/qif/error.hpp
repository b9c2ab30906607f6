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

#ifndef QIF_ERROR_HPP
#define QIF_ERROR_HPP

#include <stdexcept>
#include <string>

namespace qif {

enum class ErrorCode {
  Parse,          // malformed input text (message carries a line number)
  Validation,     // structurally invalid object (non-stochastic row, missing cell, ...)
  Domain,         // arguments outside an operation's precondition
  Budget,         // configured resource cap exceeded
  Inconsistency,  // internal cross-check failed; result withheld
  Io,             // file system failure
  Unsupported,    // operation not defined for this input shape
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& msg)
      : std::runtime_error(msg), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& msg) {
  throw Error(code, msg);
}

}  // namespace qif

#endif  // QIF_ERROR_HPP
