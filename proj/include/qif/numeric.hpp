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

#ifndef QIF_NUMERIC_HPP
#define QIF_NUMERIC_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace qif {

// All probability arithmetic is exact; floating point appears only when a
// quantity is converted to bits for reporting.
using Rat = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// log2 of a non-negative integer; 0 maps to -infinity.
double log2_bigint(const BigInt& v);

// log2 of a non-negative rational; 0 maps to -infinity.
double log2_rat(const Rat& r);

// Accepts "n" or "n/d" with optional sign; rejects everything else.
Rat parse_rational(const std::string& token);

std::string rat_to_string(const Rat& r);

}  // namespace qif

#endif  // QIF_NUMERIC_HPP
