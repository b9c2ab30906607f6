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

#include "qif/numeric.hpp"

#include <cctype>
#include <cmath>
#include <limits>

#include "qif/error.hpp"

namespace qif {

double log2_bigint(const BigInt& v) {
  if (v < 0) fail(ErrorCode::Domain, "log2 of negative value");
  if (v == 0) return -std::numeric_limits<double>::infinity();
  const unsigned bits = boost::multiprecision::msb(v);
  if (bits <= 52) return std::log2(v.convert_to<double>());
  // Keep the top 53 bits so the mantissa stays exact in double.
  const unsigned shift = bits - 52;
  const BigInt top = v >> shift;
  return std::log2(top.convert_to<double>()) + static_cast<double>(shift);
}

double log2_rat(const Rat& r) {
  if (r < 0) fail(ErrorCode::Domain, "log2 of negative value");
  if (r == 0) return -std::numeric_limits<double>::infinity();
  return log2_bigint(boost::multiprecision::numerator(r)) -
         log2_bigint(boost::multiprecision::denominator(r));
}

Rat parse_rational(const std::string& token) {
  auto is_int = [](const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
  };
  // big-integer construction rejects an explicit plus sign
  auto strip_plus = [](const std::string& s) {
    return s[0] == '+' ? s.substr(1) : s;
  };
  const std::size_t slash = token.find('/');
  try {
    if (slash == std::string::npos) {
      if (!is_int(token)) fail(ErrorCode::Parse, "bad rational '" + token + "'");
      return Rat(BigInt(strip_plus(token)));
    }
    const std::string num = token.substr(0, slash);
    const std::string den = token.substr(slash + 1);
    if (!is_int(num) || !is_int(den))
      fail(ErrorCode::Parse, "bad rational '" + token + "'");
    const BigInt d(strip_plus(den));
    if (d == 0) fail(ErrorCode::Parse, "zero denominator in '" + token + "'");
    return Rat(BigInt(strip_plus(num)), d);
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    fail(ErrorCode::Parse, "bad rational '" + token + "'");
  }
}

std::string rat_to_string(const Rat& r) {
  const BigInt num = boost::multiprecision::numerator(r);
  const BigInt den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

}  // namespace qif
