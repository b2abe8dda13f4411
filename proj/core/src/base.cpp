// Copyright 2026 The eqknot Authors
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

#include "eqknot/base.hpp"

#include <limits>

namespace eqknot {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "INVALID_ARGUMENT";
    case ErrorCode::kSchema: return "SCHEMA";
    case ErrorCode::kNotSymmetric: return "NOT_SYMMETRIC";
    case ErrorCode::kLoopEdge: return "LOOP_EDGE";
    case ErrorCode::kDisconnected: return "DISCONNECTED";
    case ErrorCode::kNotAutomorphism: return "NOT_AUTOMORPHISM";
    case ErrorCode::kInconsistentSignature: return "INCONSISTENT_SIGNATURE";
    case ErrorCode::kNotDefinite: return "NOT_DEFINITE";
    case ErrorCode::kNotInvolution: return "NOT_INVOLUTION";
    case ErrorCode::kNotIsometry: return "NOT_ISOMETRY";
    case ErrorCode::kOutOfRange: return "OUT_OF_RANGE";
    case ErrorCode::kDimensionMismatch: return "DIMENSION_MISMATCH";
    case ErrorCode::kIo: return "IO";
  }
  return "UNKNOWN";
}

std::int64_t ToInt64(const BigInt& value) {
  if (value > std::numeric_limits<std::int64_t>::max() ||
      value < std::numeric_limits<std::int64_t>::min()) {
    throw Error(ErrorCode::kOutOfRange,
                "integer does not fit in 64 bits: " + value.str());
  }
  return value.convert_to<std::int64_t>();
}

BigInt Ceil(const Rational& q) {
  const BigInt num = boost::multiprecision::numerator(q);
  const BigInt den = boost::multiprecision::denominator(q);
  BigInt quotient = num / den;  // truncates toward zero
  if (quotient * den != num && num > 0) ++quotient;
  return quotient;
}

std::string RationalToString(const Rational& q) {
  const BigInt den = boost::multiprecision::denominator(q);
  if (den == 1) return boost::multiprecision::numerator(q).str();
  return boost::multiprecision::numerator(q).str() + "/" + den.str();
}

namespace {

BigInt ParseInteger(std::string_view text, std::string_view whole) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
    negative = text[pos] == '-';
    ++pos;
  }
  if (pos == text.size()) {
    throw Error(ErrorCode::kInvalidArgument,
                "malformed rational: '" + std::string(whole) + "'");
  }
  BigInt value = 0;
  for (; pos < text.size(); ++pos) {
    if (text[pos] < '0' || text[pos] > '9') {
      throw Error(ErrorCode::kInvalidArgument,
                  "malformed rational: '" + std::string(whole) + "'");
    }
    value = value * 10 + (text[pos] - '0');
  }
  return negative ? BigInt(-value) : value;
}

}  // namespace

Rational ParseRational(std::string_view text) {
  const std::size_t slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(ParseInteger(text, text));
  const BigInt num = ParseInteger(text.substr(0, slash), text);
  const BigInt den = ParseInteger(text.substr(slash + 1), text);
  if (den == 0) {
    throw Error(ErrorCode::kInvalidArgument,
                "zero denominator: '" + std::string(text) + "'");
  }
  return Rational(num, den);
}

}  // namespace eqknot
