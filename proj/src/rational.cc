// Copyright 2026 The crdcache Authors
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

#include "crd/rational.h"

#include <cstdio>
#include <limits>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "crd/error.h"

namespace crd {

BigInt Binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

std::uint64_t SmallBinomial(std::uint64_t n, std::uint64_t k) {
  BigInt value = Binomial(n, k);
  if (value > std::numeric_limits<std::uint64_t>::max()) {
    throw Error(ErrorCode::kSizeCapExceeded, "binomial coefficient exceeds 64 bits");
  }
  return value.convert_to<std::uint64_t>();
}

std::uint64_t IntPow(std::uint64_t base, unsigned exp) {
  std::uint64_t result = 1;
  for (unsigned i = 0; i < exp; ++i) {
    if (base != 0 && result > std::numeric_limits<std::uint64_t>::max() / base) {
      throw Error(ErrorCode::kSizeCapExceeded, "integer power exceeds 64 bits");
    }
    result *= base;
  }
  return result;
}

std::string ToFraction(const Rational& value) {
  const BigInt& num = boost::multiprecision::numerator(value);
  const BigInt& den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

namespace {

using Float = boost::multiprecision::cpp_bin_float_50;

std::string Format12(const Float& value) {
  // %.12g on a long double; the 50-digit intermediate keeps huge binomials
  // from rounding twice.
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12Lg", value.convert_to<long double>());
  return buf;
}

}  // namespace

std::string ToDecimal(const Rational& value) {
  Float num(boost::multiprecision::numerator(value));
  Float den(boost::multiprecision::denominator(value));
  return Format12(num / den);
}

std::string ToDecimal(const BigInt& value) { return Format12(Float(value)); }

Rational ParseRational(const std::string& text) {
  try {
    auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(BigInt(text));
    BigInt num(text.substr(0, slash));
    BigInt den(text.substr(slash + 1));
    if (den == 0) throw Error(ErrorCode::kParseError, "zero denominator in '" + text + "'");
    return Rational(num, den);
  } catch (const std::runtime_error& e) {
    if (dynamic_cast<const Error*>(&e)) throw;
    throw Error(ErrorCode::kParseError, "not a rational: '" + text + "'");
  }
}

}  // namespace crd
