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

#ifndef CRD_RATIONAL_H_
#define CRD_RATIONAL_H_

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace crd {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational MakeRational(std::int64_t num, std::int64_t den = 1) {
  return Rational(BigInt(num), BigInt(den));
}

// Exact binomial coefficient; zero when k > n.
BigInt Binomial(std::uint64_t n, std::uint64_t k);

// Binomial that must fit in 64 bits (throws kSizeCapExceeded otherwise).
std::uint64_t SmallBinomial(std::uint64_t n, std::uint64_t k);

// Checked integer power.
std::uint64_t IntPow(std::uint64_t base, unsigned exp);

// "p/q", or "p" when the denominator is one.
std::string ToFraction(const Rational& value);

// Twelve significant digits, plot-ready.
std::string ToDecimal(const Rational& value);
std::string ToDecimal(const BigInt& value);

// Parses "p/q" or "p".
Rational ParseRational(const std::string& text);

}  // namespace crd

#endif  // CRD_RATIONAL_H_
