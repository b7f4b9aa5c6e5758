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

#include "crd/galois_field.h"

#include <algorithm>
#include <array>
#include <string>

#include "crd/error.h"

namespace crd {
namespace {

struct ModulusEntry {
  std::uint32_t prime;
  unsigned degree;
  std::array<std::uint32_t, 13> coefficients;  // low to high, monic
};

// Conway polynomials. Each is primitive, so x generates the multiplicative
// group.
constexpr ModulusEntry kModuli[] = {
    {2, 2, {1, 1, 1}},
    {2, 3, {1, 1, 0, 1}},
    {2, 4, {1, 1, 0, 0, 1}},
    {2, 5, {1, 0, 1, 0, 0, 1}},
    {2, 6, {1, 1, 0, 1, 1, 0, 1}},
    {2, 7, {1, 1, 0, 0, 0, 0, 0, 1}},
    {2, 8, {1, 0, 1, 1, 1, 0, 0, 0, 1}},
    {2, 9, {1, 0, 0, 0, 1, 0, 0, 0, 0, 1}},
    {2, 10, {1, 1, 1, 1, 0, 1, 1, 0, 0, 0, 1}},
    {2, 11, {1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1}},
    {2, 12, {1, 1, 0, 1, 0, 1, 1, 1, 0, 0, 0, 0, 1}},
    {3, 2, {2, 2, 1}},
    {3, 3, {1, 2, 0, 1}},
    {3, 4, {2, 0, 0, 2, 1}},
    {3, 5, {1, 2, 0, 0, 0, 1}},
    {3, 6, {2, 2, 1, 0, 2, 0, 1}},
    {3, 7, {1, 0, 2, 0, 0, 0, 0, 1}},
    {5, 2, {2, 4, 1}},
    {5, 3, {3, 3, 0, 1}},
    {5, 4, {2, 4, 4, 0, 1}},
    {5, 5, {3, 4, 0, 0, 0, 1}},
    {7, 2, {3, 6, 1}},
    {7, 3, {4, 0, 6, 1}},
    {7, 4, {3, 4, 5, 0, 1}},
    {11, 2, {2, 7, 1}},
    {11, 3, {9, 2, 0, 1}},
    {13, 2, {2, 12, 1}},
    {13, 3, {11, 2, 0, 1}},
    {17, 2, {3, 16, 1}},
    {19, 2, {2, 18, 1}},
    {23, 2, {5, 21, 1}},
    {29, 2, {2, 24, 1}},
    {31, 2, {3, 29, 1}},
    {37, 2, {2, 33, 1}},
    {41, 2, {6, 38, 1}},
    {43, 2, {3, 42, 1}},
    {47, 2, {5, 45, 1}},
    {53, 2, {2, 49, 1}},
    {59, 2, {2, 58, 1}},
    {61, 2, {2, 60, 1}},
};

}  // namespace

PrimePower FactorPrimePower(std::uint32_t q) {
  if (q < 2) throw Error(ErrorCode::kNotAPrimePower, std::to_string(q) + " is not a prime power");
  std::uint32_t p = 2;
  while (q % p != 0) ++p;
  unsigned e = 0;
  std::uint32_t rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++e;
  }
  if (rest != 1) throw Error(ErrorCode::kNotAPrimePower, std::to_string(q) + " is not a prime power");
  return {p, e};
}

bool IsPrimePower(std::uint32_t q) {
  try {
    FactorPrimePower(q);
    return true;
  } catch (const Error&) {
    return false;
  }
}

GaloisField GaloisField::Create(std::uint32_t order, std::uint32_t max_order) {
  const PrimePower pp = FactorPrimePower(order);
  if (order > max_order) {
    throw Error(ErrorCode::kSizeCapExceeded, "field order " + std::to_string(order) +
                                                 " exceeds cap " + std::to_string(max_order));
  }

  GaloisField field;
  field.order_ = order;
  field.characteristic_ = pp.prime;
  field.degree_ = pp.exponent;
  if (pp.exponent == 1) {
    field.modulus_ = {0, 1};
  } else {
    auto it = std::find_if(std::begin(kModuli), std::end(kModuli), [&](const ModulusEntry& m) {
      return m.prime == pp.prime && m.degree == pp.exponent;
    });
    if (it == std::end(kModuli)) {
      throw Error(ErrorCode::kUnsupportedDegree,
                  "no built-in modulus for GF(" + std::to_string(pp.prime) + "^" +
                      std::to_string(pp.exponent) + ")");
    }
    field.modulus_.assign(it->coefficients.begin(), it->coefficients.begin() + pp.exponent + 1);
  }

  // Schoolbook product, used only to build the log tables. The first element
  // of multiplicative order q-1 becomes the table generator.
  auto slow_mul = [&](std::uint32_t a, std::uint32_t b) {
    const std::uint32_t p = pp.prime;
    const unsigned e = pp.exponent;
    if (e == 1) return static_cast<std::uint32_t>((std::uint64_t{a} * b) % p);
    std::vector<std::uint32_t> ca(e), cb(e), prod(2 * e - 1, 0);
    for (unsigned i = 0; i < e; ++i, a /= p, b /= p) {
      ca[i] = a % p;
      cb[i] = b % p;
    }
    for (unsigned i = 0; i < e; ++i)
      for (unsigned j = 0; j < e; ++j) prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p;
    for (unsigned d = 2 * e - 2; d >= e; --d) {
      const std::uint32_t c = prod[d];
      if (c == 0) continue;
      for (unsigned i = 0; i <= e; ++i) {
        prod[d - e + i] = (prod[d - e + i] + (p - c) * field.modulus_[i]) % p;
      }
    }
    std::uint32_t out = 0;
    for (unsigned i = e; i-- > 0;) out = out * p + prod[i];
    return out;
  };

  field.exp_.assign(order - 1, 0);
  field.log_.assign(order, 0);
  field.exp_[0] = 1;
  for (std::uint32_t g = 2; g < order; ++g) {
    std::uint32_t x = g;
    std::uint32_t period = 1;
    while (x != 1) {
      x = slow_mul(x, g);
      ++period;
    }
    if (period != order - 1) continue;
    x = 1;
    for (std::uint32_t i = 0; i + 1 < order; ++i) {
      field.exp_[i] = x;
      field.log_[x] = i;
      x = slow_mul(x, g);
    }
    break;
  }
  return field;
}

FieldElement GaloisField::FromInt(std::uint32_t value) const {
  if (value >= order_) {
    throw Error(ErrorCode::kInvalidArgument,
                std::to_string(value) + " is not an element of GF(" + std::to_string(order_) + ")");
  }
  return FieldElement(value);
}

FieldElement GaloisField::Add(FieldElement a, FieldElement b) const {
  if (characteristic_ == 2) return FieldElement(a.value() ^ b.value());
  std::uint32_t x = a.value(), y = b.value(), out = 0, place = 1;
  for (unsigned i = 0; i < degree_; ++i) {
    out += ((x % characteristic_ + y % characteristic_) % characteristic_) * place;
    x /= characteristic_;
    y /= characteristic_;
    place *= characteristic_;
  }
  return FieldElement(out);
}

FieldElement GaloisField::Neg(FieldElement a) const {
  if (characteristic_ == 2) return a;
  std::uint32_t x = a.value(), out = 0, place = 1;
  for (unsigned i = 0; i < degree_; ++i) {
    out += ((characteristic_ - x % characteristic_) % characteristic_) * place;
    x /= characteristic_;
    place *= characteristic_;
  }
  return FieldElement(out);
}

FieldElement GaloisField::Sub(FieldElement a, FieldElement b) const { return Add(a, Neg(b)); }

FieldElement GaloisField::Mul(FieldElement a, FieldElement b) const {
  if (a.is_zero() || b.is_zero()) return zero();
  const std::uint32_t n = order_ - 1;
  return FieldElement(exp_[(log_[a.value()] + log_[b.value()]) % n]);
}

FieldElement GaloisField::Inv(FieldElement a) const {
  if (a.is_zero()) throw Error(ErrorCode::kInvalidArgument, "zero has no inverse");
  const std::uint32_t n = order_ - 1;
  return FieldElement(exp_[(n - log_[a.value()]) % n]);
}

int GaloisField::QuadraticCharacter(FieldElement a) const {
  if (a.is_zero()) return 0;
  if (characteristic_ == 2) return 1;
  return log_[a.value()] % 2 == 0 ? 1 : -1;
}

std::vector<std::uint32_t> GaloisField::Coefficients(FieldElement a) const {
  std::vector<std::uint32_t> out(degree_);
  std::uint32_t x = a.value();
  for (unsigned i = 0; i < degree_; ++i, x /= characteristic_) out[i] = x % characteristic_;
  return out;
}

FieldElement GaloisField::FromCoefficients(std::span<const std::uint32_t> coefficients) const {
  if (coefficients.size() != degree_) {
    throw Error(ErrorCode::kInvalidArgument, "expected " + std::to_string(degree_) + " coefficients");
  }
  std::uint32_t out = 0;
  for (std::size_t i = coefficients.size(); i-- > 0;) {
    if (coefficients[i] >= characteristic_) {
      throw Error(ErrorCode::kInvalidArgument, "coefficient outside the prime field");
    }
    out = out * characteristic_ + coefficients[i];
  }
  return FieldElement(out);
}

std::vector<FieldElement> GaloisField::Elements() const {
  std::vector<FieldElement> out;
  out.reserve(order_);
  for (std::uint32_t i = 0; i < order_; ++i) out.emplace_back(i);
  return out;
}

}  // namespace crd
