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

#ifndef CRD_GALOIS_FIELD_H_
#define CRD_GALOIS_FIELD_H_

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

namespace crd {

// An element of GF(p^e) in canonical encoding: the polynomial
// c_0 + c_1 x + ... + c_{e-1} x^{e-1} is stored as sum c_i p^i. The integer
// order of encodings is the canonical element order used for point numbering.
class FieldElement {
 public:
  constexpr FieldElement() = default;
  constexpr explicit FieldElement(std::uint32_t value) : value_(value) {}

  constexpr std::uint32_t value() const { return value_; }
  constexpr bool is_zero() const { return value_ == 0; }

  friend constexpr auto operator<=>(FieldElement, FieldElement) = default;

 private:
  std::uint32_t value_ = 0;
};

class GaloisField {
 public:
  // Throws kNotAPrimePower, kUnsupportedDegree (no built-in modulus), or
  // kSizeCapExceeded when order > max_order.
  static GaloisField Create(std::uint32_t order, std::uint32_t max_order = 4096);

  std::uint32_t order() const { return order_; }
  std::uint32_t characteristic() const { return characteristic_; }
  unsigned degree() const { return degree_; }

  // Monic modulus, coefficients low to high; {0, 1} for prime fields.
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  FieldElement zero() const { return FieldElement(0); }
  FieldElement one() const { return FieldElement(1); }
  FieldElement FromInt(std::uint32_t value) const;

  FieldElement Add(FieldElement a, FieldElement b) const;
  FieldElement Sub(FieldElement a, FieldElement b) const;
  FieldElement Neg(FieldElement a) const;
  FieldElement Mul(FieldElement a, FieldElement b) const;
  // Throws kInvalidArgument on zero.
  FieldElement Inv(FieldElement a) const;
  FieldElement Div(FieldElement a, FieldElement b) const { return Mul(a, Inv(b)); }

  // 1 for nonzero squares, -1 for non-squares, 0 for zero.
  int QuadraticCharacter(FieldElement a) const;

  std::vector<std::uint32_t> Coefficients(FieldElement a) const;
  FieldElement FromCoefficients(std::span<const std::uint32_t> coefficients) const;

  // All q elements in canonical order.
  std::vector<FieldElement> Elements() const;

 private:
  GaloisField() = default;

  std::uint32_t order_ = 0;
  std::uint32_t characteristic_ = 0;
  unsigned degree_ = 0;
  std::vector<std::uint32_t> modulus_;
  // Discrete log tables relative to a fixed primitive element.
  std::vector<std::uint32_t> exp_;
  std::vector<std::uint32_t> log_;
};

// p and e with q = p^e, or throws kNotAPrimePower.
struct PrimePower {
  std::uint32_t prime;
  unsigned exponent;
};
PrimePower FactorPrimePower(std::uint32_t q);
bool IsPrimePower(std::uint32_t q);

}  // namespace crd

#endif  // CRD_GALOIS_FIELD_H_
