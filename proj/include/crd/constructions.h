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

#ifndef CRD_CONSTRUCTIONS_H_
#define CRD_CONSTRUCTIONS_H_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "crd/design.h"

namespace crd {

// Lines of AG(2, n). Points (x, y) are numbered x*n + y in canonical field
// order. Class 0 holds the vertical lines x = c; class 1 + s holds the lines
// y = s*x + c for the s-th field element. For n = 3 this is exactly the
// 12-block design with classes {123|456|789}, {147|258|369}, ...
Resolution AffinePlane(std::uint32_t n, const SizeCaps& caps = {});

// Hyperplanes of AG(m, q). Points are coordinate vectors numbered most
// significant coordinate first. One class per normal direction (normals with
// leading nonzero coordinate 1, canonical order); within a class the blocks
// are a.x = c for c in canonical order.
Resolution AffineGeometryDesign(std::uint32_t q, unsigned m, const SizeCaps& caps = {});

// Normalized Hadamard matrix of the given order by Sylvester doubling or
// Paley type I. Row 0 and column 0 are all +1.
std::vector<std::vector<int>> NormalizedHadamard(std::uint32_t order, const SizeCaps& caps = {});

// Rows 1..4m-1 of the normalized order-4m Hadamard matrix, each split into its
// +1 block and its -1 block (in that order) forming one parallel class.
Resolution HadamardDesign(std::uint32_t m, const SizeCaps& caps = {});

// The hand-built designs used throughout the comparisons, ids 1..9. Example 8
// is only known by its parameters; it is realized on {0,1,2}^3 with class i
// grouping points by their i-th ternary coordinate.
Resolution CatalogExample(int id);

struct ConstructionSpec {
  enum class Family { kAffinePlane, kAffineGeometry, kHadamard, kExample };

  Family family = Family::kAffinePlane;
  std::uint32_t n = 0;   // affine plane order
  std::uint32_t q = 0;   // AG field order
  unsigned m = 0;        // AG dimension or Hadamard order parameter
  int example_id = 0;

  // "affine:n=3", "ag:q=2,m=3", "hadamard:m=2", "example:4".
  static ConstructionSpec Parse(std::string_view text);
  std::string ToString() const;
};

Resolution Construct(const ConstructionSpec& spec, const SizeCaps& caps = {});

// Parameters a construction is expected to produce.
struct ExpectedParameters {
  std::uint64_t v = 0, b = 0, r = 0, k = 0;
  std::map<std::size_t, std::uint64_t> mu;
};

ExpectedParameters PredictedParameters(const ConstructionSpec& spec);

}  // namespace crd

#endif  // CRD_CONSTRUCTIONS_H_
