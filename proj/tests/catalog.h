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

#ifndef CRD_TESTS_CATALOG_H_
#define CRD_TESTS_CATALOG_H_

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "crd/constructions.h"
#include "crd/design.h"

namespace crd::testing {

// Spec strings of every small design the suites sweep over.
inline std::vector<std::string> CatalogSpecs() {
  std::vector<std::string> specs;
  for (int e = 1; e <= 9; ++e) specs.push_back("example:" + std::to_string(e));
  for (int n : {2, 3, 4, 5}) specs.push_back("affine:n=" + std::to_string(n));
  specs.push_back("ag:q=3,m=2");
  specs.push_back("ag:q=2,m=3");
  specs.push_back("ag:q=3,m=3");
  for (int m : {1, 2, 3}) specs.push_back("hadamard:m=" + std::to_string(m));
  return specs;
}

inline Resolution Build(const std::string& spec) { return Construct(ConstructionSpec::Parse(spec)); }

// A resolution with r classes, each a random partition of v points into
// blocks of size k.
inline Resolution RandomResolution(std::mt19937_64& rng, std::size_t v, std::size_t k,
                                   std::size_t r) {
  std::vector<std::vector<std::size_t>> blocks;
  std::vector<std::vector<std::size_t>> classes;
  std::vector<std::size_t> points(v);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t p = 0; p < v; ++p) points[p] = p;
    std::shuffle(points.begin(), points.end(), rng);
    auto& cls = classes.emplace_back();
    for (std::size_t start = 0; start < v; start += k) {
      cls.push_back(blocks.size());
      blocks.emplace_back(points.begin() + start, points.begin() + start + k);
    }
  }
  return ValidateResolution(ValidateDesign(v, blocks), classes);
}

// Same design with points renamed by `perm` and blocks reordered by
// `block_perm` (new index of old block j is block_perm[j]).
inline Resolution Relabel(const Resolution& res, const std::vector<std::size_t>& perm,
                          const std::vector<std::size_t>& block_perm) {
  std::vector<std::vector<std::size_t>> blocks(res.num_blocks());
  for (std::size_t j = 0; j < res.num_blocks(); ++j) {
    for (std::size_t p : res.design().block(j)) blocks[block_perm[j]].push_back(perm[p]);
  }
  std::vector<std::vector<std::size_t>> classes;
  for (const auto& cls : res.classes()) {
    auto& out = classes.emplace_back();
    for (std::size_t j : cls) out.push_back(block_perm[j]);
  }
  return ValidateResolution(ValidateDesign(res.num_points(), blocks), classes);
}

inline std::vector<std::size_t> RandomPermutation(std::mt19937_64& rng, std::size_t n) {
  std::vector<std::size_t> p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = i;
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

}  // namespace crd::testing

#endif  // CRD_TESTS_CATALOG_H_
