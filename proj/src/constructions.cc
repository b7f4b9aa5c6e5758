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

#include "crd/constructions.h"

#include <algorithm>
#include <charconv>
#include <string>

#include "crd/error.h"
#include "crd/galois_field.h"
#include "crd/rational.h"

namespace crd {
namespace {

using Blocks = std::vector<std::vector<std::size_t>>;

Resolution FromOneBased(std::size_t v, const Blocks& blocks, const Blocks& classes) {
  Blocks b0 = blocks, c0 = classes;
  for (auto& blk : b0)
    for (auto& p : blk) --p;
  for (auto& cls : c0)
    for (auto& j : cls) --j;
  return ValidateResolution(ValidateDesign(v, std::move(b0)), std::move(c0));
}

std::uint32_t CheckedPointCount(std::uint32_t q, unsigned m, const SizeCaps& caps) {
  std::uint64_t v = 1;
  for (unsigned i = 0; i < m; ++i) {
    v *= q;
    if (v > caps.max_points) {
      throw Error(ErrorCode::kSizeCapExceeded,
                  std::to_string(q) + "^" + std::to_string(m) + " points exceed the cap " +
                      std::to_string(caps.max_points));
    }
  }
  return static_cast<std::uint32_t>(v);
}

}  // namespace

Resolution AffinePlane(std::uint32_t n, const SizeCaps& caps) {
  CheckedPointCount(n, 2, caps);
  const GaloisField field = GaloisField::Create(n, static_cast<std::uint32_t>(caps.max_points));
  auto point = [n](FieldElement x, FieldElement y) -> std::size_t {
    return std::size_t{x.value()} * n + y.value();
  };

  Blocks blocks;
  Blocks classes;
  std::vector<std::size_t> vertical;
  for (FieldElement c : field.Elements()) {
    std::vector<std::size_t> line;
    for (FieldElement y : field.Elements()) line.push_back(point(c, y));
    vertical.push_back(blocks.size());
    blocks.push_back(std::move(line));
  }
  classes.push_back(std::move(vertical));
  for (FieldElement slope : field.Elements()) {
    std::vector<std::size_t> cls;
    for (FieldElement c : field.Elements()) {
      std::vector<std::size_t> line;
      for (FieldElement x : field.Elements()) {
        line.push_back(point(x, field.Add(field.Mul(slope, x), c)));
      }
      cls.push_back(blocks.size());
      blocks.push_back(std::move(line));
    }
    classes.push_back(std::move(cls));
  }
  return ValidateResolution(ValidateDesign(std::size_t{n} * n, std::move(blocks), caps),
                            std::move(classes));
}

Resolution AffineGeometryDesign(std::uint32_t q, unsigned m, const SizeCaps& caps) {
  if (m < 2) throw Error(ErrorCode::kInvalidArgument, "AG dimension must be at least 2");
  FactorPrimePower(q);
  const std::uint32_t v = CheckedPointCount(q, m, caps);
  const GaloisField field = GaloisField::Create(q, static_cast<std::uint32_t>(caps.max_points));

  // Coordinates of point index t, most significant first.
  auto coords = [&](std::uint32_t t) {
    std::vector<FieldElement> x(m);
    for (unsigned i = m; i-- > 0; t /= q) x[i] = FieldElement(t % q);
    return x;
  };

  Blocks blocks;
  Blocks classes;
  for (std::uint32_t normal_index = 1; normal_index < v; ++normal_index) {
    const auto normal = coords(normal_index);
    const auto lead = std::find_if(normal.begin(), normal.end(),
                                   [](FieldElement e) { return !e.is_zero(); });
    if (*lead != field.one()) continue;

    std::vector<std::vector<std::size_t>> by_value(q);
    for (std::uint32_t t = 0; t < v; ++t) {
      const auto x = coords(t);
      FieldElement dot = field.zero();
      for (unsigned i = 0; i < m; ++i) dot = field.Add(dot, field.Mul(normal[i], x[i]));
      by_value[dot.value()].push_back(t);
    }
    std::vector<std::size_t> cls;
    for (auto& block : by_value) {
      cls.push_back(blocks.size());
      blocks.push_back(std::move(block));
    }
    classes.push_back(std::move(cls));
  }
  return ValidateResolution(ValidateDesign(v, std::move(blocks), caps), std::move(classes));
}

std::vector<std::vector<int>> NormalizedHadamard(std::uint32_t order, const SizeCaps& caps) {
  if (order == 0 || order > caps.max_points) {
    throw Error(ErrorCode::kNoConstructionAvailable,
                "Hadamard order " + std::to_string(order) + " outside supported range");
  }
  std::vector<std::vector<int>> h;
  if ((order & (order - 1)) == 0) {
    h = {{1}};
    while (h.size() < order) {
      const std::size_t n = h.size();
      std::vector<std::vector<int>> next(2 * n, std::vector<int>(2 * n));
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          next[i][j] = h[i][j];
          next[i][j + n] = h[i][j];
          next[i + n][j] = h[i][j];
          next[i + n][j + n] = -h[i][j];
        }
      }
      h = std::move(next);
    }
  } else {
    const std::uint32_t q = order - 1;
    if (order % 4 != 0 || !IsPrimePower(q) || q % 4 != 3) {
      throw Error(ErrorCode::kNoConstructionAvailable,
                  "no Sylvester or Paley I Hadamard matrix of order " + std::to_string(order));
    }
    const GaloisField field = GaloisField::Create(q, static_cast<std::uint32_t>(caps.max_points));
    h.assign(order, std::vector<int>(order, 0));
    h[0][0] = 1;
    for (std::uint32_t j = 1; j < order; ++j) {
      h[0][j] = 1;
      h[j][0] = -1;
    }
    for (std::uint32_t i = 0; i < q; ++i) {
      for (std::uint32_t j = 0; j < q; ++j) {
        const int chi = field.QuadraticCharacter(field.Sub(FieldElement(i), FieldElement(j)));
        h[i + 1][j + 1] = (i == j) ? 1 : chi;
      }
    }
  }

  const std::size_t n = h.size();
  for (std::size_t j = 0; j < n; ++j) {
    if (h[0][j] < 0)
      for (std::size_t i = 0; i < n; ++i) h[i][j] = -h[i][j];
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (h[i][0] < 0)
      for (std::size_t j = 0; j < n; ++j) h[i][j] = -h[i][j];
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      long dot = 0;
      for (std::size_t j = 0; j < n; ++j) dot += h[a][j] * h[b][j];
      if (dot != 0) {
        throw Error(ErrorCode::kNoConstructionAvailable,
                    "rows " + std::to_string(a) + " and " + std::to_string(b) +
                        " of the order-" + std::to_string(order) + " matrix are not orthogonal");
      }
    }
  }
  return h;
}

Resolution HadamardDesign(std::uint32_t m, const SizeCaps& caps) {
  if (m == 0) throw Error(ErrorCode::kNoConstructionAvailable, "Hadamard parameter m must be >= 1");
  const std::uint32_t order = 4 * m;
  const auto h = NormalizedHadamard(order, caps);
  Blocks blocks;
  Blocks classes;
  for (std::size_t i = 1; i < order; ++i) {
    std::vector<std::size_t> plus, minus;
    for (std::size_t j = 0; j < order; ++j) (h[i][j] > 0 ? plus : minus).push_back(j);
    classes.push_back({blocks.size(), blocks.size() + 1});
    blocks.push_back(std::move(plus));
    blocks.push_back(std::move(minus));
  }
  return ValidateResolution(ValidateDesign(order, std::move(blocks), caps), std::move(classes));
}

Resolution CatalogExample(int id) {
  switch (id) {
    case 1:
      return FromOneBased(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}},
                          {{1, 6}, {2, 5}, {3, 4}});
    case 2:
      return FromOneBased(6, {{1, 2, 3}, {4, 5, 6}, {1, 4, 5}, {2, 3, 6}}, {{1, 2}, {3, 4}});
    case 3:
      return FromOneBased(9, {{1, 2, 3}, {4, 5, 6}, {7, 8, 9}, {1, 4, 7}, {2, 5, 8}, {3, 6, 9}},
                          {{1, 2, 3}, {4, 5, 6}});
    case 4:
      return FromOneBased(8,
                          {{1, 2, 3, 4}, {5, 6, 7, 8}, {1, 2, 5, 6}, {3, 4, 7, 8},
                           {1, 3, 5, 7}, {2, 4, 6, 8}},
                          {{1, 2}, {3, 4}, {5, 6}});
    case 5:
      return FromOneBased(12,
                          {{1, 2, 3, 4, 5, 6},
                           {7, 8, 9, 10, 11, 12},
                           {1, 2, 3, 7, 8, 9},
                           {4, 5, 6, 10, 11, 12}},
                          {{1, 2}, {3, 4}});
    case 6:
      return FromOneBased(9,
                          {{1, 2, 3}, {4, 5, 6}, {7, 8, 9}, {1, 4, 7}, {2, 5, 8}, {3, 6, 9},
                           {1, 5, 9}, {2, 6, 7}, {3, 4, 8}, {1, 6, 8}, {2, 4, 9}, {3, 5, 7}},
                          {{1, 2, 3}, {4, 5, 6}, {7, 8, 9}, {10, 11, 12}});
    case 7:
      return FromOneBased(8,
                          {{1, 2, 3, 4}, {5, 6, 7, 8}, {1, 2, 5, 6}, {1, 3, 5, 7},
                           {2, 4, 6, 8}, {3, 4, 7, 8}, {1, 4, 5, 8}, {2, 3, 6, 7}},
                          {{1, 2}, {3, 6}, {5, 4}, {7, 8}});
    case 8: {
      // Points are the ternary triples (x0, x1, x2), numbered 9*x0 + 3*x1 + x2.
      Blocks blocks;
      Blocks classes;
      const std::size_t weights[3] = {9, 3, 1};
      for (std::size_t axis = 0; axis < 3; ++axis) {
        std::vector<std::size_t> cls;
        for (std::size_t value = 0; value < 3; ++value) {
          std::vector<std::size_t> block;
          for (std::size_t p = 0; p < 27; ++p) {
            if ((p / weights[axis]) % 3 == value) block.push_back(p);
          }
          cls.push_back(blocks.size());
          blocks.push_back(std::move(block));
        }
        classes.push_back(std::move(cls));
      }
      return ValidateResolution(ValidateDesign(27, std::move(blocks)), std::move(classes));
    }
    case 9:
      return FromOneBased(16,
                          {{1, 2, 3, 4, 5, 6, 7, 8},
                           {9, 10, 11, 12, 13, 14, 15, 16},
                           {1, 2, 3, 4, 9, 10, 11, 12},
                           {5, 6, 7, 8, 13, 14, 15, 16},
                           {1, 2, 5, 6, 9, 10, 13, 14},
                           {3, 4, 7, 8, 11, 12, 15, 16},
                           {1, 3, 5, 7, 9, 11, 13, 15},
                           {2, 4, 6, 8, 10, 12, 14, 16}},
                          {{1, 2}, {3, 4}, {5, 6}, {7, 8}});
    default:
      throw Error(ErrorCode::kUnknownExample, "no catalog example " + std::to_string(id));
  }
}

namespace {

std::uint64_t ParseUnsigned(std::string_view text, std::string_view context) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    throw Error(ErrorCode::kParseError,
                "expected an unsigned integer for " + std::string(context) + ", got '" +
                    std::string(text) + "'");
  }
  return value;
}

std::map<std::string, std::uint64_t, std::less<>> ParseKeyValues(std::string_view text) {
  std::map<std::string, std::uint64_t, std::less<>> out;
  while (!text.empty()) {
    const auto comma = text.find(',');
    const std::string_view item = text.substr(0, comma);
    const auto eq = item.find('=');
    if (eq == std::string_view::npos) {
      throw Error(ErrorCode::kParseError, "expected key=value, got '" + std::string(item) + "'");
    }
    const std::string key(item.substr(0, eq));
    out[key] = ParseUnsigned(item.substr(eq + 1), key);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

std::uint64_t Require(const std::map<std::string, std::uint64_t, std::less<>>& kv,
                      std::string_view key, std::string_view spec) {
  auto it = kv.find(key);
  if (it == kv.end()) {
    throw Error(ErrorCode::kParseError,
                "construction '" + std::string(spec) + "' is missing " + std::string(key));
  }
  return it->second;
}

}  // namespace

ConstructionSpec ConstructionSpec::Parse(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw Error(ErrorCode::kParseError, "construction spec needs 'family:params', got '" +
                                            std::string(text) + "'");
  }
  const std::string_view family = text.substr(0, colon);
  const std::string_view params = text.substr(colon + 1);
  ConstructionSpec spec;
  if (family == "example") {
    spec.family = Family::kExample;
    spec.example_id = static_cast<int>(ParseUnsigned(params, "example id"));
    return spec;
  }
  const auto kv = ParseKeyValues(params);
  if (family == "affine") {
    spec.family = Family::kAffinePlane;
    spec.n = static_cast<std::uint32_t>(Require(kv, "n", text));
  } else if (family == "ag") {
    spec.family = Family::kAffineGeometry;
    spec.q = static_cast<std::uint32_t>(Require(kv, "q", text));
    spec.m = static_cast<unsigned>(Require(kv, "m", text));
  } else if (family == "hadamard") {
    spec.family = Family::kHadamard;
    spec.m = static_cast<unsigned>(Require(kv, "m", text));
  } else {
    throw Error(ErrorCode::kParseError, "unknown construction family '" + std::string(family) + "'");
  }
  return spec;
}

std::string ConstructionSpec::ToString() const {
  switch (family) {
    case Family::kAffinePlane: return "affine:n=" + std::to_string(n);
    case Family::kAffineGeometry: return "ag:q=" + std::to_string(q) + ",m=" + std::to_string(m);
    case Family::kHadamard: return "hadamard:m=" + std::to_string(m);
    case Family::kExample: return "example:" + std::to_string(example_id);
  }
  return {};
}

Resolution Construct(const ConstructionSpec& spec, const SizeCaps& caps) {
  switch (spec.family) {
    case ConstructionSpec::Family::kAffinePlane: return AffinePlane(spec.n, caps);
    case ConstructionSpec::Family::kAffineGeometry: return AffineGeometryDesign(spec.q, spec.m, caps);
    case ConstructionSpec::Family::kHadamard: return HadamardDesign(spec.m, caps);
    case ConstructionSpec::Family::kExample: return CatalogExample(spec.example_id);
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown construction family");
}

ExpectedParameters PredictedParameters(const ConstructionSpec& spec) {
  switch (spec.family) {
    case ConstructionSpec::Family::kAffinePlane: {
      const std::uint64_t n = spec.n;
      return {n * n, n * (n + 1), n + 1, n, {{2, 1}}};
    }
    case ConstructionSpec::Family::kAffineGeometry: {
      const std::uint64_t q = spec.q;
      const std::uint64_t qm = IntPow(q, spec.m);
      return {qm, q * (qm - 1) / (q - 1), (qm - 1) / (q - 1), qm / q,
              {{2, IntPow(q, spec.m - 2)}}};
    }
    case ConstructionSpec::Family::kHadamard: {
      const std::uint64_t m = spec.m;
      return {4 * m, 2 * (4 * m - 1), 4 * m - 1, 2 * m, {{2, m}}};
    }
    case ConstructionSpec::Family::kExample:
      switch (spec.example_id) {
        case 1: return {4, 6, 3, 2, {{2, 1}}};
        case 2: return {6, 4, 2, 3, {}};
        case 3: return {9, 6, 2, 3, {{2, 1}}};
        case 4: return {8, 6, 3, 4, {{2, 2}, {3, 1}}};
        case 5: return {12, 4, 2, 6, {{2, 3}}};
        case 6: return {9, 12, 4, 3, {{2, 1}}};
        case 7: return {8, 8, 4, 4, {{2, 2}}};
        case 8: return {27, 9, 3, 9, {{2, 3}, {3, 1}}};
        case 9: return {16, 8, 4, 8, {{2, 4}, {3, 2}, {4, 1}}};
        default:
          throw Error(ErrorCode::kUnknownExample, "no catalog example " +
                                                      std::to_string(spec.example_id));
      }
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown construction family");
}

}  // namespace crd
