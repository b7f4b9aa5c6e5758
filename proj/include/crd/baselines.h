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

#ifndef CRD_BASELINES_H_
#define CRD_BASELINES_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "crd/constructions.h"
#include "crd/rational.h"
#include "crd/scheme.h"

namespace crd {

// The dedicated-cache scheme with K users each caching a fraction M/N.
struct ManPoint {
  std::uint64_t num_users = 0;
  Rational cache_fraction;
  std::uint64_t redundancy = 0;  // t = K M/N
  Rational rate;                 // K (1 - M/N) / (1 + t)
  Rational per_user_rate;
  std::uint64_t gain = 0;        // 1 + t
  BigInt subpacketization;       // C(K, t)
};

// Throws kNonIntegerCacheRedundancy unless K M/N is an integer in 1..K.
ManPoint ComputeManPoint(std::uint64_t num_users, const Rational& cache_fraction);

// Structural side of the cyclic multi-access scheme in the K M/N = 2 regime.
// Its rate is deliberately not modelled.
struct SpeStructural {
  std::uint64_t num_users = 0;
  unsigned z = 0;
  Rational cache_fraction;       // 2/K
  Rational user_fraction;        // 2z/K
  BigInt subpacketization;       // K (K - 2z + 2) / 4
  static constexpr std::string_view kGainNote = "between 3 and 4";
};

// K = b. Throws kNonIntegerSubpacketization unless K(K-2z+2)/4 is a
// positive integer.
SpeStructural ComputeSpeStructural(std::uint64_t num_caches, unsigned z);

// Proposed-scheme metrics for a construction at the given z.
SchemeMetrics TableRow(const ConstructionSpec& spec, unsigned z, const SizeCaps& caps = {});

// A rendered comparison: each column is one scheme, each row one parameter.
struct Cell {
  std::optional<Rational> exact;
  std::string text;  // used when `exact` is empty

  static Cell Of(const Rational& value) { return {value, {}}; }
  static Cell Of(const BigInt& value) { return {Rational(value), {}}; }
  static Cell Of(std::uint64_t value) { return {Rational(BigInt(value)), {}}; }
  static Cell Text(std::string text) { return {std::nullopt, std::move(text)}; }
};

struct ComparisonTable {
  std::string id;
  std::string title;
  std::vector<std::string> columns;
  std::vector<std::string> rows;
  std::vector<std::vector<Cell>> cells;  // cells[row][column]

  const Cell& At(std::string_view row, std::string_view column) const;
};

struct TableOptions {
  std::uint32_t n = 3;  // tables I and VII
  std::uint32_t q = 2;  // table III
  unsigned m = 0;       // table III dimension (default 3) or table IV order (default 2)
};

// Table ids "I", "III", "IV", "V", "VI", "VII", "VIII", "IX" (arabic numerals
// accepted). Throws kInvalidArgument for anything else.
ComparisonTable BuildTable(std::string_view id, const TableOptions& options = {},
                           const SizeCaps& caps = {});

std::vector<std::string> SupportedTables();

enum class SweepFamily { kAffinePlane, kAffineGeometry, kHadamard };

SweepFamily ParseSweepFamily(std::string_view name);

struct SweepRow {
  std::string family;
  std::uint64_t parameter = 0;
  unsigned m = 0;     // AG dimension; 0 elsewhere
  unsigned z = 0;
  std::string status; // "ok" or the reason the parameter was skipped
  std::uint64_t v = 0, b = 0, k = 0, num_users = 0;
  Rational cache_fraction;
  Rational proposed_per_user_rate;
  Rational man_per_user_rate;
  std::uint64_t proposed_subpacketization = 0;
  BigInt man_subpacketization;

  bool ok() const { return status == "ok"; }
  bool proposed_better() const { return proposed_per_user_rate < man_per_user_rate; }
};

// One row per parameter, in the order given. The parameter is n for affine
// planes, q for AG(m, q), and m for Hadamard designs.
std::vector<SweepRow> Sweep(SweepFamily family, const std::vector<std::uint64_t>& parameters,
                            unsigned ag_dimension, unsigned z, const SizeCaps& caps = {});

}  // namespace crd

#endif  // CRD_BASELINES_H_
