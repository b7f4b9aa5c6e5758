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

#include "crd/baselines.h"

#include <algorithm>
#include <map>

#include "crd/error.h"

namespace crd {

ManPoint ComputeManPoint(std::uint64_t num_users, const Rational& cache_fraction) {
  const Rational t = cache_fraction * BigInt(num_users);
  if (boost::multiprecision::denominator(t) != 1 || t < 1 || t > BigInt(num_users)) {
    throw Error(ErrorCode::kNonIntegerCacheRedundancy,
                "K*M/N = " + ToFraction(t) + " must be an integer in 1..K");
  }
  ManPoint p;
  p.num_users = num_users;
  p.cache_fraction = cache_fraction;
  p.redundancy = boost::multiprecision::numerator(t).convert_to<std::uint64_t>();
  p.rate = BigInt(num_users) * (1 - cache_fraction) / (1 + t);
  p.per_user_rate = p.rate / BigInt(num_users);
  p.gain = 1 + p.redundancy;
  p.subpacketization = Binomial(num_users, p.redundancy);
  return p;
}

SpeStructural ComputeSpeStructural(std::uint64_t num_caches, unsigned z) {
  const std::int64_t k = static_cast<std::int64_t>(num_caches);
  const std::int64_t numer = k * (k - 2 * static_cast<std::int64_t>(z) + 2);
  if (z == 0 || k == 0 || numer <= 0 || numer % 4 != 0) {
    throw Error(ErrorCode::kNonIntegerSubpacketization,
                "K(K-2z+2)/4 is not a positive integer for K=" + std::to_string(num_caches) +
                    ", z=" + std::to_string(z));
  }
  SpeStructural s;
  s.num_users = num_caches;
  s.z = z;
  s.cache_fraction = MakeRational(2, k);
  s.user_fraction = MakeRational(2 * static_cast<std::int64_t>(z), k);
  s.subpacketization = numer / 4;
  return s;
}

SchemeMetrics TableRow(const ConstructionSpec& spec, unsigned z, const SizeCaps& caps) {
  const Resolution res = Construct(spec, caps);
  return ComputeMetrics(res, ComputeCrdProfile(res, caps), z);
}

const Cell& ComparisonTable::At(std::string_view row, std::string_view column) const {
  auto r = std::find(rows.begin(), rows.end(), row);
  auto c = std::find(columns.begin(), columns.end(), column);
  if (r == rows.end() || c == columns.end()) {
    throw Error(ErrorCode::kInvalidArgument,
                "table " + id + " has no cell (" + std::string(row) + ", " + std::string(column) + ")");
  }
  return cells[r - rows.begin()][c - columns.begin()];
}

namespace {

const std::vector<std::string> kRows = {"b", "z", "K", "F", "M/N", "M'/N", "R", "R/K", "g"};

std::vector<Cell> ProposedColumn(const SchemeMetrics& m) {
  return {Cell::Of(m.num_caches), Cell::Of(std::uint64_t{m.z}), Cell::Of(m.num_users),
          Cell::Of(m.subpacketization), Cell::Of(m.cache_fraction), Cell::Of(m.user_fraction),
          Cell::Of(m.rate), Cell::Of(m.per_user_rate), Cell::Of(m.gain)};
}

std::vector<Cell> ManColumn(const SchemeMetrics& proposed) {
  const ManPoint p = ComputeManPoint(proposed.num_caches, proposed.cache_fraction);
  return {Cell::Of(proposed.num_caches), Cell::Of(std::uint64_t{1}), Cell::Of(p.num_users),
          Cell::Of(p.subpacketization), Cell::Of(p.cache_fraction), Cell::Of(p.cache_fraction),
          Cell::Of(p.rate), Cell::Of(p.per_user_rate), Cell::Of(p.gain)};
}

std::vector<Cell> SpeColumn(std::uint64_t num_caches, unsigned z) {
  const SpeStructural s = ComputeSpeStructural(num_caches, z);
  return {Cell::Of(num_caches), Cell::Of(std::uint64_t{z}), Cell::Of(s.num_users),
          Cell::Of(s.subpacketization), Cell::Of(s.cache_fraction), Cell::Of(s.user_fraction),
          Cell::Text("-"), Cell::Text("-"), Cell::Text(std::string(SpeStructural::kGainNote))};
}

void AddColumn(ComparisonTable& table, std::string name, std::vector<Cell> column) {
  table.columns.push_back(std::move(name));
  for (std::size_t r = 0; r < column.size(); ++r) table.cells[r].push_back(std::move(column[r]));
}

ComparisonTable EmptyTable(std::string id, std::string title) {
  ComparisonTable t;
  t.id = std::move(id);
  t.title = std::move(title);
  t.rows = kRows;
  t.cells.resize(kRows.size());
  return t;
}

std::string CanonicalTableId(std::string_view id) {
  static const std::map<std::string, std::string, std::less<>> kAliases = {
      {"I", "I"},     {"1", "I"},   {"III", "III"}, {"3", "III"},   {"IV", "IV"},
      {"4", "IV"},    {"V", "V"},   {"5", "V"},     {"VI", "VI"},   {"6", "VI"},
      {"VII", "VII"}, {"7", "VII"}, {"VIII", "VIII"}, {"8", "VIII"}, {"IX", "IX"},
      {"9", "IX"}};
  std::string upper(id);
  std::transform(upper.begin(), upper.end(), upper.begin(),
                 [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  auto it = kAliases.find(upper);
  if (it == kAliases.end()) {
    throw Error(ErrorCode::kInvalidArgument, "unknown table '" + std::string(id) + "'");
  }
  return it->second;
}

ConstructionSpec Example(int id) {
  ConstructionSpec spec;
  spec.family = ConstructionSpec::Family::kExample;
  spec.example_id = id;
  return spec;
}

}  // namespace

std::vector<std::string> SupportedTables() {
  return {"I", "III", "IV", "V", "VI", "VII", "VIII", "IX"};
}

ComparisonTable BuildTable(std::string_view id, const TableOptions& options,
                           const SizeCaps& caps) {
  const std::string canonical = CanonicalTableId(id);
  if (canonical == "I" || canonical == "VII") {
    ConstructionSpec spec;
    spec.family = ConstructionSpec::Family::kAffinePlane;
    spec.n = options.n;
    const unsigned z = canonical == "I" ? 2 : 1;
    auto t = EmptyTable(canonical, "MaN vs proposed, affine plane n=" + std::to_string(options.n) +
                                       ", z=" + std::to_string(z));
    const SchemeMetrics proposed = TableRow(spec, z, caps);
    AddColumn(t, "MaN", ManColumn(proposed));
    AddColumn(t, "Proposed", ProposedColumn(proposed));
    return t;
  }
  if (canonical == "III") {
    ConstructionSpec spec;
    spec.family = ConstructionSpec::Family::kAffineGeometry;
    spec.q = options.q;
    spec.m = options.m == 0 ? 3 : options.m;
    auto t = EmptyTable(canonical, "MaN vs proposed, AG(" + std::to_string(spec.m) + "," +
                                       std::to_string(spec.q) + ") design, z=2");
    const SchemeMetrics proposed = TableRow(spec, 2, caps);
    AddColumn(t, "MaN", ManColumn(proposed));
    AddColumn(t, "Proposed", ProposedColumn(proposed));
    return t;
  }
  if (canonical == "IV") {
    ConstructionSpec spec;
    spec.family = ConstructionSpec::Family::kHadamard;
    spec.m = options.m == 0 ? 2 : options.m;
    auto t = EmptyTable(canonical, "MaN vs proposed, Hadamard design m=" +
                                       std::to_string(spec.m) + ", z=2");
    const SchemeMetrics proposed = TableRow(spec, 2, caps);
    AddColumn(t, "MaN", ManColumn(proposed));
    AddColumn(t, "Proposed", ProposedColumn(proposed));
    return t;
  }
  if (canonical == "V") {
    auto t = EmptyTable(canonical, "MaN vs proposed, example 3 (z=2) and example 4 (z=3)");
    const SchemeMetrics ex3 = TableRow(Example(3), 2, caps);
    const SchemeMetrics ex4 = TableRow(Example(4), 3, caps);
    AddColumn(t, "Ex3 MaN", ManColumn(ex3));
    AddColumn(t, "Ex3 Proposed", ProposedColumn(ex3));
    AddColumn(t, "Ex4 MaN", ManColumn(ex4));
    AddColumn(t, "Ex4 Proposed", ProposedColumn(ex4));
    return t;
  }
  if (canonical == "VI") {
    auto t = EmptyTable(canonical,
                        "SPE vs proposed, example 7 (v=8,b=8,r=4,k=4) and example 4, z=2");
    const SchemeMetrics ex7 = TableRow(Example(7), 2, caps);
    const SchemeMetrics ex4 = TableRow(Example(4), 2, caps);
    AddColumn(t, "Ex7 SPE", SpeColumn(ex7.num_caches, 2));
    AddColumn(t, "Ex7 Proposed", ProposedColumn(ex7));
    AddColumn(t, "Ex4 SPE", SpeColumn(ex4.num_caches, 2));
    AddColumn(t, "Ex4 Proposed", ProposedColumn(ex4));
    return t;
  }
  const int example = canonical == "VIII" ? 8 : 9;
  const unsigned max_z = example == 8 ? 3 : 4;
  auto t = EmptyTable(canonical, "proposed scheme across z, example " + std::to_string(example));
  const Resolution res = CatalogExample(example);
  const CrdProfile profile = ComputeCrdProfile(res, caps);
  for (unsigned z = 1; z <= max_z; ++z) {
    AddColumn(t, "z=" + std::to_string(z), ProposedColumn(ComputeMetrics(res, profile, z)));
  }
  return t;
}

SweepFamily ParseSweepFamily(std::string_view name) {
  if (name == "affine") return SweepFamily::kAffinePlane;
  if (name == "ag") return SweepFamily::kAffineGeometry;
  if (name == "hadamard") return SweepFamily::kHadamard;
  throw Error(ErrorCode::kInvalidArgument, "unknown sweep family '" + std::string(name) + "'");
}

std::vector<SweepRow> Sweep(SweepFamily family, const std::vector<std::uint64_t>& parameters,
                            unsigned ag_dimension, unsigned z, const SizeCaps& caps) {
  std::vector<SweepRow> rows;
  for (std::uint64_t parameter : parameters) {
    SweepRow row;
    row.parameter = parameter;
    row.z = z;
    ConstructionSpec spec;
    switch (family) {
      case SweepFamily::kAffinePlane:
        row.family = "affine";
        spec.family = ConstructionSpec::Family::kAffinePlane;
        spec.n = static_cast<std::uint32_t>(parameter);
        break;
      case SweepFamily::kAffineGeometry:
        row.family = "ag";
        row.m = ag_dimension;
        spec.family = ConstructionSpec::Family::kAffineGeometry;
        spec.q = static_cast<std::uint32_t>(parameter);
        spec.m = ag_dimension;
        break;
      case SweepFamily::kHadamard:
        row.family = "hadamard";
        spec.family = ConstructionSpec::Family::kHadamard;
        spec.m = static_cast<unsigned>(parameter);
        break;
    }
    try {
      const Resolution res = Construct(spec, caps);
      const SchemeMetrics proposed = ComputeMetrics(res, ComputeCrdProfile(res, caps), z);
      const ManPoint man = ComputeManPoint(proposed.num_caches, proposed.cache_fraction);
      row.v = res.num_points();
      row.b = res.num_blocks();
      row.k = res.block_size();
      row.num_users = proposed.num_users;
      row.cache_fraction = proposed.cache_fraction;
      row.proposed_per_user_rate = proposed.per_user_rate;
      row.man_per_user_rate = man.per_user_rate;
      row.proposed_subpacketization = proposed.subpacketization;
      row.man_subpacketization = man.subpacketization;
      row.status = "ok";
    } catch (const Error& e) {
      row.status = std::string("skipped: ") + e.what();
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace crd
