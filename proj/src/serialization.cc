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

#include "crd/serialization.h"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "crd/error.h"

namespace crd {

using nlohmann::json;

namespace {

std::size_t FromOneBased(const json& value, ErrorCode code, const char* what) {
  if (!value.is_number_integer()) {
    throw Error(ErrorCode::kParseError, std::string(what) + " must be an integer");
  }
  const std::int64_t x = value.get<std::int64_t>();
  if (x < 1) {
    throw Error(code, std::string(what) + " " + std::to_string(x) + " is not 1-based");
  }
  return static_cast<std::size_t>(x - 1);
}

const json& Field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw Error(ErrorCode::kParseError, std::string("missing field '") + key + "'");
  }
  return j.at(key);
}

const json& ArrayField(const json& j, const char* key) {
  const json& a = Field(j, key);
  if (!a.is_array()) throw Error(ErrorCode::kParseError, std::string("'") + key + "' must be an array");
  return a;
}

std::vector<std::vector<std::size_t>> NestedIndices(const json& a, const char* key, ErrorCode code,
                                                    const char* what) {
  std::vector<std::vector<std::size_t>> out;
  for (const json& inner : a) {
    if (!inner.is_array()) {
      throw Error(ErrorCode::kParseError, std::string("'") + key + "' must hold arrays");
    }
    auto& row = out.emplace_back();
    for (const json& x : inner) row.push_back(FromOneBased(x, code, what));
  }
  return out;
}

json OneBased(std::span<const std::size_t> xs) {
  json a = json::array();
  for (std::size_t x : xs) a.push_back(x + 1);
  return a;
}

json RationalJson(const Rational& r) { return ToFraction(r); }

std::string CsvField(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

json ResolutionToJson(const Resolution& res) {
  json blocks = json::array();
  for (const auto& b : res.design().blocks()) blocks.push_back(OneBased(b));
  json classes = json::array();
  for (const auto& c : res.classes()) classes.push_back(OneBased(c));
  return {{"v", res.num_points()}, {"blocks", blocks}, {"classes", classes}};
}

Resolution ResolutionFromJson(const json& j, const SizeCaps& caps) {
  const json& v = Field(j, "v");
  if (!v.is_number_integer() || v.get<std::int64_t>() < 0) {
    throw Error(ErrorCode::kParseError, "'v' must be a non-negative integer");
  }
  auto blocks = NestedIndices(ArrayField(j, "blocks"), "blocks", ErrorCode::kPointOutOfRange, "point");
  auto classes =
      NestedIndices(ArrayField(j, "classes"), "classes", ErrorCode::kIndexOutOfRange, "block index");
  Design design = ValidateDesign(v.get<std::size_t>(), std::move(blocks), caps);
  return ValidateResolution(std::move(design), std::move(classes));
}

std::string WriteResolutionJson(const Resolution& res) { return ResolutionToJson(res).dump() + "\n"; }

Resolution ReadResolutionJson(std::string_view text, const SizeCaps& caps) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParseError, e.what());
  }
  return ResolutionFromJson(j, caps);
}

json ProfileToJson(const CrdProfile& profile) {
  json mu = json::object();
  for (const auto& [i, value] : profile.mu) mu[std::to_string(i)] = value;
  json out = {{"is_crd", profile.is_crd}, {"mu", mu}};
  out["crn"] = profile.crn ? json(*profile.crn) : json(nullptr);
  return out;
}

json ScheduleToJson(const DeliverySchedule& schedule) {
  json demands = json::array();
  for (auto d : schedule.demands) demands.push_back(d + 1);
  json transmissions = json::array();
  for (const auto& t : schedule.transmissions) {
    json pairs = json::array();
    for (const auto& [a, b] : t.pairs) pairs.push_back({a + 1, b + 1});
    json terms = json::array();
    for (const auto& term : t.terms) {
      terms.push_back({{"user", term.user + 1}, {"subfile", term.subfile + 1}});
    }
    transmissions.push_back(
        {{"classes", OneBased(t.classes)}, {"pairs", pairs}, {"s", t.slot + 1}, {"terms", terms}});
  }
  return {{"z", schedule.z}, {"demands", demands}, {"transmissions", transmissions}};
}

DeliverySchedule ScheduleFromJson(const json& j) {
  DeliverySchedule s;
  const json& z = Field(j, "z");
  if (!z.is_number_integer() || z.get<std::int64_t>() < 1) {
    throw Error(ErrorCode::kParseError, "'z' must be a positive integer");
  }
  s.z = z.get<unsigned>();
  for (const json& d : ArrayField(j, "demands")) {
    s.demands.push_back(FromOneBased(d, ErrorCode::kDemandOutOfRange, "demand"));
  }
  for (const json& t : ArrayField(j, "transmissions")) {
    CodedTransmission ct;
    for (const json& c : ArrayField(t, "classes")) {
      ct.classes.push_back(FromOneBased(c, ErrorCode::kIndexOutOfRange, "class"));
    }
    for (const json& p : ArrayField(t, "pairs")) {
      if (!p.is_array() || p.size() != 2) throw Error(ErrorCode::kParseError, "pair must have 2 entries");
      ct.pairs.emplace_back(FromOneBased(p[0], ErrorCode::kIndexOutOfRange, "block"),
                            FromOneBased(p[1], ErrorCode::kIndexOutOfRange, "block"));
    }
    ct.slot = FromOneBased(Field(t, "s"), ErrorCode::kIndexOutOfRange, "slot");
    for (const json& term : ArrayField(t, "terms")) {
      ct.terms.push_back({FromOneBased(Field(term, "user"), ErrorCode::kIndexOutOfRange, "user"),
                          FromOneBased(Field(term, "subfile"), ErrorCode::kIndexOutOfRange, "subfile")});
    }
    s.transmissions.push_back(std::move(ct));
  }
  return s;
}

json MetricsToJson(const SchemeMetrics& m) {
  return {{"z", m.z},
          {"b", m.num_caches},
          {"K", m.num_users},
          {"F", m.subpacketization},
          {"M/N", RationalJson(m.cache_fraction)},
          {"M'/N", RationalJson(m.user_fraction)},
          {"R", RationalJson(m.rate)},
          {"R/K", RationalJson(m.per_user_rate)},
          {"g", m.gain}};
}

json ReportToJson(const SimulationReport& r) {
  json users = json::array();
  for (const auto& u : r.users) {
    json caches = OneBased(u.caches);
    users.push_back({{"user", u.user + 1},
                     {"caches", caches},
                     {"demand", u.demand + 1},
                     {"recovered", u.recovered},
                     {"byte_equal", u.byte_equal},
                     {"from_cache", u.from_cache},
                     {"from_air", u.from_air}});
  }
  return {{"z", r.z},
          {"v", r.v},
          {"num_users", r.num_users},
          {"num_files", r.num_files},
          {"file_length", r.file_length},
          {"seed", r.seed},
          {"distinct_demands", r.distinct_demands},
          {"transmissions", r.transmissions},
          {"measured_rate", RationalJson(r.measured_rate)},
          {"theoretical_rate", RationalJson(r.theoretical_rate)},
          {"side_information_checks", r.side_information_checks},
          {"all_recovered", r.AllRecovered()},
          {"users", users}};
}

std::string CellExact(const Cell& cell) { return cell.exact ? ToFraction(*cell.exact) : cell.text; }

std::string CellDecimal(const Cell& cell) { return cell.exact ? ToDecimal(*cell.exact) : ""; }

std::string RenderTableText(const ComparisonTable& table) {
  std::vector<std::vector<std::string>> grid;
  grid.push_back({""});
  for (const auto& c : table.columns) grid[0].push_back(c);
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    auto& line = grid.emplace_back();
    line.push_back(table.rows[r]);
    for (const auto& cell : table.cells[r]) line.push_back(CellExact(cell));
  }
  std::vector<std::size_t> width(grid[0].size(), 0);
  for (const auto& line : grid) {
    for (std::size_t c = 0; c < line.size(); ++c) width[c] = std::max(width[c], line[c].size());
  }
  std::ostringstream out;
  out << "Table " << table.id << ": " << table.title << "\n";
  for (const auto& line : grid) {
    for (std::size_t c = 0; c < line.size(); ++c) {
      out << line[c] << std::string(width[c] - line[c].size(), ' ');
      out << (c + 1 == line.size() ? "\n" : "  ");
    }
  }
  return out.str();
}

std::string RenderTableCsv(const ComparisonTable& table) {
  std::ostringstream out;
  out << "table,scheme";
  for (const auto& r : table.rows) out << "," << CsvField(r) << "," << CsvField(r + "_decimal");
  out << "\n";
  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    out << table.id << "," << CsvField(table.columns[c]);
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
      out << "," << CsvField(CellExact(table.cells[r][c])) << ","
          << CsvField(CellDecimal(table.cells[r][c]));
    }
    out << "\n";
  }
  return out.str();
}

json TableToJson(const ComparisonTable& table) {
  json columns = json::array();
  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    json values = json::object();
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
      values[table.rows[r]] = CellExact(table.cells[r][c]);
    }
    columns.push_back({{"scheme", table.columns[c]}, {"values", values}});
  }
  return {{"table", table.id}, {"title", table.title}, {"columns", columns}};
}

std::string RenderSweepCsv(std::span<const SweepRow> rows) {
  std::ostringstream out;
  out << kSweepCsvHeader << "\n";
  for (const auto& r : rows) {
    out << r.family << "," << r.parameter << "," << r.m << "," << r.z << "," << CsvField(r.status);
    if (!r.ok()) {
      out << std::string(14, ',') << "\n";
      continue;
    }
    out << "," << r.v << "," << r.b << "," << r.k << "," << r.num_users << ","
        << ToFraction(r.cache_fraction) << "," << ToDecimal(r.cache_fraction) << ","
        << ToFraction(r.proposed_per_user_rate) << "," << ToDecimal(r.proposed_per_user_rate) << ","
        << ToFraction(r.man_per_user_rate) << "," << ToDecimal(r.man_per_user_rate) << ","
        << r.proposed_subpacketization << "," << r.man_subpacketization << ","
        << ToDecimal(r.man_subpacketization) << "," << (r.proposed_better() ? 1 : 0) << "\n";
  }
  return out.str();
}

std::string PayloadHexDump(const DeliverySchedule& schedule, std::span<const Bytes> payloads) {
  if (payloads.size() != schedule.transmissions.size()) {
    throw Error(ErrorCode::kInvalidArgument, "payload count does not match the schedule");
  }
  std::string out;
  char hex[3];
  for (std::size_t i = 0; i < payloads.size(); ++i) {
    const auto& t = schedule.transmissions[i];
    out += "classes=";
    for (std::size_t c = 0; c < t.classes.size(); ++c) {
      out += (c ? "," : "") + std::to_string(t.classes[c] + 1);
    }
    out += " pairs=";
    for (std::size_t p = 0; p < t.pairs.size(); ++p) {
      out += (p ? "," : "") + std::to_string(t.pairs[p].first + 1) + ":" +
             std::to_string(t.pairs[p].second + 1);
    }
    out += " s=" + std::to_string(t.slot + 1) + " ";
    for (std::uint8_t byte : payloads[i]) {
      std::snprintf(hex, sizeof hex, "%02x", byte);
      out += hex;
    }
    out += "\n";
  }
  return out;
}

}  // namespace crd
