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

#ifndef CRD_SERIALIZATION_H_
#define CRD_SERIALIZATION_H_

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"  // nlohmann, vendored

#include "crd/baselines.h"
#include "crd/design.h"
#include "crd/scheme.h"
#include "crd/simulator.h"

namespace crd {

// Every external format is 1-based: points, blocks, classes, users, files and
// subfiles. Readers throw kParseError on malformed input and the usual
// validation errors on well-formed but invalid content.

nlohmann::json ResolutionToJson(const Resolution& res);
Resolution ResolutionFromJson(const nlohmann::json& j, const SizeCaps& caps = {});
std::string WriteResolutionJson(const Resolution& res);
Resolution ReadResolutionJson(std::string_view text, const SizeCaps& caps = {});

nlohmann::json ProfileToJson(const CrdProfile& profile);

nlohmann::json ScheduleToJson(const DeliverySchedule& schedule);
DeliverySchedule ScheduleFromJson(const nlohmann::json& j);

nlohmann::json MetricsToJson(const SchemeMetrics& metrics);
nlohmann::json ReportToJson(const SimulationReport& report);

// "p/q" (or "p") and the 12-significant-digit decimal, or the cell's text.
std::string CellExact(const Cell& cell);
std::string CellDecimal(const Cell& cell);

std::string RenderTableText(const ComparisonTable& table);
// One CSV row per column of the table: table,scheme, then each quantity as an
// exact field followed by a "<quantity>_decimal" field.
std::string RenderTableCsv(const ComparisonTable& table);
nlohmann::json TableToJson(const ComparisonTable& table);

inline constexpr std::string_view kSweepCsvHeader =
    "family,parameter,m,z,status,v,b,k,K,M_over_N,M_over_N_decimal,"
    "proposed_R_per_K,proposed_R_per_K_decimal,man_R_per_K,man_R_per_K_decimal,"
    "proposed_F,man_F,man_F_decimal,proposed_better";
std::string RenderSweepCsv(std::span<const SweepRow> rows);

// One line per transmission: "classes=1,2 pairs=1:2,4:5 s=1 <hex>".
std::string PayloadHexDump(const DeliverySchedule& schedule, std::span<const Bytes> payloads);

}  // namespace crd

#endif  // CRD_SERIALIZATION_H_
