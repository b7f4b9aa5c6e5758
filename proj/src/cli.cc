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

#include "crd/cli.h"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "crd/baselines.h"
#include "crd/constructions.h"
#include "crd/error.h"
#include "crd/scheme.h"
#include "crd/serialization.h"
#include "crd/simulator.h"

namespace crd {

namespace {

std::uint64_t ParseUnsigned(std::string_view text, const char* what) {
  std::uint64_t value = 0;
  std::size_t used = 0;
  try {
    value = std::stoull(std::string(text), &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size() || text.front() == '-') {
    throw Error(ErrorCode::kInvalidArgument,
                std::string("bad ") + what + " '" + std::string(text) + "'");
  }
  return value;
}

std::vector<std::string> SplitComma(std::string_view text) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    parts.emplace_back(text.substr(start, comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return parts;
}

// "2,3,5" or "2..9" or a mix such as "2..5,7".
std::vector<std::uint64_t> ParseRange(std::string_view text) {
  std::vector<std::uint64_t> values;
  for (const std::string& part : SplitComma(text)) {
    const std::size_t dots = part.find("..");
    if (dots == std::string::npos) {
      values.push_back(ParseUnsigned(part, "parameter"));
      continue;
    }
    const std::uint64_t lo = ParseUnsigned(std::string_view(part).substr(0, dots), "range start");
    const std::uint64_t hi = ParseUnsigned(std::string_view(part).substr(dots + 2), "range end");
    for (std::uint64_t x = lo; x <= hi; ++x) values.push_back(x);
  }
  return values;
}

bool LooksLikeSpec(const std::string& text) {
  for (const char* prefix : {"affine:", "ag:", "hadamard:", "example:"}) {
    if (text.rfind(prefix, 0) == 0) return true;
  }
  return false;
}

Resolution LoadDesign(const std::string& source, const SizeCaps& caps) {
  std::ifstream file(source);
  if (file) {
    std::stringstream buffer;
    buffer << file.rdbuf();
    return ReadResolutionJson(buffer.str(), caps);
  }
  if (LooksLikeSpec(source)) return Construct(ConstructionSpec::Parse(source), caps);
  throw Error(ErrorCode::kInvalidArgument,
              "'" + source + "' is neither a readable file nor a construction spec");
}

struct Options {
  std::string design;
  unsigned z = 1;
  std::uint64_t files = 0;  // 0: one file per user
  std::uint64_t length = 256;
  std::uint64_t seed = 1;
  std::string demands = "distinct";
  std::string format = "text";
  std::string out;
  std::string payloads;
  std::optional<std::size_t> cap_points;
  std::optional<std::uint64_t> cap_intersections;
  std::string table;
  TableOptions table_options;
  std::string family;
  std::string params;
  unsigned ag_dimension = 3;
};

std::string ProfileText(const CrdProfile& profile) {
  std::string s;
  for (const auto& [i, mu] : profile.mu) {
    s += (s.empty() ? "" : " ") + std::string("mu") + std::to_string(i) + "=" + std::to_string(mu);
  }
  if (s.empty()) s = "none";
  return s;
}

std::string CmdConstruct(const Options& o, const SizeCaps& caps) {
  const Resolution res = LoadDesign(o.design, caps);
  if (o.format == "json") return WriteResolutionJson(res);
  const CrdProfile profile = ComputeCrdProfile(res, caps);
  std::ostringstream s;
  s << "v=" << res.num_points() << " b=" << res.num_blocks() << " r=" << res.num_classes()
    << " k=" << res.block_size() << " b_r=" << res.blocks_per_class() << "\n";
  s << "mu: " << ProfileText(profile) << "\n";
  s << "crd: " << (profile.is_crd ? "yes" : "no");
  if (profile.crn) s << " crn=" << *profile.crn;
  s << "\n";
  return s.str();
}

std::string CmdAnalyze(const Options& o, const SizeCaps& caps) {
  const Resolution res = LoadDesign(o.design, caps);
  const CrdProfile profile = ComputeCrdProfile(res, caps);
  const SchemeMetrics m = ComputeMetrics(res, profile, o.z);

  std::optional<ManPoint> man;
  std::string man_reason;
  try {
    man = ComputeManPoint(m.num_caches, m.cache_fraction);
  } catch (const Error& e) {
    man_reason = e.what();
  }
  std::optional<SpeStructural> spe;
  std::string spe_reason;
  try {
    spe = ComputeSpeStructural(m.num_caches, o.z);
  } catch (const Error& e) {
    spe_reason = e.what();
  }

  if (o.format == "json") {
    nlohmann::json j = {{"proposed", MetricsToJson(m)}, {"profile", ProfileToJson(profile)}};
    if (man) {
      j["man"] = {{"K", man->num_users},
                  {"F", man->subpacketization.str()},
                  {"M/N", ToFraction(man->cache_fraction)},
                  {"R", ToFraction(man->rate)},
                  {"R/K", ToFraction(man->per_user_rate)},
                  {"g", man->gain}};
    } else {
      j["man"] = "n/a: " + man_reason;
    }
    if (spe) {
      j["spe"] = {{"K", spe->num_users},
                  {"z", spe->z},
                  {"F", spe->subpacketization.str()},
                  {"M/N", ToFraction(spe->cache_fraction)},
                  {"M'/N", ToFraction(spe->user_fraction)},
                  {"g", std::string(SpeStructural::kGainNote)}};
    } else {
      j["spe"] = "n/a: " + spe_reason;
    }
    return j.dump(2) + "\n";
  }

  const std::string sep = o.format == "csv" ? "," : " ";
  std::ostringstream s;
  if (o.format == "csv") s << "scheme,b,z,K,F,M/N,M'/N,R,R/K,g,note\n";
  auto row = [&](const std::vector<std::string>& fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) s << (i ? sep : "") << fields[i];
    s << "\n";
  };
  auto na = [&](const std::string& name, const std::string& reason) {
    if (o.format == "csv") {
      row({name, "", "", "", "", "", "", "", "", "", "\"n/a: " + reason + "\""});
    } else {
      s << name << ": n/a: " << reason << "\n";
    }
  };
  auto labelled = [&](const std::string& label, const std::string& value) {
    return o.format == "csv" ? value : label + "=" + value;
  };
  row({o.format == "csv" ? "proposed" : "proposed:", labelled("b", std::to_string(m.num_caches)),
       labelled("z", std::to_string(m.z)), labelled("K", std::to_string(m.num_users)),
       labelled("F", std::to_string(m.subpacketization)),
       labelled("M/N", ToFraction(m.cache_fraction)), labelled("M'/N", ToFraction(m.user_fraction)),
       labelled("R", ToFraction(m.rate)), labelled("R/K", ToFraction(m.per_user_rate)),
       labelled("g", std::to_string(m.gain))});
  if (man) {
    row({o.format == "csv" ? "man" : "man:", labelled("b", std::to_string(m.num_caches)),
         labelled("z", "1"), labelled("K", std::to_string(man->num_users)),
         labelled("F", man->subpacketization.str()),
         labelled("M/N", ToFraction(man->cache_fraction)),
         labelled("M'/N", ToFraction(man->cache_fraction)), labelled("R", ToFraction(man->rate)),
         labelled("R/K", ToFraction(man->per_user_rate)), labelled("g", std::to_string(man->gain))});
  } else {
    na(o.format == "csv" ? "man" : "man", man_reason);
  }
  if (spe) {
    const std::string gain = std::string(SpeStructural::kGainNote);
    row({o.format == "csv" ? "spe" : "spe:", labelled("b", std::to_string(m.num_caches)),
         labelled("z", std::to_string(spe->z)), labelled("K", std::to_string(spe->num_users)),
         labelled("F", spe->subpacketization.str()),
         labelled("M/N", ToFraction(spe->cache_fraction)),
         labelled("M'/N", ToFraction(spe->user_fraction)), labelled("R", "-"),
         labelled("R/K", "-"), labelled("g", o.format == "csv" ? gain : "\"" + gain + "\"")});
  } else {
    na("spe", spe_reason);
  }
  return s.str();
}

struct Prepared {
  SchemeInstance scheme;
  std::uint64_t num_files;
  std::vector<std::uint64_t> demands;
  DeliverySchedule schedule;
};

Prepared Prepare(const Options& o, const SizeCaps& caps) {
  Resolution res = LoadDesign(o.design, caps);
  const CrdProfile profile = ComputeCrdProfile(res, caps);
  // Build once with a placeholder file count to learn K.
  SchemeInstance probe = SchemeInstance::Create(res, profile, o.z, 1);
  const std::uint64_t num_files = o.files == 0 ? probe.num_users() : o.files;
  SchemeInstance scheme = SchemeInstance::Create(std::move(res), profile, o.z, num_files);
  std::vector<std::uint64_t> demands = ParseDemands(o.demands, scheme.num_users(), num_files);
  DeliverySchedule schedule = BuildDeliverySchedule(scheme, demands);
  return {std::move(scheme), num_files, std::move(demands), std::move(schedule)};
}

std::string CmdSchedule(const Options& o, const SizeCaps& caps) {
  const Prepared p = Prepare(o, caps);
  if (o.format == "text") {
    std::ostringstream s;
    s << "z=" << p.schedule.z << " K=" << p.scheme.num_users() << " N=" << p.num_files
      << " transmissions=" << p.schedule.transmissions.size() << " rate="
      << ToFraction(Rational(BigInt(p.schedule.transmissions.size()),
                             BigInt(p.scheme.parameters().v)))
      << "\n";
    for (const auto& t : p.schedule.transmissions) {
      s << "classes=";
      for (std::size_t i = 0; i < t.classes.size(); ++i) s << (i ? "," : "") << t.classes[i] + 1;
      s << " pairs=";
      for (std::size_t i = 0; i < t.pairs.size(); ++i) {
        s << (i ? "," : "") << t.pairs[i].first + 1 << ":" << t.pairs[i].second + 1;
      }
      s << " s=" << t.slot + 1 << " :";
      for (const auto& term : t.terms) {
        s << " W" << p.demands[term.user] + 1 << "," << term.subfile + 1 << "@u" << term.user + 1;
      }
      s << "\n";
    }
    return s.str();
  }
  return ScheduleToJson(p.schedule).dump() + "\n";
}

std::string CmdSimulate(const Options& o, const SizeCaps& caps, bool* recovered) {
  const Prepared p = Prepare(o, caps);
  const FileStore store = FileStore::Make(p.num_files, o.length, o.seed);
  std::vector<Bytes> payloads;
  const SimulationReport report = RunSimulation(p.scheme, store, p.schedule, &payloads);
  *recovered = report.AllRecovered();
  if (!o.payloads.empty()) {
    std::ofstream dump(o.payloads);
    if (!dump) throw Error(ErrorCode::kInvalidArgument, "cannot write '" + o.payloads + "'");
    dump << PayloadHexDump(p.schedule, payloads);
  }
  if (o.format == "json") return ReportToJson(report).dump(2) + "\n";
  std::ostringstream s;
  for (const auto& u : report.users) {
    s << (u.recovered && u.byte_equal ? "PASS" : "FAIL") << " user " << u.user + 1 << " caches=";
    for (std::size_t i = 0; i < u.caches.size(); ++i) s << (i ? "," : "") << u.caches[i] + 1;
    s << " file=" << u.demand + 1 << " cache=" << u.from_cache << " air=" << u.from_air << "\n";
  }
  s << "users=" << report.num_users << " transmissions=" << report.transmissions
    << " rate=" << ToFraction(report.measured_rate)
    << " expected=" << ToFraction(report.theoretical_rate)
    << " side_info_checks=" << report.side_information_checks << "\n";
  s << (*recovered ? "ALL PASS" : "FAILED") << "\n";
  return s.str();
}

std::string CmdTable(const Options& o, const SizeCaps& caps) {
  const ComparisonTable table = BuildTable(o.table, o.table_options, caps);
  if (o.format == "csv") return RenderTableCsv(table);
  if (o.format == "json") return TableToJson(table).dump(2) + "\n";
  return RenderTableText(table);
}

std::string CmdSweep(const Options& o, const SizeCaps& caps, std::ostream& err) {
  const auto rows =
      Sweep(ParseSweepFamily(o.family), ParseRange(o.params), o.ag_dimension, o.z, caps);
  for (const auto& r : rows) {
    if (!r.ok()) err << "warning: " << r.family << " " << r.parameter << " " << r.status << "\n";
  }
  return RenderSweepCsv(rows);
}

}  // namespace

SizeCaps ParseCapsOverride(std::string_view text, SizeCaps base) {
  if (text.empty()) return base;
  for (const std::string& part : SplitComma(text)) {
    const std::size_t eq = part.find('=');
    if (eq == std::string::npos) {
      throw Error(ErrorCode::kInvalidArgument, "bad cap override '" + part + "'");
    }
    const std::string key = part.substr(0, eq);
    const std::uint64_t value = ParseUnsigned(std::string_view(part).substr(eq + 1), "cap value");
    if (key == "points") {
      base.max_points = value;
    } else if (key == "intersections") {
      base.max_intersections = value;
    } else {
      throw Error(ErrorCode::kInvalidArgument, "unknown cap '" + key + "'");
    }
  }
  return base;
}

std::vector<std::uint64_t> ParseDemands(std::string_view spec, std::uint64_t num_users,
                                        std::uint64_t num_files) {
  std::vector<std::uint64_t> demands;
  if (spec == "distinct") {
    if (num_files < num_users) {
      throw Error(ErrorCode::kInsufficientFiles,
                  "distinct demands need N >= K, got N=" + std::to_string(num_files) +
                      " and K=" + std::to_string(num_users));
    }
    for (std::uint64_t m = 0; m < num_users; ++m) demands.push_back(m);
    return demands;
  }
  if (spec == "equal") return std::vector<std::uint64_t>(num_users, 0);
  for (const std::string& part : SplitComma(spec)) {
    const std::uint64_t d = ParseUnsigned(part, "demand");
    if (d < 1 || d > num_files) {
      throw Error(ErrorCode::kDemandOutOfRange,
                  "file " + part + " outside 1.." + std::to_string(num_files));
    }
    demands.push_back(d - 1);
  }
  if (demands.size() != num_users) {
    throw Error(ErrorCode::kBadDemandLength, "expected " + std::to_string(num_users) +
                                                 " demands, got " + std::to_string(demands.size()));
  }
  return demands;
}

int RunCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Multi-access coded caching from cross resolvable designs", "crdcache"};
  app.require_subcommand(1, 1);
  Options o;

  auto add_design = [&](CLI::App* sub) {
    sub->add_option("--design", o.design, "construction spec or design JSON path")->required();
  };
  auto add_common = [&](CLI::App* sub, std::vector<std::string> formats) {
    sub->add_option("--format", o.format, "output format")
        ->check(CLI::IsMember(std::move(formats)));
    sub->add_option("--out", o.out, "write output to this path");
    sub->add_option("--cap-points", o.cap_points, "maximum number of points");
    sub->add_option("--cap-intersections", o.cap_intersections,
                    "maximum intersections evaluated per mu_i");
  };
  auto add_delivery = [&](CLI::App* sub) {
    sub->add_option("--z", o.z, "caches per user")->check(CLI::PositiveNumber);
    sub->add_option("--files", o.files, "library size N (default K)");
    sub->add_option("--demands", o.demands, "distinct | equal | comma list of 1-based files");
  };

  auto* construct = app.add_subcommand("construct", "build a design and print its parameters");
  add_design(construct);
  add_common(construct, {"text", "json"});

  auto* analyze = app.add_subcommand("analyze", "metrics of the scheme and its baselines");
  add_design(analyze);
  analyze->add_option("--z", o.z, "caches per user")->check(CLI::PositiveNumber);
  add_common(analyze, {"text", "json", "csv"});

  auto* schedule = app.add_subcommand("schedule", "emit the coded delivery");
  add_design(schedule);
  add_delivery(schedule);
  add_common(schedule, {"text", "json"});

  auto* simulate = app.add_subcommand("simulate", "run placement and delivery on real bytes");
  add_design(simulate);
  add_delivery(simulate);
  simulate->add_option("--len", o.length, "file length in bytes")->check(CLI::PositiveNumber);
  simulate->add_option("--seed", o.seed, "file content seed");
  simulate->add_option("--payloads", o.payloads, "write a hex dump of every transmission");
  add_common(simulate, {"text", "json"});

  auto* table = app.add_subcommand("table", "reproduce a comparison table");
  table->add_option("id", o.table, "table id")->required();
  table->add_option("--n", o.table_options.n, "affine plane order");
  table->add_option("--q", o.table_options.q, "AG field order");
  table->add_option("--m", o.table_options.m, "AG dimension or Hadamard parameter");
  add_common(table, {"text", "json", "csv"});

  o.z = 1;
  auto* sweep = app.add_subcommand("sweep", "CSV series over a design family");
  sweep->add_option("--family", o.family, "affine | ag | hadamard")->required();
  sweep->add_option("--params", o.params, "values such as 2,3,4 or 2..9")->required();
  sweep->add_option("--m", o.ag_dimension, "AG dimension");
  sweep->add_option("--z", o.z, "caches per user")->check(CLI::PositiveNumber);
  add_common(sweep, {"csv", "text"});

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  // Sweeps default to the pairwise regime the comparisons use.
  if (sweep->parsed() && sweep->count("--z") == 0) o.z = 2;

  try {
    SizeCaps caps;
    if (const char* env = std::getenv("CRD_CACHE_CAPS")) caps = ParseCapsOverride(env, caps);
    if (o.cap_points) caps.max_points = *o.cap_points;
    if (o.cap_intersections) caps.max_intersections = *o.cap_intersections;

    std::string text;
    int status = kExitOk;
    if (construct->parsed()) {
      text = CmdConstruct(o, caps);
    } else if (analyze->parsed()) {
      text = CmdAnalyze(o, caps);
    } else if (schedule->parsed()) {
      text = CmdSchedule(o, caps);
    } else if (simulate->parsed()) {
      bool recovered = false;
      text = CmdSimulate(o, caps, &recovered);
      if (!recovered) status = kExitNotRecovered;
    } else if (table->parsed()) {
      text = CmdTable(o, caps);
    } else {
      text = CmdSweep(o, caps, err);
    }

    if (o.out.empty()) {
      out << text;
    } else {
      std::ofstream file(o.out);
      if (!file) throw Error(ErrorCode::kInvalidArgument, "cannot write '" + o.out + "'");
      file << text;
    }
    return status;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
}

}  // namespace crd
