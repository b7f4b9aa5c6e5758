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

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "crd/constructions.h"
#include "crd/error.h"
#include "crd/serialization.h"

namespace crd {
namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun Cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = RunCli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string Slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

std::filesystem::path TempPath(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("crdcache_cli_test_" + name);
}

TEST(Construct, PrintsParameters) {
  const CliRun r = Cli({"construct", "--design", "affine:n=3"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("v=9 b=12 r=4 k=3 b_r=3"), std::string::npos);
  EXPECT_NE(r.out.find("mu2=1"), std::string::npos);
  const CliRun five = Cli({"construct", "--design", "example:5"});
  EXPECT_NE(five.out.find("v=12 b=4 r=2 k=6"), std::string::npos);
  EXPECT_NE(five.out.find("mu2=3"), std::string::npos);
}

TEST(Construct, RejectsNonPrimePower) {
  const CliRun r = Cli({"construct", "--design", "affine:n=6"});
  EXPECT_NE(r.code, kExitOk);
  EXPECT_NE(r.err.find("NotAPrimePower"), std::string::npos);
}

TEST(Construct, JsonRoundTripThroughFile) {
  const auto path = TempPath("design.json");
  const CliRun r = Cli({"construct", "--design", "example:9", "--format", "json", "--out", path});
  ASSERT_EQ(r.code, kExitOk);
  const Resolution back = ReadResolutionJson(Slurp(path));
  EXPECT_EQ(back, CatalogExample(9));
  const CliRun again = Cli({"construct", "--design", path.string()});
  EXPECT_NE(again.out.find("mu2=4 mu3=2 mu4=1"), std::string::npos);
  std::filesystem::remove(path);
}

TEST(Analyze, TableVColumns) {
  const CliRun r = Cli({"analyze", "--design", "example:4", "--z", "3", "--format", "json"});
  ASSERT_EQ(r.code, kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["proposed"]["K"], 8);
  EXPECT_EQ(j["proposed"]["F"], 8);
  EXPECT_EQ(j["proposed"]["R"], "1/8");
  EXPECT_EQ(j["proposed"]["g"], 8);
  EXPECT_EQ(j["man"]["K"], 6);
  EXPECT_EQ(j["man"]["F"], "20");
  EXPECT_EQ(j["man"]["R"], "3/4");
  EXPECT_EQ(j["man"]["g"], 4);
}

TEST(Analyze, Example9AtZ2) {
  const CliRun r = Cli({"analyze", "--design", "example:9", "--z", "2"});
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("K=24 F=16 M/N=1/2 M'/N=3/4 R=3/2 R/K=1/16 g=4"), std::string::npos);
}

TEST(Analyze, BaselinePreconditionsAreReportedPerRow) {
  // b = 4, M/N = 1/2 gives an integer MaN point, but SPE needs 4*2/4 with z=2.
  const CliRun r = Cli({"analyze", "--design", "example:5", "--z", "2"});
  EXPECT_EQ(r.code, kExitOk);
  const CliRun s = Cli({"analyze", "--design", "example:8", "--z", "1"});
  EXPECT_EQ(s.code, kExitOk);
  EXPECT_NE(s.out.find("proposed:"), std::string::npos);
  // b = 9, z = 1: SPE 9*9/4 is not an integer.
  EXPECT_NE(s.out.find("spe: n/a: NonIntegerSubpacketization"), std::string::npos);
}

TEST(Analyze, Example2RejectsZ2) {
  const CliRun r = Cli({"analyze", "--design", "example:2", "--z", "2"});
  EXPECT_EQ(r.code, kExitFailure);
  EXPECT_NE(r.err.find("MuUndefinedForZ"), std::string::npos);
}

TEST(Simulate, SpecExamples) {
  const CliRun a = Cli({"simulate", "--design", "affine:n=2", "--z", "2", "--files", "12", "--len",
                     "120", "--demands", "distinct"});
  EXPECT_EQ(a.code, kExitOk);
  EXPECT_EQ(std::count(a.out.begin(), a.out.end(), '\n'), 12 + 2);
  EXPECT_NE(a.out.find("rate=3/4"), std::string::npos);
  const CliRun b = Cli({"simulate", "--design", "example:8", "--z", "3", "--files", "27"});
  EXPECT_EQ(b.code, kExitOk);
  EXPECT_NE(b.out.find("rate=1 "), std::string::npos);
  const CliRun c = Cli({"simulate", "--design", "hadamard:m=2", "--z", "2", "--files", "84"});
  EXPECT_EQ(c.code, kExitOk);
  EXPECT_NE(c.out.find("users=84"), std::string::npos);
  EXPECT_NE(c.out.find("rate=21/4"), std::string::npos);
  EXPECT_EQ(c.out.find("FAIL"), std::string::npos);
}

TEST(Simulate, DemandSpecs) {
  EXPECT_EQ(Cli({"simulate", "--design", "example:3", "--z", "2", "--files", "2", "--demands",
                 "equal"}).code,
            kExitOk);
  EXPECT_EQ(Cli({"simulate", "--design", "example:3", "--z", "2", "--files", "3", "--demands",
                 "1,2,3,1,2,3,1,2,3"}).code,
            kExitOk);
  const CliRun few = Cli({"simulate", "--design", "example:3", "--z", "2", "--files", "3"});
  EXPECT_EQ(few.code, kExitFailure);
  EXPECT_NE(few.err.find("InsufficientFiles"), std::string::npos);
  const CliRun bad = Cli({"simulate", "--design", "example:3", "--z", "2", "--files", "3",
                       "--demands", "1,2,4,1,1,1,1,1,1"});
  EXPECT_NE(bad.err.find("DemandOutOfRange"), std::string::npos);
  const CliRun shortlist = Cli({"simulate", "--design", "example:3", "--z", "2", "--files", "3",
                             "--demands", "1,2"});
  EXPECT_NE(shortlist.err.find("BadDemandLength"), std::string::npos);
}

TEST(Simulate, JsonReportAndPayloadDump) {
  const auto dump = TempPath("payloads.txt");
  const CliRun r = Cli({"simulate", "--design", "example:4", "--z", "3", "--format", "json",
                     "--payloads", dump.string(), "--seed", "5"});
  ASSERT_EQ(r.code, kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["seed"], 5);
  EXPECT_EQ(j["all_recovered"], true);
  const std::string hex = Slurp(dump);
  EXPECT_EQ(std::count(hex.begin(), hex.end(), '\n'), 1);
  // Deterministic across runs.
  Cli({"simulate", "--design", "example:4", "--z", "3", "--payloads", dump.string(), "--seed",
       "5"});
  EXPECT_EQ(Slurp(dump), hex);
  std::filesystem::remove(dump);
}

TEST(Schedule, JsonMatchesLibrary) {
  const CliRun r = Cli({"schedule", "--design", "example:3", "--z", "2", "--format", "json"});
  ASSERT_EQ(r.code, kExitOk);
  const DeliverySchedule s = ScheduleFromJson(nlohmann::json::parse(r.out));
  EXPECT_EQ(s.transmissions.size(), 9u);
  EXPECT_EQ(s.demands.size(), 9u);
}

TEST(Table, CsvMatchesGolden) {
  const CliRun r = Cli({"table", "VI", "--format", "csv"});
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, Slurp(std::string(CRD_GOLDEN_DIR) + "/table_VI.csv"));
  EXPECT_EQ(Cli({"table", "XII"}).code, kExitFailure);
}

TEST(Sweep, CsvMatchesGolden) {
  const CliRun r = Cli({"sweep", "--family", "affine", "--params", "2..9"});
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, Slurp(std::string(CRD_GOLDEN_DIR) + "/sweep_affine.csv"));
  EXPECT_NE(r.err.find("warning: affine 6"), std::string::npos);
  const CliRun h = Cli({"sweep", "--family", "hadamard", "--params", "1,2,3"});
  EXPECT_EQ(h.out.substr(0, h.out.find('\n')), kSweepCsvHeader);
}

TEST(Caps, FlagsAndEnvironment) {
  const CliRun flag = Cli({"construct", "--design", "affine:n=5", "--cap-intersections", "10"});
  EXPECT_EQ(flag.code, kExitFailure);
  EXPECT_NE(flag.err.find("SizeCapExceeded"), std::string::npos);

  ::setenv("CRD_CACHE_CAPS", "points=10", 1);
  const CliRun env = Cli({"construct", "--design", "affine:n=4"});
  EXPECT_EQ(env.code, kExitFailure);
  EXPECT_NE(env.err.find("SizeCapExceeded"), std::string::npos);
  // A flag wins over the environment.
  const CliRun both = Cli({"construct", "--design", "affine:n=4", "--cap-points", "100"});
  EXPECT_EQ(both.code, kExitOk);
  ::unsetenv("CRD_CACHE_CAPS");

  EXPECT_EQ(ParseCapsOverride("points=7,intersections=9", {}).max_points, 7u);
  EXPECT_EQ(ParseCapsOverride("intersections=9", {}).max_intersections, 9u);
  EXPECT_THROW(ParseCapsOverride("lines=3", {}), Error);
  EXPECT_THROW(ParseCapsOverride("points", {}), Error);
}

TEST(Usage, BadFlagsAndHelp) {
  EXPECT_EQ(Cli({}).code, kExitUsage);
  EXPECT_EQ(Cli({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(Cli({"analyze"}).code, kExitUsage);
  EXPECT_EQ(Cli({"analyze", "--design", "example:3", "--format", "xml"}).code, kExitUsage);
  EXPECT_EQ(Cli({"--help"}).code, kExitOk);
  EXPECT_EQ(Cli({"construct", "--design", "/no/such/file"}).code, kExitFailure);
}

TEST(Demands, Parse) {
  EXPECT_EQ(ParseDemands("distinct", 3, 5), (std::vector<std::uint64_t>{0, 1, 2}));
  EXPECT_EQ(ParseDemands("equal", 2, 5), (std::vector<std::uint64_t>{0, 0}));
  EXPECT_EQ(ParseDemands("5,1", 2, 5), (std::vector<std::uint64_t>{4, 0}));
  EXPECT_THROW(ParseDemands("0,1", 2, 5), Error);
  EXPECT_THROW(ParseDemands("x,1", 2, 5), Error);
}

}  // namespace
}  // namespace crd
