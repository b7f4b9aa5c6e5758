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

#include "crd/simulator.h"

#include <gtest/gtest.h>

#include <random>

#include "catalog.h"
#include "crd/error.h"

namespace crd {
namespace {

using testing::Build;

ErrorCode CodeOf(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::kInvalidArgument;
}

TEST(FileStore, DeterministicAndSeedDependent) {
  const FileStore a = FileStore::Make(3, 100, 5);
  const FileStore b = FileStore::Make(3, 100, 5);
  const FileStore c = FileStore::Make(3, 100, 6);
  EXPECT_EQ(a, b);
  EXPECT_NE(a.file(0), c.file(0));
  EXPECT_NE(a.file(0), a.file(1));
  EXPECT_EQ(a.file(2).size(), 100u);
}

TEST(FileStore, SubfilesArePaddedSlices) {
  const FileStore s = FileStore::Make(1, 10, 1);
  EXPECT_EQ(FileStore::SubfileLength(10, 4), 3u);
  EXPECT_EQ(FileStore::PaddedLength(10, 4), 12u);
  Bytes joined;
  for (std::size_t i = 0; i < 4; ++i) {
    const Bytes piece = s.Subfile(0, i, 4);
    ASSERT_EQ(piece.size(), 3u);
    joined.insert(joined.end(), piece.begin(), piece.end());
  }
  EXPECT_EQ(joined[10], 0);
  EXPECT_EQ(joined[11], 0);
  joined.resize(10);
  EXPECT_EQ(joined, s.file(0));
}

TEST(FileStore, Errors) {
  EXPECT_EQ(CodeOf([] { FileStore::Make(0, 10, 1); }), ErrorCode::kInvalidArgument);
  EXPECT_EQ(CodeOf([] { FileStore::Make(2, 0, 1); }), ErrorCode::kInvalidArgument);
}

TEST(Simulation, EveryCatalogDesignDecodes) {
  for (const auto& spec : testing::CatalogSpecs()) {
    const Resolution res = Build(spec);
    const CrdProfile profile = ComputeCrdProfile(res);
    for (unsigned z = 1; z <= res.num_classes(); ++z) {
      if (!IsAdmissible(profile, res.num_classes(), z)) continue;
      SCOPED_TRACE(spec + " z=" + std::to_string(z));
      const SchemeMetrics metrics = ComputeMetrics(res, profile, z);
      // An odd length exercises padding.
      const std::uint64_t length = res.num_points() * 3 + 1;
      const SimulationReport report =
          VerifyAll(res, z, metrics.num_users, length, 17 + z);
      ASSERT_TRUE(report.AllRecovered());
      EXPECT_TRUE(report.distinct_demands);
      EXPECT_EQ(report.measured_rate, metrics.rate);
      EXPECT_EQ(report.theoretical_rate, metrics.rate);
      const std::uint64_t mu_z = z == 1 ? res.block_size() : *profile.Mu(z);
      const std::uint64_t air = mu_z * IntPow(res.blocks_per_class() - 1, z);
      for (const auto& u : report.users) {
        ASSERT_EQ(u.from_air, air);
        ASSERT_EQ(u.from_air + u.from_cache, res.num_points());
      }
    }
  }
}

TEST(Simulation, RandomDemandsWithFewFiles) {
  std::mt19937_64 rng(31337);
  for (const char* spec : {"example:4", "example:8", "affine:n=3", "ag:q=2,m=3"}) {
    const Resolution res = Build(spec);
    for (int trial = 0; trial < 5; ++trial) {
      const unsigned z = 1 + trial % 2;
      const SchemeInstance scheme = SchemeInstance::Create(res, z, 3);
      std::vector<std::uint64_t> demands(scheme.num_users());
      for (auto& d : demands) d = rng() % 3;
      const SimulationReport report = VerifyAll(res, z, 3, 50 + trial, rng(), demands);
      EXPECT_TRUE(report.AllRecovered()) << spec;
      EXPECT_FALSE(report.distinct_demands);
    }
  }
}

TEST(Simulation, EqualDemands) {
  const Resolution res = Build("example:9");
  const SchemeInstance scheme = SchemeInstance::Create(res, 4, 1);
  const SimulationReport report =
      VerifyAll(res, 4, 1, 64, 3, std::vector<std::uint64_t>(scheme.num_users(), 0));
  EXPECT_TRUE(report.AllRecovered());
}

TEST(Simulation, DistinctDemandsNeedEnoughFiles) {
  EXPECT_EQ(CodeOf([] { VerifyAll(Build("example:3"), 2, 8, 16, 1); }),
            ErrorCode::kInsufficientFiles);
}

TEST(Simulation, SeedDeterminism) {
  const SchemeInstance scheme = SchemeInstance::Create(Build("example:4"), 3, 8);
  std::vector<std::uint64_t> demands(8);
  for (std::size_t m = 0; m < 8; ++m) demands[m] = m;
  const DeliverySchedule s = BuildDeliverySchedule(scheme, demands);
  std::vector<Bytes> p1, p2, p3;
  const auto r1 = RunSimulation(scheme, FileStore::Make(8, 40, 9), s, &p1);
  const auto r2 = RunSimulation(scheme, FileStore::Make(8, 40, 9), s, &p2);
  RunSimulation(scheme, FileStore::Make(8, 40, 10), s, &p3);
  EXPECT_EQ(p1, p2);
  EXPECT_NE(p1, p3);
  EXPECT_EQ(r1.users.size(), r2.users.size());
  for (std::size_t m = 0; m < r1.users.size(); ++m) {
    EXPECT_EQ(r1.users[m].from_air, r2.users[m].from_air);
  }
}

TEST(Simulation, TamperedScheduleIsCaught) {
  const SchemeInstance scheme = SchemeInstance::Create(Build("example:3"), 2, 9);
  std::vector<std::uint64_t> demands(9);
  for (std::size_t m = 0; m < 9; ++m) demands[m] = m;
  const DeliverySchedule good = BuildDeliverySchedule(scheme, demands);
  const FileStore store = FileStore::Make(9, 27, 2);
  const auto caches = FillCaches(scheme, store);

  // A term the receiver cannot cancel.
  DeliverySchedule bad = good;
  auto& terms = bad.transmissions[0].terms;
  terms[1].subfile = terms[0].subfile;
  const std::vector<Bytes> payloads = Encode(scheme, bad, store);
  EXPECT_EQ(CodeOf([&] { DecodeUser(scheme, bad, payloads, caches, 27, terms[0].user); }),
            ErrorCode::kMissingSideInformation);
  EXPECT_EQ(CodeOf([&] { RunSimulation(scheme, store, bad); }),
            ErrorCode::kMissingSideInformation);

  // A missing transmission leaves its users short of a subfile.
  DeliverySchedule short_schedule = good;
  const std::size_t victim = short_schedule.transmissions.back().terms[0].user;
  short_schedule.transmissions.pop_back();
  const std::vector<Bytes> fewer = Encode(scheme, short_schedule, store);
  EXPECT_EQ(CodeOf([&] { DecodeUser(scheme, short_schedule, fewer, caches, 27, victim); }),
            ErrorCode::kIncompleteRecovery);
}

TEST(Caches, HoldTheirBlocks) {
  const SchemeInstance scheme = SchemeInstance::Create(Build("example:5"), 2, 2);
  const FileStore store = FileStore::Make(2, 24, 4);
  const auto caches = FillCaches(scheme, store);
  ASSERT_EQ(caches.size(), 4u);
  EXPECT_EQ(caches[0].subfiles, (std::vector<std::size_t>{0, 1, 2, 3, 4, 5}));
  ASSERT_NE(caches[0].Find(1, 5), nullptr);
  EXPECT_EQ(*caches[0].Find(1, 5), store.Subfile(1, 5, 12));
  EXPECT_EQ(caches[0].Find(1, 6), nullptr);
}

}  // namespace
}  // namespace crd
