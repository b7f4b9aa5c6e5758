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

#ifndef CRD_SIMULATOR_H_
#define CRD_SIMULATOR_H_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "crd/rational.h"
#include "crd/scheme.h"

namespace crd {

using Bytes = std::vector<std::uint8_t>;

// N files of L pseudo-random bytes. Split into v subfiles, each file is
// zero-padded to v * ceil(L / v) bytes.
class FileStore {
 public:
  static FileStore Make(std::uint64_t num_files, std::uint64_t length, std::uint64_t seed);

  std::uint64_t num_files() const { return files_.size(); }
  std::uint64_t length() const { return length_; }
  std::uint64_t seed() const { return seed_; }
  const Bytes& file(std::uint64_t i) const { return files_.at(i); }

  static std::uint64_t SubfileLength(std::uint64_t length, std::uint64_t v) {
    return (length + v - 1) / v;
  }
  static std::uint64_t PaddedLength(std::uint64_t length, std::uint64_t v) {
    return SubfileLength(length, v) * v;
  }

  // Subfile `index` of file `i` under a v-way split, zero padded.
  Bytes Subfile(std::uint64_t i, std::size_t index, std::uint64_t v) const;

  friend bool operator==(const FileStore&, const FileStore&) = default;

 private:
  std::uint64_t length_ = 0;
  std::uint64_t seed_ = 0;
  std::vector<Bytes> files_;
};

// What cache j holds: subfile block[j][t] of every file, for each t.
struct CacheContents {
  std::vector<std::size_t> subfiles;        // ascending
  std::vector<std::vector<Bytes>> data;     // data[file][t]

  // nullptr when the cache does not hold that subfile.
  const Bytes* Find(std::uint64_t file, std::size_t subfile) const;
};

std::vector<CacheContents> FillCaches(const SchemeInstance& scheme, const FileStore& store);

// One payload per transmission: the XOR of its terms' subfiles.
std::vector<Bytes> Encode(const SchemeInstance& scheme, const DeliverySchedule& schedule,
                          const FileStore& store);

struct DecodedFile {
  Bytes content;                  // unpadded
  std::uint64_t from_cache = 0;
  std::uint64_t from_air = 0;
};

// Recovers user m's demanded file from its caches and the payloads. Throws
// kMissingSideInformation when a term cannot be cancelled and
// kIncompleteRecovery when some subfile index is never obtained.
DecodedFile DecodeUser(const SchemeInstance& scheme, const DeliverySchedule& schedule,
                       std::span<const Bytes> payloads, std::span<const CacheContents> caches,
                       std::uint64_t file_length, std::size_t m);

struct UserReport {
  std::size_t user = 0;
  std::vector<std::size_t> caches;
  std::uint64_t demand = 0;
  bool recovered = false;
  bool byte_equal = false;
  std::uint64_t from_cache = 0;
  std::uint64_t from_air = 0;
};

struct SimulationReport {
  unsigned z = 0;
  std::uint64_t v = 0;
  std::uint64_t num_users = 0;
  std::uint64_t num_files = 0;
  std::uint64_t file_length = 0;
  std::uint64_t seed = 0;
  bool distinct_demands = false;
  std::uint64_t transmissions = 0;
  Rational measured_rate;
  Rational theoretical_rate;
  // Groups of 2^z users whose f_m sets were checked against the shared side
  // information during the run.
  std::uint64_t side_information_checks = 0;
  std::vector<UserReport> users;

  bool AllRecovered() const;
};

// Runs placement, delivery, encoding and every user's decoder on real bytes.
// With no demands, user i asks for file i (requires N >= K).
SimulationReport VerifyAll(const Resolution& res, unsigned z, std::uint64_t num_files,
                           std::uint64_t file_length, std::uint64_t seed,
                           std::optional<std::vector<std::uint64_t>> demands = std::nullopt,
                           const SizeCaps& caps = {});

// Same, for an existing scheme; also hands back the payloads.
SimulationReport RunSimulation(const SchemeInstance& scheme, const FileStore& store,
                               const DeliverySchedule& schedule,
                               std::vector<Bytes>* payloads_out = nullptr);

}  // namespace crd

#endif  // CRD_SIMULATOR_H_
