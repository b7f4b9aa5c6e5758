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

#ifndef CRD_SCHEME_H_
#define CRD_SCHEME_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "crd/design.h"
#include "crd/rational.h"

namespace crd {

// A user connects to one block from each of z distinct parallel classes.
struct User {
  std::vector<std::size_t> classes;  // ascending class indices
  std::vector<std::size_t> caches;   // caches[s] is a block of classes[s]
  friend bool operator==(const User&, const User&) = default;
};

// Shape numbers of a resolution: v points, b blocks of size k, r classes of
// b_r = v/k blocks each.
struct DesignParameters {
  std::uint64_t v = 0, b = 0, r = 0, k = 0, blocks_per_class = 0;
  static DesignParameters Of(const Resolution& res);
};

// True when z = 1, or z >= 2 and mu_z exists.
bool IsAdmissible(const CrdProfile& profile, std::size_t r, unsigned z);

// mu_z, with mu_1 = k. Throws kMuUndefinedForZ when z is not admissible.
std::uint64_t MuForZ(const CrdProfile& profile, const DesignParameters& params, unsigned z);

// All C(r,z) * b_r^z users: class subsets in lexicographic order, then block
// tuples in lexicographic order of ascending block indices within each class.
std::vector<User> EnumerateUsers(const Resolution& res, const CrdProfile& profile, unsigned z);

// Cache j stores, of every file, the subfiles indexed by block j.
struct Placement {
  std::uint64_t num_files = 0;
  std::vector<std::vector<std::size_t>> cache_subfiles;
};
Placement Place(const Resolution& res, std::uint64_t num_files);

// Fraction of every file reachable by one user through its z caches, by
// inclusion-exclusion over mu_2..mu_z.
Rational UserMemoryFraction(const CrdProfile& profile, unsigned z, std::uint64_t k,
                            std::uint64_t v);

class SchemeInstance {
 public:
  static SchemeInstance Create(Resolution res, unsigned z, std::uint64_t num_files,
                               const SizeCaps& caps = {});
  static SchemeInstance Create(Resolution res, CrdProfile profile, unsigned z,
                               std::uint64_t num_files);

  const Resolution& resolution() const { return res_; }
  const CrdProfile& profile() const { return profile_; }
  const DesignParameters& parameters() const { return params_; }
  const Placement& placement() const { return placement_; }
  unsigned z() const { return z_; }
  std::uint64_t num_files() const { return placement_.num_files; }
  std::uint64_t mu_z() const { return mu_z_; }

  std::size_t num_users() const { return users_.size(); }
  const std::vector<User>& users() const { return users_; }
  const User& user(std::size_t m) const { return users_.at(m); }

  // Y_m: subfile indices reachable by user m, the union of its blocks.
  const PointSet& accessible(std::size_t m) const { return accessible_.at(m); }

  // Inverse of EnumerateUsers for a set of caches, one per chosen class.
  std::size_t UserIndex(std::span<const std::size_t> caches) const;

 private:
  Resolution res_;
  CrdProfile profile_;
  DesignParameters params_;
  Placement placement_;
  unsigned z_ = 0;
  std::uint64_t mu_z_ = 0;
  std::vector<User> users_;
  std::vector<PointSet> accessible_;
  std::vector<std::size_t> position_in_class_;
  std::vector<std::vector<std::size_t>> class_subsets_;
};

struct Term {
  std::size_t user = 0;
  std::size_t subfile = 0;
  friend bool operator==(const Term&, const Term&) = default;
};

// One XOR-coded broadcast. Provenance records which class subset and which
// pair of blocks per class produced it, and which of the mu_z slots it fills.
struct CodedTransmission {
  std::vector<std::size_t> classes;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  std::size_t slot = 0;
  std::vector<Term> terms;  // sorted by user
  friend bool operator==(const CodedTransmission&, const CodedTransmission&) = default;
};

struct DeliverySchedule {
  unsigned z = 0;
  std::vector<std::uint64_t> demands;  // 0-based file per user
  std::vector<CodedTransmission> transmissions;
  friend bool operator==(const DeliverySchedule&, const DeliverySchedule&) = default;
};

// The coded delivery. For each class subset and each choice of a block pair
// per class, the 2^z users on those blocks each get
// f_m = intersection of the blocks they are not on; slot s XORs the s-th
// smallest index of every f_m. Any demand vector is accepted. Throws
// kInternalMuMismatch if some |f_m| != mu_z, and verifies
// f_m = intersection of Y_t over the other users t.
DeliverySchedule BuildDeliverySchedule(const SchemeInstance& scheme,
                                       std::span<const std::uint64_t> demands);

// Closed-form rate in file units.
Rational DeliveryRate(const DesignParameters& params, unsigned z, std::uint64_t mu_z);

std::uint64_t CodingGain(unsigned z);

// Number of transmissions the delivery emits: mu_z C(b_r,2)^z C(r,z).
std::uint64_t TransmissionCount(const DesignParameters& params, unsigned z, std::uint64_t mu_z);

// v = k (K / C(r,z))^(1/z). Throws kNonIntegerResult when inconsistent.
std::uint64_t SubpacketizationFromUsers(std::uint64_t k, std::uint64_t num_users, std::uint64_t r,
                                        unsigned z);

// (R/K)_z / (R/K)_{z-1} in closed form, for 2 <= z <= r.
Rational PerUserRateRatio(const DesignParameters& params, const CrdProfile& profile, unsigned z);

struct SchemeMetrics {
  unsigned z = 0;
  std::uint64_t num_caches = 0;       // b
  std::uint64_t num_users = 0;        // K
  std::uint64_t subpacketization = 0; // F = v
  Rational cache_fraction;            // M/N = k/v
  Rational user_fraction;             // M'/N
  Rational rate;                      // R
  Rational per_user_rate;             // R/K
  std::uint64_t gain = 0;             // g
};

SchemeMetrics ComputeMetrics(const Resolution& res, const CrdProfile& profile, unsigned z);

}  // namespace crd

#endif  // CRD_SCHEME_H_
