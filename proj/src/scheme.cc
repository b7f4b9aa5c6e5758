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

#include "crd/scheme.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "crd/error.h"

namespace crd {
namespace {

// Next k-subset of {0..n-1} in lexicographic order; false after the last.
bool NextCombination(std::vector<std::size_t>& c, std::size_t n) {
  const std::size_t k = c.size();
  for (std::size_t i = k; i-- > 0;) {
    if (c[i] < n - k + i) {
      ++c[i];
      for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

std::vector<std::vector<std::size_t>> AllCombinations(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k > n) return out;
  std::vector<std::size_t> c(k);
  for (std::size_t i = 0; i < k; ++i) c[i] = i;
  do {
    out.push_back(c);
  } while (NextCombination(c, n));
  return out;
}

std::string ZText(unsigned z) { return "z=" + std::to_string(z); }

}  // namespace

DesignParameters DesignParameters::Of(const Resolution& res) {
  return {res.num_points(), res.num_blocks(), res.num_classes(), res.block_size(),
          res.blocks_per_class()};
}

bool IsAdmissible(const CrdProfile& profile, std::size_t r, unsigned z) {
  if (z == 1) return true;
  if (z < 2 || z > r) return false;
  return profile.Mu(z).has_value();
}

std::uint64_t MuForZ(const CrdProfile& profile, const DesignParameters& params, unsigned z) {
  if (z == 1) return params.k;
  if (!IsAdmissible(profile, params.r, z)) {
    throw Error(ErrorCode::kMuUndefinedForZ,
                "mu_" + std::to_string(z) + " does not exist for this resolution (r=" +
                    std::to_string(params.r) + ")");
  }
  return *profile.Mu(z);
}

std::vector<User> EnumerateUsers(const Resolution& res, const CrdProfile& profile, unsigned z) {
  const DesignParameters params = DesignParameters::Of(res);
  MuForZ(profile, params, z);
  const std::size_t br = params.blocks_per_class;
  std::vector<User> users;
  for (const auto& subset : AllCombinations(params.r, z)) {
    std::vector<std::size_t> digits(z, 0);
    while (true) {
      User u;
      u.classes = subset;
      for (unsigned s = 0; s < z; ++s) u.caches.push_back(res.sorted_class(subset[s])[digits[s]]);
      users.push_back(std::move(u));
      std::size_t s = z;
      while (s-- > 0) {
        if (++digits[s] < br) break;
        digits[s] = 0;
      }
      if (s == static_cast<std::size_t>(-1)) break;
    }
  }
  return users;
}

Placement Place(const Resolution& res, std::uint64_t num_files) {
  if (num_files == 0) throw Error(ErrorCode::kInvalidArgument, "need at least one file");
  Placement placement;
  placement.num_files = num_files;
  placement.cache_subfiles = res.design().blocks();
  return placement;
}

Rational UserMemoryFraction(const CrdProfile& profile, unsigned z, std::uint64_t k,
                            std::uint64_t v) {
  if (z == 0) throw Error(ErrorCode::kInvalidArgument, "z must be at least 1");
  Rational total = MakeRational(static_cast<std::int64_t>(z * k), static_cast<std::int64_t>(v));
  for (unsigned t = 2; t <= z; ++t) {
    const auto mu = profile.Mu(t);
    if (!mu) {
      throw Error(ErrorCode::kMuUndefinedForZ,
                  "mu_" + std::to_string(t) + " is needed for " + ZText(z) + " but does not exist");
    }
    Rational term = Rational(Binomial(z, t) * *mu, BigInt(v));
    if (t % 2 == 0) {
      total -= term;
    } else {
      total += term;
    }
  }
  return total;
}

SchemeInstance SchemeInstance::Create(Resolution res, unsigned z, std::uint64_t num_files,
                                      const SizeCaps& caps) {
  CrdProfile profile = ComputeCrdProfile(res, caps);
  return Create(std::move(res), std::move(profile), z, num_files);
}

SchemeInstance SchemeInstance::Create(Resolution res, CrdProfile profile, unsigned z,
                                      std::uint64_t num_files) {
  SchemeInstance scheme;
  scheme.params_ = DesignParameters::Of(res);
  scheme.mu_z_ = MuForZ(profile, scheme.params_, z);
  scheme.z_ = z;
  scheme.placement_ = Place(res, num_files);
  scheme.users_ = EnumerateUsers(res, profile, z);
  scheme.class_subsets_ = AllCombinations(scheme.params_.r, z);
  scheme.position_in_class_.assign(scheme.params_.b, 0);
  for (std::size_t i = 0; i < res.num_classes(); ++i) {
    const auto& cls = res.sorted_class(i);
    for (std::size_t p = 0; p < cls.size(); ++p) scheme.position_in_class_[cls[p]] = p;
  }
  scheme.accessible_.reserve(scheme.users_.size());
  for (const User& u : scheme.users_) {
    PointSet y(res.num_points());
    for (std::size_t j : u.caches) y |= res.design().block_mask(j);
    scheme.accessible_.push_back(std::move(y));
  }
  scheme.res_ = std::move(res);
  scheme.profile_ = std::move(profile);
  return scheme;
}

std::size_t SchemeInstance::UserIndex(std::span<const std::size_t> caches) const {
  if (caches.size() != z_) {
    throw Error(ErrorCode::kInvalidArgument, "a user needs exactly " + std::to_string(z_) + " caches");
  }
  std::vector<std::pair<std::size_t, std::size_t>> by_class;
  for (std::size_t j : caches) by_class.emplace_back(res_.class_of_block(j), j);
  std::sort(by_class.begin(), by_class.end());
  std::vector<std::size_t> subset;
  for (const auto& [c, j] : by_class) subset.push_back(c);
  if (std::adjacent_find(subset.begin(), subset.end()) != subset.end()) {
    throw Error(ErrorCode::kInvalidArgument, "user caches must come from distinct classes");
  }
  const auto it = std::lower_bound(class_subsets_.begin(), class_subsets_.end(), subset);
  std::size_t index = static_cast<std::size_t>(it - class_subsets_.begin());
  for (const auto& [c, j] : by_class) {
    index = index * params_.blocks_per_class + position_in_class_[j];
  }
  return index;
}

DeliverySchedule BuildDeliverySchedule(const SchemeInstance& scheme,
                                       std::span<const std::uint64_t> demands) {
  const std::size_t num_users = scheme.num_users();
  if (demands.size() != num_users) {
    throw Error(ErrorCode::kBadDemandLength, "demand vector has " + std::to_string(demands.size()) +
                                                 " entries, K=" + std::to_string(num_users));
  }
  for (std::size_t m = 0; m < num_users; ++m) {
    if (demands[m] >= scheme.num_files()) {
      throw Error(ErrorCode::kDemandOutOfRange,
                  "user " + std::to_string(m + 1) + " demands file " +
                      std::to_string(demands[m] + 1) + " of N=" +
                      std::to_string(scheme.num_files()));
    }
  }

  const Resolution& res = scheme.resolution();
  const DesignParameters& params = scheme.parameters();
  const unsigned z = scheme.z();
  const std::uint64_t mu = scheme.mu_z();
  const std::size_t br = params.blocks_per_class;
  const auto block_pairs = AllCombinations(br, 2);

  DeliverySchedule schedule;
  schedule.z = z;
  schedule.demands.assign(demands.begin(), demands.end());
  schedule.transmissions.reserve(TransmissionCount(params, z, mu));

  const std::size_t group = std::size_t{1} << z;
  std::vector<std::size_t> group_users(group);
  std::vector<std::vector<std::size_t>> group_subfiles(group);
  std::vector<std::size_t> caches(z);

  for (const auto& subset : AllCombinations(params.r, z)) {
    if (block_pairs.empty()) break;
    std::vector<std::size_t> digits(z, 0);
    while (true) {
      std::vector<std::pair<std::size_t, std::size_t>> pairs(z);
      for (unsigned s = 0; s < z; ++s) {
        const auto& cls = res.sorted_class(subset[s]);
        pairs[s] = {cls[block_pairs[digits[s]][0]], cls[block_pairs[digits[s]][1]]};
      }

      // The 2^z users of this pair tuple, in ascending user order: bit s of
      // `choice` (most significant first) picks the second block of pair s.
      for (std::size_t choice = 0; choice < group; ++choice) {
        PointSet f(res.num_points());
        f.set();
        for (unsigned s = 0; s < z; ++s) {
          const bool second = (choice >> (z - 1 - s)) & 1;
          caches[s] = second ? pairs[s].second : pairs[s].first;
          f &= res.design().block_mask(second ? pairs[s].first : pairs[s].second);
        }
        group_users[choice] = scheme.UserIndex(caches);
        if (f.count() != mu) {
          throw Error(ErrorCode::kInternalMuMismatch,
                      "|f_m| = " + std::to_string(f.count()) + " for user " +
                          std::to_string(group_users[choice] + 1) + ", expected mu_z = " +
                          std::to_string(mu));
        }
        auto& subfiles = group_subfiles[choice];
        subfiles.clear();
        for (auto p = f.find_first(); p != PointSet::npos; p = f.find_next(p)) {
          subfiles.push_back(p);
        }
      }
      for (std::size_t a = 0; a < group; ++a) {
        PointSet shared(res.num_points());
        shared.set();
        for (std::size_t b = 0; b < group; ++b) {
          if (b != a) shared &= scheme.accessible(group_users[b]);
        }
        std::vector<std::size_t> listed;
        for (auto p = shared.find_first(); p != PointSet::npos; p = shared.find_next(p)) {
          listed.push_back(p);
        }
        if (listed != group_subfiles[a]) {
          throw Error(ErrorCode::kInternalMuMismatch,
                      "f_m differs from the side information shared by the other users "
                      "(user " + std::to_string(group_users[a] + 1) + ")");
        }
      }

      for (std::size_t s = 0; s < mu; ++s) {
        CodedTransmission tx;
        tx.classes = subset;
        tx.pairs = pairs;
        tx.slot = s;
        tx.terms.reserve(group);
        for (std::size_t a = 0; a < group; ++a) {
          tx.terms.push_back({group_users[a], group_subfiles[a][s]});
        }
        schedule.transmissions.push_back(std::move(tx));
      }

      std::size_t s = z;
      while (s-- > 0) {
        if (++digits[s] < block_pairs.size()) break;
        digits[s] = 0;
      }
      if (s == static_cast<std::size_t>(-1)) break;
    }
  }
  return schedule;
}

std::uint64_t TransmissionCount(const DesignParameters& params, unsigned z, std::uint64_t mu_z) {
  const std::uint64_t pairs = params.blocks_per_class * (params.blocks_per_class - 1) / 2;
  return mu_z * IntPow(pairs, z) * SmallBinomial(params.r, z);
}

Rational DeliveryRate(const DesignParameters& params, unsigned z, std::uint64_t mu_z) {
  if (z == 0) throw Error(ErrorCode::kInvalidArgument, "z must be at least 1");
  // With mu_1 = k the z = 1 rate r k C(b_r,2) / v is the same expression.
  const BigInt pairs = Binomial(params.blocks_per_class, 2);
  BigInt count = BigInt(mu_z) * Binomial(params.r, z);
  for (unsigned i = 0; i < z; ++i) count *= pairs;
  return Rational(count, BigInt(params.v));
}

std::uint64_t CodingGain(unsigned z) {
  if (z == 0) throw Error(ErrorCode::kInvalidArgument, "z must be at least 1");
  return z == 1 ? 2 : IntPow(2, z);
}

std::uint64_t SubpacketizationFromUsers(std::uint64_t k, std::uint64_t num_users, std::uint64_t r,
                                        unsigned z) {
  if (z == 0 || z > r) throw Error(ErrorCode::kInvalidArgument, "z must lie in 1..r");
  const std::uint64_t subsets = SmallBinomial(r, z);
  if (num_users % subsets != 0) {
    throw Error(ErrorCode::kNonIntegerResult,
                "K=" + std::to_string(num_users) + " is not a multiple of C(r,z)=" +
                    std::to_string(subsets));
  }
  const std::uint64_t power = num_users / subsets;
  const auto guess = static_cast<std::uint64_t>(
      std::llround(std::pow(static_cast<long double>(power), 1.0L / z)));
  for (std::uint64_t root = guess > 0 ? guess - 1 : 0; root <= guess + 1; ++root) {
    if (IntPow(root, z) == power) return k * root;
  }
  throw Error(ErrorCode::kNonIntegerResult,
              std::to_string(power) + " is not a perfect " + std::to_string(z) + "-th power");
}

Rational PerUserRateRatio(const DesignParameters& params, const CrdProfile& profile, unsigned z) {
  if (z < 2 || z > params.r) {
    throw Error(ErrorCode::kMuUndefinedForZ, "rate ratio needs 2 <= z <= r");
  }
  const Rational k_over_v = MakeRational(static_cast<std::int64_t>(params.k),
                                         static_cast<std::int64_t>(params.v));
  if (z == 2) {
    const std::uint64_t mu2 = MuForZ(profile, params, 2);
    return MakeRational(static_cast<std::int64_t>(mu2), static_cast<std::int64_t>(2 * params.k)) *
           (1 / k_over_v - 1);
  }
  MuForZ(profile, params, z);
  MuForZ(profile, params, z - 1);
  return (1 - k_over_v) / 2;
}

SchemeMetrics ComputeMetrics(const Resolution& res, const CrdProfile& profile, unsigned z) {
  const DesignParameters params = DesignParameters::Of(res);
  const std::uint64_t mu = MuForZ(profile, params, z);
  SchemeMetrics m;
  m.z = z;
  m.num_caches = params.b;
  m.num_users = SmallBinomial(params.r, z) * IntPow(params.blocks_per_class, z);
  m.subpacketization = params.v;
  m.cache_fraction = MakeRational(static_cast<std::int64_t>(params.k),
                                  static_cast<std::int64_t>(params.v));
  m.user_fraction = UserMemoryFraction(profile, z, params.k, params.v);
  m.rate = DeliveryRate(params, z, mu);
  m.per_user_rate = m.rate / BigInt(m.num_users);
  m.gain = CodingGain(z);
  return m;
}

}  // namespace crd
