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

#include <algorithm>
#include <random>
#include <set>
#include <string>

#include "crd/error.h"

namespace crd {

FileStore FileStore::Make(std::uint64_t num_files, std::uint64_t length, std::uint64_t seed) {
  if (num_files == 0) throw Error(ErrorCode::kInvalidArgument, "need at least one file");
  if (length == 0) throw Error(ErrorCode::kInvalidArgument, "file length must be positive");
  FileStore store;
  store.length_ = length;
  store.seed_ = seed;
  std::mt19937_64 engine(seed);
  store.files_.resize(num_files);
  for (auto& file : store.files_) {
    file.resize(length);
    std::uint64_t word = 0;
    for (std::uint64_t i = 0; i < length; ++i) {
      if (i % 8 == 0) word = engine();
      file[i] = static_cast<std::uint8_t>(word >> (8 * (i % 8)));
    }
  }
  return store;
}

Bytes FileStore::Subfile(std::uint64_t i, std::size_t index, std::uint64_t v) const {
  const Bytes& f = file(i);
  const std::uint64_t len = SubfileLength(length_, v);
  Bytes out(len, 0);
  const std::uint64_t begin = index * len;
  for (std::uint64_t t = 0; t < len && begin + t < f.size(); ++t) out[t] = f[begin + t];
  return out;
}

const Bytes* CacheContents::Find(std::uint64_t file, std::size_t subfile) const {
  auto it = std::lower_bound(subfiles.begin(), subfiles.end(), subfile);
  if (it == subfiles.end() || *it != subfile || file >= data.size()) return nullptr;
  return &data[file][static_cast<std::size_t>(it - subfiles.begin())];
}

std::vector<CacheContents> FillCaches(const SchemeInstance& scheme, const FileStore& store) {
  const std::uint64_t v = scheme.parameters().v;
  std::vector<CacheContents> caches;
  caches.reserve(scheme.placement().cache_subfiles.size());
  for (const auto& subfiles : scheme.placement().cache_subfiles) {
    CacheContents cache;
    cache.subfiles = subfiles;
    cache.data.resize(store.num_files());
    for (std::uint64_t f = 0; f < store.num_files(); ++f) {
      for (std::size_t index : subfiles) cache.data[f].push_back(store.Subfile(f, index, v));
    }
    caches.push_back(std::move(cache));
  }
  return caches;
}

std::vector<Bytes> Encode(const SchemeInstance& scheme, const DeliverySchedule& schedule,
                          const FileStore& store) {
  const std::uint64_t v = scheme.parameters().v;
  std::vector<Bytes> payloads;
  payloads.reserve(schedule.transmissions.size());
  for (const auto& tx : schedule.transmissions) {
    Bytes payload(FileStore::SubfileLength(store.length(), v), 0);
    for (const Term& term : tx.terms) {
      const Bytes piece = store.Subfile(schedule.demands.at(term.user), term.subfile, v);
      for (std::size_t i = 0; i < payload.size(); ++i) payload[i] ^= piece[i];
    }
    payloads.push_back(std::move(payload));
  }
  return payloads;
}

DecodedFile DecodeUser(const SchemeInstance& scheme, const DeliverySchedule& schedule,
                       std::span<const Bytes> payloads, std::span<const CacheContents> caches,
                       std::uint64_t file_length, std::size_t m) {
  const std::uint64_t v = scheme.parameters().v;
  const std::uint64_t want = schedule.demands.at(m);
  const User& user = scheme.user(m);

  auto lookup = [&](std::uint64_t file, std::size_t subfile) -> const Bytes* {
    for (std::size_t j : user.caches) {
      if (const Bytes* hit = caches[j].Find(file, subfile)) return hit;
    }
    return nullptr;
  };

  std::vector<std::optional<Bytes>> pieces(v);
  DecodedFile out;
  for (std::size_t t = 0; t < schedule.transmissions.size(); ++t) {
    const auto& tx = schedule.transmissions[t];
    auto own = std::find_if(tx.terms.begin(), tx.terms.end(),
                            [m](const Term& term) { return term.user == m; });
    if (own == tx.terms.end()) continue;
    Bytes piece = payloads[t];
    for (const Term& other : tx.terms) {
      if (other.user == m) continue;
      const Bytes* side = lookup(schedule.demands.at(other.user), other.subfile);
      if (side == nullptr) {
        throw Error(ErrorCode::kMissingSideInformation,
                    "transmission " + std::to_string(t + 1) + ", user " + std::to_string(m + 1) +
                        ": subfile " + std::to_string(other.subfile + 1) + " of file " +
                        std::to_string(schedule.demands.at(other.user) + 1) +
                        " is not in the user's caches");
      }
      for (std::size_t i = 0; i < piece.size(); ++i) piece[i] ^= (*side)[i];
    }
    if (!pieces[own->subfile]) ++out.from_air;
    pieces[own->subfile] = std::move(piece);
  }
  for (std::size_t index = 0; index < v; ++index) {
    if (pieces[index]) continue;
    if (const Bytes* cached = lookup(want, index)) {
      pieces[index] = *cached;
      ++out.from_cache;
    }
  }

  out.content.reserve(FileStore::PaddedLength(file_length, v));
  for (std::size_t index = 0; index < v; ++index) {
    if (!pieces[index]) {
      throw Error(ErrorCode::kIncompleteRecovery,
                  "user " + std::to_string(m + 1) + " never obtains subfile " +
                      std::to_string(index + 1) + " of file " + std::to_string(want + 1));
    }
    out.content.insert(out.content.end(), pieces[index]->begin(), pieces[index]->end());
  }
  out.content.resize(file_length);
  return out;
}

bool SimulationReport::AllRecovered() const {
  return std::all_of(users.begin(), users.end(), [](const UserReport& u) { return u.recovered; });
}

namespace {

// Each run of transmissions with equal provenance serves one group of 2^z
// users. For every member m, the subfiles it is sent must be exactly the
// subfiles every other member can reach, and none may be reachable by m.
std::uint64_t CheckSideInformation(const SchemeInstance& scheme, const DeliverySchedule& schedule) {
  const auto& txs = schedule.transmissions;
  std::uint64_t groups = 0;
  for (std::size_t begin = 0; begin < txs.size();) {
    std::size_t end = begin + 1;
    while (end < txs.size() && txs[end].classes == txs[begin].classes &&
           txs[end].pairs == txs[begin].pairs) {
      ++end;
    }
    const auto& members = txs[begin].terms;
    for (std::size_t a = 0; a < members.size(); ++a) {
      const std::size_t m = members[a].user;
      std::set<std::size_t> sent;
      for (std::size_t t = begin; t < end; ++t) {
        if (txs[t].terms.size() != members.size() || txs[t].terms[a].user != m) {
          throw Error(ErrorCode::kMissingSideInformation,
                      "transmission " + std::to_string(t + 1) + " changes the user group");
        }
        const std::size_t y = txs[t].terms[a].subfile;
        if (scheme.accessible(m).test(y)) {
          throw Error(ErrorCode::kMissingSideInformation,
                      "transmission " + std::to_string(t + 1) + ", user " +
                          std::to_string(m + 1) + ": subfile " + std::to_string(y + 1) +
                          " is already reachable");
        }
        sent.insert(y);
      }
      PointSet shared(scheme.parameters().v);
      shared.set();
      for (const Term& other : members) {
        if (other.user != m) shared &= scheme.accessible(other.user);
      }
      std::set<std::size_t> expected;
      for (auto p = shared.find_first(); p != PointSet::npos; p = shared.find_next(p)) {
        expected.insert(p);
      }
      if (sent != expected) {
        throw Error(ErrorCode::kMissingSideInformation,
                    "transmission " + std::to_string(begin + 1) + ", user " +
                        std::to_string(m + 1) +
                        ": f_m differs from the intersection of the other users' caches");
      }
    }
    ++groups;
    begin = end;
  }
  return groups;
}

}  // namespace

SimulationReport RunSimulation(const SchemeInstance& scheme, const FileStore& store,
                               const DeliverySchedule& schedule,
                               std::vector<Bytes>* payloads_out) {
  const DesignParameters& params = scheme.parameters();
  SimulationReport report;
  report.z = scheme.z();
  report.v = params.v;
  report.num_users = scheme.num_users();
  report.num_files = store.num_files();
  report.file_length = store.length();
  report.seed = store.seed();
  std::set<std::uint64_t> distinct(schedule.demands.begin(), schedule.demands.end());
  report.distinct_demands = distinct.size() == schedule.demands.size();
  report.transmissions = schedule.transmissions.size();
  report.measured_rate = Rational(BigInt(report.transmissions), BigInt(params.v));
  report.theoretical_rate = DeliveryRate(params, scheme.z(), scheme.mu_z());
  report.side_information_checks = CheckSideInformation(scheme, schedule);

  const auto caches = FillCaches(scheme, store);
  std::vector<Bytes> payloads = Encode(scheme, schedule, store);
  for (std::size_t m = 0; m < scheme.num_users(); ++m) {
    const DecodedFile decoded = DecodeUser(scheme, schedule, payloads, caches, store.length(), m);
    UserReport u;
    u.user = m;
    u.caches = scheme.user(m).caches;
    u.demand = schedule.demands[m];
    u.from_cache = decoded.from_cache;
    u.from_air = decoded.from_air;
    u.byte_equal = decoded.content == store.file(u.demand);
    u.recovered = u.byte_equal;
    report.users.push_back(std::move(u));
  }
  if (payloads_out) *payloads_out = std::move(payloads);
  return report;
}

SimulationReport VerifyAll(const Resolution& res, unsigned z, std::uint64_t num_files,
                           std::uint64_t file_length, std::uint64_t seed,
                           std::optional<std::vector<std::uint64_t>> demands,
                           const SizeCaps& caps) {
  const SchemeInstance scheme = SchemeInstance::Create(res, z, num_files, caps);
  if (!demands) {
    if (num_files < scheme.num_users()) {
      throw Error(ErrorCode::kInsufficientFiles,
                  "distinct demands need N >= K, got N=" + std::to_string(num_files) +
                      " and K=" + std::to_string(scheme.num_users()));
    }
    demands.emplace(scheme.num_users());
    for (std::size_t m = 0; m < scheme.num_users(); ++m) (*demands)[m] = m;
  }
  const DeliverySchedule schedule = BuildDeliverySchedule(scheme, *demands);
  const FileStore store = FileStore::Make(num_files, file_length, seed);
  return RunSimulation(scheme, store, schedule);
}

}  // namespace crd
