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

#ifndef CRD_DESIGN_H_
#define CRD_DESIGN_H_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace crd {

// Guards on exhaustive enumeration. The CLI reads overrides from flags and
// from the CRD_CACHE_CAPS environment variable.
struct SizeCaps {
  std::size_t max_points = 4096;
  std::uint64_t max_intersections = 10'000'000;
};

using PointSet = boost::dynamic_bitset<std::uint64_t>;

// A block design with uniform block size. Points are 0..v-1 and blocks keep
// the order they were given in, since that order is the cache numbering.
class Design {
 public:
  std::size_t num_points() const { return num_points_; }
  std::size_t num_blocks() const { return blocks_.size(); }
  std::size_t block_size() const { return block_size_; }

  // Sorted ascending.
  const std::vector<std::size_t>& block(std::size_t j) const { return blocks_.at(j); }
  const std::vector<std::vector<std::size_t>>& blocks() const { return blocks_; }
  const PointSet& block_mask(std::size_t j) const { return masks_.at(j); }

  friend bool operator==(const Design& a, const Design& b) {
    return a.num_points_ == b.num_points_ && a.blocks_ == b.blocks_;
  }

 private:
  friend Design ValidateDesign(std::size_t, std::vector<std::vector<std::size_t>>,
                               const SizeCaps&);

  std::size_t num_points_ = 0;
  std::size_t block_size_ = 0;
  std::vector<std::vector<std::size_t>> blocks_;
  std::vector<PointSet> masks_;
};

// Blocks are sets of 0-based points; order inside a block is irrelevant but a
// repeated point is rejected.
Design ValidateDesign(std::size_t num_points, std::vector<std::vector<std::size_t>> blocks,
                      const SizeCaps& caps = {});

// A design together with a partition of its blocks into parallel classes.
class Resolution {
 public:
  const Design& design() const { return design_; }
  std::size_t num_points() const { return design_.num_points(); }
  std::size_t num_blocks() const { return design_.num_blocks(); }
  std::size_t block_size() const { return design_.block_size(); }
  std::size_t num_classes() const { return classes_.size(); }
  std::size_t blocks_per_class() const { return blocks_per_class_; }

  // Block indices of class i in the order they were supplied.
  const std::vector<std::size_t>& parallel_class(std::size_t i) const { return classes_.at(i); }
  const std::vector<std::vector<std::size_t>>& classes() const { return classes_; }

  // Block indices of class i in ascending order; all user and transmission
  // enumeration walks classes in this order.
  const std::vector<std::size_t>& sorted_class(std::size_t i) const {
    return sorted_classes_.at(i);
  }
  std::size_t class_of_block(std::size_t j) const { return class_of_block_.at(j); }

  friend bool operator==(const Resolution& a, const Resolution& b) {
    return a.design_ == b.design_ && a.classes_ == b.classes_;
  }

 private:
  friend Resolution ValidateResolution(Design, std::vector<std::vector<std::size_t>>);

  Design design_;
  std::vector<std::vector<std::size_t>> classes_;
  std::vector<std::vector<std::size_t>> sorted_classes_;
  std::vector<std::size_t> class_of_block_;
  std::size_t blocks_per_class_ = 0;
};

Resolution ValidateResolution(Design design, std::vector<std::vector<std::size_t>> classes);

struct CrdProfile {
  // i -> mu_i, only for the i where the cross intersection number exists.
  std::map<std::size_t, std::uint64_t> mu;
  // Cross resolution number: the largest i with mu_i defined.
  std::optional<std::size_t> crn;
  bool is_crd = false;

  std::optional<std::uint64_t> Mu(std::size_t i) const {
    auto it = mu.find(i);
    if (it == mu.end()) return std::nullopt;
    return it->second;
  }

  friend bool operator==(const CrdProfile&, const CrdProfile&) = default;
};

// The common nonzero size of every intersection of i blocks taken from i
// distinct parallel classes, or nullopt when two such intersections differ or
// one is empty. Requires 2 <= i <= r.
std::optional<std::uint64_t> CrossIntersectionNumber(const Resolution& res, std::size_t i,
                                                     const SizeCaps& caps = {});

// mu_i for every i in 2..r. No contiguity across i is assumed.
CrdProfile ComputeCrdProfile(const Resolution& res, const SizeCaps& caps = {});

// Users whose z caches jointly hold a fixed subfile index.
std::uint64_t UsersPerSubfile(std::uint64_t r, std::uint64_t z, std::uint64_t blocks_per_class);

// Users connected to a fixed cache.
std::uint64_t UsersPerCacheSubfile(std::uint64_t r, std::uint64_t z,
                                   std::uint64_t blocks_per_class);

}  // namespace crd

#endif  // CRD_DESIGN_H_
