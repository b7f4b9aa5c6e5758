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

#include "crd/design.h"

#include <algorithm>
#include <string>

#include "crd/error.h"
#include "crd/rational.h"

namespace crd {

Design ValidateDesign(std::size_t num_points, std::vector<std::vector<std::size_t>> blocks,
                      const SizeCaps& caps) {
  if (num_points == 0) throw Error(ErrorCode::kInvalidArgument, "design needs at least one point");
  if (blocks.empty()) throw Error(ErrorCode::kInvalidArgument, "design needs at least one block");
  if (num_points > caps.max_points) {
    throw Error(ErrorCode::kSizeCapExceeded, "v=" + std::to_string(num_points) +
                                                 " exceeds the point cap " +
                                                 std::to_string(caps.max_points));
  }

  Design design;
  design.num_points_ = num_points;
  design.block_size_ = blocks.front().size();
  design.masks_.reserve(blocks.size());
  for (std::size_t j = 0; j < blocks.size(); ++j) {
    auto& block = blocks[j];
    if (block.empty()) {
      throw Error(ErrorCode::kEmptyBlock, "block " + std::to_string(j + 1) + " is empty");
    }
    std::sort(block.begin(), block.end());
    if (std::adjacent_find(block.begin(), block.end()) != block.end()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "block " + std::to_string(j + 1) + " repeats a point");
    }
    if (block.back() >= num_points) {
      throw Error(ErrorCode::kPointOutOfRange,
                  "block " + std::to_string(j + 1) + " contains point " +
                      std::to_string(block.back() + 1) + " > v=" + std::to_string(num_points));
    }
    if (block.size() != design.block_size_) {
      throw Error(ErrorCode::kNonUniformBlockSize,
                  "block " + std::to_string(j + 1) + " has " + std::to_string(block.size()) +
                      " points, block 1 has " + std::to_string(design.block_size_));
    }
    PointSet mask(num_points);
    for (std::size_t p : block) mask.set(p);
    design.masks_.push_back(std::move(mask));
  }
  design.blocks_ = std::move(blocks);
  return design;
}

Resolution ValidateResolution(Design design, std::vector<std::vector<std::size_t>> classes) {
  const std::size_t b = design.num_blocks();
  if (classes.empty()) throw Error(ErrorCode::kNotAPartitionOfBlocks, "no parallel classes");

  std::vector<std::size_t> owner(b, classes.size());
  for (std::size_t i = 0; i < classes.size(); ++i) {
    if (classes[i].empty()) {
      throw Error(ErrorCode::kNotAPartitionOfBlocks,
                  "class " + std::to_string(i + 1) + " is empty");
    }
    for (std::size_t j : classes[i]) {
      if (j >= b) {
        throw Error(ErrorCode::kNotAPartitionOfBlocks,
                    "class " + std::to_string(i + 1) + " names block " + std::to_string(j + 1) +
                        " but b=" + std::to_string(b));
      }
      if (owner[j] != classes.size()) {
        throw Error(ErrorCode::kNotAPartitionOfBlocks,
                    "block " + std::to_string(j + 1) + " appears more than once");
      }
      owner[j] = i;
    }
  }
  for (std::size_t j = 0; j < b; ++j) {
    if (owner[j] == classes.size()) {
      throw Error(ErrorCode::kNotAPartitionOfBlocks,
                  "block " + std::to_string(j + 1) + " is in no class");
    }
  }

  for (std::size_t i = 0; i < classes.size(); ++i) {
    PointSet covered(design.num_points());
    for (std::size_t j : classes[i]) {
      if (covered.intersects(design.block_mask(j))) {
        throw Error(ErrorCode::kClassNotPartitionOfPoints,
                    "class " + std::to_string(i + 1) + " has overlapping blocks");
      }
      covered |= design.block_mask(j);
    }
    if (!covered.all()) {
      throw Error(ErrorCode::kClassNotPartitionOfPoints,
                  "class " + std::to_string(i + 1) + " does not cover every point");
    }
  }

  Resolution res;
  res.blocks_per_class_ = design.num_points() / design.block_size();
  res.sorted_classes_ = classes;
  for (auto& c : res.sorted_classes_) std::sort(c.begin(), c.end());
  res.class_of_block_ = std::move(owner);
  res.classes_ = std::move(classes);
  res.design_ = std::move(design);
  return res;
}

namespace {

// Walks every choice of i blocks from i distinct classes, keeping the running
// intersection on a stack. Stops at the first disagreement or empty set.
class IntersectionWalker {
 public:
  IntersectionWalker(const Resolution& res, std::size_t depth, const SizeCaps& caps)
      : res_(res), depth_(depth), caps_(caps), stack_(depth + 1, PointSet()) {}

  std::optional<std::uint64_t> Run() {
    stack_[0] = PointSet(res_.num_points());
    stack_[0].set();
    Visit(0, 0);
    if (!consistent_) return std::nullopt;
    return common_;
  }

 private:
  void Visit(std::size_t level, std::size_t first_class) {
    const std::size_t r = res_.num_classes();
    for (std::size_t c = first_class; c + (depth_ - level) <= r && consistent_; ++c) {
      for (std::size_t j : res_.sorted_class(c)) {
        stack_[level + 1] = stack_[level] & res_.design().block_mask(j);
        if (stack_[level + 1].none()) {
          // Any completion of an empty partial intersection is empty too.
          consistent_ = false;
          return;
        }
        if (level + 1 == depth_) {
          if (++evaluated_ > caps_.max_intersections) {
            throw Error(ErrorCode::kSizeCapExceeded,
                        "more than " + std::to_string(caps_.max_intersections) +
                            " intersections needed for mu_" + std::to_string(depth_));
          }
          const std::uint64_t size = stack_[level + 1].count();
          if (!common_) {
            common_ = size;
          } else if (*common_ != size) {
            consistent_ = false;
            return;
          }
        } else {
          Visit(level + 1, c + 1);
          if (!consistent_) return;
        }
      }
    }
  }

  const Resolution& res_;
  std::size_t depth_;
  const SizeCaps& caps_;
  std::vector<PointSet> stack_;
  std::optional<std::uint64_t> common_;
  bool consistent_ = true;
  std::uint64_t evaluated_ = 0;
};

}  // namespace

std::optional<std::uint64_t> CrossIntersectionNumber(const Resolution& res, std::size_t i,
                                                     const SizeCaps& caps) {
  if (i < 2 || i > res.num_classes()) {
    throw Error(ErrorCode::kIndexOutOfRange, "cross intersection index " + std::to_string(i) +
                                                 " outside 2.." +
                                                 std::to_string(res.num_classes()));
  }
  return IntersectionWalker(res, i, caps).Run();
}

CrdProfile ComputeCrdProfile(const Resolution& res, const SizeCaps& caps) {
  CrdProfile profile;
  for (std::size_t i = 2; i <= res.num_classes(); ++i) {
    if (auto mu = CrossIntersectionNumber(res, i, caps)) {
      profile.mu.emplace(i, *mu);
      profile.crn = i;
    }
  }
  profile.is_crd = !profile.mu.empty();
  return profile;
}

std::uint64_t UsersPerSubfile(std::uint64_t r, std::uint64_t z, std::uint64_t blocks_per_class) {
  if (z < 1 || z > r) throw Error(ErrorCode::kInvalidArgument, "z must lie in 1..r");
  return SmallBinomial(r, z) *
         (IntPow(blocks_per_class, z) - IntPow(blocks_per_class - 1, z));
}

std::uint64_t UsersPerCacheSubfile(std::uint64_t r, std::uint64_t z,
                                   std::uint64_t blocks_per_class) {
  if (z < 1 || z > r) throw Error(ErrorCode::kInvalidArgument, "z must lie in 1..r");
  return SmallBinomial(r - 1, z - 1) * IntPow(blocks_per_class, z - 1);
}

}  // namespace crd
