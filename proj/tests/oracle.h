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

// Brute-force reference computations for the tests. Nothing here calls into
// the library beyond reading a Resolution's blocks and classes, so the
// library can be checked against it.

#ifndef CRD_TESTS_ORACLE_H_
#define CRD_TESTS_ORACLE_H_

#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <vector>

#include "crd/design.h"

namespace crd::oracle {

using Mask = std::vector<bool>;

inline Mask BlockMask(const Resolution& res, std::size_t j) {
  Mask m(res.num_points(), false);
  for (std::size_t p : res.design().block(j)) m[p] = true;
  return m;
}

inline std::size_t Count(const Mask& m) {
  std::size_t c = 0;
  for (bool b : m) c += b;
  return c;
}

// Every increasing i-subset of {0..n-1}.
inline void ForEachSubset(std::size_t n, std::size_t i,
                          const std::function<void(const std::vector<std::size_t>&)>& fn) {
  std::vector<std::size_t> s;
  std::function<void(std::size_t)> rec = [&](std::size_t next) {
    if (s.size() == i) {
      fn(s);
      return;
    }
    for (std::size_t x = next; x < n; ++x) {
      s.push_back(x);
      rec(x + 1);
      s.pop_back();
    }
  };
  rec(0);
}

// Every choice of one block per listed class.
inline void ForEachTuple(const Resolution& res, const std::vector<std::size_t>& classes,
                         const std::function<void(const std::vector<std::size_t>&)>& fn) {
  std::vector<std::size_t> t;
  std::function<void(std::size_t)> rec = [&](std::size_t depth) {
    if (depth == classes.size()) {
      fn(t);
      return;
    }
    for (std::size_t j : res.parallel_class(classes[depth])) {
      t.push_back(j);
      rec(depth + 1);
      t.pop_back();
    }
  };
  rec(0);
}

// For every i in 1..r, the set of intersection sizes over all i blocks drawn
// from i distinct classes. Exhaustive: no tuple is skipped. Needs v <= 64.
inline std::vector<std::set<std::size_t>> IntersectionSizesByDepth(const Resolution& res) {
  const std::size_t r = res.num_classes();
  std::vector<std::uint64_t> mask(res.num_blocks(), 0);
  for (std::size_t j = 0; j < res.num_blocks(); ++j) {
    for (std::size_t p : res.design().block(j)) mask[j] |= std::uint64_t{1} << p;
  }
  std::vector<std::set<std::size_t>> sizes(r + 1);
  std::function<void(std::size_t, std::size_t, std::uint64_t)> rec =
      [&](std::size_t next_class, std::size_t depth, std::uint64_t acc) {
        for (std::size_t c = next_class; c < r; ++c) {
          for (std::size_t j : res.parallel_class(c)) {
            const std::uint64_t m = acc & mask[j];
            sizes[depth + 1].insert(static_cast<std::size_t>(__builtin_popcountll(m)));
            rec(c + 1, depth + 1, m);
          }
        }
      };
  const std::uint64_t all =
      res.num_points() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << res.num_points()) - 1;
  rec(0, 0, all);
  return sizes;
}

inline std::map<std::size_t, std::uint64_t> MuProfile(const Resolution& res) {
  const auto sizes = IntersectionSizesByDepth(res);
  std::map<std::size_t, std::uint64_t> mu;
  for (std::size_t i = 2; i < sizes.size(); ++i) {
    if (sizes[i].size() == 1 && *sizes[i].begin() > 0) mu[i] = *sizes[i].begin();
  }
  return mu;
}

// Minimum and maximum intersection size per depth, over the same exhaustive
// walk as IntersectionSizesByDepth but cheap enough for a few hundred
// million tuples. Needs v <= 64.
class IntersectionRangeWalk {
 public:
  explicit IntersectionRangeWalk(const Resolution& res)
      : res_(res), mask_(res.num_blocks(), 0), lo_(res.num_classes() + 1, ~std::size_t{0}),
        hi_(res.num_classes() + 1, 0) {
    for (std::size_t j = 0; j < res.num_blocks(); ++j) {
      for (std::size_t p : res.design().block(j)) mask_[j] |= std::uint64_t{1} << p;
    }
    const std::uint64_t all =
        res.num_points() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << res.num_points()) - 1;
    Walk(0, 0, all);
  }

  // mu_i for every i where min == max > 0.
  std::map<std::size_t, std::uint64_t> Mu() const {
    std::map<std::size_t, std::uint64_t> mu;
    for (std::size_t i = 2; i < lo_.size(); ++i) {
      if (lo_[i] == hi_[i] && lo_[i] > 0) mu[i] = lo_[i];
    }
    return mu;
  }

 private:
  void Walk(std::size_t next_class, std::size_t depth, std::uint64_t acc) {
    for (std::size_t c = next_class; c < res_.num_classes(); ++c) {
      for (std::size_t j : res_.parallel_class(c)) {
        const std::uint64_t m = acc & mask_[j];
        const std::size_t size = static_cast<std::size_t>(__builtin_popcountll(m));
        if (size < lo_[depth + 1]) lo_[depth + 1] = size;
        if (size > hi_[depth + 1]) hi_[depth + 1] = size;
        Walk(c + 1, depth + 1, m);
      }
    }
  }

  const Resolution& res_;
  std::vector<std::uint64_t> mask_;
  std::vector<std::size_t> lo_, hi_;
};

// Exhaustive user walk for every z at once: reach[z][p] counts users with z
// caches whose union holds point p, on[z][j] counts those connected to block
// j. Needs v <= 64.
struct UserCounts {
  std::vector<std::vector<std::uint64_t>> reach;
  std::vector<std::vector<std::uint64_t>> on;
};

inline UserCounts CountUsers(const Resolution& res) {
  const std::size_t r = res.num_classes();
  UserCounts out{std::vector<std::vector<std::uint64_t>>(r + 1,
                                                         std::vector<std::uint64_t>(res.num_points())),
                 std::vector<std::vector<std::uint64_t>>(r + 1,
                                                         std::vector<std::uint64_t>(res.num_blocks()))};
  std::vector<std::uint64_t> mask(res.num_blocks(), 0);
  for (std::size_t j = 0; j < res.num_blocks(); ++j) {
    for (std::size_t p : res.design().block(j)) mask[j] |= std::uint64_t{1} << p;
  }
  std::vector<std::size_t> chosen;
  struct Walker {
    const Resolution& res;
    const std::vector<std::uint64_t>& mask;
    std::vector<std::size_t>& chosen;
    UserCounts& out;
    void Walk(std::size_t next_class, std::uint64_t acc) {
      for (std::size_t c = next_class; c < res.num_classes(); ++c) {
        for (std::size_t j : res.parallel_class(c)) {
          const std::uint64_t u = acc | mask[j];
          chosen.push_back(j);
          const std::size_t z = chosen.size();
          for (std::uint64_t bits = u; bits; bits &= bits - 1) {
            ++out.reach[z][static_cast<std::size_t>(__builtin_ctzll(bits))];
          }
          for (std::size_t b : chosen) ++out.on[z][b];
          Walk(c + 1, u);
          chosen.pop_back();
        }
      }
    }
  };
  Walker{res, mask, chosen, out}.Walk(0, 0);
  return out;
}

struct BruteUser {
  std::vector<std::size_t> classes;
  std::vector<std::size_t> blocks;
  Mask reach;
};

inline std::vector<BruteUser> AllUsers(const Resolution& res, std::size_t z) {
  std::vector<BruteUser> users;
  ForEachSubset(res.num_classes(), z, [&](const std::vector<std::size_t>& classes) {
    ForEachTuple(res, classes, [&](const std::vector<std::size_t>& blocks) {
      BruteUser u{classes, blocks, Mask(res.num_points(), false)};
      for (std::size_t j : blocks) {
        for (std::size_t p : res.design().block(j)) u.reach[p] = true;
      }
      users.push_back(std::move(u));
    });
  });
  return users;
}

// Points reachable through a set of caches.
inline Mask ReachOf(const Resolution& res, const std::vector<std::size_t>& caches) {
  Mask reach(res.num_points(), false);
  for (std::size_t j : caches) {
    for (std::size_t p : res.design().block(j)) reach[p] = true;
  }
  return reach;
}

// Users reaching a given point.
inline std::uint64_t UsersReachingPoint(const Resolution& res, std::size_t z, std::size_t point) {
  std::uint64_t c = 0;
  for (const auto& u : AllUsers(res, z)) c += u.reach[point];
  return c;
}

// Users connected to a given block.
inline std::uint64_t UsersOnBlock(const Resolution& res, std::size_t z, std::size_t block) {
  std::uint64_t c = 0;
  for (const auto& u : AllUsers(res, z)) {
    for (std::size_t j : u.blocks) c += (j == block);
  }
  return c;
}

// Polynomial product over GF(p) reduced by a monic modulus; coefficients are
// little-endian.
inline std::vector<std::uint32_t> PolyMulMod(const std::vector<std::uint32_t>& a,
                                             const std::vector<std::uint32_t>& b,
                                             const std::vector<std::uint32_t>& modulus,
                                             std::uint32_t p) {
  std::vector<std::uint32_t> prod(a.size() + b.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
  }
  const std::size_t deg = modulus.size() - 1;
  for (std::size_t i = prod.size(); i-- > deg;) {
    const std::uint32_t c = prod[i];
    if (c == 0) continue;
    for (std::size_t t = 0; t <= deg; ++t) {
      prod[i - deg + t] = (prod[i - deg + t] + p * p - c * modulus[t] % p) % p;
    }
  }
  prod.resize(deg);
  return prod;
}

}  // namespace crd::oracle

#endif  // CRD_TESTS_ORACLE_H_
