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

#ifndef CRD_CLI_H_
#define CRD_CLI_H_

#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "crd/design.h"

namespace crd {

// Exit codes of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;        // a requested computation failed
inline constexpr int kExitUsage = 2;          // bad flags
inline constexpr int kExitNotRecovered = 3;   // simulate: some user did not decode

// "points=4096,intersections=10000000"; either key may be omitted.
SizeCaps ParseCapsOverride(std::string_view text, SizeCaps base);

// Demand spec: "distinct", "equal" or a comma list of 1-based file indices.
// Returns 0-based files for `num_users` users.
std::vector<std::uint64_t> ParseDemands(std::string_view spec, std::uint64_t num_users,
                                        std::uint64_t num_files);

// `args` excludes the program name. Caps come from the defaults, then the
// CRD_CACHE_CAPS environment variable, then --cap-* flags.
int RunCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace crd

#endif  // CRD_CLI_H_
