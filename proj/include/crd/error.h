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

#ifndef CRD_ERROR_H_
#define CRD_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace crd {

enum class ErrorCode {
  kInvalidArgument,
  kEmptyBlock,
  kPointOutOfRange,
  kNonUniformBlockSize,
  kNotAPartitionOfBlocks,
  kClassNotPartitionOfPoints,
  kIndexOutOfRange,
  kSizeCapExceeded,
  kNotAPrimePower,
  kUnsupportedDegree,
  kNoConstructionAvailable,
  kUnknownExample,
  kMuUndefinedForZ,
  kBadDemandLength,
  kDemandOutOfRange,
  kInsufficientFiles,
  kInternalMuMismatch,
  kNonIntegerResult,
  kNonIntegerCacheRedundancy,
  kNonIntegerSubpacketization,
  kMissingSideInformation,
  kIncompleteRecovery,
  kParseError,
};

std::string_view ErrorCodeName(ErrorCode code);

// Every failure surfaced by the library carries one of the codes above; the
// message names the offending values.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace crd

#endif  // CRD_ERROR_H_
