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

#include "crd/error.h"

namespace crd {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kEmptyBlock: return "EmptyBlock";
    case ErrorCode::kPointOutOfRange: return "PointOutOfRange";
    case ErrorCode::kNonUniformBlockSize: return "NonUniformBlockSize";
    case ErrorCode::kNotAPartitionOfBlocks: return "NotAPartitionOfBlocks";
    case ErrorCode::kClassNotPartitionOfPoints: return "ClassNotPartitionOfPoints";
    case ErrorCode::kIndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::kSizeCapExceeded: return "SizeCapExceeded";
    case ErrorCode::kNotAPrimePower: return "NotAPrimePower";
    case ErrorCode::kUnsupportedDegree: return "UnsupportedDegree";
    case ErrorCode::kNoConstructionAvailable: return "NoConstructionAvailable";
    case ErrorCode::kUnknownExample: return "UnknownExample";
    case ErrorCode::kMuUndefinedForZ: return "MuUndefinedForZ";
    case ErrorCode::kBadDemandLength: return "BadDemandLength";
    case ErrorCode::kDemandOutOfRange: return "DemandOutOfRange";
    case ErrorCode::kInsufficientFiles: return "InsufficientFiles";
    case ErrorCode::kInternalMuMismatch: return "InternalMuMismatch";
    case ErrorCode::kNonIntegerResult: return "NonIntegerResult";
    case ErrorCode::kNonIntegerCacheRedundancy: return "NonIntegerCacheRedundancy";
    case ErrorCode::kNonIntegerSubpacketization: return "NonIntegerSubpacketization";
    case ErrorCode::kMissingSideInformation: return "MissingSideInformation";
    case ErrorCode::kIncompleteRecovery: return "IncompleteRecovery";
    case ErrorCode::kParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace crd
