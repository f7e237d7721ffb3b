// Copyright 2026 The FSPP Authors. All rights reserved.
// Use of this source code is governed by the Apache License 2.0
// that can be found in the LICENSE file.
#include "fspp/error.hpp"

namespace fspp {

const char* ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kConfig: return "configuration error";
    case ErrorCode::kIndex: return "index error";
    case ErrorCode::kGranularityMismatch: return "granularity mismatch";
    case ErrorCode::kDegenerate: return "degenerate configuration";
    case ErrorCode::kUndefinedDirection: return "undefined direction";
    case ErrorCode::kInvalidStart: return "invalid start";
    case ErrorCode::kEmptyComponent: return "empty component";
    case ErrorCode::kMissingConstraint: return "missing constraint";
    case ErrorCode::kParse: return "parse error";
  }
  return "unknown error";
}

}  // namespace fspp
