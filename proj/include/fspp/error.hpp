// Copyright 2026 The FSPP Authors. All rights reserved.
// Use of this source code is governed by the Apache License 2.0
// that can be found in the LICENSE file.
#pragma once

#include <stdexcept>
#include <string>

namespace fspp {

enum class ErrorCode {
  kConfig = 1,
  kIndex,
  kGranularityMismatch,
  kDegenerate,
  kUndefinedDirection,
  kInvalidStart,
  kEmptyComponent,
  kMissingConstraint,
  kParse,
};

const char* ErrorCodeName(ErrorCode code);

// All library failures are reported through this exception; the C API maps
// code() onto fspp_status values.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace fspp
