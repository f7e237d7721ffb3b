// Copyright 2026 The FSPP Authors. All rights reserved.
// Use of this source code is governed by the Apache License 2.0
// that can be found in the LICENSE file.
//
// Sampling soundness suites: concrete point configurations are classified
// and checked against the symbolic operations.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fspp/reasoning.hpp"

namespace fspp {

struct OracleConfig {
  int samples = 1000;          // quadruples / triples per suite
  std::uint64_t seed = 1;
  double box = 20.0;           // points are drawn from [0, box]^2 meters
  double min_separation = 1e-6;
  int doi_pairs = 0;           // <= 0: samples / 10, at least 1
  int doi_samples = 200;       // chained vectors per DOI pair
};

struct OracleSuite {
  std::string name;
  long checks = 0;
  long violations = 0;
  std::string first_violation;  // empty when none
};

struct OracleReport {
  std::vector<OracleSuite> suites;
  bool ok() const;
  std::string ToText() const;
};

OracleReport RunOracle(const Reasoner& reasoner, const OracleConfig& config);

}  // namespace fspp
