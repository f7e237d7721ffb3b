// Copyright 2026 The FSPP Authors. All rights reserved.
// Use of this source code is governed by the Apache License 2.0
// that can be found in the LICENSE file.
#pragma once

#include <string>

#include "fspp/codec.hpp"
#include "fspp/reasoning.hpp"

namespace fspp {

struct ScenarioResult {
  std::string report;
  bool consistent = true;
  // Stored relations that lost the classification of their own coordinates.
  int truth_violations = 0;
};

// Builds the network and runs the queries in order. Without queries the
// default is unary_closure, refine, consistent.
ScenarioResult RunScenario(const Scenario& s, const ReasonerOptions& options);

}  // namespace fspp
