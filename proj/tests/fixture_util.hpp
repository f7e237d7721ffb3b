// Copyright 2026 The FSPP Authors. All rights reserved.
// Use of this source code is governed by the Apache License 2.0
// that can be found in the LICENSE file.
#pragma once

#include <fstream>
#include <regex>
#include <sstream>
#include <stdexcept>
#include <string>

#include "fspp/grid.hpp"

namespace fspp::testing {

inline std::string ReadFixture(const std::string& name) {
  std::ifstream in(std::string(FSPP_FIXTURE_DIR) + "/" + name);
  if (!in) throw std::runtime_error("missing fixture " + name);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Parses the grid rows of a rendered block: one row per orientation, one
// column per distance.
inline BoolGrid LoadGridFixture(const std::string& name, int m, int n) {
  BoolGrid g(m, n);
  std::istringstream in(ReadFixture(name));
  const std::regex row(R"(^.{3}(\d{3}) : ([01]+)$)");
  std::string line;
  std::smatch match;
  while (std::getline(in, line)) {
    if (!std::regex_match(line, match, row)) continue;
    const int orient = std::stoi(match[1]);
    const std::string bits = match[2];
    for (int d = 0; d < static_cast<int>(bits.size()) && d < n; ++d) {
      if (bits[d] == '1') g.Set({d, orient});
    }
  }
  return g;
}

}  // namespace fspp::testing
