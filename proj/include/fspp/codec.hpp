// Copyright 2026 The FSPP Authors. All rights reserved.
// Use of this source code is governed by the Apache License 2.0
// that can be found in the LICENSE file.
//
// Text formats: the ASCII grid listing, relation JSON/hex, and scenario
// files.
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fspp/calculus.hpp"
#include "fspp/csp.hpp"
#include "fspp/grid.hpp"
#include "fspp/relation.hpp"

namespace fspp {

// Rows are orientations, columns distances:
//
//    FSPP title
//             TRANS
//            00        10        20
//            |    .    |    .    |
//      000 : 00000000000000000000
//    R 001 : 00000000000000000000
std::string RenderAscii(const FsppRelation& r, const std::string& title);
std::string RenderAscii(const BoolGrid& g, const std::string& title);

// Bytes in bit-index order, least significant bit first, two lowercase hex
// digits per byte. Bits past the last cell are ignored on input.
std::string ToHex(const FsppRelation& r);
FsppRelation FromHex(const Granularity& g, const std::string& hex);

// {"cells": [[dist, orient], ...], "flags": ["dou", "tri", "sam"]}.
// Parsing also accepts {"hex": "...", "flags": [...]} and a bare cell list.
// Throws Error(kParse) with the line and column of malformed text.
std::string SerializeRelation(const FsppRelation& r);
FsppRelation ParseRelation(const Granularity& g, const std::string& text);

std::string SerializeGranularity(const Granularity& g);

struct ScenarioConstraint {
  Triple triple;
  FsppRelation relation;
};

struct ScenarioQuery {
  std::string op;  // unary_closure, refine, path, consistent, show
  std::vector<std::string> ids;
};

struct Scenario {
  Granularity granularity;
  std::map<std::string, Point> points;
  std::vector<std::string> variables;  // points without coordinates
  std::vector<ScenarioConstraint> constraints;
  std::vector<ScenarioQuery> queries;
};

// Constraints may carry "relation" or "from_points": true, which classifies
// the triple from the given coordinates.
Scenario ParseScenario(const std::string& text);

}  // namespace fspp
