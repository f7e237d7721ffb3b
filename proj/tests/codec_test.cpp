// Copyright 2026 The FSPP Authors. All rights reserved.
// Use of this source code is governed by the Apache License 2.0
// that can be found in the LICENSE file.

#include "fspp/codec.hpp"

#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "fixture_util.hpp"
#include "fspp/error.hpp"
#include "fspp/reasoning.hpp"

namespace fspp {
namespace {

TEST(RenderTest, MatchesReferenceBlocks) {
  const Granularity g;
  const auto b = FsppRelation::FromCells(g, {{15, 4}});
  const std::string text = RenderAscii(b, "b");
  EXPECT_EQ(text.rfind(" FSPP b\n", 0), 0u);
  EXPECT_NE(text.find(testing::ReadFixture("reference_b.txt")), std::string::npos);
  const Reasoner rs(g);
  EXPECT_NE(RenderAscii(rs.Unary(UnaryOp::kSc, b), "result of SC b")
                .find(testing::ReadFixture("reference_sc_b.txt")),
            std::string::npos);
}

TEST(RenderTest, EmptyRelationIsAllZeros) {
  const Granularity g;
  const std::string text = RenderAscii(FsppRelation::Empty(g), "empty");
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    const auto colon = line.find(" : ");
    if (colon != std::string::npos) {
      EXPECT_EQ(line.substr(colon + 3), std::string(20, '0'));
    }
  }
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 1 + 3 + 18 + 1);
}

TEST(RenderTest, GridAndRelationAgree) {
  const Granularity g;
  const auto r = FsppRelation::FromCells(g, {{3, 5}, {3, 6}, {4, 6}});
  EXPECT_EQ(RenderAscii(r, "a"), RenderAscii(BoolGrid::FromRelation(r), "a"));
}

TEST(HexTest, AllOnesIsUniversalCells) {
  const Granularity g;
  const std::string hex(2 * ((g.cell_count() + 7) / 8), 'f');
  const auto r = FromHex(g, hex);
  EXPECT_TRUE(r.AllCells());
  EXPECT_EQ(ToHex(r), hex);
  EXPECT_THROW(FromHex(g, "ff"), Error);
  EXPECT_THROW(FromHex(g, std::string(hex.size(), 'g')), Error);
}

TEST(HexTest, BitOrder) {
  const Granularity g;
  const auto r = FsppRelation::FromCells(g, {{0, 0}, {0, 9}});
  const std::string hex = ToHex(r);
  EXPECT_EQ(hex.substr(0, 4), "0102");
}

TEST(SerializeTest, RoundTrips) {
  const Granularity g;
  std::mt19937_64 rng(1);
  std::bernoulli_distribution on(0.2);
  for (int i = 0; i < 100; ++i) {
    FsppRelation r(g);
    for (int bit = 0; bit < g.cell_count(); ++bit) r.SetBit(bit, on(rng));
    r.set_dou(on(rng));
    r.set_tri(on(rng));
    r.set_sam(on(rng));
    EXPECT_EQ(ParseRelation(g, SerializeRelation(r)), r);
    auto cells_only = r;
    cells_only.set_dou(false);
    cells_only.set_tri(false);
    cells_only.set_sam(false);
    EXPECT_EQ(FromHex(g, ToHex(r)), cells_only);
    EXPECT_EQ(ParseRelation(g, "{\"hex\": \"" + ToHex(r) + "\"}"), cells_only);
  }
}

TEST(SerializeTest, ParseForms) {
  const Granularity g;
  const auto want = FsppRelation::FromCells(g, {{3, 5}, {4, 6}});
  EXPECT_EQ(ParseRelation(g, "[[3, 5], [4, 6]]"), want);
  auto flagged = want;
  flagged.set_sam(true);
  EXPECT_EQ(ParseRelation(g, R"({"cells": [[3, 5], [4, 6]], "flags": ["sam"]})"),
            flagged);
}

std::string ParseError(const Granularity& g, const std::string& text) {
  try {
    ParseRelation(g, text);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kParse);
    return e.what();
  }
  ADD_FAILURE() << "no error for " << text;
  return {};
}

TEST(SerializeTest, ParseErrorsCarryLocation) {
  const Granularity g;
  EXPECT_NE(ParseError(g, "[[1, 2],\n [3, ]]").find("line 2, column"),
            std::string::npos);
  EXPECT_NE(ParseError(g, "[[1, 2], [3]]").find("/1"), std::string::npos);
  EXPECT_NE(ParseError(g, R"({"cells": [], "flags": ["odd"]})").find("odd"),
            std::string::npos);
  EXPECT_THROW(ParseRelation(g, "[[40, 2]]"), Error);
}

TEST(ScenarioParseTest, ReadsFixture) {
  const Scenario s = ParseScenario(testing::ReadFixture("scenario_ground_truth.json"));
  EXPECT_EQ(s.granularity, Granularity{});
  EXPECT_DOUBLE_EQ(s.points.at("C").x, 2.9);
  ASSERT_EQ(s.queries.size(), 4u);
  EXPECT_EQ(s.queries[0].op, "path");
  EXPECT_EQ(s.queries[0].ids.size(), 5u);
  for (const auto& c : s.constraints) EXPECT_FALSE(c.relation.IsEmpty());
}

TEST(ScenarioParseTest, RejectsBadInput) {
  EXPECT_THROW(ParseScenario(R"({"points": {"A": [0]}})"), Error);
  EXPECT_THROW(ParseScenario(R"({"bogus": 1})"), Error);
  EXPECT_THROW(
      ParseScenario(R"({"constraints": [{"triple": ["A", "B", "C"], "from_points": true}]})"),
      Error);
}

TEST(GranularityTest, Serializes) {
  const std::string text = SerializeGranularity(Granularity{});
  EXPECT_NE(text.find("\"orientations\":18"), std::string::npos);
}

}  // namespace
}  // namespace fspp
