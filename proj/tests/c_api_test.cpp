// Copyright 2026 The FSPP Authors. All rights reserved.
// Use of this source code is governed by the Apache License 2.0
// that can be found in the LICENSE file.

#include "fspp/fspp.h"

#include <gtest/gtest.h>

#include <cmath>
#include <string>
#include <vector>

namespace {

class CApiTest : public ::testing::Test {
 protected:
  void SetUp() override {
    fspp_granularity g;
    fspp_granularity_default(&g);
    ASSERT_EQ(fspp_context_create(&g, nullptr, &ctx_), FSPP_OK);
  }
  void TearDown() override {
    for (fspp_relation* r : owned_) fspp_relation_destroy(r);
    fspp_context_destroy(ctx_);
  }

  fspp_relation* Own(fspp_relation* r) {
    owned_.push_back(r);
    return r;
  }

  fspp_relation* Cells(std::initializer_list<std::pair<int, int>> cells) {
    fspp_relation* r = nullptr;
    EXPECT_EQ(fspp_relation_create(ctx_, &r), FSPP_OK);
    for (const auto& [d, o] : cells) EXPECT_EQ(fspp_relation_set(r, d, o, 1), FSPP_OK);
    return Own(r);
  }

  std::string TakeString(char* s) {
    std::string out = s ? s : "";
    fspp_string_free(s);
    return out;
  }

  fspp_context* ctx_ = nullptr;
  std::vector<fspp_relation*> owned_;
};

TEST_F(CApiTest, VersionAndStatusNames) {
  EXPECT_STRNE(fspp_version(), "");
  EXPECT_STREQ(fspp_status_name(FSPP_OK), "ok");
  EXPECT_STRNE(fspp_status_name(FSPP_ERR_PARSE), "");
}

TEST_F(CApiTest, NullArgumentsAreRejected) {
  EXPECT_EQ(fspp_context_create(nullptr, nullptr, nullptr), FSPP_ERR_NULL_ARGUMENT);
  EXPECT_EQ(fspp_relation_create(ctx_, nullptr), FSPP_ERR_NULL_ARGUMENT);
  int out = 0;
  EXPECT_EQ(fspp_relation_get(nullptr, 0, 0, &out), FSPP_ERR_NULL_ARGUMENT);
  fspp_relation_destroy(nullptr);
  fspp_context_destroy(nullptr);
  fspp_network_destroy(nullptr);
  fspp_string_free(nullptr);
}

TEST_F(CApiTest, ErrorsCarryMessages) {
  fspp_relation* r = Cells({});
  EXPECT_EQ(fspp_relation_set(r, 20, 0, 1), FSPP_ERR_INDEX);
  EXPECT_STRNE(fspp_last_error(), "");
  fspp_relation* parsed = nullptr;
  EXPECT_EQ(fspp_relation_parse(ctx_, "[[1, 2],", &parsed), FSPP_ERR_PARSE);
  EXPECT_NE(std::string(fspp_last_error()).find("line 1"), std::string::npos);
  fspp_granularity bad = {7, 20, 0.1, 1.25};
  fspp_context* c = nullptr;
  EXPECT_EQ(fspp_context_create(&bad, nullptr, &c), FSPP_ERR_CONFIG);
}

TEST_F(CApiTest, DistanceTable) {
  fspp_granularity g = {18, 25, 0.10, 1.25};
  std::vector<double> outer(25);
  double width = 0, total = 0;
  ASSERT_EQ(fspp_distance_table(&g, outer.data(), &width, &total), FSPP_OK);
  EXPECT_NEAR(width, 26.5, 0.1);
  EXPECT_NEAR(total, 132.0, 1.0);
  EXPECT_TRUE(std::isinf(outer[24]));
}

TEST_F(CApiTest, RelationAlgebraAndCodecs) {
  fspp_relation* a = Cells({{3, 5}});
  fspp_relation* b = Cells({{3, 6}});
  fspp_relation* u = nullptr;
  ASSERT_EQ(fspp_relation_union(a, b, &u), FSPP_OK);
  Own(u);
  int count = 0;
  fspp_relation_count(u, &count);
  EXPECT_EQ(count, 2);
  int cells[4];
  size_t n = 0;
  ASSERT_EQ(fspp_relation_cells(u, cells, 2, &n), FSPP_OK);
  EXPECT_EQ(n, 2u);
  EXPECT_EQ(cells[0], 3);
  EXPECT_EQ(cells[1], 5);

  char* json = nullptr;
  ASSERT_EQ(fspp_relation_to_json(u, &json), FSPP_OK);
  fspp_relation* back = nullptr;
  ASSERT_EQ(fspp_relation_parse(ctx_, json, &back), FSPP_OK);
  fspp_string_free(json);
  Own(back);
  int equal = 0;
  fspp_relation_equal(u, back, &equal);
  EXPECT_EQ(equal, 1);

  fspp_relation* empty = Cells({});
  fspp_relation* all = nullptr;
  fspp_relation* universal = nullptr;
  ASSERT_EQ(fspp_relation_complement(empty, &all), FSPP_OK);
  Own(all);
  ASSERT_EQ(fspp_relation_universal(ctx_, &universal), FSPP_OK);
  Own(universal);
  fspp_relation_equal(all, universal, &equal);
  EXPECT_EQ(equal, 1);
  unsigned flags = 0;
  fspp_relation_flags(universal, &flags);
  EXPECT_EQ(flags, unsigned{FSPP_FLAG_DOU | FSPP_FLAG_TRI | FSPP_FLAG_SAM});
}

TEST_F(CApiTest, ShortCutRender) {
  fspp_relation* b = Cells({{15, 4}});
  fspp_relation* sc = nullptr;
  ASSERT_EQ(fspp_unary(ctx_, FSPP_OP_SC, b, &sc), FSPP_OK);
  Own(sc);
  int count = 0;
  fspp_relation_count(sc, &count);
  EXPECT_EQ(count, 5);
  char* text = nullptr;
  ASSERT_EQ(fspp_relation_render(sc, "result of SC b", &text), FSPP_OK);
  EXPECT_NE(TakeString(text).find("   009 : 00000000000000010000"),
            std::string::npos);
}

TEST_F(CApiTest, ClassifyComposeAndBordered) {
  const double a[2] = {-1, 0}, o[2] = {0, 0}, c[2] = {0, 2};
  fspp_relation* r = nullptr;
  ASSERT_EQ(fspp_classify(ctx_, a, o, c, &r), FSPP_OK);
  Own(r);
  int on = 0;
  fspp_relation_get(r, 7, 4, &on);
  EXPECT_EQ(on, 1);
  EXPECT_EQ(fspp_classify(ctx_, a, a, a, &r), FSPP_OK);
  unsigned flags = 0;
  fspp_relation_flags(Own(r), &flags);
  EXPECT_EQ(flags, unsigned{FSPP_FLAG_TRI});

  fspp_relation* x = Cells({{3, 5}, {3, 6}, {4, 6}});
  fspp_relation* y = Cells({{15, 4}});
  fspp_relation *full = nullptr, *bordered = nullptr;
  ASSERT_EQ(fspp_compose(ctx_, x, y, &full), FSPP_OK);
  ASSERT_EQ(fspp_compose_bordered(ctx_, x, y, &bordered), FSPP_OK);
  Own(full);
  Own(bordered);
  int equal = 0;
  fspp_relation_equal(full, bordered, &equal);
  EXPECT_EQ(equal, 1);

  fspp_granularity other = {8, 4, 1.0, 2.0};
  fspp_context* ctx2 = nullptr;
  ASSERT_EQ(fspp_context_create(&other, nullptr, &ctx2), FSPP_OK);
  fspp_relation* z = nullptr;
  ASSERT_EQ(fspp_relation_create(ctx2, &z), FSPP_OK);
  fspp_relation* bad = nullptr;
  EXPECT_EQ(fspp_compose(ctx_, x, z, &bad), FSPP_ERR_GRANULARITY_MISMATCH);
  fspp_relation_destroy(z);
  fspp_context_destroy(ctx2);
}

TEST_F(CApiTest, Doi) {
  fspp_doi d1 = {1, 1, 0, 0, 0}, d2 = {2, 2, 0, 0, 0}, out{};
  ASSERT_EQ(fspp_doi_compose(ctx_, &d1, &d2, &out), FSPP_OK);
  EXPECT_NEAR(out.r_min, 3.0, 1e-9);
  EXPECT_EQ(out.is_full, 0);
  fspp_doi bad = {2, 1, 0, 0, 0};
  EXPECT_EQ(fspp_doi_compose(ctx_, &bad, &d2, &out), FSPP_ERR_CONFIG);
  fspp_doi cell{};
  ASSERT_EQ(fspp_cell_to_doi(ctx_, 0, 9, &cell), FSPP_OK);
  EXPECT_NEAR(cell.phi_min, -M_PI, 1e-12);
  fspp_relation* r = nullptr;
  ASSERT_EQ(fspp_doi_to_relation(ctx_, &cell, &r), FSPP_OK);
  int on = 0;
  fspp_relation_get(Own(r), 0, 9, &on);
  EXPECT_EQ(on, 1);
}

TEST_F(CApiTest, GridOperations) {
  fspp_relation* block = Cells({{2, 2}, {2, 3}, {2, 4}, {3, 2}, {3, 3}, {3, 4},
                                {4, 2}, {4, 3}, {4, 4}});
  fspp_relation *contour = nullptr, *filled = nullptr;
  ASSERT_EQ(fspp_contour(block, FSPP_CONN_EIGHT, &contour), FSPP_OK);
  Own(contour);
  int count = 0;
  fspp_relation_count(contour, &count);
  EXPECT_EQ(count, 8);
  ASSERT_EQ(fspp_fill(contour, &filled), FSPP_OK);
  Own(filled);
  int equal = 0;
  fspp_relation_equal(filled, block, &equal);
  EXPECT_EQ(equal, 1);
  int comps = 0;
  ASSERT_EQ(fspp_component_count(block, FSPP_CONN_FOUR, &comps), FSPP_OK);
  EXPECT_EQ(comps, 1);
  fspp_relation* n = nullptr;
  ASSERT_EQ(fspp_neighbors(ctx_, 0, 0, &n), FSPP_OK);
  fspp_relation_count(Own(n), &count);
  EXPECT_EQ(count, 3);
}

TEST_F(CApiTest, Network) {
  fspp_network* net = nullptr;
  ASSERT_EQ(fspp_network_create(ctx_, &net), FSPP_OK);
  fspp_relation* r1 = Cells({{5, 2}});
  fspp_relation* r2 = Cells({{4, 1}});
  ASSERT_EQ(fspp_network_add(net, "A", "B", "C", r1), FSPP_OK);
  ASSERT_EQ(fspp_network_add(net, "B", "C", "D", r2), FSPP_OK);
  const char* path[] = {"A", "B", "C", "D"};
  fspp_relation* folded = nullptr;
  ASSERT_EQ(fspp_network_propagate_path(net, path, 4, &folded), FSPP_OK);
  Own(folded);
  const char* missing[] = {"D", "C", "B", "A"};
  fspp_relation* none = nullptr;
  EXPECT_EQ(fspp_network_propagate_path(net, missing, 4, &none),
            FSPP_ERR_MISSING_CONSTRAINT);
  int sweeps = 0;
  ASSERT_EQ(fspp_network_refine(net, &sweeps), FSPP_OK);
  fspp_relation* abd = nullptr;
  ASSERT_EQ(fspp_network_get(net, "A", "B", "D", &abd), FSPP_OK);
  Own(abd);
  int equal = 0;
  fspp_relation_equal(abd, folded, &equal);
  EXPECT_EQ(equal, 1);
  ASSERT_EQ(fspp_network_unary_closure(net, &sweeps), FSPP_OK);
  size_t size = 0;
  fspp_network_size(net, &size);
  EXPECT_GE(size, 6u);
  int consistent = 0;
  fspp_network_consistent(net, &consistent);
  EXPECT_EQ(consistent, 1);
  fspp_network_destroy(net);
}

TEST_F(CApiTest, ScenarioAndOracle) {
  const char* scenario = R"({
    "points": {"A": [0, 0], "B": [1, 0], "C": [2, 1], "D": [2, 3]},
    "constraints": [
      {"triple": ["A", "B", "C"], "from_points": true},
      {"triple": ["B", "C", "D"], "from_points": true}
    ]
  })";
  int ok = 0;
  char* report = nullptr;
  ASSERT_EQ(fspp_scenario_run(scenario, nullptr, &ok, &report), FSPP_OK);
  EXPECT_EQ(ok, 1);
  EXPECT_NE(TakeString(report).find("truth violations 0"), std::string::npos);
  EXPECT_EQ(fspp_scenario_run("{", nullptr, &ok, &report), FSPP_ERR_PARSE);

  long violations = -1;
  ASSERT_EQ(fspp_oracle_run(ctx_, 200, 3, &violations, &report), FSPP_OK);
  EXPECT_EQ(violations, 0);
  EXPECT_FALSE(TakeString(report).empty());
}

}  // namespace
