// Copyright 2026 The FSPP Authors. All rights reserved.
// Use of this source code is governed by the Apache License 2.0
// that can be found in the LICENSE file.
//
// Acceptance gate: one PASS/FAIL line per criterion, with the sample sizes,
// tolerances and runtime limits fixed below. Exit status is nonzero when any
// criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "fixture_util.hpp"
#include "fspp/calculus.hpp"
#include "fspp/codec.hpp"
#include "fspp/csp.hpp"
#include "fspp/doi.hpp"
#include "fspp/grid.hpp"
#include "fspp/reasoning.hpp"
#include "fspp/relation.hpp"
#include "oracles.hpp"

namespace fspp {
namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

Granularity Make(int m, int n, double l, double rho) {
  Granularity g;
  g.m_orient = m;
  g.n_dist = n;
  g.base_length = l;
  g.ratio = rho;
  return g;
}

double Dist(const Point& a, const Point& b) { return std::hypot(a.x - b.x, a.y - b.y); }

Point RandomPoint(std::mt19937_64& rng, double box) {
  std::uniform_real_distribution<double> u(0.0, box);
  return {u(rng), u(rng)};
}

std::string Cells(const FsppRelation& r) { return SerializeRelation(r); }

// 1. SC of (d15,o4) and its rendering.
Outcome ShortCutFixture() {
  const Granularity g;
  const Reasoner rs(g);
  const auto sc = rs.Unary(UnaryOp::kSc, FsppRelation::FromCells(g, {{15, 4}}));
  const auto want = FsppRelation::FromCells(
      g, {{15, 9}, {15, 10}, {15, 11}, {15, 12}, {15, 13}});
  const std::string text = RenderAscii(sc, "result of SC b");
  const bool render_ok =
      text.find(testing::ReadFixture("reference_sc_b.txt")) != std::string::npos;
  return {sc == want && render_ok,
          "cells " + Cells(sc) + ", render byte-exact " + (render_ok ? "yes" : "no")};
}

// 2. Nominal width and outer radius of band 24 with 25 bands.
Outcome DistanceAnchors() {
  const DistanceSystem ds = BuildDistanceSystem(Make(18, 25, 0.10, 1.25));
  const bool ok = std::abs(ds.nominal_last_width - 26.5) <= 0.1 &&
                  std::abs(ds.nominal_last_outer - 132.0) <= 1.0 &&
                  std::isinf(ds.outer[24]);
  char buf[160];
  std::snprintf(buf, sizeof(buf),
                "width 24 = %.4f m (26.5 +- 0.1), outer 24 = %.3f m (132 +- 1), "
                "stored outer 24 = %g",
                ds.nominal_last_width, ds.nominal_last_outer, ds.outer[24]);
  return {ok, buf};
}

// 3. Composition soundness on random quadruples.
Outcome CompositionSoundness() {
  const Granularity g = Make(16, 12, 0.10, 1.25);
  const Reasoner rs(g);
  std::mt19937_64 rng(2026);
  long violations = 0, samples = 0, total_cells = 0;
  while (samples < 10000) {
    const Point p[4] = {RandomPoint(rng, 20), RandomPoint(rng, 20),
                        RandomPoint(rng, 20), RandomPoint(rng, 20)};
    bool separated = true;
    for (int i = 0; i < 4; ++i) {
      for (int j = i + 1; j < 4; ++j) separated &= Dist(p[i], p[j]) > 1e-6;
    }
    if (!separated) continue;
    ++samples;
    const auto result = rs.Compose(FromClassification(g, Classify(g, p[0], p[1], p[2])),
                                   FromClassification(g, Classify(g, p[1], p[2], p[3])));
    total_cells += result.CellCount();
    if (!result.Contains(Classify(g, p[0], p[1], p[3]))) ++violations;
  }
  char buf[128];
  std::snprintf(buf, sizeof(buf), "%ld quadruples, %ld violations, mean %.1f of %d cells",
                samples, violations, double(total_cells) / samples, g.cell_count());
  return {violations == 0, buf};
}

// 4. Unary soundness for every permutation operator.
Outcome UnarySoundness() {
  const Granularity g;
  const Reasoner rs(g);
  struct Op {
    UnaryOp op;
    int perm[3];
  };
  const Op ops[] = {{UnaryOp::kInv, {1, 0, 2}}, {UnaryOp::kSc, {0, 2, 1}},
                    {UnaryOp::kSci, {2, 0, 1}}, {UnaryOp::kHm, {1, 2, 0}},
                    {UnaryOp::kHmi, {2, 1, 0}}};
  std::mt19937_64 rng(4);
  std::ostringstream detail;
  long total = 0;
  for (const Op& op : ops) {
    long violations = 0, cells = 0;
    for (int i = 0; i < 10000; ++i) {
      Point p[3] = {RandomPoint(rng, 20), RandomPoint(rng, 20), RandomPoint(rng, 20)};
      const auto image = rs.Unary(op.op, FromClassification(g, Classify(g, p[0], p[1], p[2])));
      cells += image.CellCount();
      if (!image.Contains(Classify(g, p[op.perm[0]], p[op.perm[1]], p[op.perm[2]]))) {
        ++violations;
      }
    }
    total += violations;
    detail << UnaryOpName(op.op) << " " << violations << " (mean " << cells / 10000
           << " cells) ";
  }
  detail << "violations over 5 x 10000 triples";
  return {total == 0, detail.str()};
}

// 5. DOI composition upper bound and exact point sums.
Outcome DoiUpperBound() {
  std::mt19937_64 rng(5);
  long violations = 0, full = 0;
  for (int pair = 0; pair < 1000; ++pair) {
    const Doi d1 = testing::RandomDoi(rng), d2 = testing::RandomDoi(rng);
    const Doi d3 = Compose(d1, d2);
    full += d3.is_full();
    for (int s = 0; s < 200; ++s) {
      const auto z = testing::ChainOracle(d1.Sample(rng()), d2.Sample(rng()));
      if (!testing::DoiHas(d3, z, 1e-9 * (1.0 + std::abs(z)))) ++violations;
    }
  }
  long point_errors = 0;
  std::uniform_real_distribution<double> r(0.1, 10.0), a(-kPi, kPi);
  for (int i = 0; i < 1000; ++i) {
    const PolarVector v1{r(rng), a(rng)}, v2{r(rng), a(rng)};
    const Doi d3 = Compose(Doi::Point(v1.r, v1.phi), Doi::Point(v2.r, v2.phi));
    const auto z = testing::ChainOracle(v1, v2);
    if (d3.is_full() || std::abs(d3.r_min() - std::abs(z)) > 1e-9 ||
        std::abs(d3.r_max() - std::abs(z)) > 1e-9 ||
        std::abs(std::remainder(d3.phi_min() - std::arg(z), kTwoPi)) > 1e-9 ||
        std::abs(std::remainder(d3.phi_max() - std::arg(z), kTwoPi)) > 1e-9) {
      ++point_errors;
    }
  }
  char buf[160];
  std::snprintf(buf, sizeof(buf),
                "1000 pairs x 200 samples: %ld violations (%ld full); 1000 point "
                "pairs off by > 1e-9: %ld",
                violations, full, point_errors);
  return {violations == 0 && point_errors == 0, buf};
}

using CellSet = std::set<std::pair<int, int>>;

CellSet AsSet(const std::vector<CellIndex>& cells) {
  CellSet out;
  for (const CellIndex c : cells) out.insert({c.dist, c.orient});
  return out;
}

struct ContourCounts {
  long components = 0;
  long mismatches = 0;         // trace vs the matching brute-force border
  long literal_mismatches = 0;  // trace vs the border of the same neighbourhood
};

void CheckContours(const BoolGrid& g, ContourCounts& counts) {
  const auto four = testing::BorderOracle(g, false);
  const auto eight = testing::BorderOracle(g, true);
  for (const Connectivity conn : {Connectivity::kEight, Connectivity::kFour}) {
    const auto& paired = conn == Connectivity::kEight ? four : eight;
    const auto& literal = conn == Connectivity::kEight ? eight : four;
    for (const auto& comp : ConnectedComponents(g, conn)) {
      ++counts.components;
      const CellSet traced = AsSet(TraceComponent(g, comp, conn));
      CellSet want, want_literal;
      for (const CellIndex c : comp) {
        if (paired.count({c.dist, c.orient})) want.insert({c.dist, c.orient});
        if (literal.count({c.dist, c.orient})) want_literal.insert({c.dist, c.orient});
      }
      counts.mismatches += traced != want;
      counts.literal_mismatches += traced != want_literal;
    }
  }
}

BoolGrid Block(int d0, int d1, int o0, int o1) {
  BoolGrid g(18, 20);
  for (int d = d0; d <= d1; ++d) {
    for (int o = o0; o <= o1; ++o) g.Set({d, ((o % 18) + 18) % 18});
  }
  return g;
}

std::vector<BoolGrid> StructuredGrids() {
  std::vector<BoolGrid> out;
  out.push_back(Block(2, 6, 3, 9));
  out.push_back(Block(0, 19, 0, 17));
  out.push_back(Block(5, 8, 0, 17));   // ring around the cylinder
  out.push_back(Block(3, 9, 15, 21));  // crosses the orientation seam
  out.push_back(Block(0, 4, 16, 19));
  BoolGrid annulus = Block(2, 10, 2, 12);
  for (int d = 4; d <= 8; ++d) {
    for (int o = 4; o <= 10; ++o) annulus.Set({d, o}, false);
  }
  out.push_back(annulus);
  BoolGrid seam_annulus = Block(6, 14, 13, 23);
  for (int d = 8; d <= 12; ++d) {
    for (int o = 15; o <= 21; ++o) seam_annulus.Set({d, o % 18}, false);
  }
  out.push_back(seam_annulus);
  out.push_back(testing::LoadGridFixture("reference_composition_1.txt", 18, 20));
  out.push_back(testing::LoadGridFixture("reference_composition_2.txt", 18, 20));
  return out;
}

// 6. Contour tracing against the brute-force border.
Outcome ContourOracle() {
  ContourCounts counts;
  std::mt19937_64 rng(6);
  for (int i = 0; i < 500; ++i) CheckContours(testing::RandomGrid(rng, 18, 20, 0.3), counts);
  for (const BoolGrid& g : StructuredGrids()) CheckContours(g, counts);
  char buf[320];
  std::snprintf(buf, sizeof(buf),
                "500 random 18x20 grids (density 0.3) + 9 structured, %ld "
                "components, both connectivities: %ld mismatches; 8-trace vs "
                "Moore border and 4-trace vs edge border: %ld mismatches (info)",
                counts.components, counts.mismatches, counts.literal_mismatches);
  return {counts.mismatches == 0, buf};
}

// 7. Fill of the traced perimeter of rasterized DOI regions.
Outcome FillReconstruction() {
  const Granularity g;
  const Reasoner rs(g);
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  long failures = 0, not_idempotent = 0, regions = 0;
  while (regions < 200) {
    const double r_min = u(rng) < 0.2 ? 0.0 : 30.0 * u(rng) * u(rng);
    const double r_max = r_min + 20.0 * u(rng) * u(rng);
    const double width = u(rng) < 0.1 ? kPi : kPi * u(rng);
    const double phi_max = -kPi + kTwoPi * u(rng);
    const auto region = rs.DoiToRelation(Doi(r_min, r_max, phi_max - width, phi_max));
    if (!region.HasCells()) continue;
    ++regions;
    const BoolGrid grid = BoolGrid::FromRelation(region);
    const BoolGrid filled = Fill(Contour(grid, Connectivity::kEight));
    failures += !(filled == grid);
    not_idempotent += !(Fill(filled) == filled) + !(Fill(grid) == grid);
  }
  for (int i = 0; i < 200; ++i) {
    const BoolGrid g2 = Fill(testing::RandomGrid(rng, 18, 20, 0.4));
    not_idempotent += !(Fill(g2) == g2);
  }
  for (const BoolGrid& s : StructuredGrids()) {
    not_idempotent += !(Fill(Fill(s)) == Fill(s));
  }
  char buf[160];
  std::snprintf(buf, sizeof(buf),
                "200 DOI regions: %ld reconstruction failures; %ld non-idempotent fills",
                failures, not_idempotent);
  return {failures == 0 && not_idempotent == 0, buf};
}

// 8. Bordered composition against full composition.
Outcome BorderedComposition(const std::string& archive) {
  const Granularity g;
  const Reasoner rs(g);
  std::vector<std::pair<FsppRelation, FsppRelation>> pairs;
  const auto a = FsppRelation::FromCells(g, {{3, 5}, {3, 6}, {4, 6}});
  const auto b = FsppRelation::FromCells(g, {{15, 4}});
  const auto d = rs.Compose(a, b);
  pairs.push_back({a, b});
  pairs.push_back({a, d});
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<int> size(1, 40);
  for (int i = 0; i < 100; ++i) {
    pairs.push_back({FsppRelation::FromCells(g, testing::RandomConnected(rng, g, size(rng))),
                     FsppRelation::FromCells(g, testing::RandomConnected(rng, g, size(rng)))});
  }
  // The demo's second composition with the traced operand.
  BoolGrid contour = Contour(BoolGrid::FromRelation(d), Connectivity::kEight);
  FsppRelation d_contour(g);
  contour.WriteTo(d_contour);
  const bool demo_equal = rs.Compose(a, d) == rs.Compose(a, d_contour);

  std::ostringstream counterexamples;
  long mismatches = 0;
  for (const auto& [x, y] : pairs) {
    if (rs.ComposeBordered(x, y) == rs.Compose(x, y)) continue;
    ++mismatches;
    counterexamples << "{\"first\": " << SerializeRelation(x)
                    << ", \"second\": " << SerializeRelation(y) << "}\n";
  }
  if (mismatches > 0) {
    std::ofstream(archive) << counterexamples.str();
  }
  return {mismatches == 0 && demo_equal,
          "2 demo pairs + 100 random connected pairs: " + std::to_string(mismatches) +
              " mismatches" + (mismatches ? " (archived to " + archive + ")" : "") +
              "; demo e == f: " + (demo_equal ? "true" : "false")};
}

// 9. Frozen snapshot of the demo's first composition.
Outcome DemoSnapshot() {
  const Granularity g;
  const Reasoner rs(g);
  const auto a = FsppRelation::FromCells(g, {{3, 5}, {3, 6}, {4, 6}});
  const auto b = FsppRelation::FromCells(g, {{15, 4}});
  const auto result = rs.Compose(a, b);
  std::vector<CellIndex> frozen;
  for (int d = 14; d <= 16; ++d) {
    for (int o = 8; o <= 11; ++o) frozen.push_back({d, o});
  }
  const bool snapshot = result == FsppRelation::FromCells(g, frozen);
  const BoolGrid printed = testing::LoadGridFixture("reference_composition_1.txt", 18, 20);
  const bool printed_equal = BoolGrid::FromRelation(result) == printed;
  return {snapshot, "orientations 8-11 x distances 14-16 snapshot " +
                        std::string(snapshot ? "matches" : "differs") +
                        "; printed grid (distances 14-17) byte-exact: " +
                        (printed_equal ? "yes" : "no") + " (reported only)"};
}

// 10. Conceptual neighbourhood formula and symmetry.
Outcome Neighborhood() {
  const Granularity g;
  const Reasoner rs(g);
  long errors = 0;
  for (int bit = 0; bit < g.cell_count(); ++bit) {
    const CellIndex c = CellFromBit(g, bit);
    std::vector<CellIndex> want = {{c.dist, (c.orient + 1) % g.m_orient},
                                   {c.dist, (c.orient + g.m_orient - 1) % g.m_orient}};
    if (c.dist > 0) want.push_back({c.dist - 1, c.orient});
    if (c.dist < g.n_dist - 1) want.push_back({c.dist + 1, c.orient});
    std::sort(want.begin(), want.end());
    auto got = rs.Neighbors(c);
    std::sort(got.begin(), got.end());
    errors += got != want;
    for (const CellIndex n : got) {
      const auto back = rs.Neighbors(n);
      errors += std::find(back.begin(), back.end(), c) == back.end();
    }
  }
  return {errors == 0, std::to_string(g.cell_count()) + " cells, " +
                           std::to_string(errors) + " errors"};
}

// 11. Constraint networks seeded from real points stay sound.
Outcome CspSoundness() {
  const Granularity g;
  const Reasoner rs(g);
  std::mt19937_64 rng(11);
  const std::vector<std::string> ids = {"P0", "P1", "P2", "P3", "P4", "P5"};
  long lost = 0, inconsistent = 0, stored = 0;
  for (int s = 0; s < 100; ++s) {
    std::map<std::string, Point> pts;
    for (const auto& id : ids) pts[id] = RandomPoint(rng, 20);
    Network net(g);
    auto seed = [&](const std::string& a, const std::string& b, const std::string& c) {
      net.AddConstraint({a, b, c}, FromClassification(g, Classify(g, pts[a], pts[b], pts[c])));
    };
    for (int i = 0; i + 2 < 6; ++i) seed(ids[i], ids[i + 1], ids[i + 2]);
    std::vector<std::string> shuffled = ids;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    seed(shuffled[0], shuffled[1], shuffled[2]);
    net.UnaryClosure(rs);
    net.Refine(rs);
    inconsistent += !net.Consistent();
    for (const auto& [t, r] : net.constraints()) {
      ++stored;
      const auto& [a, b, c] = t;
      lost += !r.Contains(Classify(g, pts[a], pts[b], pts[c]));
    }
  }
  return {lost == 0 && inconsistent == 0,
          "100 scenarios of 6 points, " + std::to_string(stored) +
              " stored relations: " + std::to_string(lost) +
              " lost the true classification, " + std::to_string(inconsistent) +
              " inconsistent networks"};
}

}  // namespace
}  // namespace fspp

int main(int argc, char** argv) {
  using Clock = std::chrono::steady_clock;
  const std::string archive =
      argc > 1 ? argv[1] : "acceptance_bordered_counterexamples.jsonl";
  struct Criterion {
    int id;
    const char* name;
    double limit_s;  // 0: no runtime bound
    std::function<fspp::Outcome()> run;
  };
  const Criterion criteria[] = {
      {1, "SC fixture", 1, fspp::ShortCutFixture},
      {2, "distance anchors", 1, fspp::DistanceAnchors},
      {3, "composition soundness", 120, fspp::CompositionSoundness},
      {4, "unary soundness", 120, fspp::UnarySoundness},
      {5, "DOI upper bound", 30, fspp::DoiUpperBound},
      {6, "contour oracle", 30, fspp::ContourOracle},
      {7, "fill reconstruction", 30, fspp::FillReconstruction},
      {8, "bordered composition", 120, [&] { return fspp::BorderedComposition(archive); }},
      {9, "demo snapshot", 0, fspp::DemoSnapshot},
      {10, "conceptual neighborhood", 1, fspp::Neighborhood},
      {11, "CSP soundness", 120, fspp::CspSoundness},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto start = Clock::now();
    fspp::Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    const bool in_time = c.limit_s <= 0 || secs < c.limit_s;
    const bool pass = out.pass && in_time;
    failed += !pass;
    char timing[64];
    if (c.limit_s > 0) {
      std::snprintf(timing, sizeof(timing), "%.2f s < %.0f s", secs, c.limit_s);
    } else {
      std::snprintf(timing, sizeof(timing), "%.2f s", secs);
    }
    std::printf("criterion %2d %-24s %s  [%s] %s\n", c.id, c.name,
                pass ? "PASS" : "FAIL", timing, out.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%s: %d of 11 criteria failed\n", failed ? "FAIL" : "PASS", failed);
  return failed ? 1 : 0;
}
