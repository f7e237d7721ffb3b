// Copyright 2026 The FSPP Authors. All rights reserved.
// Use of this source code is governed by the Apache License 2.0
// that can be found in the LICENSE file.
#include "fspp/oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>

namespace fspp {
namespace {

std::string Describe(const std::vector<Point>& pts) {
  std::ostringstream out;
  out.precision(17);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    out << (i ? " " : "") << "(" << pts[i].x << ", " << pts[i].y << ")";
  }
  return out.str();
}

class PointSource {
 public:
  PointSource(std::uint64_t seed, double box, double min_separation)
      : rng_(seed), coord_(0.0, box), min_sep_(min_separation) {}

  // `count` points, pairwise farther apart than the separation margin.
  std::vector<Point> Draw(int count) {
    for (;;) {
      std::vector<Point> pts(count);
      for (Point& p : pts) p = {coord_(rng_), coord_(rng_)};
      bool ok = true;
      for (int i = 0; i < count && ok; ++i) {
        for (int k = i + 1; k < count && ok; ++k) {
          ok = std::hypot(pts[i].x - pts[k].x, pts[i].y - pts[k].y) > min_sep_;
        }
      }
      if (ok) return pts;
    }
  }

 private:
  std::mt19937_64 rng_;
  std::uniform_real_distribution<double> coord_;
  double min_sep_;
};

void Record(OracleSuite& s, bool ok, const std::string& what) {
  ++s.checks;
  if (ok) return;
  if (s.violations++ == 0) s.first_violation = what;
}

}  // namespace

bool OracleReport::ok() const {
  for (const OracleSuite& s : suites) {
    if (s.violations != 0) return false;
  }
  return true;
}

std::string OracleReport::ToText() const {
  std::ostringstream out;
  for (const OracleSuite& s : suites) {
    char line[160];
    std::snprintf(line, sizeof(line), "%-10s checks %8ld  violations %ld\n",
                  s.name.c_str(), s.checks, s.violations);
    out << line;
    if (!s.first_violation.empty()) {
      out << "  first: " << s.first_violation << '\n';
    }
  }
  out << (ok() ? "result: sound\n" : "result: VIOLATIONS\n");
  return out.str();
}

OracleReport RunOracle(const Reasoner& reasoner, const OracleConfig& config) {
  const Granularity& g = reasoner.granularity();
  const DistanceSystem& ds = reasoner.distances();
  OracleReport report;

  {
    OracleSuite s;
    s.name = "compose";
    PointSource src(config.seed, config.box, config.min_separation);
    for (int i = 0; i < config.samples; ++i) {
      const auto p = src.Draw(4);
      const auto abc = FromClassification(g, Classify(g, ds, p[0], p[1], p[2]));
      const auto bcd = FromClassification(g, Classify(g, ds, p[1], p[2], p[3]));
      const bool ok = reasoner.Compose(abc, bcd).Contains(
          Classify(g, ds, p[0], p[1], p[3]));
      Record(s, ok, ok ? std::string() : Describe(p));
    }
    report.suites.push_back(std::move(s));
  }

  // Permutation of (A, B, C) for each operation.
  struct Perm {
    UnaryOp op;
    std::array<int, 3> order;
  };
  static constexpr Perm kPerms[] = {{UnaryOp::kInv, {1, 0, 2}},
                                    {UnaryOp::kSc, {0, 2, 1}},
                                    {UnaryOp::kSci, {2, 0, 1}},
                                    {UnaryOp::kHm, {1, 2, 0}},
                                    {UnaryOp::kHmi, {2, 1, 0}}};
  for (const Perm& perm : kPerms) {
    OracleSuite s;
    s.name = UnaryOpName(perm.op);
    PointSource src(config.seed + 1 + static_cast<int>(perm.op), config.box,
                    config.min_separation);
    for (int i = 0; i < config.samples; ++i) {
      const auto p = src.Draw(3);
      const auto image = reasoner.Unary(
          perm.op, FromClassification(g, Classify(g, ds, p[0], p[1], p[2])));
      const bool ok = image.Contains(Classify(
          g, ds, p[perm.order[0]], p[perm.order[1]], p[perm.order[2]]));
      Record(s, ok, ok ? std::string() : Describe(p));
    }
    report.suites.push_back(std::move(s));
  }

  {
    OracleSuite s;
    s.name = "doi";
    std::mt19937_64 rng(config.seed + 100);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const int pairs =
        config.doi_pairs > 0 ? config.doi_pairs : std::max(1, config.samples / 10);
    auto random_doi = [&] {
      const double r_min = 5.0 * unit(rng);
      const double r_max = r_min + 3.0 * unit(rng);
      const double width = kPi * unit(rng);
      const double phi_max = -kPi + kTwoPi * unit(rng);
      return Doi(r_min, r_max, phi_max - width, phi_max);
    };
    for (int i = 0; i < pairs; ++i) {
      const Doi d1 = random_doi();
      const Doi d2 = random_doi();
      const Doi d3 = Compose(d1, d2, reasoner.compose_options());
      for (int k = 0; k < config.doi_samples; ++k) {
        const PolarVector v = Chain(d1.Sample(rng()), d2.Sample(rng()));
        const bool ok = d3.Contains(v, 1e-9);
        std::ostringstream what;
        if (!ok) {
          what.precision(17);
          what << "d1 r[" << d1.r_min() << ", " << d1.r_max() << "] phi["
               << d1.phi_min() << ", " << d1.phi_max() << "] d2 r["
               << d2.r_min() << ", " << d2.r_max() << "] phi["
               << d2.phi_min() << ", " << d2.phi_max() << "]";
        }
        Record(s, ok, what.str());
      }
    }
    report.suites.push_back(std::move(s));
  }
  return report;
}

}  // namespace fspp
