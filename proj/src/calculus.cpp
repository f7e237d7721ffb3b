// Copyright 2026 The FSPP Authors. All rights reserved.
// Use of this source code is governed by the Apache License 2.0
// that can be found in the LICENSE file.
#include "fspp/calculus.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "fspp/doi.hpp"
#include "fspp/error.hpp"

namespace fspp {

double Granularity::sector_width() const { return kTwoPi / m_orient; }

void Granularity::Validate() const {
  if (m_orient < 4 || m_orient % 2 != 0) {
    throw Error(ErrorCode::kConfig,
                "orientation count must be even and >= 4, got " +
                    std::to_string(m_orient));
  }
  if (n_dist < 2) {
    throw Error(ErrorCode::kConfig,
                "distance count must be >= 2, got " + std::to_string(n_dist));
  }
  if (!(base_length > 0.0) || !std::isfinite(base_length)) {
    throw Error(ErrorCode::kConfig, "base length must be positive");
  }
  if (!(ratio > 1.0) || !std::isfinite(ratio)) {
    throw Error(ErrorCode::kConfig, "ratio must be > 1");
  }
}

DistanceSystem BuildDistanceSystem(const Granularity& g) {
  g.Validate();
  DistanceSystem ds;
  ds.width.resize(g.n_dist);
  ds.outer.resize(g.n_dist);
  double width = g.base_length * g.ratio;
  double outer = 0.0;
  for (int i = 0; i < g.n_dist; ++i) {
    outer += width;
    ds.width[i] = width;
    ds.outer[i] = outer;
    if (i + 1 < g.n_dist) width *= g.ratio;
  }
  ds.nominal_last_width = ds.width.back();
  ds.nominal_last_outer = ds.outer.back();
  ds.width.back() = kInfinity;
  ds.outer.back() = kInfinity;
  return ds;
}

double RelRadius(const Point& a, const Point& b, const Point& c) {
  const double ab = std::hypot(b.x - a.x, b.y - a.y);
  if (ab == 0.0) throw Error(ErrorCode::kDegenerate, "origin equals relatum");
  return std::hypot(c.x - b.x, c.y - b.y) / ab;
}

double RelAngle(const Point& a, const Point& b, const Point& c) {
  if (a == b) throw Error(ErrorCode::kDegenerate, "origin equals relatum");
  if (c == b) throw Error(ErrorCode::kDegenerate, "referent equals relatum");
  const double reference = std::atan2(b.y - a.y, b.x - a.x);
  const double target = std::atan2(c.y - b.y, c.x - b.x);
  return NormalizePositive(target - reference);
}

Classification Classify(const Granularity& g, const DistanceSystem& ds,
                        const Point& a, const Point& b, const Point& c) {
  Classification out;
  if (a == b) {
    out.special = (c == a) ? SpecialRel::kTri : SpecialRel::kDou;
    return out;
  }
  if (c == b) {
    out.special = SpecialRel::kSam;
    return out;
  }

  const double dist = std::hypot(c.x - b.x, c.y - b.y);
  std::vector<int> bands;
  for (int i = 0; i < g.n_dist; ++i) {
    if (dist >= ds.inner(i) - kBoundaryTolerance &&
        dist <= ds.outer[i] + kBoundaryTolerance) {
      bands.push_back(i);
    }
  }

  const double phi = RelAngle(a, b, c);
  const double w = g.sector_width();
  std::vector<int> sectors;
  const int j = std::min(static_cast<int>(phi / w), g.m_orient - 1);
  sectors.push_back(j);
  if (phi - j * w <= kBoundaryTolerance) {
    sectors.push_back((j - 1 + g.m_orient) % g.m_orient);
  }
  if ((j + 1) * w - phi <= kBoundaryTolerance) {
    sectors.push_back((j + 1) % g.m_orient);
  }

  for (const int band : bands) {
    for (const int sector : sectors) out.cells.push_back({band, sector});
  }
  std::sort(out.cells.begin(), out.cells.end(),
            [&](CellIndex l, CellIndex r) {
              return BitIndex(g, l) < BitIndex(g, r);
            });
  out.cells.erase(std::unique(out.cells.begin(), out.cells.end()),
                  out.cells.end());
  return out;
}

Classification Classify(const Granularity& g, const Point& a, const Point& b,
                        const Point& c) {
  return Classify(g, BuildDistanceSystem(g), a, b, c);
}

void CheckCell(const Granularity& g, CellIndex c) {
  if (c.dist < 0 || c.dist >= g.n_dist || c.orient < 0 ||
      c.orient >= g.m_orient) {
    throw Error(ErrorCode::kIndex, "cell (" + std::to_string(c.dist) + ", " +
                                       std::to_string(c.orient) +
                                       ") out of range");
  }
}

CellBounds GetCellBounds(const Granularity& g, const DistanceSystem& ds,
                         CellIndex c) {
  CheckCell(g, c);
  const double w = g.sector_width();
  return {ds.inner(c.dist), ds.outer[c.dist], w * c.orient,
          w * (c.orient + 1)};
}

int BitIndex(const Granularity& g, CellIndex c) {
  CheckCell(g, c);
  return c.orient + c.dist * g.m_orient;
}

CellIndex CellFromBit(const Granularity& g, int bit) {
  if (bit < 0 || bit >= g.cell_count()) {
    throw Error(ErrorCode::kIndex,
                "bit index " + std::to_string(bit) + " out of range");
  }
  return {bit / g.m_orient, bit % g.m_orient};
}

Point SampleConfiguration(const Granularity& g, const DistanceSystem& ds,
                          CellIndex c, const Point& a, const Point& b,
                          std::uint64_t seed) {
  const CellBounds bounds = GetCellBounds(g, ds, c);
  if (a == b) throw Error(ErrorCode::kDegenerate, "origin equals relatum");
  std::mt19937_64 rng(seed);
  // Keep clear of the borders so the draw lies in the open interior.
  std::uniform_real_distribution<double> unit(0.01, 0.99);
  const double r_hi =
      std::isinf(bounds.r_outer) ? 2.0 * bounds.r_inner : bounds.r_outer;
  const double r = bounds.r_inner + (r_hi - bounds.r_inner) * unit(rng);
  const double phi = bounds.phi_lo + (bounds.phi_hi - bounds.phi_lo) * unit(rng);
  const double heading = std::atan2(b.y - a.y, b.x - a.x) + phi;
  return {b.x + r * std::cos(heading), b.y + r * std::sin(heading)};
}

}  // namespace fspp
