// Copyright 2026 The FSPP Authors. All rights reserved.
// Use of this source code is governed by the Apache License 2.0
// that can be found in the LICENSE file.
//
// The polar partition around the relatum: absolute distance bands growing
// geometrically, relative orientation sectors, and the classification of
// concrete point triples into atomic relations.
#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace fspp {

// Values within this distance of a band or sector border count as lying on
// the border (meters for radii, radians for angles).
inline constexpr double kBoundaryTolerance = 1e-9;

struct Granularity {
  int m_orient = 18;          // orientation sectors, even, >= 4
  int n_dist = 20;            // distance bands, >= 2
  double base_length = 0.10;  // meters
  double ratio = 1.25;        // growth factor of consecutive band widths

  int cell_count() const { return m_orient * n_dist; }
  double sector_width() const;

  // Throws Error(kConfig) on violated invariants.
  void Validate() const;

  friend bool operator==(const Granularity&, const Granularity&) = default;
};

struct DistanceSystem {
  // width[i] = base_length * ratio^(i+1); outer[i] = sum of widths up to i.
  // The last band is unbounded, so width.back() and outer.back() are
  // infinite; the nominal values are what the geometric law would give.
  std::vector<double> width;
  std::vector<double> outer;
  double nominal_last_width = 0.0;
  double nominal_last_outer = 0.0;

  double inner(int band) const { return band == 0 ? 0.0 : outer[band - 1]; }
  // Outer radius of the last finite band.
  double largest_finite() const { return outer[outer.size() - 2]; }
};

DistanceSystem BuildDistanceSystem(const Granularity& g);

struct CellIndex {
  int dist = 0;
  int orient = 0;

  friend auto operator<=>(const CellIndex&, const CellIndex&) = default;
};

enum class SpecialRel { kDou, kTri, kSam };

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point&, const Point&) = default;
};

struct Classification {
  std::vector<CellIndex> cells;  // ascending bit index
  std::optional<SpecialRel> special;
};

struct CellBounds {
  double r_inner;
  double r_outer;  // infinite for the last band
  double phi_lo;   // [0, 2pi)
  double phi_hi;
};

// |BC| / |AB|. Throws Error(kDegenerate) when A == B.
double RelRadius(const Point& a, const Point& b, const Point& c);

// Direction of BC relative to the direction of AB, in [0, 2pi).
// Throws Error(kDegenerate) when A == B or C == B.
double RelAngle(const Point& a, const Point& b, const Point& c);

// Quasi-partition classification: a configuration on a shared border belongs
// to every bordering cell (up to four).
Classification Classify(const Granularity& g, const DistanceSystem& ds,
                        const Point& a, const Point& b, const Point& c);
Classification Classify(const Granularity& g, const Point& a, const Point& b,
                        const Point& c);

CellBounds GetCellBounds(const Granularity& g, const DistanceSystem& ds,
                         CellIndex c);

void CheckCell(const Granularity& g, CellIndex c);
int BitIndex(const Granularity& g, CellIndex c);
CellIndex CellFromBit(const Granularity& g, int bit);

// A point strictly inside the cell's acceptance area, placed relative to the
// reference pair (A, B). The unbounded band is sampled up to twice its inner
// radius.
Point SampleConfiguration(const Granularity& g, const DistanceSystem& ds,
                          CellIndex c, const Point& a, const Point& b,
                          std::uint64_t seed);

}  // namespace fspp
