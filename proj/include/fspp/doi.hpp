// Copyright 2026 The FSPP Authors. All rights reserved.
// Use of this source code is governed by the Apache License 2.0
// that can be found in the LICENSE file.
//
// Distance/orientation intervals: annulus sectors anchored at a point with a
// reference direction, and their sound (upper-bound) composition.
#pragma once

#include <cstdint>
#include <limits>
#include <numbers>
#include <optional>
#include <utility>

namespace fspp {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;
inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

struct PolarVector {
  double r = 0.0;
  double phi = 0.0;  // (-pi, pi]
};

// Normalizes an angle into (-pi, pi].
double NormalizeSigned(double angle);
// Normalizes an angle into [0, 2pi).
double NormalizePositive(double angle);

PolarVector FromCartesian(double x, double y);

// v1 followed by v2, where v2 is expressed relative to the direction of v1.
PolarVector Chain(const PolarVector& v1, const PolarVector& v2);

class Doi {
 public:
  // Throws Error(kConfig) when the bounds violate the interval invariants.
  Doi(double r_min, double r_max, double phi_min, double phi_max);

  static Doi Full();
  static Doi Point(double r, double phi);

  double r_min() const { return r_min_; }
  double r_max() const { return r_max_; }
  double phi_min() const { return phi_min_; }
  double phi_max() const { return phi_max_; }
  bool is_full() const { return full_; }

  // Membership; `tolerance` widens every bound by an absolute amount.
  bool Contains(const PolarVector& v, double tolerance = 0.0) const;

  // Deterministic draw, uniform in (r, phi) parameter space. An unbounded
  // r_max is sampled up to max(2 r_min, r_min + 1).
  PolarVector Sample(std::uint64_t seed) const;

  friend bool operator==(const Doi&, const Doi&) = default;

 private:
  Doi() = default;

  double r_min_ = 0.0;
  double r_max_ = 0.0;
  double phi_min_ = 0.0;
  double phi_max_ = 0.0;
  bool full_ = false;
};

// Length of the sum of (r1, phi1) and (r2, phi1 + phi2).
double RSum(double r1, double r2, double phi1, double phi2);

// Quadrant-correct direction of the same sum vector, in (-pi, pi].
// Throws Error(kUndefinedDirection) for the zero vector.
double PhiSum(double r1, double r2, double phi1, double phi2);

// Case analysis over the extremal configurations. Both operands must be
// finite (r_max < infinity) and not full.
double ComposeMinR(const Doi& d1, const Doi& d2);
double ComposeMaxR(const Doi& d1, const Doi& d2);

// Angular hull of the composed vectors; nullopt when every candidate is the
// zero vector. The returned pair satisfies min <= max, max in (-pi, pi].
std::optional<std::pair<double, double>> ComposePhiBounds(const Doi& d1,
                                                          const Doi& d2);

// Angular hull computed from a continuous branch of the sum direction over the
// whole parameter box, so hulls wider than pi are detected reliably. Returns
// nullopt when the anchor point itself is reachable (no direction exists).
// The result satisfies min <= max, max in (-pi, pi]; the width may exceed pi.
std::optional<std::pair<double, double>> ComposePhiHull(const Doi& d1,
                                                        const Doi& d2);

struct ComposeOptions {
  // Unbounded radii are replaced by this value before the case formulas are
  // evaluated; composed r_max at or above it is reported as infinite.
  double r_cap = 1.0e6;
  // When set, any radial overlap or any opposing direction in the second
  // operand yields the full DOI even if the anchor is not reachable, and the
  // angular bounds come from ComposePhiBounds instead of ComposePhiHull.
  bool promote_on_any_overlap = false;
};

Doi Compose(const Doi& d1, const Doi& d2, const ComposeOptions& options = {});

}  // namespace fspp
