// Copyright 2026 The FSPP Authors. All rights reserved.
// Use of this source code is governed by the Apache License 2.0
// that can be found in the LICENSE file.
#include "fspp/doi.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "fspp/error.hpp"

namespace fspp {
namespace {

constexpr double kSlack = 1e-12;

// Lifts `angle` into [lo, lo + 2pi).
double LiftInto(double angle, double lo) {
  double lifted = lo + std::fmod(angle - lo, kTwoPi);
  if (lifted < lo) lifted += kTwoPi;
  return lifted;
}

// True when the closed window [lo, hi] contains `angle` modulo 2pi.
bool WindowContains(double lo, double hi, double angle) {
  return LiftInto(angle, lo) <= hi;
}

// True when the open window (lo, hi) contains `angle` modulo 2pi.
bool WindowContainsOpen(double lo, double hi, double angle) {
  const double lifted = LiftInto(angle, lo);
  return lifted > lo && lifted < hi;
}

bool RadiiOverlap(const Doi& d1, const Doi& d2) {
  return d1.r_min() <= d2.r_max() && d2.r_min() <= d1.r_max();
}

}  // namespace

double NormalizeSigned(double angle) {
  double a = std::fmod(angle, kTwoPi);
  if (a <= -kPi) a += kTwoPi;
  if (a > kPi) a -= kTwoPi;
  return a;
}

double NormalizePositive(double angle) {
  double a = std::fmod(angle, kTwoPi);
  if (a < 0.0) a += kTwoPi;
  if (a >= kTwoPi) a -= kTwoPi;
  return a;
}

PolarVector FromCartesian(double x, double y) {
  PolarVector v;
  v.r = std::hypot(x, y);
  v.phi = (v.r == 0.0) ? 0.0 : NormalizeSigned(std::atan2(y, x));
  return v;
}

PolarVector Chain(const PolarVector& v1, const PolarVector& v2) {
  const double x = v1.r * std::cos(v1.phi) + v2.r * std::cos(v1.phi + v2.phi);
  const double y = v1.r * std::sin(v1.phi) + v2.r * std::sin(v1.phi + v2.phi);
  return FromCartesian(x, y);
}

Doi::Doi(double r_min, double r_max, double phi_min, double phi_max)
    : r_min_(r_min), r_max_(r_max), phi_min_(phi_min), phi_max_(phi_max) {
  const bool ok = r_min >= 0.0 && r_min <= r_max && !std::isnan(r_max) &&
                  phi_min <= phi_max && phi_max - phi_min <= kPi + kSlack &&
                  phi_min >= -kTwoPi - kSlack && phi_min <= kPi + kSlack &&
                  phi_max >= -kPi - kSlack && phi_max <= kPi + kSlack;
  if (!ok) {
    throw Error(ErrorCode::kConfig,
                "invalid DOI bounds r=[" + std::to_string(r_min) + ", " +
                    std::to_string(r_max) + "] phi=[" +
                    std::to_string(phi_min) + ", " + std::to_string(phi_max) +
                    "]");
  }
}

Doi Doi::Full() {
  Doi d;
  d.r_min_ = 0.0;
  d.r_max_ = kInfinity;
  d.phi_min_ = -kPi;
  d.phi_max_ = kPi;
  d.full_ = true;
  return d;
}

Doi Doi::Point(double r, double phi) {
  const double a = NormalizeSigned(phi);
  return Doi(r, r, a, a);
}

bool Doi::Contains(const PolarVector& v, double tolerance) const {
  if (v.r < 0.0) return false;
  if (full_) return true;
  if (v.r < r_min_ - tolerance || v.r > r_max_ + tolerance) return false;
  // A vector of (numerically) zero length has no direction.
  if (tolerance > 0.0 && v.r <= tolerance && r_min_ <= tolerance) return true;
  return LiftInto(v.phi, phi_min_ - tolerance) <= phi_max_ + tolerance;
}

PolarVector Doi::Sample(std::uint64_t seed) const {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  if (full_) {
    const double r = unit(rng);
    return {r, NormalizeSigned(-kPi + kTwoPi * unit(rng))};
  }
  const double hi =
      std::isinf(r_max_) ? std::max(2.0 * r_min_, r_min_ + 1.0) : r_max_;
  const double r = r_min_ + (hi - r_min_) * unit(rng);
  const double phi = phi_min_ + (phi_max_ - phi_min_) * unit(rng);
  return {r, NormalizeSigned(phi)};
}

double RSum(double r1, double r2, double phi1, double phi2) {
  const double y = r1 * std::sin(phi1) + r2 * std::sin(phi1 + phi2);
  const double x = r1 * std::cos(phi1) + r2 * std::cos(phi1 + phi2);
  return std::hypot(x, y);
}

double PhiSum(double r1, double r2, double phi1, double phi2) {
  const double y = r1 * std::sin(phi1) + r2 * std::sin(phi1 + phi2);
  const double x = r1 * std::cos(phi1) + r2 * std::cos(phi1 + phi2);
  if (x == 0.0 && y == 0.0) {
    throw Error(ErrorCode::kUndefinedDirection, "sum vector has zero length");
  }
  return NormalizeSigned(std::atan2(y, x));
}

double ComposeMinR(const Doi& d1, const Doi& d2) {
  const double r1n = d1.r_min(), r1x = d1.r_max();
  const double r2n = d2.r_min(), r2x = d2.r_max();
  const double p2n = d2.phi_min(), p2x = d2.phi_max();

  std::vector<double> c = {
      RSum(r1n, r2n, 0.0, p2n), RSum(r1n, r2n, 0.0, p2x),
      RSum(r1n, r2x, 0.0, p2n), RSum(r1n, r2x, 0.0, p2x),
      RSum(r1x, r2n, 0.0, p2n), RSum(r1x, r2n, 0.0, p2x),
  };
  const bool opposing = WindowContains(p2n, p2x, kPi);
  if (opposing && r1n > r2x) c.push_back(r1n - r2x);
  if (opposing && r2n > r1x) c.push_back(r2n - r1x);
  // Overlapping radii in opposing directions reach the anchor itself.
  if (opposing && RadiiOverlap(d1, d2)) c.push_back(0.0);

  // Closest approach along one edge of the second interval: first the
  // second radius is free, then the first.
  for (const double edge : {p2x, p2n}) {
    const double cosine = std::cos(edge);
    if (cosine >= 0.0) continue;
    const double r2_star = -r1n * cosine;
    if (r2n < r2_star && r2_star < r2x) c.push_back(RSum(r1n, r2_star, 0.0, edge));
    const double r1_star = -r2n * cosine;
    if (r1n < r1_star && r1_star < r1x) c.push_back(RSum(r1_star, r2n, 0.0, edge));
  }
  return *std::min_element(c.begin(), c.end());
}

double ComposeMaxR(const Doi& d1, const Doi& d2) {
  const double r1n = d1.r_min(), r1x = d1.r_max();
  const double r2n = d2.r_min(), r2x = d2.r_max();
  const double p2n = d2.phi_min(), p2x = d2.phi_max();

  std::vector<double> c = {
      RSum(r1x, r2n, 0.0, p2n), RSum(r1x, r2n, 0.0, p2x),
      RSum(r1x, r2x, 0.0, p2n), RSum(r1x, r2x, 0.0, p2x),
      RSum(r1n, r2x, 0.0, p2n), RSum(r1n, r2x, 0.0, p2x),
  };
  if (WindowContainsOpen(p2n, p2x, 0.0)) c.push_back(r1x + r2x);
  return *std::max_element(c.begin(), c.end());
}

std::optional<std::pair<double, double>> ComposePhiBounds(const Doi& d1,
                                                          const Doi& d2) {
  const double r1n = d1.r_min(), r1x = d1.r_max();
  const double r2n = d2.r_min(), r2x = d2.r_max();
  const double p1n = d1.phi_min(), p1x = d1.phi_max();
  const double p2n = d2.phi_min(), p2x = d2.phi_max();

  std::vector<double> values;
  values.reserve(14);
  auto add = [&](double r1, double r2, double phi1, double phi2) {
    const double scale = std::max(1.0, r1 + r2);
    if (RSum(r1, r2, phi1, phi2) <= 1e-12 * scale) return;
    double a = PhiSum(r1, r2, phi1, phi2);
    if (a > 0.0) a -= kTwoPi;  // (-2pi, 0]
    values.push_back(a);
  };

  add(r1n, r2n, p1n, p2n);
  add(r1n, r2x, p1n, p2n);
  add(r1x, r2n, p1n, p2n);
  add(r1x, r2x, p1n, p2n);
  add(r1n, r2x, p1n, p2x);
  if (r2x < r1n) {
    const double t = -kPi / 2.0 - std::asin(r2x / r1n);
    if (WindowContainsOpen(p2n, p2x, t)) add(r1n, r2x, p1n, t);
  }
  add(r1n, r2n, p1x, p2x);
  add(r1n, r2x, p1x, p2x);
  add(r1x, r2n, p1x, p2x);
  add(r1x, r2x, p1x, p2x);
  add(r1n, r2x, p1x, p2n);
  if (r2x < r1n) {
    const double t = kPi / 2.0 + std::asin(r2x / r1n);
    if (WindowContainsOpen(p2n, p2x, t)) add(r1n, r2x, p1x, t);
  }
  add(r1x, r2n, p1x, p2n);
  add(r1x, r2n, p1n, p2x);

  if (values.empty()) return std::nullopt;
  std::sort(values.begin(), values.end());

  // The hull is the complement of the widest empty arc between circularly
  // adjacent candidates.
  std::size_t gap_after = values.size() - 1;  // wrap-around gap
  double widest = values.front() + kTwoPi - values.back();
  for (std::size_t i = 0; i + 1 < values.size(); ++i) {
    const double gap = values[i + 1] - values[i];
    if (gap > widest) {
      widest = gap;
      gap_after = i;
    }
  }
  const double start = values[(gap_after + 1) % values.size()];
  const double span = std::max(0.0, kTwoPi - widest);
  const double hi = NormalizeSigned(start + span);
  return std::make_pair(hi - span, hi);
}

std::optional<std::pair<double, double>> ComposePhiHull(const Doi& d1,
                                                        const Doi& d2) {
  const double r1n = d1.r_min(), r1x = d1.r_max();
  const double r2n = d2.r_min(), r2x = d2.r_max();
  double p2n = d2.phi_min(), p2x = d2.phi_max();

  const bool opposing = WindowContains(p2n, p2x, kPi);
  if (opposing && RadiiOverlap(d1, d2)) return std::nullopt;

  // Direction of r1 + r2 e^{i phi2} relative to the first vector, on a branch
  // that is continuous over the parameter box.
  std::function<double(double, double, double)> direction;
  if (opposing && r2n > r1x) {
    // The second vector dominates: phi2 + arg(1 + (r1/r2) e^{-i phi2}).
    direction = [](double r1, double r2, double phi2) {
      return phi2 + std::atan2(-r1 * std::sin(phi2), r2 + r1 * std::cos(phi2));
    };
  } else {
    // Either the first vector dominates (the result stays within pi/2 of it)
    // or the window avoids the backward direction and the sum never crosses
    // it; atan2 is continuous on both once the window is shifted into
    // (-pi, pi).
    if (!opposing) {
      const double shift = NormalizeSigned(p2n) - p2n;
      p2n += shift;
      p2x += shift;
    }
    direction = [](double r1, double r2, double phi2) {
      return std::atan2(r2 * std::sin(phi2), r1 + r2 * std::cos(phi2));
    };
  }

  double lo = kInfinity, hi = -kInfinity;
  auto add = [&](double r1, double r2, double phi2) {
    if (r1 == 0.0 && r2 == 0.0) return;
    const double a = direction(r1, r2, phi2);
    lo = std::min(lo, a);
    hi = std::max(hi, a);
  };
  for (const double r1 : {r1n, r1x}) {
    for (const double r2 : {r2n, r2x}) {
      add(r1, r2, p2n);
      add(r1, r2, p2x);
    }
  }
  // Tangents from the anchor to the widest circle swept by the second vector.
  if (r2x < r1n) {
    const double t = kPi / 2.0 + std::asin(r2x / r1n);
    for (const double tangent : {t, -t}) {
      const double lifted = LiftInto(tangent, p2n);
      if (lifted > p2n && lifted < p2x) add(r1n, r2x, lifted);
    }
  }
  if (lo > hi) return std::nullopt;
  return std::make_pair(d1.phi_min() + lo, d1.phi_max() + hi);
}

Doi Compose(const Doi& d1, const Doi& d2, const ComposeOptions& options) {
  if (d1.is_full() || d2.is_full()) return Doi::Full();

  const double cap = options.r_cap;
  const Doi c1(std::min(d1.r_min(), cap), std::min(d1.r_max(), cap),
               d1.phi_min(), d1.phi_max());
  const Doi c2(std::min(d2.r_min(), cap), std::min(d2.r_max(), cap),
               d2.phi_min(), d2.phi_max());

  // The anchor itself is reachable: the result degenerates to the full DOI.
  const bool opposing = WindowContains(c2.phi_min(), c2.phi_max(), kPi);
  const bool overlap = RadiiOverlap(c1, c2);
  if (opposing && overlap) return Doi::Full();
  if (options.promote_on_any_overlap && (opposing || overlap)) {
    return Doi::Full();
  }

  const auto phi = options.promote_on_any_overlap ? ComposePhiBounds(c1, c2)
                                                 : ComposePhiHull(c1, c2);
  if (!phi) return Doi::Full();
  const double span = phi->second - phi->first;
  if (span > kPi) return Doi::Full();
  const double phi_max = NormalizeSigned(phi->second);

  double r_max = ComposeMaxR(c1, c2);
  const double r_min = std::min(ComposeMinR(c1, c2), r_max);
  if (r_max >= cap) r_max = kInfinity;
  return Doi(r_min, r_max, phi_max - span, phi_max);
}

}  // namespace fspp
