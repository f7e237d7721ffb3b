// Copyright 2026 The FSPP Authors. All rights reserved.
// Use of this source code is governed by the Apache License 2.0
// that can be found in the LICENSE file.
#include "fspp/reasoning.hpp"

#include <algorithm>
#include <cctype>

#include "fspp/error.hpp"

namespace fspp {
namespace {

// True when the closed arcs [a_lo, a_hi] and [b_lo, b_hi] meet on the circle.
bool ArcsMeet(double a_lo, double a_hi, double b_lo, double b_hi) {
  const double a_in_b = b_lo + NormalizePositive(a_lo - b_lo);
  const double b_in_a = a_lo + NormalizePositive(b_lo - a_lo);
  return a_in_b <= b_hi || b_in_a <= a_hi;
}

FsppRelation UniversalWithFlags(const Granularity& g) {
  FsppRelation r = FsppRelation::Universal(g);
  r.set_dou(true);
  r.set_tri(true);
  r.set_sam(true);
  return r;
}

}  // namespace

const char* UnaryOpName(UnaryOp op) {
  switch (op) {
    case UnaryOp::kId: return "id";
    case UnaryOp::kInv: return "inv";
    case UnaryOp::kSc: return "sc";
    case UnaryOp::kSci: return "sci";
    case UnaryOp::kHm: return "hm";
    case UnaryOp::kHmi: return "hmi";
  }
  return "?";
}

UnaryOp ParseUnaryOp(const std::string& name) {
  std::string lower = name;
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char ch) { return std::tolower(ch); });
  for (const UnaryOp op : {UnaryOp::kId, UnaryOp::kInv, UnaryOp::kSc,
                           UnaryOp::kSci, UnaryOp::kHm, UnaryOp::kHmi}) {
    if (lower == UnaryOpName(op)) return op;
  }
  throw Error(ErrorCode::kParse, "unknown unary operation '" + name + "'");
}

Reasoner::Reasoner(const Granularity& g, ReasonerOptions options)
    : g_(g),
      ds_(BuildDistanceSystem(g)),
      options_(options),
      backward_(0.0, kInfinity, kPi, kPi) {
  compose_options_.r_cap =
      options.r_cap > 0.0 ? options.r_cap : 8.0 * ds_.largest_finite();
  compose_options_.promote_on_any_overlap = options.promote_on_any_overlap;
}

void Reasoner::CheckGranularity(const FsppRelation& r) const {
  if (!(r.granularity() == g_)) {
    throw Error(ErrorCode::kGranularityMismatch,
                "relation granularity differs from the reasoner's");
  }
}

Doi Reasoner::CellToDoi(CellIndex c) const {
  CheckCell(g_, c);
  const int m = g_.m_orient;
  const int half = m / 2;
  const int j = c.orient;
  const double w = g_.sector_width();
  double lo, hi;
  // Sector borders at 0 and pi are pinned exactly.
  if (j < half) {
    lo = j * w;
    hi = (j + 1 == half) ? kPi : (j + 1) * w;
  } else {
    lo = (j == half) ? -kPi : (j - m) * w;
    hi = (j + 1 == m) ? 0.0 : (j + 1 - m) * w;
  }
  return Doi(ds_.inner(c.dist), ds_.outer[c.dist], lo, hi);
}

FsppRelation Reasoner::DoiToRelation(const Doi& d) const {
  if (d.is_full()) {
    FsppRelation r = FsppRelation::Universal(g_);
    r.set_sam(true);
    return r;
  }
  const double tol = kBoundaryTolerance;
  FsppRelation r(g_);
  const double w = g_.sector_width();
  for (int dist = 0; dist < g_.n_dist; ++dist) {
    if (ds_.inner(dist) > d.r_max() + tol || ds_.outer[dist] < d.r_min() - tol) {
      continue;
    }
    for (int o = 0; o < g_.m_orient; ++o) {
      if (ArcsMeet(o * w, (o + 1) * w, d.phi_min() - tol, d.phi_max() + tol)) {
        r.Set({dist, o});
      }
    }
  }
  return r;
}

const FsppRelation& Reasoner::ComposeCells(CellIndex a, CellIndex b) const {
  const int key = BitIndex(g_, a) * g_.cell_count() + BitIndex(g_, b);
  {
    std::lock_guard<std::mutex> lock(mu_);
    if (auto it = cell_cache_.find(key); it != cell_cache_.end()) {
      return it->second;
    }
  }
  FsppRelation r =
      DoiToRelation(fspp::Compose(CellToDoi(a), CellToDoi(b), compose_options_));
  std::lock_guard<std::mutex> lock(mu_);
  return cell_cache_.emplace(key, std::move(r)).first->second;
}

FsppRelation Reasoner::ComposeCellSets(const std::vector<CellIndex>& a,
                                       const std::vector<CellIndex>& b) const {
  FsppRelation out(g_);
  for (const CellIndex x : a) {
    for (const CellIndex y : b) out.UnionWith(ComposeCells(x, y));
    if (out.sam() && out.AllCells()) break;  // nothing left to add
  }
  return out;
}

FsppRelation Reasoner::ComposeSpecials(const FsppRelation& r1,
                                       const FsppRelation& r2) const {
  // Elements: the three flags, then "some cell".
  auto elements = [](const FsppRelation& r) {
    std::vector<int> e;
    if (r.dou()) e.push_back(0);
    if (r.tri()) e.push_back(1);
    if (r.sam()) e.push_back(2);
    if (r.HasCells()) e.push_back(3);
    return e;
  };
  FsppRelation out(g_);
  for (const int x : elements(r1)) {
    for (const int y : elements(r2)) {
      if (x == 3 && y == 3) continue;
      if (x == 1 && y == 1) {
        out.set_tri(true);
      } else {
        return UniversalWithFlags(g_);
      }
    }
  }
  return out;
}

FsppRelation Reasoner::Compose(const FsppRelation& r1,
                               const FsppRelation& r2) const {
  CheckGranularity(r1);
  CheckGranularity(r2);
  return ComposeCellSets(r1.Cells(), r2.Cells()).Union(ComposeSpecials(r1, r2));
}

FsppRelation Reasoner::ComposeBordered(const FsppRelation& r1,
                                       const FsppRelation& r2) const {
  CheckGranularity(r1);
  CheckGranularity(r2);
  const BoolGrid b1 = Contour(BoolGrid::FromRelation(r1), Connectivity::kEight);
  const BoolGrid b2 = Contour(BoolGrid::FromRelation(r2), Connectivity::kEight);
  FsppRelation out = ComposeCellSets(b1.Cells(), b2.Cells());
  Fill(BoolGrid::FromRelation(out)).WriteTo(out);
  return out.Union(ComposeSpecials(r1, r2));
}

FsppRelation Reasoner::BackSectors() const {
  FsppRelation r(g_);
  for (int d = 0; d < g_.n_dist; ++d) {
    r.Set({d, g_.m_orient / 2 - 1});
    r.Set({d, g_.m_orient / 2});
  }
  return r;
}

FsppRelation Reasoner::ShortCut(const FsppRelation& r) const {
  const int half = g_.m_orient / 2;
  FsppRelation out(g_);
  for (const CellIndex c : r.Cells()) {
    if (c.orient < half) {
      for (int o = half; o <= half + c.orient; ++o) out.Set({c.dist, o});
    } else {
      for (int o = c.orient - half; o < half; ++o) out.Set({c.dist, o});
    }
    // The referent may coincide with the origin, which becomes dou.
    if (c.orient == half - 1 || c.orient == half) out.set_dou(true);
  }
  if (r.dou()) out = out.Union(BackSectors());
  out.set_sam(out.sam() || r.sam());
  out.set_tri(out.tri() || r.tri());
  return out;
}

FsppRelation Reasoner::Inverse(const FsppRelation& r) const {
  FsppRelation out(g_);
  if (options_.raster_inverse) {
    out = ComposeCellSets(BackSectors().Cells(), r.Cells());
  } else {
    for (const CellIndex c : r.Cells()) {
      const int key = BitIndex(g_, c);
      const FsppRelation* image = nullptr;
      {
        std::lock_guard<std::mutex> lock(mu_);
        if (auto it = inverse_cache_.find(key); it != inverse_cache_.end()) {
          image = &it->second;
        }
      }
      if (image == nullptr) {
        FsppRelation img = DoiToRelation(
            fspp::Compose(backward_, CellToDoi(c), compose_options_));
        std::lock_guard<std::mutex> lock(mu_);
        image = &inverse_cache_.emplace(key, std::move(img)).first->second;
      }
      out.UnionWith(*image);
    }
  }
  if (r.sam()) out = out.Union(BackSectors());
  out.set_dou(out.dou() || r.dou());
  out.set_tri(out.tri() || r.tri());
  return out;
}

FsppRelation Reasoner::Unary(UnaryOp op, const FsppRelation& r) const {
  CheckGranularity(r);
  switch (op) {
    case UnaryOp::kId: return r;
    case UnaryOp::kInv: return Inverse(r);
    case UnaryOp::kSc: return ShortCut(r);
    case UnaryOp::kSci: return Inverse(ShortCut(r));
    case UnaryOp::kHm: return ShortCut(Inverse(r));
    case UnaryOp::kHmi: return ShortCut(Inverse(ShortCut(r)));
  }
  return r;
}

std::vector<CellIndex> Reasoner::Neighbors(CellIndex c) const {
  CheckCell(g_, c);
  const int m = g_.m_orient;
  std::vector<CellIndex> out = {{c.dist, (c.orient + 1) % m},
                                {c.dist, (c.orient - 1 + m) % m}};
  if (c.dist > 0) out.push_back({c.dist - 1, c.orient});
  if (c.dist < g_.n_dist - 1) out.push_back({c.dist + 1, c.orient});
  std::sort(out.begin(), out.end(), [&](CellIndex a, CellIndex b) {
    return BitIndex(g_, a) < BitIndex(g_, b);
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

FsppRelation Reasoner::Expand(const FsppRelation& r) const {
  CheckGranularity(r);
  FsppRelation out = r;
  for (const CellIndex c : r.Cells()) {
    for (const CellIndex nb : Neighbors(c)) out.Set(nb);
  }
  return out;
}

std::size_t Reasoner::cache_size() const {
  std::lock_guard<std::mutex> lock(mu_);
  return cell_cache_.size() + inverse_cache_.size();
}

}  // namespace fspp
