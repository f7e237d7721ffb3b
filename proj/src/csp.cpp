// Copyright 2026 The FSPP Authors. All rights reserved.
// Use of this source code is governed by the Apache License 2.0
// that can be found in the LICENSE file.
#include "fspp/csp.hpp"

#include "fspp/error.hpp"

namespace fspp {
namespace {

FsppRelation UniversalWithFlags(const Granularity& g) {
  FsppRelation r = FsppRelation::Universal(g);
  r.set_dou(true);
  r.set_tri(true);
  r.set_sam(true);
  return r;
}

Triple Permute(UnaryOp op, const Triple& t) {
  const auto& [a, b, c] = t;
  switch (op) {
    case UnaryOp::kId: return {a, b, c};
    case UnaryOp::kInv: return {b, a, c};
    case UnaryOp::kSc: return {a, c, b};
    case UnaryOp::kSci: return {c, a, b};
    case UnaryOp::kHm: return {b, c, a};
    case UnaryOp::kHmi: return {c, b, a};
  }
  return t;
}

}  // namespace

std::string TripleName(const Triple& t) {
  return "(" + std::get<0>(t) + ", " + std::get<1>(t) + ", " +
         std::get<2>(t) + ")";
}

void Network::AddConstraint(const Triple& t, const FsppRelation& r) {
  if (!(r.granularity() == g_)) {
    throw Error(ErrorCode::kGranularityMismatch,
                "constraint " + TripleName(t) + " has a foreign granularity");
  }
  variables_.insert(std::get<0>(t));
  variables_.insert(std::get<1>(t));
  variables_.insert(std::get<2>(t));
  Narrow(t, r);
}

FsppRelation Network::Get(const Triple& t) const {
  if (auto it = constraints_.find(t); it != constraints_.end()) {
    return it->second;
  }
  return UniversalWithFlags(g_);
}

bool Network::Narrow(const Triple& t, const FsppRelation& r) {
  auto it = constraints_.find(t);
  if (it == constraints_.end()) {
    constraints_.emplace(t, r);
    return true;
  }
  FsppRelation narrowed = it->second.Intersect(r);
  if (narrowed == it->second) return false;
  it->second = std::move(narrowed);
  return true;
}

int Network::UnaryClosure(const Reasoner& reasoner) {
  static constexpr UnaryOp kOps[] = {UnaryOp::kInv, UnaryOp::kSc,
                                     UnaryOp::kSci, UnaryOp::kHm,
                                     UnaryOp::kHmi};
  int sweeps = 0;
  for (bool changed = true; changed;) {
    changed = false;
    ++sweeps;
    // Snapshot: narrowing inserts new keys while iterating.
    const std::map<Triple, FsppRelation> snapshot = constraints_;
    for (const auto& [t, r] : snapshot) {
      for (const UnaryOp op : kOps) {
        changed |= Narrow(Permute(op, t), reasoner.Unary(op, r));
      }
    }
  }
  return sweeps;
}

RefineStats Network::Refine(const Reasoner& reasoner, int max_sweeps) {
  if (max_sweeps <= 0) {
    // Each productive sweep removes at least one element from some relation
    // over the n^3 possible triples.
    const long n = static_cast<long>(variables_.size());
    max_sweeps = static_cast<int>(n * n * n * (g_.cell_count() + 3) + 1);
  }
  RefineStats stats;
  for (bool changed = true; changed && stats.sweeps < max_sweeps;) {
    changed = false;
    ++stats.sweeps;
    const std::map<Triple, FsppRelation> snapshot = constraints_;
    for (const auto& [t1, r1] : snapshot) {
      const auto& [a, b, c] = t1;
      // Stored (b, c, *) triples are contiguous in the ordered map.
      for (auto it = snapshot.lower_bound({b, c, std::string()});
           it != snapshot.end() && std::get<0>(it->first) == b &&
           std::get<1>(it->first) == c;
           ++it) {
        const std::string& d = std::get<2>(it->first);
        if (d == a || d == b) continue;
        const Triple target{a, b, d};
        if (Narrow(target, reasoner.Compose(Get(t1), Get(it->first)))) {
          changed = true;
          ++stats.updates;
        }
      }
    }
  }
  return stats;
}

FsppRelation Network::PropagatePath(
    const Reasoner& reasoner, const std::vector<std::string>& path) const {
  if (path.size() < 3) {
    throw Error(ErrorCode::kConfig, "a path needs at least three points");
  }
  auto stored = [&](std::size_t i) -> const FsppRelation& {
    const Triple t{path[i], path[i + 1], path[i + 2]};
    auto it = constraints_.find(t);
    if (it == constraints_.end()) {
      throw Error(ErrorCode::kMissingConstraint,
                  "no constraint for " + TripleName(t));
    }
    return it->second;
  };
  std::size_t i = path.size() - 3;
  FsppRelation acc = stored(i);
  while (i-- > 0) acc = reasoner.Compose(stored(i), acc);
  return acc;
}

bool Network::Consistent() const {
  for (const auto& [t, r] : constraints_) {
    if (r.IsEmpty()) return false;
  }
  return true;
}

}  // namespace fspp
