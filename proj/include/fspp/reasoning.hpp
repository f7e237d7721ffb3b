// Copyright 2026 The FSPP Authors. All rights reserved.
// Use of this source code is governed by the Apache License 2.0
// that can be found in the LICENSE file.
//
// Inference over FSPP relations: composition through DOI propagation, the
// six permutations of a ternary relation, and conceptual neighborhood.
#pragma once

#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "fspp/calculus.hpp"
#include "fspp/doi.hpp"
#include "fspp/grid.hpp"
#include "fspp/relation.hpp"

namespace fspp {

// Permutation of (A, B, C) each operation realizes:
//   kInv (B,A,C)  kSc (A,C,B)  kSci (C,A,B)  kHm (B,C,A)  kHmi (C,B,A)
enum class UnaryOp { kId, kInv, kSc, kSci, kHm, kHmi };

const char* UnaryOpName(UnaryOp op);
// Accepts id, inv, sc, sci, hm, hmi (any case). Throws Error(kParse).
UnaryOp ParseUnaryOp(const std::string& name);

struct ReasonerOptions {
  // Radius standing in for the unbounded band during composition; <= 0
  // selects 8 times the outer radius of the last finite band.
  double r_cap = 0.0;
  // Promote compositions to the full DOI on any radial overlap or any
  // window covering the backward direction.
  bool promote_on_any_overlap = false;
  // INV through the two backward sectors at every distance instead of the
  // exact backward direction.
  bool raster_inverse = false;
};

class Reasoner {
 public:
  explicit Reasoner(const Granularity& g, ReasonerOptions options = {});

  Reasoner(const Reasoner&) = delete;
  Reasoner& operator=(const Reasoner&) = delete;

  const Granularity& granularity() const { return g_; }
  const DistanceSystem& distances() const { return ds_; }
  const ReasonerOptions& options() const { return options_; }
  const ComposeOptions& compose_options() const { return compose_options_; }

  // Cell bounds in the signed angle convention; the unbounded band keeps an
  // infinite outer radius.
  Doi CellToDoi(CellIndex c) const;

  // Cells whose closed bounds meet the DOI (within kBoundaryTolerance). The
  // full DOI yields every cell and sam.
  FsppRelation DoiToRelation(const Doi& d) const;

  // Relation of (A,B,D) from (A,B,C) and (B,C,D).
  FsppRelation Compose(const FsppRelation& r1, const FsppRelation& r2) const;

  // Composes only the contour cells of each operand and fills the result.
  FsppRelation ComposeBordered(const FsppRelation& r1,
                               const FsppRelation& r2) const;

  // Memoized composition of two atomic cells.
  const FsppRelation& ComposeCells(CellIndex a, CellIndex b) const;

  FsppRelation Unary(UnaryOp op, const FsppRelation& r) const;

  std::vector<CellIndex> Neighbors(CellIndex c) const;
  FsppRelation Expand(const FsppRelation& r) const;

  std::size_t cache_size() const;

 private:
  void CheckGranularity(const FsppRelation& r) const;
  FsppRelation ComposeCellSets(const std::vector<CellIndex>& a,
                               const std::vector<CellIndex>& b) const;
  FsppRelation ComposeSpecials(const FsppRelation& r1,
                               const FsppRelation& r2) const;
  FsppRelation ShortCut(const FsppRelation& r) const;
  FsppRelation Inverse(const FsppRelation& r) const;
  FsppRelation BackSectors() const;

  Granularity g_;
  DistanceSystem ds_;
  ReasonerOptions options_;
  ComposeOptions compose_options_;
  Doi backward_;

  mutable std::mutex mu_;
  mutable std::unordered_map<int, FsppRelation> cell_cache_;
  mutable std::unordered_map<int, FsppRelation> inverse_cache_;
};

}  // namespace fspp
