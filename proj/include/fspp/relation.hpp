// Copyright 2026 The FSPP Authors. All rights reserved.
// Use of this source code is governed by the Apache License 2.0
// that can be found in the LICENSE file.
//
// General relations: a set of atomic cells over the polar grid plus the
// three special relations.
#pragma once

#include <cstdint>
#include <vector>

#include "fspp/calculus.hpp"

namespace fspp {

class FsppRelation {
 public:
  FsppRelation() = default;
  explicit FsppRelation(const Granularity& g);

  static FsppRelation Empty(const Granularity& g) { return FsppRelation(g); }
  static FsppRelation Universal(const Granularity& g);
  static FsppRelation FromCells(const Granularity& g,
                                const std::vector<CellIndex>& cells);

  const Granularity& granularity() const { return g_; }

  bool Get(CellIndex c) const;
  void Set(CellIndex c, bool value = true);
  bool GetBit(int bit) const;
  void SetBit(int bit, bool value = true);

  bool dou() const { return dou_; }
  bool tri() const { return tri_; }
  bool sam() const { return sam_; }
  void set_dou(bool v) { dou_ = v; }
  void set_tri(bool v) { tri_ = v; }
  void set_sam(bool v) { sam_ = v; }
  bool HasSpecial() const { return dou_ || tri_ || sam_; }
  void SetSpecial(SpecialRel s, bool value = true);
  bool GetSpecial(SpecialRel s) const;

  // Ascending bit index.
  std::vector<CellIndex> Cells() const;
  std::vector<int> Bits() const;
  int CellCount() const;
  bool IsEmpty() const;
  bool HasCells() const;
  bool AllCells() const;

  // Throw Error(kGranularityMismatch) when granularities differ.
  FsppRelation Union(const FsppRelation& o) const;
  void UnionWith(const FsppRelation& o);
  FsppRelation Intersect(const FsppRelation& o) const;
  FsppRelation Difference(const FsppRelation& o) const;
  FsppRelation Complement() const;
  bool IsSubsetOf(const FsppRelation& o) const;

  // Containment of a classification: every cell and the special flag.
  bool Contains(const Classification& c) const;

  const std::vector<std::uint64_t>& words() const { return words_; }

  friend bool operator==(const FsppRelation& a, const FsppRelation& b);

 private:
  void CheckSame(const FsppRelation& o) const;
  void MaskTail();

  Granularity g_;
  std::vector<std::uint64_t> words_;
  bool dou_ = false;
  bool tri_ = false;
  bool sam_ = false;
};

FsppRelation FromClassification(const Granularity& g, const Classification& c);

}  // namespace fspp
