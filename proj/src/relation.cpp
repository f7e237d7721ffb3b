// Copyright 2026 The FSPP Authors. All rights reserved.
// Use of this source code is governed by the Apache License 2.0
// that can be found in the LICENSE file.
#include "fspp/relation.hpp"

#include <bit>

#include "fspp/error.hpp"

namespace fspp {

FsppRelation::FsppRelation(const Granularity& g)
    : g_(g), words_((g.cell_count() + 63) / 64, 0) {
  g.Validate();
}

FsppRelation FsppRelation::Universal(const Granularity& g) {
  return FsppRelation(g).Complement();
}

FsppRelation FsppRelation::FromCells(const Granularity& g,
                                     const std::vector<CellIndex>& cells) {
  FsppRelation r(g);
  for (const CellIndex c : cells) r.Set(c);
  return r;
}

bool FsppRelation::GetBit(int bit) const {
  CellFromBit(g_, bit);
  return (words_[bit / 64] >> (bit % 64)) & 1u;
}

void FsppRelation::SetBit(int bit, bool value) {
  CellFromBit(g_, bit);
  const std::uint64_t mask = std::uint64_t{1} << (bit % 64);
  if (value) {
    words_[bit / 64] |= mask;
  } else {
    words_[bit / 64] &= ~mask;
  }
}

bool FsppRelation::Get(CellIndex c) const { return GetBit(BitIndex(g_, c)); }

void FsppRelation::Set(CellIndex c, bool value) {
  SetBit(BitIndex(g_, c), value);
}

void FsppRelation::SetSpecial(SpecialRel s, bool value) {
  switch (s) {
    case SpecialRel::kDou: dou_ = value; break;
    case SpecialRel::kTri: tri_ = value; break;
    case SpecialRel::kSam: sam_ = value; break;
  }
}

bool FsppRelation::GetSpecial(SpecialRel s) const {
  switch (s) {
    case SpecialRel::kDou: return dou_;
    case SpecialRel::kTri: return tri_;
    case SpecialRel::kSam: return sam_;
  }
  return false;
}

std::vector<int> FsppRelation::Bits() const {
  std::vector<int> out;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    std::uint64_t word = words_[w];
    while (word != 0) {
      out.push_back(static_cast<int>(w * 64) + std::countr_zero(word));
      word &= word - 1;
    }
  }
  return out;
}

std::vector<CellIndex> FsppRelation::Cells() const {
  std::vector<CellIndex> out;
  for (const int bit : Bits()) out.push_back(CellFromBit(g_, bit));
  return out;
}

int FsppRelation::CellCount() const {
  int n = 0;
  for (const std::uint64_t w : words_) n += std::popcount(w);
  return n;
}

bool FsppRelation::HasCells() const {
  for (const std::uint64_t w : words_) {
    if (w != 0) return true;
  }
  return false;
}

bool FsppRelation::AllCells() const {
  return CellCount() == g_.cell_count();
}

bool FsppRelation::IsEmpty() const { return !HasCells() && !HasSpecial(); }

void FsppRelation::CheckSame(const FsppRelation& o) const {
  if (!(g_ == o.g_)) {
    throw Error(ErrorCode::kGranularityMismatch,
                "relations have different granularities");
  }
}

void FsppRelation::MaskTail() {
  const int used = g_.cell_count() % 64;
  if (used != 0 && !words_.empty()) {
    words_.back() &= (std::uint64_t{1} << used) - 1;
  }
}

FsppRelation FsppRelation::Union(const FsppRelation& o) const {
  FsppRelation r = *this;
  r.UnionWith(o);
  return r;
}

void FsppRelation::UnionWith(const FsppRelation& o) {
  CheckSame(o);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
  dou_ |= o.dou_;
  tri_ |= o.tri_;
  sam_ |= o.sam_;
}

FsppRelation FsppRelation::Intersect(const FsppRelation& o) const {
  CheckSame(o);
  FsppRelation r = *this;
  for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] &= o.words_[i];
  r.dou_ &= o.dou_;
  r.tri_ &= o.tri_;
  r.sam_ &= o.sam_;
  return r;
}

FsppRelation FsppRelation::Difference(const FsppRelation& o) const {
  return Intersect(o.Complement());
}

FsppRelation FsppRelation::Complement() const {
  FsppRelation r = *this;
  for (std::uint64_t& w : r.words_) w = ~w;
  r.MaskTail();
  r.dou_ = !dou_;
  r.tri_ = !tri_;
  r.sam_ = !sam_;
  return r;
}

bool FsppRelation::IsSubsetOf(const FsppRelation& o) const {
  CheckSame(o);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & ~o.words_[i]) != 0) return false;
  }
  return (!dou_ || o.dou_) && (!tri_ || o.tri_) && (!sam_ || o.sam_);
}

bool FsppRelation::Contains(const Classification& c) const {
  if (c.special) return GetSpecial(*c.special);
  for (const CellIndex cell : c.cells) {
    if (!Get(cell)) return false;
  }
  return true;
}

bool operator==(const FsppRelation& a, const FsppRelation& b) {
  return a.g_ == b.g_ && a.words_ == b.words_ && a.dou_ == b.dou_ &&
         a.tri_ == b.tri_ && a.sam_ == b.sam_;
}

FsppRelation FromClassification(const Granularity& g,
                                const Classification& c) {
  FsppRelation r = FsppRelation::FromCells(g, c.cells);
  if (c.special) r.SetSpecial(*c.special);
  return r;
}

}  // namespace fspp
