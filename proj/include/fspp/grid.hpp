// Copyright 2026 The FSPP Authors. All rights reserved.
// Use of this source code is governed by the Apache License 2.0
// that can be found in the LICENSE file.
//
// Boolean grids on a cylinder: the orientation axis wraps, the distance axis
// is bounded and everything beyond it counts as inactive.
#pragma once

#include <optional>
#include <vector>

#include "fspp/calculus.hpp"

namespace fspp {

class FsppRelation;

enum class Connectivity { kFour, kEight };

class BoolGrid {
 public:
  BoolGrid(int m_orient, int n_dist);
  static BoolGrid FromRelation(const FsppRelation& r);
  static BoolGrid FromCells(int m_orient, int n_dist,
                            const std::vector<CellIndex>& cells);

  int m() const { return m_; }
  int n() const { return n_; }

  bool Get(CellIndex c) const;
  void Set(CellIndex c, bool value = true);
  // Wraps the orientation; out-of-range distances read as inactive.
  bool At(int orient, int dist) const;
  bool InRange(CellIndex c) const;

  int Count() const;
  // Active cells in ascending bit order (orient + dist * m).
  std::vector<CellIndex> Cells() const;
  int Bit(CellIndex c) const { return c.orient + c.dist * m_; }

  // Copies the active cells into the relation; other cells are cleared.
  void WriteTo(FsppRelation& r) const;

  friend bool operator==(const BoolGrid&, const BoolGrid&) = default;

 private:
  int m_;
  int n_;
  std::vector<char> cells_;  // indexed by Bit()
};

// P1..P8 clockwise from the top-left, where rows are orientations and
// columns distances: (o-1,d-1) (o-1,d) (o-1,d+1) (o,d+1) (o+1,d+1) (o+1,d)
// (o+1,d-1) (o,d-1). Orientation wraps; cells off the distance axis are
// dropped.
std::vector<CellIndex> MooreNeighbors(const BoolGrid& g, CellIndex c);
std::vector<CellIndex> FourNeighbors(const BoolGrid& g, CellIndex c);

// Active cells with at least one inactive cell in the chosen neighborhood.
std::vector<CellIndex> BorderCells(const BoolGrid& g, Connectivity conn);

// Maximal connected sets of active cells, each sorted by bit index and
// ordered by their smallest bit index.
std::vector<std::vector<CellIndex>> ConnectedComponents(const BoolGrid& g,
                                                        Connectivity conn);

// Heading of the tracer. kIncDist is the canonical initial heading; the
// cell on its left has the next lower orientation.
enum class Heading { kIncDist, kIncOrient, kDecDist, kDecOrient };

struct TraceStart {
  CellIndex cell;
  Heading heading = Heading::kIncDist;
};

// The active cell of the component with the smallest (distance,
// orientation) whose lower-orientation neighbor is inactive. Empty when no
// cell qualifies (the component covers whole orientation rings). Throws
// Error(kEmptyComponent) for an empty seed list.
std::optional<CellIndex> FindStart(const BoolGrid& g,
                                   const std::vector<CellIndex>& component);

// One Pavlidis contour. kEight follows an 8-connected contour, kFour the
// 4-connected variant. Throws Error(kInvalidStart) unless the start cell is
// active and the cell on the left of the heading is inactive.
std::vector<CellIndex> TracePavlidis(const BoolGrid& g, TraceStart start,
                                     Connectivity conn);
std::vector<CellIndex> TracePavlidis(const BoolGrid& g, CellIndex start,
                                     Connectivity conn);

// Every contour of one component: one trace for each background region the
// component touches (holes and both cylinder sides). Returns the contour
// cells sorted by bit index.
std::vector<CellIndex> TraceComponent(const BoolGrid& g,
                                      const std::vector<CellIndex>& component,
                                      Connectivity conn);

// Union of TraceComponent over all components of the matching connectivity.
BoolGrid Contour(const BoolGrid& g, Connectivity conn);

// Activates every inactive cell that cannot reach the innermost or outermost
// distance column through 4-connected inactive cells.
BoolGrid Fill(const BoolGrid& g);

}  // namespace fspp
