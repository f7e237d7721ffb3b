// Copyright 2026 The FSPP Authors. All rights reserved.
// Use of this source code is governed by the Apache License 2.0
// that can be found in the LICENSE file.
#include "fspp/grid.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <string>

#include "fspp/error.hpp"
#include "fspp/relation.hpp"

namespace fspp {
namespace {

struct Step {
  int d_orient;
  int d_dist;
};

// Clockwise: increasing distance, increasing orientation, decreasing
// distance, decreasing orientation.
constexpr std::array<Step, 4> kHeadingStep = {
    Step{0, 1}, Step{1, 0}, Step{0, -1}, Step{-1, 0}};

constexpr std::array<Step, 8> kMooreOrder = {
    Step{-1, -1}, Step{-1, 0}, Step{-1, 1}, Step{0, 1},
    Step{1, 1},   Step{1, 0},  Step{1, -1}, Step{0, -1}};

constexpr std::array<Step, 4> kFourOrder = {Step{-1, 0}, Step{0, 1},
                                            Step{1, 0}, Step{0, -1}};

int Wrap(int orient, int m) { return ((orient % m) + m) % m; }

Heading TurnRight(Heading h) {
  return static_cast<Heading>((static_cast<int>(h) + 1) % 4);
}

Heading TurnLeft(Heading h) {
  return static_cast<Heading>((static_cast<int>(h) + 3) % 4);
}

std::vector<CellIndex> Neighbors(const BoolGrid& g, CellIndex c,
                                 const Step* steps, int count) {
  if (!g.InRange(c)) {
    throw Error(ErrorCode::kIndex, "cell (" + std::to_string(c.dist) + ", " +
                                       std::to_string(c.orient) +
                                       ") outside the grid");
  }
  std::vector<CellIndex> out;
  for (int i = 0; i < count; ++i) {
    const int d = c.dist + steps[i].d_dist;
    if (d < 0 || d >= g.n()) continue;
    out.push_back({d, Wrap(c.orient + steps[i].d_orient, g.m())});
  }
  return out;
}

// Labels inactive cells by connected region, with one extra inactive column
// on each side of the distance axis standing for the outside. Column k of
// the result holds distance k - 1.
class BackgroundRegions {
 public:
  BackgroundRegions(const BoolGrid& g, Connectivity conn)
      : g_(g), cols_(g.n() + 2), label_(g.m() * cols_, -1) {
    const Step* steps = conn == Connectivity::kFour ? kFourOrder.data()
                                                    : kMooreOrder.data();
    const int count = conn == Connectivity::kFour ? 4 : 8;
    int next = 0;
    for (int col = 0; col < cols_; ++col) {
      for (int o = 0; o < g.m(); ++o) {
        if (!Free(o, col) || label_[Index(o, col)] >= 0) continue;
        std::deque<std::pair<int, int>> queue = {{o, col}};
        label_[Index(o, col)] = next;
        while (!queue.empty()) {
          const auto [co, cc] = queue.front();
          queue.pop_front();
          for (int i = 0; i < count; ++i) {
            const int nc = cc + steps[i].d_dist;
            if (nc < 0 || nc >= cols_) continue;
            const int no = Wrap(co + steps[i].d_orient, g.m());
            if (!Free(no, nc) || label_[Index(no, nc)] >= 0) continue;
            label_[Index(no, nc)] = next;
            queue.emplace_back(no, nc);
          }
        }
        ++next;
      }
    }
    count_ = next;
  }

  int count() const { return count_; }

  // Region of the inactive cell at (orient, dist), or -1 if active.
  int At(int orient, int dist) const {
    return label_[Index(Wrap(orient, g_.m()), dist + 1)];
  }

 private:
  bool Free(int o, int col) const {
    return col == 0 || col == cols_ - 1 || !g_.At(o, col - 1);
  }
  int Index(int o, int col) const { return o * cols_ + col; }

  const BoolGrid& g_;
  int cols_;
  std::vector<int> label_;
  int count_ = 0;
};

}  // namespace

BoolGrid::BoolGrid(int m_orient, int n_dist) : m_(m_orient), n_(n_dist) {
  if (m_orient < 1 || n_dist < 1) {
    throw Error(ErrorCode::kConfig, "grid dimensions must be positive");
  }
  cells_.assign(static_cast<std::size_t>(m_) * n_, 0);
}

BoolGrid BoolGrid::FromRelation(const FsppRelation& r) {
  BoolGrid g(r.granularity().m_orient, r.granularity().n_dist);
  for (const CellIndex c : r.Cells()) g.Set(c);
  return g;
}

BoolGrid BoolGrid::FromCells(int m_orient, int n_dist,
                             const std::vector<CellIndex>& cells) {
  BoolGrid g(m_orient, n_dist);
  for (const CellIndex c : cells) g.Set(c);
  return g;
}

bool BoolGrid::InRange(CellIndex c) const {
  return c.dist >= 0 && c.dist < n_ && c.orient >= 0 && c.orient < m_;
}

bool BoolGrid::Get(CellIndex c) const {
  if (!InRange(c)) throw Error(ErrorCode::kIndex, "cell outside the grid");
  return cells_[Bit(c)] != 0;
}

void BoolGrid::Set(CellIndex c, bool value) {
  if (!InRange(c)) throw Error(ErrorCode::kIndex, "cell outside the grid");
  cells_[Bit(c)] = value ? 1 : 0;
}

bool BoolGrid::At(int orient, int dist) const {
  if (dist < 0 || dist >= n_) return false;
  return cells_[Wrap(orient, m_) + dist * m_] != 0;
}

int BoolGrid::Count() const {
  return static_cast<int>(std::count(cells_.begin(), cells_.end(), 1));
}

std::vector<CellIndex> BoolGrid::Cells() const {
  std::vector<CellIndex> out;
  for (int bit = 0; bit < m_ * n_; ++bit) {
    if (cells_[bit]) out.push_back({bit / m_, bit % m_});
  }
  return out;
}

void BoolGrid::WriteTo(FsppRelation& r) const {
  if (r.granularity().m_orient != m_ || r.granularity().n_dist != n_) {
    throw Error(ErrorCode::kGranularityMismatch,
                "grid and relation differ in size");
  }
  for (int bit = 0; bit < m_ * n_; ++bit) r.SetBit(bit, cells_[bit] != 0);
}

std::vector<CellIndex> MooreNeighbors(const BoolGrid& g, CellIndex c) {
  return Neighbors(g, c, kMooreOrder.data(), 8);
}

std::vector<CellIndex> FourNeighbors(const BoolGrid& g, CellIndex c) {
  return Neighbors(g, c, kFourOrder.data(), 4);
}

std::vector<CellIndex> BorderCells(const BoolGrid& g, Connectivity conn) {
  const Step* steps =
      conn == Connectivity::kFour ? kFourOrder.data() : kMooreOrder.data();
  const int count = conn == Connectivity::kFour ? 4 : 8;
  std::vector<CellIndex> out;
  for (const CellIndex c : g.Cells()) {
    for (int i = 0; i < count; ++i) {
      if (!g.At(c.orient + steps[i].d_orient, c.dist + steps[i].d_dist)) {
        out.push_back(c);
        break;
      }
    }
  }
  return out;
}

std::vector<std::vector<CellIndex>> ConnectedComponents(const BoolGrid& g,
                                                        Connectivity conn) {
  const Step* steps =
      conn == Connectivity::kFour ? kFourOrder.data() : kMooreOrder.data();
  const int count = conn == Connectivity::kFour ? 4 : 8;
  std::vector<char> seen(static_cast<std::size_t>(g.m()) * g.n(), 0);
  std::vector<std::vector<CellIndex>> out;
  for (const CellIndex seed : g.Cells()) {
    if (seen[g.Bit(seed)]) continue;
    std::vector<CellIndex> comp;
    std::deque<CellIndex> queue = {seed};
    seen[g.Bit(seed)] = 1;
    while (!queue.empty()) {
      const CellIndex c = queue.front();
      queue.pop_front();
      comp.push_back(c);
      for (int i = 0; i < count; ++i) {
        const CellIndex nb{c.dist + steps[i].d_dist,
                           Wrap(c.orient + steps[i].d_orient, g.m())};
        if (nb.dist < 0 || nb.dist >= g.n() || !g.Get(nb) ||
            seen[g.Bit(nb)]) {
          continue;
        }
        seen[g.Bit(nb)] = 1;
        queue.push_back(nb);
      }
    }
    std::sort(comp.begin(), comp.end(), [&](CellIndex a, CellIndex b) {
      return g.Bit(a) < g.Bit(b);
    });
    out.push_back(std::move(comp));
  }
  return out;
}

std::optional<CellIndex> FindStart(const BoolGrid& g,
                                   const std::vector<CellIndex>& component) {
  if (component.empty()) {
    throw Error(ErrorCode::kEmptyComponent, "component has no cells");
  }
  std::vector<CellIndex> sorted = component;
  std::sort(sorted.begin(), sorted.end());  // (distance, orientation)
  for (const CellIndex c : sorted) {
    if (g.Get(c) && !g.At(c.orient - 1, c.dist)) return c;
  }
  return std::nullopt;
}

std::vector<CellIndex> TracePavlidis(const BoolGrid& g, TraceStart start,
                                     Connectivity conn) {
  const int m = g.m();
  auto black = [&](CellIndex p, Step s) {
    return g.At(p.orient + s.d_orient, p.dist + s.d_dist);
  };
  auto plus = [&](CellIndex p, Step s) {
    return CellIndex{p.dist + s.d_dist, Wrap(p.orient + s.d_orient, m)};
  };
  auto sum = [](Step a, Step b) {
    return Step{a.d_orient + b.d_orient, a.d_dist + b.d_dist};
  };

  const Step start_left = kHeadingStep[static_cast<int>(TurnLeft(start.heading))];
  if (!g.InRange(start.cell) || !g.Get(start.cell) ||
      black(start.cell, start_left)) {
    throw Error(ErrorCode::kInvalidStart,
                "start must be active with an inactive cell on its left");
  }

  std::vector<CellIndex> contour = {start.cell};
  std::vector<char> visited(static_cast<std::size_t>(m) * g.n() * 4, 0);
  auto state = [&](CellIndex p, Heading h) {
    return (static_cast<std::size_t>(g.Bit(p)) * 4) + static_cast<int>(h);
  };

  CellIndex p = start.cell;
  Heading h = start.heading;
  visited[state(p, h)] = 1;
  int turns = 0;
  for (;;) {
    const Step front = kHeadingStep[static_cast<int>(h)];
    const Step left = kHeadingStep[static_cast<int>(TurnLeft(h))];
    const Step right = kHeadingStep[static_cast<int>(TurnRight(h))];
    const Step p1 = sum(front, left);
    const Step p3 = sum(front, right);
    const bool four = conn == Connectivity::kFour;

    if (black(p, p1) && (!four || black(p, front))) {
      if (four) contour.push_back(plus(p, front));
      p = plus(p, p1);
      h = TurnLeft(h);
      contour.push_back(p);
      turns = 0;
    } else if (black(p, front)) {
      p = plus(p, front);
      contour.push_back(p);
      turns = 0;
    } else if (black(p, p3) && (!four || black(p, right))) {
      if (four) contour.push_back(plus(p, right));
      p = plus(p, p3);
      contour.push_back(p);
      turns = 0;
    } else {
      h = TurnRight(h);
      if (++turns == 3) break;  // isolated cell
    }
    if (p == start.cell && h == start.heading) break;
    if (visited[state(p, h)]) break;
    visited[state(p, h)] = 1;
  }

  // Keep the first visit of each cell.
  std::vector<char> seen(static_cast<std::size_t>(m) * g.n(), 0);
  std::vector<CellIndex> out;
  for (const CellIndex c : contour) {
    if (seen[g.Bit(c)]) continue;
    seen[g.Bit(c)] = 1;
    out.push_back(c);
  }
  return out;
}

std::vector<CellIndex> TracePavlidis(const BoolGrid& g, CellIndex start,
                                     Connectivity conn) {
  return TracePavlidis(g, TraceStart{start, Heading::kIncDist}, conn);
}

std::vector<CellIndex> TraceComponent(const BoolGrid& g,
                                      const std::vector<CellIndex>& component,
                                      Connectivity conn) {
  if (component.empty()) {
    throw Error(ErrorCode::kEmptyComponent, "component has no cells");
  }
  // An 8-connected contour separates from 4-connected background and vice
  // versa.
  const BackgroundRegions regions(g, conn == Connectivity::kEight
                                         ? Connectivity::kFour
                                         : Connectivity::kEight);
  std::vector<char> traced(regions.count(), 0);
  std::vector<char> on_contour(static_cast<std::size_t>(g.m()) * g.n(), 0);

  std::vector<CellIndex> sorted = component;
  std::sort(sorted.begin(), sorted.end());
  // The canonical heading first, so the first contour starts where
  // FindStart points.
  for (int h = 0; h < 4; ++h) {
    const Heading heading = static_cast<Heading>(h);
    const Step left = kHeadingStep[static_cast<int>(TurnLeft(heading))];
    for (const CellIndex c : sorted) {
      const int region =
          regions.At(c.orient + left.d_orient, c.dist + left.d_dist);
      if (region < 0 || traced[region]) continue;
      traced[region] = 1;
      for (const CellIndex t : TracePavlidis(g, {c, heading}, conn)) {
        on_contour[g.Bit(t)] = 1;
      }
    }
  }

  std::vector<CellIndex> out;
  for (int bit = 0; bit < g.m() * g.n(); ++bit) {
    if (on_contour[bit]) out.push_back({bit / g.m(), bit % g.m()});
  }
  return out;
}

BoolGrid Contour(const BoolGrid& g, Connectivity conn) {
  BoolGrid out(g.m(), g.n());
  for (const auto& comp : ConnectedComponents(g, conn)) {
    for (const CellIndex c : TraceComponent(g, comp, conn)) out.Set(c);
  }
  return out;
}

BoolGrid Fill(const BoolGrid& g) {
  const int m = g.m(), n = g.n();
  std::vector<char> outside(static_cast<std::size_t>(m) * n, 0);
  std::deque<CellIndex> queue;
  for (int o = 0; o < m; ++o) {
    for (const int d : {0, n - 1}) {
      const CellIndex c{d, o};
      if (!g.Get(c) && !outside[g.Bit(c)]) {
        outside[g.Bit(c)] = 1;
        queue.push_back(c);
      }
    }
  }
  while (!queue.empty()) {
    const CellIndex c = queue.front();
    queue.pop_front();
    for (const CellIndex nb : FourNeighbors(g, c)) {
      if (g.Get(nb) || outside[g.Bit(nb)]) continue;
      outside[g.Bit(nb)] = 1;
      queue.push_back(nb);
    }
  }
  BoolGrid out(m, n);
  for (int bit = 0; bit < m * n; ++bit) {
    if (!outside[bit]) out.Set({bit / m, bit % m});
  }
  return out;
}

}  // namespace fspp
