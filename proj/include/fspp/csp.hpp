// Copyright 2026 The FSPP Authors. All rights reserved.
// Use of this source code is governed by the Apache License 2.0
// that can be found in the LICENSE file.
//
// Ternary constraint networks over named points.
#pragma once

#include <map>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "fspp/reasoning.hpp"
#include "fspp/relation.hpp"

namespace fspp {

// (origin, relatum, referent)
using Triple = std::tuple<std::string, std::string, std::string>;

std::string TripleName(const Triple& t);

struct RefineStats {
  int sweeps = 0;
  int updates = 0;  // strict shrinks of a stored relation
};

class Network {
 public:
  explicit Network(const Granularity& g) : g_(g) {}

  const Granularity& granularity() const { return g_; }

  void AddVariable(const std::string& id) { variables_.insert(id); }
  const std::set<std::string>& variables() const { return variables_; }

  // Intersects with the stored relation (absent means universal). Throws
  // Error(kGranularityMismatch).
  void AddConstraint(const Triple& t, const FsppRelation& r);

  bool Has(const Triple& t) const { return constraints_.count(t) != 0; }
  // Stored relation, or the universal relation with all flags when absent.
  FsppRelation Get(const Triple& t) const;
  const std::map<Triple, FsppRelation>& constraints() const {
    return constraints_;
  }

  // Intersects every permutation of each stored triple with the matching
  // unary image until nothing changes. Returns the number of sweeps.
  int UnaryClosure(const Reasoner& reasoner);

  // Narrows (A,B,D) by compose((A,B,C), (B,C,D)) over all stored chains with
  // pairwise distinct A, B, D until nothing changes. `max_sweeps` <= 0 uses
  // the bound implied by the finite lattice.
  RefineStats Refine(const Reasoner& reasoner, int max_sweeps = 0);

  // Right fold of compose along consecutive triples of `path`: the relation
  // of the last point with respect to the first two. Throws
  // Error(kMissingConstraint) or Error(kConfig) for paths shorter than 3.
  FsppRelation PropagatePath(const Reasoner& reasoner,
                             const std::vector<std::string>& path) const;

  // False iff some stored relation is empty.
  bool Consistent() const;

 private:
  bool Narrow(const Triple& t, const FsppRelation& r);

  Granularity g_;
  std::set<std::string> variables_;
  std::map<Triple, FsppRelation> constraints_;
};

}  // namespace fspp
