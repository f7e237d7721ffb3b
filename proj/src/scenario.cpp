// Copyright 2026 The FSPP Authors. All rights reserved.
// Use of this source code is governed by the Apache License 2.0
// that can be found in the LICENSE file.
#include "fspp/scenario.hpp"

#include <optional>
#include <sstream>

namespace fspp {
namespace {

std::string Flags(const FsppRelation& r) {
  std::string out;
  if (r.dou()) out += " dou";
  if (r.tri()) out += " tri";
  if (r.sam()) out += " sam";
  return out.empty() ? " -" : out;
}

}  // namespace

ScenarioResult RunScenario(const Scenario& s, const ReasonerOptions& options) {
  const Reasoner reasoner(s.granularity, options);
  Network net(s.granularity);
  for (const auto& [id, p] : s.points) net.AddVariable(id);
  for (const std::string& id : s.variables) net.AddVariable(id);
  for (const ScenarioConstraint& c : s.constraints) {
    net.AddConstraint(c.triple, c.relation);
  }

  auto truth = [&](const std::vector<std::string>& ids)
      -> std::optional<Classification> {
    for (const std::string& id : ids) {
      if (!s.points.count(id)) return std::nullopt;
    }
    return Classify(s.granularity, s.points.at(ids[0]), s.points.at(ids[1]),
                    s.points.at(ids[2]));
  };

  ScenarioResult result;
  std::ostringstream out;
  out << "granularity " << SerializeGranularity(s.granularity) << '\n';
  out << "constraints " << net.constraints().size() << '\n';

  std::vector<ScenarioQuery> queries = s.queries;
  if (queries.empty()) {
    queries = {{"unary_closure", {}}, {"refine", {}}, {"consistent", {}}};
  }
  for (const ScenarioQuery& q : queries) {
    if (q.op == "unary_closure") {
      const int sweeps = net.UnaryClosure(reasoner);
      out << "unary_closure: " << sweeps << " sweeps, "
          << net.constraints().size() << " constraints\n";
    } else if (q.op == "refine") {
      const RefineStats stats = net.Refine(reasoner);
      out << "refine: " << stats.sweeps << " sweeps, " << stats.updates
          << " updates, " << net.constraints().size() << " constraints\n";
    } else if (q.op == "consistent") {
      out << "consistent: " << (net.Consistent() ? "true" : "false") << '\n';
    } else if (q.op == "path") {
      const FsppRelation r = net.PropagatePath(reasoner, q.ids);
      out << "path";
      for (const std::string& id : q.ids) out << ' ' << id;
      out << ": " << SerializeRelation(r);
      std::vector<std::string> ends = {q.ids[0], q.ids[1], q.ids.back()};
      if (const auto t = truth(ends)) {
        out << (r.Contains(*t) ? " truth ok" : " TRUTH LOST");
      }
      out << '\n';
    } else if (q.op == "show") {
      const Triple t{q.ids[0], q.ids[1], q.ids[2]};
      out << RenderAscii(net.Get(t), TripleName(t));
    }
  }

  for (const auto& [t, r] : net.constraints()) {
    out << TripleName(t) << ": " << r.CellCount() << " cells, flags"
        << Flags(r);
    const auto& [a, b, c] = t;
    if (const auto cls = truth({a, b, c})) {
      const bool ok = r.Contains(*cls);
      if (!ok) ++result.truth_violations;
      out << (ok ? ", truth ok" : ", TRUTH LOST");
    }
    out << '\n';
  }
  result.consistent = net.Consistent();
  out << "result: " << (result.consistent ? "consistent" : "inconsistent")
      << ", truth violations " << result.truth_violations << '\n';
  result.report = out.str();
  return result;
}

}  // namespace fspp
