// Copyright 2026 The FSPP Authors. All rights reserved.
// Use of this source code is governed by the Apache License 2.0
// that can be found in the LICENSE file.
#include "fspp/codec.hpp"

#include <cstdio>
#include <functional>
#include <set>
#include <sstream>

#include "fspp/error.hpp"
#include "json.hpp"

namespace fspp {
namespace {

using nlohmann::json;

std::string RenderRows(int m, int n, const std::string& title,
                       const std::function<bool(int, int)>& active) {
  std::ostringstream out;
  out << " FSPP " << title << '\n';
  out << "          TRANS\n";

  std::string labels(9, ' ');
  for (int k = 0; k <= n / 10; ++k) {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%02d", 10 * k);
    labels.resize(9 + 10 * k, ' ');
    labels += buf;
  }
  out << labels << '\n';

  std::string ruler(9, ' ');
  for (int c = 0; c <= n; ++c) {
    ruler += (c % 10 == 0) ? '|' : (c % 5 == 0) ? '.' : ' ';
  }

  static constexpr char kAxis[] = "ROT";
  for (int o = 0; o < m; ++o) {
    if (o % 10 == 0) out << ruler << '\n';
    char prefix[32];
    std::snprintf(prefix, sizeof(prefix), " %c %03d : ",
                  (o >= 1 && o <= 3) ? kAxis[o - 1] : ' ', o);
    out << prefix;
    for (int d = 0; d < n; ++d) out << (active(o, d) ? '1' : '0');
    out << '\n';
  }
  return out.str();
}

[[noreturn]] void ThrowParse(const std::string& text,
                             const json::parse_error& e) {
  // Locate the failing byte as line and column.
  std::size_t line = 1, col = 1;
  const std::size_t end = std::min<std::size_t>(e.byte, text.size() + 1);
  for (std::size_t i = 0; i + 1 < end; ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  throw Error(ErrorCode::kParse, "line " + std::to_string(line) +
                                     ", column " + std::to_string(col) +
                                     ": malformed JSON");
}

json ParseJson(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    ThrowParse(text, e);
  }
}

[[noreturn]] void Fail(const std::string& where, const std::string& what) {
  throw Error(ErrorCode::kParse, where + ": " + what);
}

int ToInt(const json& j, const std::string& where) {
  if (!j.is_number_integer()) Fail(where, "expected an integer");
  return j.get<int>();
}

double ToDouble(const json& j, const std::string& where) {
  if (!j.is_number()) Fail(where, "expected a number");
  return j.get<double>();
}

std::string ToString(const json& j, const std::string& where) {
  if (!j.is_string()) Fail(where, "expected a string");
  return j.get<std::string>();
}

void ApplyFlags(FsppRelation& r, const json& flags, const std::string& where) {
  if (!flags.is_array()) Fail(where, "expected a list of flags");
  for (std::size_t i = 0; i < flags.size(); ++i) {
    const std::string at = where + "/" + std::to_string(i);
    const std::string f = ToString(flags[i], at);
    if (f == "dou") {
      r.set_dou(true);
    } else if (f == "tri") {
      r.set_tri(true);
    } else if (f == "sam") {
      r.set_sam(true);
    } else {
      Fail(at, "unknown flag '" + f + "'");
    }
  }
}

FsppRelation RelationFromJson(const Granularity& g, const json& j,
                              const std::string& where) {
  FsppRelation r(g);
  const json* cells = nullptr;
  if (j.is_array()) {
    cells = &j;
  } else if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      if (key != "cells" && key != "flags" && key != "hex") {
        Fail(where, "unexpected key '" + key + "'");
      }
    }
    if (j.contains("cells") && j.contains("hex")) {
      Fail(where, "give either cells or hex");
    }
    if (j.contains("cells")) cells = &j["cells"];
    if (j.contains("hex")) {
      try {
        r = FromHex(g, ToString(j["hex"], where + "/hex"));
      } catch (const Error& e) {
        Fail(where + "/hex", e.what());
      }
    }
    if (j.contains("flags")) ApplyFlags(r, j["flags"], where + "/flags");
  } else {
    Fail(where, "expected a relation object or cell list");
  }
  if (cells != nullptr) {
    const std::string at = where + (j.is_array() ? "" : "/cells");
    if (!cells->is_array()) Fail(at, "expected a list of cells");
    for (std::size_t i = 0; i < cells->size(); ++i) {
      const std::string ci = at + "/" + std::to_string(i);
      const json& c = (*cells)[i];
      if (!c.is_array() || c.size() != 2) Fail(ci, "expected [dist, orient]");
      const CellIndex cell{ToInt(c[0], ci + "/0"), ToInt(c[1], ci + "/1")};
      try {
        r.Set(cell);
      } catch (const Error& e) {
        Fail(ci, e.what());
      }
    }
  }
  return r;
}

json RelationToJson(const FsppRelation& r) {
  json cells = json::array();
  for (const CellIndex c : r.Cells()) cells.push_back({c.dist, c.orient});
  json flags = json::array();
  if (r.dou()) flags.push_back("dou");
  if (r.tri()) flags.push_back("tri");
  if (r.sam()) flags.push_back("sam");
  return json{{"cells", cells}, {"flags", flags}};
}

Granularity GranularityFromJson(const json& j, const std::string& where) {
  Granularity g;
  if (!j.is_object()) Fail(where, "expected an object");
  for (const auto& [key, value] : j.items()) {
    const std::string at = where + "/" + key;
    if (key == "orientations") {
      g.m_orient = ToInt(value, at);
    } else if (key == "distances") {
      g.n_dist = ToInt(value, at);
    } else if (key == "base_length") {
      g.base_length = ToDouble(value, at);
    } else if (key == "ratio") {
      g.ratio = ToDouble(value, at);
    } else {
      Fail(where, "unexpected key '" + key + "'");
    }
  }
  try {
    g.Validate();
  } catch (const Error& e) {
    Fail(where, e.what());
  }
  return g;
}

Triple TripleFromJson(const json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 3) Fail(where, "expected three point ids");
  return {ToString(j[0], where + "/0"), ToString(j[1], where + "/1"),
          ToString(j[2], where + "/2")};
}

}  // namespace

std::string RenderAscii(const FsppRelation& r, const std::string& title) {
  const Granularity& g = r.granularity();
  return RenderRows(g.m_orient, g.n_dist, title,
                    [&](int o, int d) { return r.Get({d, o}); });
}

std::string RenderAscii(const BoolGrid& grid, const std::string& title) {
  return RenderRows(grid.m(), grid.n(), title,
                    [&](int o, int d) { return grid.Get({d, o}); });
}

std::string ToHex(const FsppRelation& r) {
  static constexpr char kDigits[] = "0123456789abcdef";
  const int bytes = (r.granularity().cell_count() + 7) / 8;
  std::string out;
  for (int i = 0; i < bytes; ++i) {
    const unsigned byte = (r.words()[i / 8] >> (8 * (i % 8))) & 0xffu;
    out += kDigits[byte >> 4];
    out += kDigits[byte & 0xf];
  }
  return out;
}

FsppRelation FromHex(const Granularity& g, const std::string& hex) {
  const int bytes = (g.cell_count() + 7) / 8;
  if (static_cast<int>(hex.size()) != 2 * bytes) {
    throw Error(ErrorCode::kParse,
                "hex relation needs " + std::to_string(2 * bytes) +
                    " digits, got " + std::to_string(hex.size()));
  }
  auto nibble = [&](char ch, std::size_t pos) {
    if (ch >= '0' && ch <= '9') return ch - '0';
    if (ch >= 'a' && ch <= 'f') return ch - 'a' + 10;
    if (ch >= 'A' && ch <= 'F') return ch - 'A' + 10;
    throw Error(ErrorCode::kParse,
                "invalid hex digit at position " + std::to_string(pos));
  };
  FsppRelation r(g);
  for (int i = 0; i < bytes; ++i) {
    const int byte = nibble(hex[2 * i], 2 * i) * 16 + nibble(hex[2 * i + 1], 2 * i + 1);
    for (int b = 0; b < 8; ++b) {
      const int bit = 8 * i + b;
      if (bit < g.cell_count() && ((byte >> b) & 1)) r.SetBit(bit);
    }
  }
  return r;
}

std::string SerializeRelation(const FsppRelation& r) {
  return RelationToJson(r).dump();
}

FsppRelation ParseRelation(const Granularity& g, const std::string& text) {
  return RelationFromJson(g, ParseJson(text), "relation");
}

std::string SerializeGranularity(const Granularity& g) {
  return json{{"orientations", g.m_orient},
              {"distances", g.n_dist},
              {"base_length", g.base_length},
              {"ratio", g.ratio}}
      .dump();
}

Scenario ParseScenario(const std::string& text) {
  const json j = ParseJson(text);
  if (!j.is_object()) Fail("scenario", "expected an object");
  for (const auto& [key, value] : j.items()) {
    if (key != "granularity" && key != "points" && key != "variables" &&
        key != "constraints" && key != "queries") {
      Fail("scenario", "unexpected key '" + key + "'");
    }
  }

  Scenario s;
  if (j.contains("granularity")) {
    s.granularity = GranularityFromJson(j["granularity"], "/granularity");
  }
  if (j.contains("points")) {
    const json& pts = j["points"];
    if (!pts.is_object()) Fail("/points", "expected an object");
    for (const auto& [id, xy] : pts.items()) {
      const std::string at = "/points/" + id;
      if (!xy.is_array() || xy.size() != 2) Fail(at, "expected [x, y]");
      s.points[id] = {ToDouble(xy[0], at + "/0"), ToDouble(xy[1], at + "/1")};
    }
  }
  std::set<std::string> declared;
  for (const auto& [id, p] : s.points) declared.insert(id);
  if (j.contains("variables")) {
    const json& vars = j["variables"];
    if (!vars.is_array()) Fail("/variables", "expected a list of ids");
    for (std::size_t i = 0; i < vars.size(); ++i) {
      s.variables.push_back(
          ToString(vars[i], "/variables/" + std::to_string(i)));
      declared.insert(s.variables.back());
    }
  }
  auto check_id = [&](const std::string& id, const std::string& at) {
    if (!declared.count(id)) Fail(at, "undeclared point '" + id + "'");
  };

  if (j.contains("constraints")) {
    const json& cs = j["constraints"];
    if (!cs.is_array()) Fail("/constraints", "expected a list");
    for (std::size_t i = 0; i < cs.size(); ++i) {
      const std::string at = "/constraints/" + std::to_string(i);
      const json& c = cs[i];
      if (!c.is_object() || !c.contains("triple")) {
        Fail(at, "expected an object with a triple");
      }
      const Triple t = TripleFromJson(c["triple"], at + "/triple");
      check_id(std::get<0>(t), at + "/triple");
      check_id(std::get<1>(t), at + "/triple");
      check_id(std::get<2>(t), at + "/triple");
      const bool from_points =
          c.contains("from_points") && c["from_points"].is_boolean() &&
          c["from_points"].get<bool>();
      if (from_points == c.contains("relation")) {
        Fail(at, "give exactly one of relation or from_points");
      }
      if (from_points) {
        const auto& [a, b, cc] = t;
        if (!s.points.count(a) || !s.points.count(b) || !s.points.count(cc)) {
          Fail(at, "from_points needs coordinates for all three points");
        }
        s.constraints.push_back(
            {t, FromClassification(
                    s.granularity,
                    Classify(s.granularity, s.points[a], s.points[b],
                             s.points[cc]))});
      } else {
        s.constraints.push_back(
            {t, RelationFromJson(s.granularity, c["relation"],
                                 at + "/relation")});
      }
    }
  }

  if (j.contains("queries")) {
    const json& qs = j["queries"];
    if (!qs.is_array()) Fail("/queries", "expected a list");
    for (std::size_t i = 0; i < qs.size(); ++i) {
      const std::string at = "/queries/" + std::to_string(i);
      const json& q = qs[i];
      if (!q.is_object() || !q.contains("op")) Fail(at, "expected an op");
      ScenarioQuery query;
      query.op = ToString(q["op"], at + "/op");
      if (query.op == "path" || query.op == "show") {
        const char* key = query.op == "path" ? "path" : "triple";
        if (!q.contains(key) || !q[key].is_array()) {
          Fail(at, std::string("expected a list '") + key + "'");
        }
        for (std::size_t k = 0; k < q[key].size(); ++k) {
          const std::string ka = at + "/" + key + "/" + std::to_string(k);
          query.ids.push_back(ToString(q[key][k], ka));
          check_id(query.ids.back(), ka);
        }
        if (query.op == "path" && query.ids.size() < 3) {
          Fail(at, "a path needs at least three points");
        }
        if (query.op == "show" && query.ids.size() != 3) {
          Fail(at, "show needs a triple");
        }
      } else if (query.op != "unary_closure" && query.op != "refine" &&
                 query.op != "consistent") {
        Fail(at, "unknown op '" + query.op + "'");
      }
      s.queries.push_back(std::move(query));
    }
  }
  return s;
}

}  // namespace fspp
