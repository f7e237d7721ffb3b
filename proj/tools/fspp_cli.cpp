// Copyright 2026 The FSPP Authors. All rights reserved.
// Use of this source code is governed by the Apache License 2.0
// that can be found in the LICENSE file.
//
// Command-line front end over the C interface.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fspp/fspp.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

struct Failure {
  fspp_status status;
  std::string message;
};

void Check(fspp_status s) {
  if (s != FSPP_OK) throw Failure{s, fspp_last_error()};
}

struct RelationDeleter {
  void operator()(fspp_relation* r) const { fspp_relation_destroy(r); }
};
struct ContextDeleter {
  void operator()(fspp_context* c) const { fspp_context_destroy(c); }
};
struct NetworkDeleter {
  void operator()(fspp_network* n) const { fspp_network_destroy(n); }
};
using Relation = std::unique_ptr<fspp_relation, RelationDeleter>;
using Context = std::unique_ptr<fspp_context, ContextDeleter>;

std::string TakeString(char* s) {
  std::string out(s);
  fspp_string_free(s);
  return out;
}

struct Globals {
  fspp_granularity g{};
  fspp_options options{};
  std::uint64_t seed = 1;
  bool json_only = false;
};

Context MakeContext(const Globals& gl) {
  fspp_context* ctx = nullptr;
  Check(fspp_context_create(&gl.g, &gl.options, &ctx));
  return Context(ctx);
}

Relation Empty(const fspp_context* ctx) {
  fspp_relation* r = nullptr;
  Check(fspp_relation_create(ctx, &r));
  return Relation(r);
}

// A relation argument is a file path, or inline JSON when it starts with
// '{' or '['.
Relation LoadRelation(const fspp_context* ctx, const std::string& arg) {
  std::string text = arg;
  if (arg.empty() || (arg[0] != '{' && arg[0] != '[')) {
    std::ifstream in(arg);
    if (!in) throw Failure{FSPP_ERR_PARSE, "cannot read '" + arg + "'"};
    std::stringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  fspp_relation* r = nullptr;
  Check(fspp_relation_parse(ctx, text.c_str(), &r));
  return Relation(r);
}

std::string Json(const fspp_relation* r) {
  char* s = nullptr;
  Check(fspp_relation_to_json(r, &s));
  return TakeString(s);
}

std::string Render(const fspp_relation* r, const std::string& title) {
  char* s = nullptr;
  Check(fspp_relation_render(r, title.c_str(), &s));
  return TakeString(s);
}

void Print(const Globals& gl, const fspp_relation* r, const std::string& title) {
  std::cout << Json(r) << '\n';
  if (!gl.json_only) std::cout << Render(r, title);
}

bool Equal(const fspp_relation* a, const fspp_relation* b) {
  int eq = 0;
  Check(fspp_relation_equal(a, b, &eq));
  return eq != 0;
}

fspp_unary_op ParseOp(const std::string& name) {
  static const std::pair<const char*, fspp_unary_op> kOps[] = {
      {"id", FSPP_OP_ID},   {"inv", FSPP_OP_INV}, {"sc", FSPP_OP_SC},
      {"sci", FSPP_OP_SCI}, {"hm", FSPP_OP_HM},   {"hmi", FSPP_OP_HMI}};
  for (const auto& [n, op] : kOps) {
    if (name == n) return op;
  }
  throw Failure{FSPP_ERR_PARSE, "unknown operation '" + name + "'"};
}

fspp_connectivity ParseConn(int c) {
  if (c == 4) return FSPP_CONN_FOUR;
  if (c == 8) return FSPP_CONN_EIGHT;
  throw Failure{FSPP_ERR_CONFIG, "connectivity must be 4 or 8"};
}

Relation Apply(fspp_status (*op)(const fspp_context*, const fspp_relation*,
                                 const fspp_relation*, fspp_relation**),
               const fspp_context* ctx, const fspp_relation* a,
               const fspp_relation* b) {
  fspp_relation* r = nullptr;
  Check(op(ctx, a, b, &r));
  return Relation(r);
}

Relation ContourOf(const fspp_relation* r, fspp_connectivity conn) {
  fspp_relation* out = nullptr;
  Check(fspp_contour(r, conn, &out));
  return Relation(out);
}

// The listing sequence: three input relations, SC, composition, contour
// tracing and composition through the contour.
int RunDemo(const Globals& gl) {
  const Context ctx = MakeContext(gl);
  const Relation a = Empty(ctx.get());
  Check(fspp_relation_set(a.get(), 3, 6, 1));
  Check(fspp_relation_set(a.get(), 4, 6, 1));
  Check(fspp_relation_set(a.get(), 3, 5, 1));
  const Relation b = Empty(ctx.get());
  Check(fspp_relation_set(b.get(), 15, 4, 1));
  const Relation c = Empty(ctx.get());
  Check(fspp_relation_set_bit(c.get(), 58, 1));
  Check(fspp_relation_set_bit(c.get(), 59, 1));

  std::cout << Render(a.get(), "a") << Render(b.get(), "b")
            << Render(c.get(), "c") << '\n';

  fspp_relation* raw = nullptr;
  Check(fspp_unary(ctx.get(), FSPP_OP_SC, b.get(), &raw));
  const Relation sc(raw);
  std::cout << Render(sc.get(), "result of SC b") << '\n';

  const Relation d = Apply(fspp_compose, ctx.get(), a.get(), b.get());
  std::cout << Render(d.get(), "composition result 1") << '\n';

  const Relation e = Apply(fspp_compose, ctx.get(), a.get(), d.get());
  const Relation d_contour = ContourOf(d.get(), FSPP_CONN_EIGHT);
  std::cout << Render(d_contour.get(), "contour of composition") << '\n';

  const Relation f = Apply(fspp_compose, ctx.get(), a.get(), d_contour.get());
  std::cout << Render(e.get(), "composition 2 (full operand)") << '\n'
            << Render(f.get(), "composition 2 (contour operand)") << '\n';
  const bool equal = Equal(e.get(), f.get());
  std::cout << "e == f: " << (equal ? "true" : "false") << "\n\n";

  const Relation f_contour = ContourOf(f.get(), FSPP_CONN_EIGHT);
  std::cout << Render(f_contour.get(), "contour of composition 2");
  return equal ? kExitOk : kExitViolation;
}

int Main(int argc, char** argv) {
  CLI::App app{"Fine-grained qualitative point positions (FSPP)"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", fspp_version());

  Globals gl;
  fspp_granularity_default(&gl.g);
  fspp_options_default(&gl.options);
  bool promote = false, raster = false;
  app.add_option("--orientations", gl.g.orientations,
                 "orientation sectors (even, >= 4)")
      ->capture_default_str();
  app.add_option("--distances", gl.g.distances, "distance bands (>= 2)")
      ->capture_default_str();
  app.add_option("--base-length", gl.g.base_length, "base length in meters")
      ->capture_default_str();
  app.add_option("--ratio", gl.g.ratio, "band growth ratio (> 1)")
      ->capture_default_str();
  app.add_option("--seed", gl.seed, "seed for all sampling")
      ->capture_default_str();
  app.add_option("--r-cap", gl.options.r_cap,
                 "radius standing in for the unbounded band (0: default)");
  app.add_flag("--promote-any-overlap", promote,
               "promote to the full DOI on any radial overlap");
  app.add_flag("--raster-inverse", raster,
               "INV through the backward sectors instead of the exact "
               "backward direction");
  app.add_flag("--json", gl.json_only, "print JSON only, no grid");

  std::vector<double> pa, pb, pc;
  auto* classify = app.add_subcommand("classify", "classify a point triple");
  classify->add_option("-a,--origin", pa, "x y")->expected(2)->required();
  classify->add_option("-b,--relatum", pb, "x y")->expected(2)->required();
  classify->add_option("-c,--referent", pc, "x y")->expected(2)->required();

  std::string r1_arg, r2_arg, title = "relation", op_name;
  bool bordered = false;
  auto* compose = app.add_subcommand("compose", "compose two relations");
  compose->add_option("first", r1_arg, "relation file or inline JSON")
      ->required();
  compose->add_option("second", r2_arg, "relation file or inline JSON")
      ->required();
  compose->add_flag("--bordered", bordered,
                    "compose contours and fill; compare with the full result");

  auto* unary = app.add_subcommand("unary", "apply a permutation operation");
  unary->add_option("--op", op_name, "id, inv, sc, sci, hm or hmi")
      ->required();
  unary->add_option("relation", r1_arg, "relation file or inline JSON")
      ->required();

  int dist = 0, orient = 0;
  auto* neighbors =
      app.add_subcommand("neighbors", "conceptual neighbors of a cell");
  neighbors->add_option("--dist", dist, "distance band")->required();
  neighbors->add_option("--orient", orient, "orientation sector")->required();

  int conn = 8;
  auto* trace = app.add_subcommand("trace", "contour of a relation");
  trace->add_option("relation", r1_arg, "relation file or inline JSON")
      ->required();
  trace->add_option("--connectivity", conn, "4 or 8")->capture_default_str();

  auto* fill = app.add_subcommand("fill", "fill enclosed holes");
  fill->add_option("relation", r1_arg, "relation file or inline JSON")
      ->required();

  std::string scenario_path;
  auto* propagate =
      app.add_subcommand("propagate", "run a JSON constraint scenario");
  propagate->add_option("scenario", scenario_path, "scenario file")
      ->required()
      ->check(CLI::ExistingFile);

  auto* render = app.add_subcommand("render", "print the ASCII grid");
  render->add_option("relation", r1_arg, "relation file or inline JSON")
      ->required();
  render->add_option("--title", title, "title line")->capture_default_str();

  int samples = 1000;
  auto* oracle =
      app.add_subcommand("oracle", "sampling soundness suites");
  oracle->add_option("--samples", samples, "samples per suite")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);

  auto* demo = app.add_subcommand("demo", "the reference program sequence");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }
  gl.options.promote_on_any_overlap = promote ? 1 : 0;
  gl.options.raster_inverse = raster ? 1 : 0;

  try {
    if (*classify) {
      const Context ctx = MakeContext(gl);
      fspp_relation* r = nullptr;
      Check(fspp_classify(ctx.get(), pa.data(), pb.data(), pc.data(), &r));
      const Relation rel(r);
      Print(gl, rel.get(), "classification");
      return kExitOk;
    }
    if (*compose) {
      const Context ctx = MakeContext(gl);
      const Relation r1 = LoadRelation(ctx.get(), r1_arg);
      const Relation r2 = LoadRelation(ctx.get(), r2_arg);
      const Relation full = Apply(fspp_compose, ctx.get(), r1.get(), r2.get());
      if (!bordered) {
        Print(gl, full.get(), "composition");
        return kExitOk;
      }
      const Relation fast =
          Apply(fspp_compose_bordered, ctx.get(), r1.get(), r2.get());
      Print(gl, fast.get(), "bordered composition");
      const bool eq = Equal(full.get(), fast.get());
      std::cout << "equal: " << (eq ? "true" : "false") << '\n';
      return eq ? kExitOk : kExitViolation;
    }
    if (*unary) {
      const Context ctx = MakeContext(gl);
      const Relation r = LoadRelation(ctx.get(), r1_arg);
      fspp_relation* out = nullptr;
      Check(fspp_unary(ctx.get(), ParseOp(op_name), r.get(), &out));
      const Relation res(out);
      Print(gl, res.get(), op_name);
      return kExitOk;
    }
    if (*neighbors) {
      const Context ctx = MakeContext(gl);
      fspp_relation* out = nullptr;
      Check(fspp_neighbors(ctx.get(), dist, orient, &out));
      const Relation res(out);
      Print(gl, res.get(), "neighbors");
      return kExitOk;
    }
    if (*trace) {
      const Context ctx = MakeContext(gl);
      const Relation r = LoadRelation(ctx.get(), r1_arg);
      const Relation res = ContourOf(r.get(), ParseConn(conn));
      Print(gl, res.get(), "contour");
      return kExitOk;
    }
    if (*fill) {
      const Context ctx = MakeContext(gl);
      const Relation r = LoadRelation(ctx.get(), r1_arg);
      fspp_relation* out = nullptr;
      Check(fspp_fill(r.get(), &out));
      const Relation res(out);
      Print(gl, res.get(), "filled");
      return kExitOk;
    }
    if (*propagate) {
      std::ifstream in(scenario_path);
      std::stringstream buf;
      buf << in.rdbuf();
      int ok = 0;
      char* report = nullptr;
      Check(fspp_scenario_run(buf.str().c_str(), &gl.options, &ok, &report));
      std::cout << TakeString(report);
      return ok ? kExitOk : kExitViolation;
    }
    if (*render) {
      const Context ctx = MakeContext(gl);
      const Relation r = LoadRelation(ctx.get(), r1_arg);
      std::cout << Render(r.get(), title);
      return kExitOk;
    }
    if (*oracle) {
      const Context ctx = MakeContext(gl);
      long violations = 0;
      char* report = nullptr;
      Check(fspp_oracle_run(ctx.get(), samples, gl.seed, &violations, &report));
      std::cout << TakeString(report);
      return violations == 0 ? kExitOk : kExitViolation;
    }
    if (*demo) return RunDemo(gl);
  } catch (const Failure& f) {
    std::cerr << "fspp: " << fspp_status_name(f.status) << ": " << f.message
              << '\n';
    return f.status == FSPP_ERR_INTERNAL ? kExitViolation : kExitUsage;
  }
  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) { return Main(argc, argv); }
