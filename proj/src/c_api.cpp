// Copyright 2026 The FSPP Authors. All rights reserved.
// Use of this source code is governed by the Apache License 2.0
// that can be found in the LICENSE file.
#include "fspp/fspp.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <string>

#include "fspp/codec.hpp"
#include "fspp/csp.hpp"
#include "fspp/error.hpp"
#include "fspp/grid.hpp"
#include "fspp/oracle.hpp"
#include "fspp/reasoning.hpp"
#include "fspp/scenario.hpp"

struct fspp_context {
  std::unique_ptr<fspp::Reasoner> reasoner;
};

struct fspp_relation {
  fspp::FsppRelation value;
};

struct fspp_network {
  const fspp_context* ctx;
  fspp::Network value;
};

namespace {

thread_local std::string last_error;

fspp_status Fail(fspp_status status, const std::string& message) {
  last_error = message;
  return status;
}

fspp_status FromCode(fspp::ErrorCode code) {
  return static_cast<fspp_status>(static_cast<int>(code));
}

// Runs `body`, translating exceptions into status codes.
template <typename Body>
fspp_status Guard(Body&& body) {
  try {
    body();
    last_error.clear();
    return FSPP_OK;
  } catch (const fspp::Error& e) {
    return Fail(FromCode(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return Fail(FSPP_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return Fail(FSPP_ERR_INTERNAL, e.what());
  }
}

#define FSPP_REQUIRE(ptr)                                              \
  do {                                                                 \
    if ((ptr) == nullptr) {                                            \
      return Fail(FSPP_ERR_NULL_ARGUMENT, "null argument: " #ptr);     \
    }                                                                  \
  } while (0)

fspp::Granularity ToGranularity(const fspp_granularity& g) {
  return {g.orientations, g.distances, g.base_length, g.ratio};
}

fspp_granularity FromGranularity(const fspp::Granularity& g) {
  return {g.m_orient, g.n_dist, g.base_length, g.ratio};
}

fspp::ReasonerOptions ToOptions(const fspp_options* o) {
  fspp::ReasonerOptions out;
  if (o != nullptr) {
    out.r_cap = o->r_cap;
    out.promote_on_any_overlap = o->promote_on_any_overlap != 0;
    out.raster_inverse = o->raster_inverse != 0;
  }
  return out;
}

fspp::Doi ToDoi(const fspp_doi& d) {
  if (d.is_full) return fspp::Doi::Full();
  return fspp::Doi(d.r_min, d.r_max, d.phi_min, d.phi_max);
}

fspp_doi FromDoi(const fspp::Doi& d) {
  return {d.r_min(), d.r_max(), d.phi_min(), d.phi_max(), d.is_full() ? 1 : 0};
}

fspp::Connectivity ToConnectivity(fspp_connectivity conn) {
  if (conn == FSPP_CONN_FOUR) return fspp::Connectivity::kFour;
  if (conn == FSPP_CONN_EIGHT) return fspp::Connectivity::kEight;
  throw fspp::Error(fspp::ErrorCode::kConfig, "connectivity must be 4 or 8");
}

char* CopyString(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

fspp_relation* Wrap(fspp::FsppRelation r) {
  return new fspp_relation{std::move(r)};
}

const fspp::Reasoner& R(const fspp_context* ctx) { return *ctx->reasoner; }

fspp::Point ToPoint(const double p[2]) { return {p[0], p[1]}; }

}  // namespace

extern "C" {

const char* fspp_version(void) { return "0.1.0"; }

const char* fspp_status_name(fspp_status status) {
  switch (status) {
    case FSPP_OK: return "ok";
    case FSPP_ERR_NULL_ARGUMENT: return "null_argument";
    case FSPP_ERR_INTERNAL: return "internal";
    default: break;
  }
  if (status >= FSPP_ERR_CONFIG && status <= FSPP_ERR_PARSE) {
    return fspp::ErrorCodeName(static_cast<fspp::ErrorCode>(status));
  }
  return "unknown";
}

const char* fspp_last_error(void) { return last_error.c_str(); }

void fspp_string_free(char* s) { std::free(s); }

void fspp_granularity_default(fspp_granularity* out) {
  if (out != nullptr) *out = FromGranularity(fspp::Granularity{});
}

void fspp_options_default(fspp_options* out) {
  if (out != nullptr) *out = {0.0, 0, 0};
}

fspp_status fspp_distance_table(const fspp_granularity* g, double* outer,
                                double* nominal_width, double* nominal_outer) {
  FSPP_REQUIRE(g);
  FSPP_REQUIRE(outer);
  return Guard([&] {
    const fspp::DistanceSystem ds = fspp::BuildDistanceSystem(ToGranularity(*g));
    for (std::size_t i = 0; i < ds.outer.size(); ++i) outer[i] = ds.outer[i];
    if (nominal_width != nullptr) *nominal_width = ds.nominal_last_width;
    if (nominal_outer != nullptr) *nominal_outer = ds.nominal_last_outer;
  });
}

fspp_status fspp_context_create(const fspp_granularity* g,
                                const fspp_options* options,
                                fspp_context** out) {
  FSPP_REQUIRE(g);
  FSPP_REQUIRE(out);
  return Guard([&] {
    auto ctx = std::make_unique<fspp_context>();
    ctx->reasoner = std::make_unique<fspp::Reasoner>(ToGranularity(*g),
                                                     ToOptions(options));
    *out = ctx.release();
  });
}

void fspp_context_destroy(fspp_context* ctx) { delete ctx; }

fspp_status fspp_context_granularity(const fspp_context* ctx,
                                     fspp_granularity* out) {
  FSPP_REQUIRE(ctx);
  FSPP_REQUIRE(out);
  *out = FromGranularity(R(ctx).granularity());
  return FSPP_OK;
}

fspp_status fspp_relation_create(const fspp_context* ctx, fspp_relation** out) {
  FSPP_REQUIRE(ctx);
  FSPP_REQUIRE(out);
  return Guard([&] { *out = Wrap(fspp::FsppRelation(R(ctx).granularity())); });
}

fspp_status fspp_relation_universal(const fspp_context* ctx,
                                    fspp_relation** out) {
  FSPP_REQUIRE(ctx);
  FSPP_REQUIRE(out);
  return Guard([&] {
    *out = Wrap(fspp::FsppRelation::Universal(R(ctx).granularity()));
  });
}

fspp_status fspp_relation_clone(const fspp_relation* r, fspp_relation** out) {
  FSPP_REQUIRE(r);
  FSPP_REQUIRE(out);
  return Guard([&] { *out = Wrap(r->value); });
}

void fspp_relation_destroy(fspp_relation* r) { delete r; }

fspp_status fspp_relation_set(fspp_relation* r, int dist, int orient,
                              int value) {
  FSPP_REQUIRE(r);
  return Guard([&] { r->value.Set({dist, orient}, value != 0); });
}

fspp_status fspp_relation_get(const fspp_relation* r, int dist, int orient,
                              int* out) {
  FSPP_REQUIRE(r);
  FSPP_REQUIRE(out);
  return Guard([&] { *out = r->value.Get({dist, orient}) ? 1 : 0; });
}

fspp_status fspp_relation_set_bit(fspp_relation* r, int bit, int value) {
  FSPP_REQUIRE(r);
  return Guard([&] { r->value.SetBit(bit, value != 0); });
}

fspp_status fspp_relation_set_flags(fspp_relation* r, unsigned flags) {
  FSPP_REQUIRE(r);
  if (flags & ~7u) return Fail(FSPP_ERR_CONFIG, "unknown flag bits");
  r->value.set_dou(flags & FSPP_FLAG_DOU);
  r->value.set_tri(flags & FSPP_FLAG_TRI);
  r->value.set_sam(flags & FSPP_FLAG_SAM);
  return FSPP_OK;
}

fspp_status fspp_relation_flags(const fspp_relation* r, unsigned* out) {
  FSPP_REQUIRE(r);
  FSPP_REQUIRE(out);
  unsigned flags = 0;
  if (r->value.dou()) flags |= FSPP_FLAG_DOU;
  if (r->value.tri()) flags |= FSPP_FLAG_TRI;
  if (r->value.sam()) flags |= FSPP_FLAG_SAM;
  *out = flags;
  return FSPP_OK;
}

fspp_status fspp_relation_count(const fspp_relation* r, int* out) {
  FSPP_REQUIRE(r);
  FSPP_REQUIRE(out);
  *out = r->value.CellCount();
  return FSPP_OK;
}

fspp_status fspp_relation_cells(const fspp_relation* r, int* cells,
                                size_t capacity, size_t* count) {
  FSPP_REQUIRE(r);
  FSPP_REQUIRE(count);
  if (capacity > 0) FSPP_REQUIRE(cells);
  return Guard([&] {
    const auto all = r->value.Cells();
    *count = all.size();
    for (std::size_t i = 0; i < all.size() && i < capacity; ++i) {
      cells[2 * i] = all[i].dist;
      cells[2 * i + 1] = all[i].orient;
    }
  });
}

fspp_status fspp_relation_equal(const fspp_relation* a, const fspp_relation* b,
                                int* out) {
  FSPP_REQUIRE(a);
  FSPP_REQUIRE(b);
  FSPP_REQUIRE(out);
  *out = a->value == b->value ? 1 : 0;
  return FSPP_OK;
}

fspp_status fspp_relation_is_subset(const fspp_relation* a,
                                    const fspp_relation* b, int* out) {
  FSPP_REQUIRE(a);
  FSPP_REQUIRE(b);
  FSPP_REQUIRE(out);
  return Guard([&] { *out = a->value.IsSubsetOf(b->value) ? 1 : 0; });
}

fspp_status fspp_relation_union(const fspp_relation* a, const fspp_relation* b,
                                fspp_relation** out) {
  FSPP_REQUIRE(a);
  FSPP_REQUIRE(b);
  FSPP_REQUIRE(out);
  return Guard([&] { *out = Wrap(a->value.Union(b->value)); });
}

fspp_status fspp_relation_intersect(const fspp_relation* a,
                                    const fspp_relation* b,
                                    fspp_relation** out) {
  FSPP_REQUIRE(a);
  FSPP_REQUIRE(b);
  FSPP_REQUIRE(out);
  return Guard([&] { *out = Wrap(a->value.Intersect(b->value)); });
}

fspp_status fspp_relation_difference(const fspp_relation* a,
                                     const fspp_relation* b,
                                     fspp_relation** out) {
  FSPP_REQUIRE(a);
  FSPP_REQUIRE(b);
  FSPP_REQUIRE(out);
  return Guard([&] { *out = Wrap(a->value.Difference(b->value)); });
}

fspp_status fspp_relation_complement(const fspp_relation* a,
                                     fspp_relation** out) {
  FSPP_REQUIRE(a);
  FSPP_REQUIRE(out);
  return Guard([&] { *out = Wrap(a->value.Complement()); });
}

fspp_status fspp_relation_to_json(const fspp_relation* r, char** out) {
  FSPP_REQUIRE(r);
  FSPP_REQUIRE(out);
  return Guard([&] { *out = CopyString(fspp::SerializeRelation(r->value)); });
}

fspp_status fspp_relation_to_hex(const fspp_relation* r, char** out) {
  FSPP_REQUIRE(r);
  FSPP_REQUIRE(out);
  return Guard([&] { *out = CopyString(fspp::ToHex(r->value)); });
}

fspp_status fspp_relation_parse(const fspp_context* ctx, const char* text,
                                fspp_relation** out) {
  FSPP_REQUIRE(ctx);
  FSPP_REQUIRE(text);
  FSPP_REQUIRE(out);
  return Guard([&] {
    *out = Wrap(fspp::ParseRelation(R(ctx).granularity(), text));
  });
}

fspp_status fspp_relation_render(const fspp_relation* r, const char* title,
                                 char** out) {
  FSPP_REQUIRE(r);
  FSPP_REQUIRE(out);
  return Guard([&] {
    *out = CopyString(fspp::RenderAscii(r->value, title ? title : ""));
  });
}

fspp_status fspp_classify(const fspp_context* ctx, const double a[2],
                          const double b[2], const double c[2],
                          fspp_relation** out) {
  FSPP_REQUIRE(ctx);
  FSPP_REQUIRE(a);
  FSPP_REQUIRE(b);
  FSPP_REQUIRE(c);
  FSPP_REQUIRE(out);
  return Guard([&] {
    const fspp::Reasoner& rs = R(ctx);
    *out = Wrap(fspp::FromClassification(
        rs.granularity(), fspp::Classify(rs.granularity(), rs.distances(),
                                         ToPoint(a), ToPoint(b), ToPoint(c))));
  });
}

fspp_status fspp_compose(const fspp_context* ctx, const fspp_relation* r1,
                         const fspp_relation* r2, fspp_relation** out) {
  FSPP_REQUIRE(ctx);
  FSPP_REQUIRE(r1);
  FSPP_REQUIRE(r2);
  FSPP_REQUIRE(out);
  return Guard([&] { *out = Wrap(R(ctx).Compose(r1->value, r2->value)); });
}

fspp_status fspp_compose_bordered(const fspp_context* ctx,
                                  const fspp_relation* r1,
                                  const fspp_relation* r2,
                                  fspp_relation** out) {
  FSPP_REQUIRE(ctx);
  FSPP_REQUIRE(r1);
  FSPP_REQUIRE(r2);
  FSPP_REQUIRE(out);
  return Guard(
      [&] { *out = Wrap(R(ctx).ComposeBordered(r1->value, r2->value)); });
}

fspp_status fspp_unary(const fspp_context* ctx, fspp_unary_op op,
                       const fspp_relation* r, fspp_relation** out) {
  FSPP_REQUIRE(ctx);
  FSPP_REQUIRE(r);
  FSPP_REQUIRE(out);
  if (op < FSPP_OP_ID || op > FSPP_OP_HMI) {
    return Fail(FSPP_ERR_CONFIG, "unknown unary operation");
  }
  return Guard([&] {
    *out = Wrap(R(ctx).Unary(static_cast<fspp::UnaryOp>(op), r->value));
  });
}

fspp_status fspp_neighbors(const fspp_context* ctx, int dist, int orient,
                           fspp_relation** out) {
  FSPP_REQUIRE(ctx);
  FSPP_REQUIRE(out);
  return Guard([&] {
    const fspp::Reasoner& rs = R(ctx);
    *out = Wrap(fspp::FsppRelation::FromCells(rs.granularity(),
                                              rs.Neighbors({dist, orient})));
  });
}

fspp_status fspp_expand(const fspp_context* ctx, const fspp_relation* r,
                        fspp_relation** out) {
  FSPP_REQUIRE(ctx);
  FSPP_REQUIRE(r);
  FSPP_REQUIRE(out);
  return Guard([&] { *out = Wrap(R(ctx).Expand(r->value)); });
}

fspp_status fspp_cell_to_doi(const fspp_context* ctx, int dist, int orient,
                             fspp_doi* out) {
  FSPP_REQUIRE(ctx);
  FSPP_REQUIRE(out);
  return Guard([&] { *out = FromDoi(R(ctx).CellToDoi({dist, orient})); });
}

fspp_status fspp_doi_compose(const fspp_context* ctx, const fspp_doi* d1,
                             const fspp_doi* d2, fspp_doi* out) {
  FSPP_REQUIRE(ctx);
  FSPP_REQUIRE(d1);
  FSPP_REQUIRE(d2);
  FSPP_REQUIRE(out);
  return Guard([&] {
    *out = FromDoi(
        fspp::Compose(ToDoi(*d1), ToDoi(*d2), R(ctx).compose_options()));
  });
}

fspp_status fspp_doi_to_relation(const fspp_context* ctx, const fspp_doi* d,
                                 fspp_relation** out) {
  FSPP_REQUIRE(ctx);
  FSPP_REQUIRE(d);
  FSPP_REQUIRE(out);
  return Guard([&] { *out = Wrap(R(ctx).DoiToRelation(ToDoi(*d))); });
}

fspp_status fspp_contour(const fspp_relation* r, fspp_connectivity conn,
                         fspp_relation** out) {
  FSPP_REQUIRE(r);
  FSPP_REQUIRE(out);
  return Guard([&] {
    fspp::FsppRelation res(r->value.granularity());
    fspp::Contour(fspp::BoolGrid::FromRelation(r->value),
                  ToConnectivity(conn))
        .WriteTo(res);
    *out = Wrap(std::move(res));
  });
}

fspp_status fspp_border_cells(const fspp_relation* r, fspp_connectivity conn,
                              fspp_relation** out) {
  FSPP_REQUIRE(r);
  FSPP_REQUIRE(out);
  return Guard([&] {
    *out = Wrap(fspp::FsppRelation::FromCells(
        r->value.granularity(),
        fspp::BorderCells(fspp::BoolGrid::FromRelation(r->value),
                          ToConnectivity(conn))));
  });
}

fspp_status fspp_fill(const fspp_relation* r, fspp_relation** out) {
  FSPP_REQUIRE(r);
  FSPP_REQUIRE(out);
  return Guard([&] {
    fspp::FsppRelation res(r->value.granularity());
    fspp::Fill(fspp::BoolGrid::FromRelation(r->value)).WriteTo(res);
    *out = Wrap(std::move(res));
  });
}

fspp_status fspp_component_count(const fspp_relation* r,
                                 fspp_connectivity conn, int* out) {
  FSPP_REQUIRE(r);
  FSPP_REQUIRE(out);
  return Guard([&] {
    *out = static_cast<int>(
        fspp::ConnectedComponents(fspp::BoolGrid::FromRelation(r->value),
                                  ToConnectivity(conn))
            .size());
  });
}

fspp_status fspp_network_create(const fspp_context* ctx, fspp_network** out) {
  FSPP_REQUIRE(ctx);
  FSPP_REQUIRE(out);
  return Guard([&] {
    *out = new fspp_network{ctx, fspp::Network(R(ctx).granularity())};
  });
}

void fspp_network_destroy(fspp_network* net) { delete net; }

fspp_status fspp_network_add(fspp_network* net, const char* origin,
                             const char* relatum, const char* referent,
                             const fspp_relation* r) {
  FSPP_REQUIRE(net);
  FSPP_REQUIRE(origin);
  FSPP_REQUIRE(relatum);
  FSPP_REQUIRE(referent);
  FSPP_REQUIRE(r);
  return Guard(
      [&] { net->value.AddConstraint({origin, relatum, referent}, r->value); });
}

fspp_status fspp_network_get(const fspp_network* net, const char* origin,
                             const char* relatum, const char* referent,
                             fspp_relation** out) {
  FSPP_REQUIRE(net);
  FSPP_REQUIRE(origin);
  FSPP_REQUIRE(relatum);
  FSPP_REQUIRE(referent);
  FSPP_REQUIRE(out);
  return Guard(
      [&] { *out = Wrap(net->value.Get({origin, relatum, referent})); });
}

fspp_status fspp_network_size(const fspp_network* net, size_t* out) {
  FSPP_REQUIRE(net);
  FSPP_REQUIRE(out);
  *out = net->value.constraints().size();
  return FSPP_OK;
}

fspp_status fspp_network_unary_closure(fspp_network* net, int* sweeps) {
  FSPP_REQUIRE(net);
  return Guard([&] {
    const int s = net->value.UnaryClosure(R(net->ctx));
    if (sweeps != nullptr) *sweeps = s;
  });
}

fspp_status fspp_network_refine(fspp_network* net, int* sweeps) {
  FSPP_REQUIRE(net);
  return Guard([&] {
    const fspp::RefineStats s = net->value.Refine(R(net->ctx));
    if (sweeps != nullptr) *sweeps = s.sweeps;
  });
}

fspp_status fspp_network_propagate_path(const fspp_network* net,
                                        const char* const* ids, size_t count,
                                        fspp_relation** out) {
  FSPP_REQUIRE(net);
  FSPP_REQUIRE(ids);
  FSPP_REQUIRE(out);
  return Guard([&] {
    std::vector<std::string> path;
    for (std::size_t i = 0; i < count; ++i) {
      if (ids[i] == nullptr) {
        throw fspp::Error(fspp::ErrorCode::kConfig, "null id in path");
      }
      path.emplace_back(ids[i]);
    }
    *out = Wrap(net->value.PropagatePath(R(net->ctx), path));
  });
}

fspp_status fspp_network_consistent(const fspp_network* net, int* out) {
  FSPP_REQUIRE(net);
  FSPP_REQUIRE(out);
  *out = net->value.Consistent() ? 1 : 0;
  return FSPP_OK;
}

fspp_status fspp_scenario_run(const char* json, const fspp_options* options,
                              int* ok, char** report) {
  FSPP_REQUIRE(json);
  FSPP_REQUIRE(ok);
  FSPP_REQUIRE(report);
  return Guard([&] {
    const fspp::ScenarioResult res =
        fspp::RunScenario(fspp::ParseScenario(json), ToOptions(options));
    *ok = (res.consistent && res.truth_violations == 0) ? 1 : 0;
    *report = CopyString(res.report);
  });
}

fspp_status fspp_oracle_run(const fspp_context* ctx, int samples,
                            uint64_t seed, long* violations, char** report) {
  FSPP_REQUIRE(ctx);
  FSPP_REQUIRE(violations);
  FSPP_REQUIRE(report);
  if (samples < 1) return Fail(FSPP_ERR_CONFIG, "samples must be positive");
  return Guard([&] {
    fspp::OracleConfig config;
    config.samples = samples;
    config.seed = seed;
    const fspp::OracleReport rep = fspp::RunOracle(R(ctx), config);
    long total = 0;
    for (const auto& s : rep.suites) total += s.violations;
    *violations = total;
    *report = CopyString(rep.ToText());
  });
}

}  // extern "C"
