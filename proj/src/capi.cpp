#include "simplepaths/simplepaths.h"

#include <fstream>
#include <new>
#include <sstream>
#include <string>

#include "simplepaths/commands.hpp"

struct sp_graph {
  simplepaths::AnyGraph graph;
};

struct sp_report {
  std::string text;
};

namespace {

thread_local std::string last_error;

sp_status fail(sp_status s, const std::string& msg) {
  last_error = msg;
  return s;
}

sp_status status_of(simplepaths::ErrorCode c) {
  using simplepaths::ErrorCode;
  switch (c) {
    case ErrorCode::Usage: return SP_E_USAGE;
    case ErrorCode::Parse: return SP_E_PARSE;
    case ErrorCode::Limit: return SP_E_LIMIT;
    case ErrorCode::Mismatch: return SP_E_MISMATCH;
    case ErrorCode::Capability: return SP_E_CAPABILITY;
    case ErrorCode::SelfCheck: return SP_E_SELF_CHECK;
    case ErrorCode::Cancelled: return SP_E_CANCELLED;
  }
  return SP_E_INTERNAL;
}

/// Runs f, translating exceptions into status codes.
template <class F>
sp_status guarded(F&& f) {
  try {
    last_error.clear();
    return f();
  } catch (const simplepaths::Error& e) {
    return fail(status_of(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(SP_E_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(SP_E_INTERNAL, e.what());
  }
}

simplepaths::RunConfig to_config(const sp_options* o) {
  using namespace simplepaths;
  sp_options defaults;
  sp_options_init(&defaults);
  if (!o) o = &defaults;
  RunConfig c;
  c.max_length = o->max_length;
  switch (o->kind) {
    case SP_KIND_PATHS: c.kind = Kind::Paths; break;
    case SP_KIND_CYCLES: c.kind = Kind::Cycles; break;
    case SP_KIND_BOTH: c.kind = Kind::Both; break;
    case SP_KIND_HAMILTONIAN: c.kind = Kind::Hamiltonian; break;
    default: throw UsageError("unknown kind");
  }
  switch (o->method) {
    case SP_METHOD_CONNECTED: c.method = Method::Connected; break;
    case SP_METHOD_ALL_SUBSETS: c.method = Method::AllSubsets; break;
    case SP_METHOD_ORACLE: c.method = Method::Oracle; break;
    default: throw UsageError("unknown method");
  }
  c.format = o->format == SP_FORMAT_CSV ? OutputFormat::Csv : OutputFormat::Json;
  c.threads = o->threads;
  c.reference_limit = o->limit_n;
  c.max_size = o->max_size;
  c.list_limit = o->list_limit;
  c.dominating = o->dominating != 0;
  c.word_path_cap = o->word_path_cap;
  c.timing = o->timing != 0;
  c.deadline_seconds = o->deadline_s;
  c.bench_methods.clear();
  if (o->bench_methods & SP_BENCH_CONNECTED) c.bench_methods.push_back(Method::Connected);
  if (o->bench_methods & SP_BENCH_ALL_SUBSETS) c.bench_methods.push_back(Method::AllSubsets);
  if (o->bench_methods & SP_BENCH_ORACLE) c.bench_methods.push_back(Method::Oracle);
  c.inject_mismatch = o->inject_mismatch != 0;
  return c;
}

simplepaths::RingKind to_ring(sp_ring r) {
  switch (r) {
    case SP_RING_BIGINT: return simplepaths::RingKind::BigInt;
    case SP_RING_FLOAT: return simplepaths::RingKind::Float;
    case SP_RING_WORD: return simplepaths::RingKind::Word;
  }
  throw simplepaths::UsageError("unknown ring");
}

template <class Cmd>
sp_status run_report(const sp_graph* g, const sp_options* opts, sp_report** out, Cmd&& cmd) {
  if (!g || !out) return fail(SP_E_USAGE, "null graph or output pointer");
  *out = nullptr;
  return guarded([&] {
    *out = new sp_report{cmd(g->graph, to_config(opts))};
    return SP_OK;
  });
}

}  // namespace

extern "C" {

void sp_options_init(sp_options* o) {
  if (!o) return;
  *o = sp_options{};
  o->max_length = 0;
  o->kind = SP_KIND_BOTH;
  o->method = SP_METHOD_CONNECTED;
  o->format = SP_FORMAT_JSON;
  o->threads = 1;
  o->limit_n = simplepaths::kDefaultReferenceLimit;
  o->word_path_cap = 10000;
  o->timing = 1;
  o->bench_methods = SP_BENCH_CONNECTED | SP_BENCH_ALL_SUBSETS | SP_BENCH_ORACLE;
}

sp_status sp_graph_parse(const char* text, size_t len, int directed, sp_ring ring, sp_graph** out) {
  if (!out || (!text && len > 0)) return fail(SP_E_USAGE, "null text or output pointer");
  *out = nullptr;
  return guarded([&] {
    auto g = simplepaths::load_graph(std::string_view(text ? text : "", len), directed != 0, to_ring(ring));
    *out = new sp_graph{std::move(g)};
    return SP_OK;
  });
}

sp_status sp_graph_load(const char* path, int directed, sp_ring ring, sp_graph** out) {
  if (!path || !out) return fail(SP_E_USAGE, "null path or output pointer");
  std::ifstream in(path, std::ios::binary);
  if (!in) return fail(SP_E_IO, std::string("cannot open ") + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  return sp_graph_parse(text.data(), text.size(), directed, ring, out);
}

void sp_graph_free(sp_graph* g) { delete g; }

size_t sp_graph_vertex_count(const sp_graph* g) { return g ? simplepaths::topology_of(g->graph).vertex_count() : 0; }

size_t sp_graph_arc_count(const sp_graph* g) { return g ? simplepaths::topology_of(g->graph).arc_count() : 0; }

sp_status sp_count(const sp_graph* g, const sp_options* opts, sp_report** out) {
  return run_report(g, opts, out, simplepaths::cmd_count);
}

sp_status sp_hamiltonian(const sp_graph* g, const sp_options* opts, sp_report** out) {
  return run_report(g, opts, out, simplepaths::cmd_hamiltonian);
}

sp_status sp_subgraphs(const sp_graph* g, const sp_options* opts, sp_report** out) {
  return run_report(g, opts, out, simplepaths::cmd_subgraphs);
}

sp_status sp_bench(const sp_graph* g, const sp_options* opts, sp_report** out) {
  if (!g || !out) return fail(SP_E_USAGE, "null graph or output pointer");
  *out = nullptr;
  return guarded([&] {
    auto outcome = simplepaths::cmd_bench(g->graph, to_config(opts));
    *out = new sp_report{std::move(outcome.report)};
    if (!outcome.consistent) return fail(SP_E_MISMATCH, "methods disagree; see report");
    return SP_OK;
  });
}

const char* sp_report_text(const sp_report* r) { return r ? r->text.c_str() : ""; }

size_t sp_report_size(const sp_report* r) { return r ? r->text.size() : 0; }

void sp_report_free(sp_report* r) { delete r; }

const char* sp_last_error(void) { return last_error.c_str(); }

const char* sp_status_name(sp_status s) {
  switch (s) {
    case SP_OK: return "ok";
    case SP_E_USAGE: return "usage";
    case SP_E_PARSE: return "parse";
    case SP_E_LIMIT: return "limit";
    case SP_E_MISMATCH: return "mismatch";
    case SP_E_CAPABILITY: return "capability";
    case SP_E_SELF_CHECK: return "self-check";
    case SP_E_CANCELLED: return "cancelled";
    case SP_E_IO: return "io";
    case SP_E_INTERNAL: return "internal";
  }
  return "unknown";
}

const char* sp_version(void) { return "0.1.0"; }

}  // extern "C"
