// simplepaths-cli: command-line front end over the C API.

#include <cstdio>
#include <iostream>
#include <iterator>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "simplepaths/simplepaths.h"

namespace {

// Exit codes: 0 ok, 1 usage, 2 parse, 3 limits, 4 cross-method mismatch.
int exit_code(sp_status s) {
  switch (s) {
    case SP_OK: return 0;
    case SP_E_USAGE:
    case SP_E_CAPABILITY:
    case SP_E_INTERNAL: return 1;
    case SP_E_PARSE:
    case SP_E_IO: return 2;
    case SP_E_LIMIT:
    case SP_E_CANCELLED: return 3;
    case SP_E_MISMATCH:
    case SP_E_SELF_CHECK: return 4;
  }
  return 1;
}

struct GraphDeleter {
  void operator()(sp_graph* g) const { sp_graph_free(g); }
};
struct ReportDeleter {
  void operator()(sp_report* r) const { sp_report_free(r); }
};

struct Settings {
  std::string input;
  bool directed = false;
  bool undirected = false;
  std::string ring = "bigint";
  std::string kind = "both";
  std::string method = "connected";
  std::string output = "json";
  std::vector<std::string> bench_methods{"connected", "all-subsets", "oracle"};
  bool no_timing = false;
  sp_options opts{};
};

void add_common(CLI::App* cmd, Settings& s) {
  cmd->add_option("--input", s.input, "Edge-list file ('-' for standard input)")->required();
  auto* d = cmd->add_flag("--directed", s.directed, "Treat each line as an arc u->v");
  auto* u = cmd->add_flag("--undirected", s.undirected, "Treat each line as an edge {u,v} (default)");
  d->excludes(u);
  cmd->add_option("--ring", s.ring, "Coefficient ring")->check(CLI::IsMember({"bigint", "float", "word"}));
  cmd->add_option("--threads", s.opts.threads, "Worker threads")->check(CLI::PositiveNumber);
  cmd->add_option("--limit-n", s.opts.limit_n, "Vertex limit for the all-subsets reference method");
  cmd->add_option("--output", s.output, "Output format")->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--deadline", s.opts.deadline_s, "Abort with exit 3 after this many seconds");
  cmd->add_flag("--no-timing", s.no_timing, "Omit wall-clock fields (byte-stable output)");
}

sp_status load(const Settings& s, std::unique_ptr<sp_graph, GraphDeleter>& out) {
  static const std::map<std::string, sp_ring> rings{
      {"bigint", SP_RING_BIGINT}, {"float", SP_RING_FLOAT}, {"word", SP_RING_WORD}};
  sp_graph* g = nullptr;
  sp_status st;
  const int directed = s.directed ? 1 : 0;
  if (s.input == "-") {
    std::string text{std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    st = sp_graph_parse(text.data(), text.size(), directed, rings.at(s.ring), &g);
  } else {
    st = sp_graph_load(s.input.c_str(), directed, rings.at(s.ring), &g);
  }
  out.reset(g);
  return st;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact simple path, cycle and Hamiltonian counting on directed graphs"};
  app.require_subcommand(1);
  Settings s;
  sp_options_init(&s.opts);

  auto* count = app.add_subcommand("count", "Simple path and cycle generating series up to --max-length");
  add_common(count, s);
  count->add_option("--max-length", s.opts.max_length, "Maximum path/cycle length (default n)");
  count->add_option("--kind", s.kind, "What to report")
      ->check(CLI::IsMember({"paths", "cycles", "both", "hamiltonian"}));
  count->add_option("--method", s.method, "Engine")->check(CLI::IsMember({"connected", "all-subsets", "oracle"}));
  count->add_option("--word-path-cap", s.opts.word_path_cap, "Word ring: omit tables with more terms");

  auto* ham = app.add_subcommand("hamiltonian", "Hamiltonian path matrix and cycle count");
  add_common(ham, s);
  ham->add_option("--method", s.method, "Engine")->check(CLI::IsMember({"connected", "all-subsets", "oracle"}));

  auto* sub = app.add_subcommand("subgraphs", "Weakly connected induced subgraph counts by size");
  add_common(sub, s);
  sub->add_option("--max-size", s.opts.max_size, "Largest set size (default n)");
  sub->add_option("--list-limit", s.opts.list_limit, "List the sets when there are at most this many");
  sub->add_flag("--dominating", s.opts.dominating, "Also count connected dominating sets");

  auto* bench = app.add_subcommand("bench", "Run several methods, compare results, report timings");
  add_common(bench, s);
  bench->add_option("--max-length", s.opts.max_length, "Maximum path/cycle length (default n)");
  bench->add_option("--methods", s.bench_methods, "Methods to run")
      ->delimiter(',')
      ->check(CLI::IsMember({"connected", "all-subsets", "oracle"}));
  bench->add_flag("--inject-mismatch", s.opts.inject_mismatch, "Corrupt the last method's result (testing)")
      ->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  static const std::map<std::string, sp_kind> kinds{
      {"paths", SP_KIND_PATHS}, {"cycles", SP_KIND_CYCLES}, {"both", SP_KIND_BOTH}, {"hamiltonian", SP_KIND_HAMILTONIAN}};
  static const std::map<std::string, sp_method> methods{
      {"connected", SP_METHOD_CONNECTED}, {"all-subsets", SP_METHOD_ALL_SUBSETS}, {"oracle", SP_METHOD_ORACLE}};
  static const std::map<std::string, unsigned> bench_bits{
      {"connected", SP_BENCH_CONNECTED}, {"all-subsets", SP_BENCH_ALL_SUBSETS}, {"oracle", SP_BENCH_ORACLE}};
  s.opts.kind = kinds.at(s.kind);
  s.opts.method = methods.at(s.method);
  s.opts.format = s.output == "csv" ? SP_FORMAT_CSV : SP_FORMAT_JSON;
  s.opts.timing = s.no_timing ? 0 : 1;
  s.opts.bench_methods = 0;
  for (const auto& m : s.bench_methods) s.opts.bench_methods |= bench_bits.at(m);

  std::unique_ptr<sp_graph, GraphDeleter> graph;
  if (sp_status st = load(s, graph); st != SP_OK) {
    std::cerr << "error (" << sp_status_name(st) << "): " << sp_last_error() << '\n';
    return exit_code(st);
  }

  sp_report* raw = nullptr;
  sp_status st;
  if (count->parsed()) {
    st = sp_count(graph.get(), &s.opts, &raw);
  } else if (ham->parsed()) {
    st = sp_hamiltonian(graph.get(), &s.opts, &raw);
  } else if (sub->parsed()) {
    st = sp_subgraphs(graph.get(), &s.opts, &raw);
  } else {
    st = sp_bench(graph.get(), &s.opts, &raw);
  }
  std::unique_ptr<sp_report, ReportDeleter> report(raw);
  if (report) std::fwrite(sp_report_text(report.get()), 1, sp_report_size(report.get()), stdout);
  if (st != SP_OK) std::cerr << "error (" << sp_status_name(st) << "): " << sp_last_error() << '\n';
  return exit_code(st);
}
