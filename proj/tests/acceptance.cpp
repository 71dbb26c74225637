// Acceptance suite: one PASS/FAIL line per criterion.
//
//   acceptance                 run every criterion
//   acceptance --criterion 3   run one (criterion 7 reruns 1-6 silently first)

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "simplepaths/commands.hpp"
#include "simplepaths/oracle.hpp"
#include "simplepaths/series.hpp"
#include "test_util.hpp"

using namespace simplepaths;
using namespace simplepaths::testing;
using json = nlohmann::ordered_json;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

class Timer {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string fmt_seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f s", s);
  return buf;
}

/// The random digraph corpus: n in 2..6, arc probability in {0.2, 0.5, 0.8},
/// self-loop probability 0.2, 14 graphs per (n, p) cell.
std::vector<Topology> digraph_corpus() {
  std::mt19937_64 rng(20240601);
  std::vector<Topology> out;
  for (std::size_t n = 2; n <= 6; ++n)
    for (double p : {0.2, 0.5, 0.8})
      for (int rep = 0; rep < 14; ++rep) out.push_back(random_digraph(rng, n, p, 0.2));
  return out;
}

std::string edge_text(const Topology& t) { return edge_list_text(t); }

Outcome criterion_1() {
  Outcome o;
  Timer timer;
  const auto corpus = digraph_corpus();
  std::size_t idx = 0;
  for (const auto& t : corpus) {
    auto g = Graph<CountRing>::with_default_weights(t);
    const std::size_t L = t.vertex_count();
    auto c = path_series_connected(g, L);
    if (!(c == path_series_all_subsets(g, L))) o.fail("connected != all-subsets on graph " + std::to_string(idx));
    if (!(c == oracle::dfs_path_series(g, L))) o.fail("connected != oracle on graph " + std::to_string(idx));
    ++idx;
  }
  const double s = timer.seconds();
  if (s >= 30) o.fail("took " + fmt_seconds(s));
  if (o.pass) o.detail = std::to_string(corpus.size()) + " digraphs, " + fmt_seconds(s);
  return o;
}

std::multiset<Word> words_of(const PathSeriesResult<WordRing>& res, Outcome& o, const char* engine) {
  std::multiset<Word> words;
  auto take = [&](const TruncPoly<WordRing>& p) {
    for (const auto& c : p.coeffs())
      for (const auto& term : c.terms()) {
        if (term.coeff != 1) o.fail(std::string(engine) + " has coefficient " + to_decimal(term.coeff));
        words.insert(term.word);
      }
  };
  for (const auto& [k, p] : res.open) take(p);
  for (const auto& [k, p] : res.closed) take(p);
  return words;
}

Outcome criterion_2() {
  Outcome o;
  std::size_t graphs = 0, paths = 0;
  for (const auto& t : digraph_corpus()) {
    if (t.vertex_count() > 5) continue;
    ++graphs;
    auto g = Graph<WordRing>::with_default_weights(t);
    const std::size_t L = t.vertex_count();
    std::multiset<Word> expect;
    for (const auto& p : oracle::simple_paths(t, L)) expect.insert(p.word);
    paths += expect.size();
    if (words_of(path_series_connected(g, L), o, "connected") != expect)
      o.fail("connected word set differs on graph " + std::to_string(graphs));
    if (words_of(path_series_all_subsets(g, L), o, "all-subsets") != expect)
      o.fail("all-subsets word set differs on graph " + std::to_string(graphs));
  }
  if (o.pass) o.detail = std::to_string(graphs) + " digraphs, " + std::to_string(paths) + " path words, all +1";
  return o;
}

Outcome criterion_3() {
  Outcome o;
  Timer timer;
  auto g = undirected<CountRing>(10, petersen_edges());
  auto series = path_series_connected(g, 10);
  auto cc = cycle_counts(series);
  const std::map<std::size_t, long> expect = {{3, 0}, {4, 0}, {5, 12}, {6, 10}, {7, 0}, {8, 15}, {9, 20}, {10, 0}};
  for (auto [k, v] : expect)
    if (cc.undirected.at(k) != v)
      o.fail("length " + std::to_string(k) + ": " + to_decimal(cc.undirected.at(k)) + " != " + std::to_string(v));
  auto census = oracle::directed_cycle_census(g, 10);
  for (auto [k, v] : expect)
    if (k >= 3 && census[k] != static_cast<std::uint64_t>(2 * v)) o.fail("oracle census disagrees at " + std::to_string(k));
  auto h = hamiltonian_matrices(g);
  if (h.ham_cycles != 0) o.fail("ham_cycles = " + to_decimal(h.ham_cycles));
  const double s = timer.seconds();
  if (s >= 10) o.fail("took " + fmt_seconds(s));
  if (o.pass) o.detail = "{5:12, 6:10, 8:15, 9:20}, ham_cycles 0, " + fmt_seconds(s);
  return o;
}

Outcome criterion_4() {
  Outcome o;
  for (std::size_t n = 4; n <= 6; ++n) {
    auto g = undirected<CountRing>(n, complete_edges(n));
    auto h = hamiltonian_matrices(g);
    BigInt fact_n2 = 1;
    for (std::size_t i = 2; i <= n - 2; ++i) fact_n2 *= static_cast<unsigned long>(i);
    const BigInt fact_n1 = fact_n2 * static_cast<unsigned long>(n - 1);
    for (Vertex i = 0; i < n; ++i)
      for (Vertex j = 0; j < n; ++j)
        if (h.op(i, j) != (i == j ? BigInt(0) : fact_n2)) o.fail("K" + std::to_string(n) + " H_op entry wrong");
    if (h.ham_cycles != fact_n1) o.fail("K" + std::to_string(n) + " ham_cycles = " + to_decimal(h.ham_cycles));
    if (!(h == oracle::dfs_hamiltonian(g))) o.fail("K" + std::to_string(n) + " engine != oracle");
  }
  if (o.pass) o.detail = "K4, K5, K6";
  return o;
}

Outcome criterion_5() {
  Outcome o;
  std::size_t cases = 0;
  for (std::size_t n = 1; n <= 12; ++n)
    for (std::size_t v = 1; v <= n; ++v)
      for (std::size_t len = 0; len <= n; ++len) {
        cases += 2;
        if (ie_indicator(n, v, len, false) != (len + 1 == v ? 1 : 0)) o.fail("open n=" + std::to_string(n));
        if (ie_indicator(n, v, len, true) != (len == v ? 1 : 0)) o.fail("closed n=" + std::to_string(n));
      }
  if (o.pass) o.detail = std::to_string(cases) + " cases";
  return o;
}

Outcome criterion_6() {
  Outcome o;
  std::mt19937_64 rng(6);
  std::size_t checks = 0;
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 3 + trial % 6;
    auto g = Graph<CountRing>::with_default_weights(random_undirected(rng, n, 0.3 + 0.1 * (trial % 5)));
    auto cc = cycle_counts(path_series_connected(g, n));
    for (std::size_t k = 3; k <= n; ++k) {
      ++checks;
      if (perepechko_check(g, k) != cc.undirected.at(k))
        o.fail("graph " + std::to_string(trial) + " k=" + std::to_string(k));
    }
  }
  if (o.pass) o.detail = "50 undirected graphs, " + std::to_string(checks) + " (graph, k) pairs";
  return o;
}

Outcome criterion_7(bool ran_1_to_6) {
  Outcome o;
  if (!ran_1_to_6)
    for (auto f : {criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6}) f();
  const auto& c = self_check_counters();
  const auto performed = c.performed.load(), failed = c.failed.load();
  if (performed == 0) o.fail("no self-checks ran");
  if (failed != 0) o.fail(std::to_string(failed) + " self-check failures");
  if (o.pass) o.detail = std::to_string(performed) + " engine runs checked, 0 failures";
  return o;
}

Outcome criterion_8() {
  Outcome o;
  std::mt19937_64 rng(8);
  std::uint64_t sets = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + trial % 12;
    const double p = trial % 3 == 0 ? 0.1 : (trial % 3 == 1 ? 0.25 : 0.5);
    auto t = random_digraph(rng, n, p, 0.2);
    std::vector<VertexSet> seen;
    bool nbh_ok = true;
    enumerate_connected(t, n, [&](const ConnectedSetVisit& v) {
      seen.push_back(v.set);
      nbh_ok = nbh_ok && v.nbh_size == weak_neighborhood(t, v.set).size();
    });
    sets += seen.size();
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) o.fail("duplicate emission, graph " + std::to_string(trial));
    if (seen != oracle::filter_connected_sets(t, n)) o.fail("connected sets differ, graph " + std::to_string(trial));
    if (!nbh_ok) o.fail("wrong |N(C)|, graph " + std::to_string(trial));
    std::vector<VertexSet> dom;
    enumerate_connected_dominating(t, [&](const ConnectedSetVisit& v) { dom.push_back(v.set); });
    std::sort(dom.begin(), dom.end());
    if (dom != oracle::filter_connected_dominating_sets(t)) o.fail("dominating sets differ, graph " + std::to_string(trial));
  }
  if (o.pass) o.detail = "100 graphs, " + std::to_string(sets) + " connected sets";
  return o;
}

/// Count report with timing off; the run block's "threads" field is the only
/// part allowed to differ between worker counts.
std::string report_for(const std::string& text, bool directed, std::size_t threads, Kind kind) {
  RunConfig cfg;
  cfg.timing = false;
  cfg.threads = threads;
  cfg.kind = kind;
  auto j = json::parse(cmd_count(load_graph(text, directed, RingKind::BigInt), cfg));
  j["run"].erase("threads");
  return j.dump();
}

Outcome criterion_9() {
  Outcome o;
  std::vector<std::pair<std::string, bool>> inputs;
  for (const auto& t : digraph_corpus()) inputs.emplace_back(edge_text(t), true);
  std::string petersen;
  for (auto [u, v] : petersen_edges()) petersen += std::to_string(u) + " " + std::to_string(v) + "\n";
  inputs.emplace_back(petersen, false);
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    const auto& [text, directed] = inputs[i];
    const auto base = report_for(text, directed, 1, Kind::Both);
    for (std::size_t threads : {2u, 8u})
      if (report_for(text, directed, threads, Kind::Both) != base)
        o.fail("input " + std::to_string(i) + " differs with " + std::to_string(threads) + " workers");
  }
  if (o.pass) o.detail = std::to_string(inputs.size()) + " inputs identical at 1, 2, 8 workers";
  return o;
}

Outcome criterion_10() {
  Outcome o;
  std::mt19937_64 rng(100);
  const std::size_t n = 100;
  auto t = random_digraph(rng, n, 4.0 / 99.0, 0.0);
  std::cout << "  info: ER digraph n=100, " << t.arc_count() << " arcs, L=10, deadline 120 s\n";
  {
    Timer timer;
    auto prefix = count_connected_by_size(t, 6);
    std::cout << "  info: connected sets by size:";
    for (std::size_t s = 1; s < prefix.size(); ++s) std::cout << " " << s << ":" << prefix[s];
    std::cout << " (" << fmt_seconds(timer.seconds()) << ")\n";
  }
  RunConfig cfg;
  cfg.max_length = 10;
  cfg.kind = Kind::Both;
  cfg.deadline_seconds = 120;
  Timer timer;
  try {
    auto j = json::parse(cmd_count(load_graph(edge_text(t), true, RingKind::BigInt), cfg));
    const double s = timer.seconds();
    const auto visited = j["run"]["visited_subgraphs"].get<std::uint64_t>();
    std::uint64_t total = 0;
    for (auto c : count_connected_by_size(t, 11)) total += c;
    if (visited != total) o.fail("visited " + std::to_string(visited) + " != " + std::to_string(total));
    if (s >= 120) o.fail("took " + fmt_seconds(s));
    if (o.pass) o.detail = std::to_string(visited) + " connected sets visited (vs 2^100 subsets), " + fmt_seconds(s);
  } catch (const CancelledError&) {
    o.fail("did not finish within 120 s (cancelled after " + fmt_seconds(timer.seconds()) + ")");
  }
  return o;
}

const char* kTitles[] = {
    "",
    "triple equivalence connected == all-subsets == oracle",
    "word-ring path words match oracle, coefficients +1",
    "Petersen cycle census and Hamiltonian cycles",
    "complete graphs K4-K6 Hamiltonian closed forms",
    "inclusion-exclusion indicator identities",
    "undirected cycle subset formula matches engine",
    "empty-path constant self-check never fires",
    "connected / dominating set enumeration exactly once",
    "deterministic output at 1, 2, 8 workers",
    "sparse n=100 digraph, L=10, under 120 s",
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria"};
  int only = 0;
  app.add_option("--criterion", only, "Run a single criterion")->check(CLI::Range(1, 10));
  CLI11_PARSE(app, argc, argv);

  int failures = 0;
  bool ran_1_to_6 = true;
  for (int c = 1; c <= 10; ++c) {
    if (only != 0 && c != only) {
      if (c <= 6) ran_1_to_6 = false;
      continue;
    }
    Outcome o;
    try {
      switch (c) {
        case 1: o = criterion_1(); break;
        case 2: o = criterion_2(); break;
        case 3: o = criterion_3(); break;
        case 4: o = criterion_4(); break;
        case 5: o = criterion_5(); break;
        case 6: o = criterion_6(); break;
        case 7: o = criterion_7(ran_1_to_6); break;
        case 8: o = criterion_8(); break;
        case 9: o = criterion_9(); break;
        case 10: o = criterion_10(); break;
      }
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    std::cout << "criterion " << c << ": " << (o.pass ? "PASS" : "FAIL") << "  " << kTitles[c] << "  [" << o.detail
              << "]" << std::endl;
    failures += o.pass ? 0 : 1;
  }
  return failures == 0 ? 0 : 1;
}
