#include "simplepaths/commands.hpp"

#include <chrono>
#include <cmath>
#include <condition_variable>
#include <cstdio>
#include <mutex>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "simplepaths/oracle.hpp"
#include "simplepaths/series.hpp"

namespace simplepaths {

using json = nlohmann::ordered_json;

std::string_view to_string(RingKind r) {
  switch (r) {
    case RingKind::BigInt: return CountRing::name;
    case RingKind::Float: return FloatRing::name;
    case RingKind::Word: return WordRing::name;
  }
  return "?";
}

std::string_view to_string(Method m) {
  switch (m) {
    case Method::Connected: return "connected";
    case Method::AllSubsets: return "all-subsets";
    case Method::Oracle: return "oracle";
  }
  return "?";
}

std::string_view to_string(Kind k) {
  switch (k) {
    case Kind::Paths: return "paths";
    case Kind::Cycles: return "cycles";
    case Kind::Both: return "both";
    case Kind::Hamiltonian: return "hamiltonian";
  }
  return "?";
}

std::optional<RingKind> parse_ring_kind(std::string_view s) {
  for (auto r : {RingKind::BigInt, RingKind::Float, RingKind::Word})
    if (to_string(r) == s) return r;
  return std::nullopt;
}

std::optional<Method> parse_method(std::string_view s) {
  for (auto m : {Method::Connected, Method::AllSubsets, Method::Oracle})
    if (to_string(m) == s) return m;
  return std::nullopt;
}

std::optional<Kind> parse_kind(std::string_view s) {
  for (auto k : {Kind::Paths, Kind::Cycles, Kind::Both, Kind::Hamiltonian})
    if (to_string(k) == s) return k;
  return std::nullopt;
}

AnyGraph load_graph(std::string_view text, bool directed, RingKind ring) {
  switch (ring) {
    case RingKind::BigInt: return parse_edge_list<CountRing>(text, directed);
    case RingKind::Float: return parse_edge_list<FloatRing>(text, directed);
    case RingKind::Word: return parse_edge_list<WordRing>(text, directed);
  }
  throw UsageError("unknown ring");
}

RingKind ring_of(const AnyGraph& g) { return static_cast<RingKind>(g.index()); }

const Topology& topology_of(const AnyGraph& g) {
  return std::visit([](const auto& gr) -> const Topology& { return gr; }, g);
}

namespace {

/// Requests cancellation once the deadline passes.
class Watchdog {
 public:
  explicit Watchdog(double seconds) {
    if (seconds <= 0) return;
    thread_ = std::thread([this, seconds] {
      std::unique_lock lock(mu_);
      if (!cv_.wait_for(lock, std::chrono::duration<double>(seconds), [this] { return done_; })) token_.request();
    });
  }
  ~Watchdog() {
    {
      std::lock_guard lock(mu_);
      done_ = true;
    }
    cv_.notify_all();
    if (thread_.joinable()) thread_.join();
  }
  const CancelToken* token() const { return thread_.joinable() ? &token_ : nullptr; }

 private:
  CancelToken token_;
  std::mutex mu_;
  std::condition_variable cv_;
  bool done_ = false;
  std::thread thread_;
};

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string format_float(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string path_string(const Topology& g, const Word& w) {
  if (w.empty()) return "";
  std::string s = std::to_string(g.arc(w.front()).src);
  for (ArcId a : w) s += ">" + std::to_string(g.arc(a).dst);
  return s;
}

json value_json(const Topology&, const BigInt& v) { return to_decimal(v); }
json value_json(const Topology&, double v) { return format_float(v); }
json value_json(const Topology& g, const WordSum& v) {
  json terms = json::array();
  for (const auto& t : v.terms()) terms.push_back(json{{"path", path_string(g, t.word)}, {"coeff", to_decimal(t.coeff)}});
  return terms;
}

std::string value_text(const Topology&, const BigInt& v) { return to_decimal(v); }
std::string value_text(const Topology&, double v) { return format_float(v); }
std::string value_text(const Topology& g, const WordSum& v) {
  std::string s;
  for (const auto& t : v.terms()) {
    if (!s.empty()) s += " ";
    s += to_decimal(t.coeff) + "*" + path_string(g, t.word);
  }
  return s.empty() ? "0" : s;
}

/// Scalar total of a ring value: itself, or the coefficient sum of a word sum.
BigInt total_of(const BigInt& v) { return v; }
double total_of(double v) { return v; }
BigInt total_of(const WordSum& v) {
  BigInt s = 0;
  for (const auto& t : v.terms()) s += t.coeff;
  return s;
}
json total_json(const BigInt& v) { return to_decimal(v); }
json total_json(double v) { return format_float(v); }

std::size_t term_count(const BigInt&) { return 1; }
std::size_t term_count(double) { return 1; }
std::size_t term_count(const WordSum& v) { return v.terms().size(); }

json graph_json(const Topology& g) {
  return json{{"n", g.vertex_count()}, {"m", g.arc_count()}, {"orientation", orientation_name(g.orientation())}};
}

std::size_t resolve_cap(const Topology& g, const RunConfig& cfg) {
  const std::size_t cap = cfg.max_length == 0 ? g.vertex_count() : cfg.max_length;
  if (cap < 1 || cap > g.vertex_count())
    throw UsageError("--max-length must lie in [1, " + std::to_string(g.vertex_count()) + "]");
  return cap;
}

template <Ring R>
PathSeriesResult<R> run_series(const Graph<R>& g, std::size_t cap, Method method, const EngineOptions& opt,
                               std::optional<std::uint64_t>& visited) {
  RunStats stats;
  switch (method) {
    case Method::Connected: {
      auto res = path_series_connected(g, cap, opt, &stats);
      visited = stats.visited_sets;
      return res;
    }
    case Method::AllSubsets: {
      auto res = path_series_all_subsets(g, cap, opt, &stats);
      visited = stats.visited_sets;
      return res;
    }
    case Method::Oracle:
      visited.reset();
      return oracle::dfs_path_series(g, cap);
  }
  throw UsageError("unknown method");
}

template <Ring R>
json open_totals_json(const PathSeriesResult<R>& res) {
  using T = decltype(total_of(std::declval<typename R::value_type>()));
  std::vector<T> totals(res.cap + 1, T(0));
  for (const auto& [key, p] : res.open)
    for (std::size_t k = 1; k <= res.cap; ++k) totals[k] += total_of(p[k]);
  json out = json::object();
  for (std::size_t k = 1; k <= res.cap; ++k) out[std::to_string(k)] = total_json(totals[k]);
  return out;
}

template <Ring R>
json cycles_json(const PathSeriesResult<R>& res) {
  const auto counts = cycle_counts(res);
  auto table = [](const auto& m) {
    json out = json::object();
    for (const auto& [k, v] : m) out[std::to_string(k)] = total_json(v);
    return out;
  };
  json out{{"raw_trace", table(counts.raw_trace)}, {"directed", table(counts.directed)}};
  if (counts.orientation == Orientation::UndirectedExpanded) {
    out["undirected"] = table(counts.undirected);
    out["degenerate_lengths"] = counts.degenerate_lengths;
  }
  return out;
}

template <Ring R>
std::size_t series_terms(const PathSeriesResult<R>& res) {
  std::size_t total = 0;
  for (const auto& [key, p] : res.open)
    for (const auto& c : p.coeffs()) total += R::is_zero(c) ? 0 : term_count(c);
  for (const auto& [key, p] : res.closed)
    for (const auto& c : p.coeffs()) total += R::is_zero(c) ? 0 : term_count(c);
  return total;
}

template <Ring R>
std::string count_json(const Graph<R>& g, const PathSeriesResult<R>& res, const RunConfig& cfg,
                       std::optional<std::uint64_t> visited, double seconds) {
  const bool want_open = cfg.kind != Kind::Cycles;
  const bool want_closed = cfg.kind != Kind::Paths;
  const bool tables = !std::is_same_v<R, WordRing> || series_terms(res) <= cfg.word_path_cap;

  json report{{"command", "count"}, {"graph", graph_json(g)}, {"ring", std::string(R::name)},
              {"max_length", res.cap}, {"kind", std::string(to_string(cfg.kind))}};
  if (want_open) {
    report["open_totals"] = open_totals_json(res);
    if (tables) {
      json open = json::array();
      for (const auto& [key, p] : res.open)
        for (std::size_t k = 1; k <= res.cap; ++k)
          if (!R::is_zero(p[k])) open.push_back(json::array({key.first, key.second, k, value_json(g, p[k])}));
      report["open"] = std::move(open);
    }
  }
  if (want_closed) {
    if (tables) {
      json closed = json::array();
      for (const auto& [v, p] : res.closed)
        for (std::size_t k = 1; k <= res.cap; ++k)
          if (!R::is_zero(p[k])) closed.push_back(json::array({v, k, value_json(g, p[k])}));
      report["closed"] = std::move(closed);
    }
    if constexpr (R::kDivision) report["cycles"] = cycles_json(res);
  }
  if (!tables) report["tables_omitted"] = "word terms exceed --word-path-cap " + std::to_string(cfg.word_path_cap);

  json run{{"method", std::string(to_string(cfg.method))}, {"threads", cfg.threads}};
  run["visited_subgraphs"] = visited ? json(*visited) : json(nullptr);
  if (cfg.timing) run["wall_time_s"] = seconds;
  report["run"] = std::move(run);
  return report.dump(2) + "\n";
}

template <Ring R>
std::string count_csv(const Graph<R>& g, const PathSeriesResult<R>& res, const RunConfig& cfg) {
  std::ostringstream os;
  os << "table,i,j,k,value\n";
  if (cfg.kind != Kind::Cycles)
    for (const auto& [key, p] : res.open)
      for (std::size_t k = 1; k <= res.cap; ++k)
        if (!R::is_zero(p[k])) os << "open," << key.first << ',' << key.second << ',' << k << ',' << value_text(g, p[k]) << '\n';
  if (cfg.kind != Kind::Paths) {
    for (const auto& [v, p] : res.closed)
      for (std::size_t k = 1; k <= res.cap; ++k)
        if (!R::is_zero(p[k])) os << "closed," << v << ',' << v << ',' << k << ',' << value_text(g, p[k]) << '\n';
    if constexpr (R::kDivision) {
      const auto counts = cycle_counts(res);
      for (const auto& [k, v] : counts.raw_trace) os << "raw_trace,,," << k << ',' << value_text(g, v) << '\n';
      for (const auto& [k, v] : counts.directed) os << "directed,,," << k << ',' << value_text(g, v) << '\n';
      for (const auto& [k, v] : counts.undirected) os << "undirected,,," << k << ',' << value_text(g, v) << '\n';
    }
  }
  return os.str();
}

template <Ring R>
std::string count_impl(const Graph<R>& g, const RunConfig& cfg) {
  const std::size_t cap = resolve_cap(g, cfg);
  Watchdog watchdog(cfg.deadline_seconds);
  EngineOptions opt{cfg.threads, cfg.reference_limit, watchdog.token()};
  Stopwatch clock;
  std::optional<std::uint64_t> visited;
  auto res = run_series(g, cap, cfg.method, opt, visited);
  const double seconds = clock.seconds();
  return cfg.format == OutputFormat::Csv ? count_csv(g, res, cfg) : count_json(g, res, cfg, visited, seconds);
}

template <Ring R>
HamiltonianResult<R> hamiltonian_from_series(const PathSeriesResult<R>& res) {
  const std::size_t n = res.n;
  std::vector<typename R::value_type> h_op(n * n, R::zero());
  if (n == 1) {
    auto it = res.closed.find(0);
    return make_hamiltonian_result<R>(1, std::move(h_op), it == res.closed.end() ? R::zero() : it->second[1]);
  }
  for (const auto& [key, p] : res.open) h_op[key.first * n + key.second] = p[n - 1];
  return make_hamiltonian_result<R>(n, std::move(h_op), cycle_counts(res).directed.at(n));
}

template <Ring R>
std::string hamiltonian_impl(const Graph<R>& g, const RunConfig& cfg) {
  if constexpr (!R::kDivision) {
    throw CapabilityError("Hamiltonian counts are not available in ring '" + std::string(R::name) + "'");
  } else {
    const std::size_t n = g.vertex_count();
    Watchdog watchdog(cfg.deadline_seconds);
    EngineOptions opt{cfg.threads, cfg.reference_limit, watchdog.token()};
    Stopwatch clock;
    HamiltonianResult<R> ham;
    std::optional<std::uint64_t> visited;
    switch (cfg.method) {
      case Method::Connected: {
        RunStats stats;
        ham = hamiltonian_matrices(g, opt, &stats);
        visited = stats.visited_sets;
        break;
      }
      case Method::AllSubsets:
        ham = hamiltonian_from_series(run_series(g, n, Method::AllSubsets, opt, visited));
        break;
      case Method::Oracle:
        ham = oracle::dfs_hamiltonian(g);
        break;
    }
    const double seconds = clock.seconds();

    if (cfg.format == OutputFormat::Csv) {
      std::ostringstream os;
      os << "table,i,j,value\n";
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (i != j && !R::is_zero(ham.op(i, j))) os << "h_op," << i << ',' << j << ',' << value_text(g, ham.op(i, j)) << '\n';
      os << "ham_cycles,,," << value_text(g, ham.ham_cycles) << '\n';
      return os.str();
    }
    json entries = json::array();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j && !R::is_zero(ham.op(i, j))) entries.push_back(json::array({i, j, value_json(g, ham.op(i, j))}));
    json report{{"command", "hamiltonian"}, {"graph", graph_json(g)}, {"ring", std::string(R::name)},
                {"h_op", std::move(entries)}, {"ham_cycles", value_json(g, ham.ham_cycles)}};
    if (g.orientation() == Orientation::UndirectedExpanded && n >= 3)
      report["ham_cycles_undirected"] =
          value_json(g, detail::divide_or_fail<R>(ham.ham_cycles, BigInt(2), "undirected Hamiltonian cycles"));
    json run{{"method", std::string(to_string(cfg.method))}, {"threads", cfg.threads}};
    run[cfg.method == Method::AllSubsets ? "visited_subgraphs" : "dominating_sets_visited"] =
        visited ? json(*visited) : json(nullptr);
    if (cfg.timing) run["wall_time_s"] = seconds;
    report["run"] = std::move(run);
    return report.dump(2) + "\n";
  }
}

bool approx_equal(double a, double b) { return std::abs(a - b) <= 1e-9 * std::max({1.0, std::abs(a), std::abs(b)}); }

template <Ring R>
bool series_match(const PathSeriesResult<R>& a, const PathSeriesResult<R>& b) {
  if constexpr (R::kExact) {
    return a == b;
  } else {
    // Keys may differ where one side rounds to an exact zero; compare densely.
    if (a.n != b.n || a.cap != b.cap) return false;
    auto coeff = [](const auto& map, const auto& key, std::size_t k) {
      auto it = map.find(key);
      return it == map.end() ? 0.0 : it->second[k];
    };
    for (Vertex i = 0; i < a.n; ++i)
      for (std::size_t k = 1; k <= a.cap; ++k) {
        if (!approx_equal(coeff(a.closed, i, k), coeff(b.closed, i, k))) return false;
        for (Vertex j = 0; j < a.n; ++j)
          if (i != j && !approx_equal(coeff(a.open, std::make_pair(i, j), k), coeff(b.open, std::make_pair(i, j), k)))
            return false;
      }
    return true;
  }
}

template <Ring R>
void corrupt(PathSeriesResult<R>& res) {
  auto [it, fresh] = res.closed.try_emplace(0, TruncPoly<R>(res.cap));
  // A multiple of 2 * cap keeps every cycle normalization exact.
  R::add_to(it->second[res.cap], R::scale(R::one(), BigInt(static_cast<unsigned long>(2 * res.cap))));
}

template <Ring R>
BenchOutcome bench_impl(const Graph<R>& g, const RunConfig& cfg) {
  const std::size_t cap = resolve_cap(g, cfg);
  if (cfg.bench_methods.empty()) throw UsageError("bench needs at least one method");
  Watchdog watchdog(cfg.deadline_seconds);
  EngineOptions opt{cfg.threads, cfg.reference_limit, watchdog.token()};

  json methods = json::array();
  std::optional<PathSeriesResult<R>> reference;
  std::string reference_name;
  bool consistent = true;
  std::vector<std::string> mismatches;
  for (std::size_t idx = 0; idx < cfg.bench_methods.size(); ++idx) {
    const Method m = cfg.bench_methods[idx];
    json entry{{"method", std::string(to_string(m))}};
    if (m == Method::AllSubsets && g.vertex_count() > cfg.reference_limit) {
      entry["skipped"] = "n exceeds the reference limit " + std::to_string(cfg.reference_limit);
      methods.push_back(std::move(entry));
      continue;
    }
    Stopwatch clock;
    std::optional<std::uint64_t> visited;
    auto res = run_series(g, cap, m, opt, visited);
    const double seconds = clock.seconds();
    if (cfg.inject_mismatch && idx + 1 == cfg.bench_methods.size()) corrupt(res);
    entry["visited_subgraphs"] = visited ? json(*visited) : json(nullptr);
    if (cfg.timing) entry["wall_time_s"] = seconds;
    entry["open_totals"] = open_totals_json(res);
    if constexpr (R::kDivision) entry["cycles"] = cycles_json(res);
    methods.push_back(std::move(entry));
    if (!reference) {
      reference = std::move(res);
      reference_name = to_string(m);
    } else if (!series_match(*reference, res)) {
      consistent = false;
      mismatches.push_back(std::string(to_string(m)) + " differs from " + reference_name);
    }
  }

  const std::size_t max_size = std::min(cap + 1, g.vertex_count());
  const auto by_size = count_connected_by_size(g, max_size);
  json sizes = json::object();
  std::uint64_t total = 0;
  for (std::size_t s = 1; s <= max_size; ++s) {
    sizes[std::to_string(s)] = by_size[s];
    total += by_size[s];
  }
  json report{{"command", "bench"}, {"graph", graph_json(g)}, {"ring", std::string(R::name)}, {"max_length", cap},
              {"threads", cfg.threads}, {"methods", std::move(methods)},
              {"connected_sets_by_size", std::move(sizes)}, {"connected_sets_total", total},
              {"consistent", consistent}};
  if (!consistent) report["mismatches"] = mismatches;
  return {report.dump(2) + "\n", consistent};
}

}  // namespace

void validate(const AnyGraph& g, const RunConfig& cfg) {
  if (cfg.threads < 1) throw UsageError("--threads must be at least 1");
  if (ring_of(g) == RingKind::Word && cfg.kind == Kind::Hamiltonian)
    throw CapabilityError("the word ring cannot produce Hamiltonian counts (requires exact division)");
  if (cfg.reference_limit > kHardReferenceLimit)
    throw LimitError("--limit-n may not exceed " + std::to_string(kHardReferenceLimit));
  const std::size_t n = topology_of(g).vertex_count();
  if (cfg.method == Method::AllSubsets && n > cfg.reference_limit)
    throw LimitError("all-subsets method limited to n <= " + std::to_string(cfg.reference_limit) +
                     " (graph has n = " + std::to_string(n) + ")");
  if (cfg.max_length != 0 && (cfg.max_length < 1 || cfg.max_length > n))
    throw UsageError("--max-length must lie in [1, " + std::to_string(n) + "]");
}

std::string cmd_count(const AnyGraph& g, const RunConfig& cfg) {
  validate(g, cfg);
  if (cfg.kind == Kind::Hamiltonian) return cmd_hamiltonian(g, cfg);
  return std::visit([&](const auto& gr) { return count_impl(gr, cfg); }, g);
}

std::string cmd_hamiltonian(const AnyGraph& g, const RunConfig& cfg) {
  RunConfig c = cfg;
  c.kind = Kind::Hamiltonian;
  validate(g, c);
  return std::visit([&](const auto& gr) { return hamiltonian_impl(gr, c); }, g);
}

std::string cmd_subgraphs(const AnyGraph& g, const RunConfig& cfg) {
  const Topology& topo = topology_of(g);
  const std::size_t n = topo.vertex_count();
  const std::size_t max_size = cfg.max_size == 0 ? n : cfg.max_size;
  if (max_size < 1 || max_size > n) throw UsageError("--max-size must lie in [1, " + std::to_string(n) + "]");
  Watchdog watchdog(cfg.deadline_seconds);
  Stopwatch clock;
  std::vector<std::uint64_t> counts(max_size + 1, 0);
  std::vector<std::vector<Vertex>> listing;
  bool listing_overflow = false;
  ConnectedSetEnumerator enumerator(topo, max_size, false, watchdog.token());
  enumerator.run([&](const ConnectedSetVisit& v) {
    ++counts[v.members.size()];
    if (cfg.list_limit > 0 && !listing_overflow) {
      if (listing.size() == cfg.list_limit) {
        listing_overflow = true;
        listing.clear();
      } else {
        listing.push_back(v.set.to_vector());
      }
    }
  });
  std::optional<std::uint64_t> dominating;
  if (cfg.dominating) dominating = ConnectedSetEnumerator(topo, n, true, watchdog.token()).run([](const ConnectedSetVisit&) {});
  const double seconds = clock.seconds();

  std::uint64_t total = 0;
  for (std::size_t s = 1; s <= max_size; ++s) total += counts[s];
  if (cfg.format == OutputFormat::Csv) {
    std::ostringstream os;
    os << "size,count\n";
    for (std::size_t s = 1; s <= max_size; ++s) os << s << ',' << counts[s] << '\n';
    return os.str();
  }
  json by_size = json::object();
  for (std::size_t s = 1; s <= max_size; ++s) by_size[std::to_string(s)] = counts[s];
  json report{{"command", "subgraphs"}, {"graph", graph_json(topo)}, {"max_size", max_size},
              {"counts", std::move(by_size)}, {"total", total}};
  if (dominating) report["connected_dominating_total"] = *dominating;
  if (cfg.list_limit > 0 && !listing_overflow) report["sets"] = listing;
  if (cfg.timing) report["wall_time_s"] = seconds;
  return report.dump(2) + "\n";
}

BenchOutcome cmd_bench(const AnyGraph& g, const RunConfig& cfg) {
  if (cfg.threads < 1) throw UsageError("--threads must be at least 1");
  return std::visit([&](const auto& gr) { return bench_impl(gr, cfg); }, g);
}

}  // namespace simplepaths
