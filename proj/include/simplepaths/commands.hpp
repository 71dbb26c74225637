#pragma once

// Report-producing commands shared by the C API and the CLI.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "simplepaths/graph.hpp"
#include "simplepaths/ring.hpp"
#include "simplepaths/subgraph_enum.hpp"

namespace simplepaths {

enum class RingKind { BigInt, Float, Word };
enum class Method { Connected, AllSubsets, Oracle };
enum class Kind { Paths, Cycles, Both, Hamiltonian };
enum class OutputFormat { Json, Csv };

std::string_view to_string(RingKind r);
std::string_view to_string(Method m);
std::string_view to_string(Kind k);
std::optional<RingKind> parse_ring_kind(std::string_view s);
std::optional<Method> parse_method(std::string_view s);
std::optional<Kind> parse_kind(std::string_view s);

using AnyGraph = std::variant<Graph<CountRing>, Graph<FloatRing>, Graph<WordRing>>;

AnyGraph load_graph(std::string_view text, bool directed, RingKind ring);
RingKind ring_of(const AnyGraph& g);
const Topology& topology_of(const AnyGraph& g);

struct RunConfig {
  std::size_t max_length = 0;  // 0: use n
  Kind kind = Kind::Both;
  Method method = Method::Connected;
  OutputFormat format = OutputFormat::Json;
  std::size_t threads = 1;
  std::size_t reference_limit = kDefaultReferenceLimit;
  std::size_t max_size = 0;      // subgraphs: 0 means n
  std::size_t list_limit = 0;    // subgraphs: list sets when the total is at most this
  bool dominating = false;       // subgraphs: also count connected dominating sets
  std::size_t word_path_cap = 10000;  // word ring: omit tables holding more terms
  bool timing = true;
  double deadline_seconds = 0;  // 0: no deadline
  std::vector<Method> bench_methods = {Method::Connected, Method::AllSubsets, Method::Oracle};
  bool inject_mismatch = false;  // bench: corrupt the last method's result (testing the mismatch path)
};

/// Rejects configurations that can never run (capabilities, limits).
void validate(const AnyGraph& g, const RunConfig& cfg);

std::string cmd_count(const AnyGraph& g, const RunConfig& cfg);
std::string cmd_hamiltonian(const AnyGraph& g, const RunConfig& cfg);
std::string cmd_subgraphs(const AnyGraph& g, const RunConfig& cfg);

struct BenchOutcome {
  std::string report;
  bool consistent = true;
};
BenchOutcome cmd_bench(const AnyGraph& g, const RunConfig& cfg);

}  // namespace simplepaths
