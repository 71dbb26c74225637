#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "simplepaths/error.hpp"
#include "simplepaths/ring.hpp"
#include "simplepaths/vertex_set.hpp"

namespace simplepaths {

/// How the arcs were obtained. Undirected inputs are stored as bidirected digraphs.
enum class Orientation { Directed, UndirectedExpanded };

std::string_view orientation_name(Orientation o);

struct Arc {
  Vertex src;
  Vertex dst;
  friend bool operator==(const Arc&, const Arc&) = default;
};

/// Immutable arc structure of a digraph: at most one arc per ordered pair,
/// self-loops allowed. Weak adjacency is the symmetric closure minus self.
class Topology {
 public:
  Topology(std::size_t n, std::vector<Arc> arcs, Orientation orientation = Orientation::Directed);

  std::size_t vertex_count() const noexcept { return n_; }
  std::size_t arc_count() const noexcept { return arcs_.size(); }
  Orientation orientation() const noexcept { return orientation_; }
  const std::vector<Arc>& arcs() const noexcept { return arcs_; }
  const Arc& arc(ArcId id) const { return arcs_.at(id); }

  std::span<const Vertex> out_neighbors(Vertex v) const { return span_of(out_off_, out_dst_, v); }
  std::span<const Vertex> in_neighbors(Vertex v) const { return span_of(in_off_, in_src_, v); }
  std::span<const Vertex> weak_neighbors(Vertex v) const { return span_of(weak_off_, weak_adj_, v); }
  std::optional<ArcId> find_arc(Vertex src, Vertex dst) const;
  bool has_self_loop(Vertex v) const { return find_arc(v, v).has_value(); }

 private:
  static std::span<const Vertex> span_of(const std::vector<std::size_t>& off, const std::vector<Vertex>& data,
                                         Vertex v) {
    return {data.data() + off.at(v), data.data() + off.at(v + 1)};
  }

  std::size_t n_;
  Orientation orientation_;
  std::vector<Arc> arcs_;
  std::vector<std::size_t> out_off_, in_off_, weak_off_;
  std::vector<Vertex> out_dst_, in_src_, weak_adj_;
  std::vector<ArcId> out_arc_;
};

/// Topology plus one ring element per arc (the labeled adjacency matrix W).
template <Ring R>
class Graph : public Topology {
 public:
  using value_type = typename R::value_type;

  Graph(Topology topology, std::vector<value_type> weights) : Topology(std::move(topology)), weights_(std::move(weights)) {
    if (weights_.size() != arc_count()) throw UsageError("Graph: one weight per arc required");
  }

  /// Every arc gets its ring default weight (one; the arc's own letter for words).
  static Graph with_default_weights(Topology topology) {
    std::vector<value_type> w;
    w.reserve(topology.arc_count());
    for (ArcId a = 0; a < topology.arc_count(); ++a) w.push_back(R::arc_weight(std::nullopt, a));
    return Graph(std::move(topology), std::move(w));
  }

  const value_type& weight(ArcId id) const { return weights_.at(id); }
  const std::vector<value_type>& weights() const noexcept { return weights_; }

  /// W(src, dst), or ring zero when the arc is absent.
  value_type entry(Vertex src, Vertex dst) const {
    auto a = find_arc(src, dst);
    return a ? weights_[*a] : R::zero();
  }

 private:
  std::vector<value_type> weights_;
};

/// Dense principal submatrix of W on S; position i stands for global vertex index_map[i].
template <Ring R>
struct LocalMatrix {
  using value_type = typename R::value_type;

  std::vector<Vertex> index_map;
  std::vector<value_type> entries;  // row-major k x k

  std::size_t dim() const noexcept { return index_map.size(); }
  value_type& at(std::size_t i, std::size_t j) { return entries[i * dim() + j]; }
  const value_type& at(std::size_t i, std::size_t j) const { return entries[i * dim() + j]; }
};

/// One syntactic edge-list line before ring interpretation.
struct EdgeRecord {
  Vertex src;
  Vertex dst;
  std::optional<std::string> weight;
  std::size_t line;
};

struct EdgeList {
  std::size_t n = 0;
  bool has_header = false;
  std::vector<EdgeRecord> edges;
};

/// Tokenizes the edge-list text format. Throws ParseError.
EdgeList scan_edge_list(std::string_view text);

/// Arcs implied by an edge list: directed lines verbatim, undirected lines
/// expanded to both orientations (one arc for a self-loop). Each arc keeps
/// the index of its source record. Throws ParseError on duplicate pairs.
std::vector<std::pair<Arc, std::size_t>> expand_arcs(const EdgeList& list, bool directed);

template <Ring R>
Graph<R> parse_edge_list(std::string_view text, bool directed) {
  EdgeList list = scan_edge_list(text);
  auto arcs = expand_arcs(list, directed);
  std::vector<Arc> plain;
  std::vector<typename R::value_type> weights;
  plain.reserve(arcs.size());
  weights.reserve(arcs.size());
  for (const auto& [arc, rec] : arcs) {
    const EdgeRecord& r = list.edges[rec];
    auto id = static_cast<ArcId>(plain.size());
    plain.push_back(arc);
    try {
      weights.push_back(R::arc_weight(r.weight ? std::optional<std::string_view>(*r.weight) : std::nullopt, id));
    } catch (const std::invalid_argument& e) {
      throw ParseError(r.line, std::string("bad weight for ring ") + std::string(R::name) + ": " + e.what());
    }
  }
  return Graph<R>(Topology(list.n, std::move(plain), directed ? Orientation::Directed : Orientation::UndirectedExpanded),
                  std::move(weights));
}

template <Ring R>
LocalMatrix<R> restrict_to(const Graph<R>& g, const VertexSet& s) {
  if (s.empty()) throw UsageError("restrict: empty vertex set");
  LocalMatrix<R> m;
  m.index_map = s.to_vector();
  if (m.index_map.back() >= g.vertex_count()) throw UsageError("restrict: vertex outside graph");
  const std::size_t k = m.dim();
  m.entries.assign(k * k, R::zero());
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      if (auto a = g.find_arc(m.index_map[i], m.index_map[j])) m.at(i, j) = g.weight(*a);
  return m;
}

/// N(C): vertices outside C with an arc to or from C.
VertexSet weak_neighborhood(const Topology& g, const VertexSet& c);

/// C together with N(C) covers every vertex.
bool is_dominating(const Topology& g, const VertexSet& c);

/// Weakly connected components of the induced subgraph G(S), ordered by minimum vertex.
std::vector<VertexSet> weakly_connected_components(const Topology& g, const VertexSet& s);

}  // namespace simplepaths
