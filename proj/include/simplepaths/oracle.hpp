#pragma once

// Brute-force ground truth. Walks vertex-distinct extensions depth first and
// shares nothing with the series engine except Graph, Ring and result types.

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "simplepaths/graph.hpp"
#include "simplepaths/series.hpp"

namespace simplepaths::oracle {

struct SimplePath {
  std::vector<Vertex> vertices;  // distinct; a cycle does not repeat its start
  Word word;                     // arc ids in traversal order
  bool closed = false;
  std::size_t length() const { return word.size(); }
  Vertex source() const { return vertices.front(); }
  Vertex target() const { return closed ? vertices.front() : vertices.back(); }
};

/// Calls visit for every open simple path of length 1..max_len and every
/// simple cycle of length 1..max_len, once per starting vertex.
void for_each_simple_path(const Topology& g, std::size_t max_len, const std::function<void(const SimplePath&)>& visit);

std::vector<SimplePath> simple_paths(const Topology& g, std::size_t max_len);

/// Directed simple cycles anchored at their minimum vertex (one per cycle).
std::vector<SimplePath> canonical_cycles(const Topology& g, std::size_t max_len);

/// Directed cycle counts by length from canonical_cycles.
std::map<std::size_t, std::uint64_t> directed_cycle_census(const Topology& g, std::size_t max_len);

template <Ring R>
PathSeriesResult<R> dfs_path_series(const Graph<R>& g, std::size_t cap) {
  PathSeriesResult<R> out;
  out.n = g.vertex_count();
  out.cap = cap;
  out.orientation = g.orientation();
  const std::size_t n = g.vertex_count();
  std::vector<bool> on_path(n, false);

  // prefix: ordered product of the arc weights walked so far.
  std::function<void(Vertex, Vertex, std::size_t, const typename R::value_type&)> walk =
      [&](Vertex start, Vertex at, std::size_t len, const typename R::value_type& prefix) {
        for (Vertex next : g.out_neighbors(at)) {
          const auto& w = g.weight(*g.find_arc(at, next));
          if (next == start) {
            auto [it, fresh] = out.closed.try_emplace(start, TruncPoly<R>(cap));
            R::add_product(it->second[len + 1], prefix, w);
            continue;
          }
          if (on_path[next]) continue;
          auto extended = R::mul(prefix, w);
          auto [it, fresh] = out.open.try_emplace(std::make_pair(start, next), TruncPoly<R>(cap));
          R::add_to(it->second[len + 1], extended);
          if (len + 1 < cap) {
            on_path[next] = true;
            walk(start, next, len + 1, extended);
            on_path[next] = false;
          }
        }
      };

  for (Vertex s = 0; s < n; ++s) {
    on_path[s] = true;
    walk(s, s, 0, R::one());
    on_path[s] = false;
  }
  std::erase_if(out.open, [](const auto& kv) { return kv.second.is_zero(); });
  std::erase_if(out.closed, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

/// Exhaustive search over full-length simple paths and cycles.
template <Ring R>
HamiltonianResult<R> dfs_hamiltonian(const Graph<R>& g) {
  using V = typename R::value_type;
  const std::size_t n = g.vertex_count();
  if (n == 1) return make_hamiltonian_result<R>(1, {R::zero()}, g.entry(0, 0));

  std::vector<V> h_op(n * n, R::zero());
  V cycles = R::zero();
  std::vector<bool> on_path(n, false);
  std::function<void(Vertex, Vertex, std::size_t, const V&)> walk = [&](Vertex start, Vertex at, std::size_t used,
                                                                         const V& prefix) {
    if (used == n) {
      R::add_to(h_op[start * n + at], prefix);
      // Each directed Hamiltonian cycle is counted once, from vertex 0.
      if (start == 0)
        if (auto back = g.find_arc(at, start)) R::add_product(cycles, prefix, g.weight(*back));
      return;
    }
    for (Vertex next : g.out_neighbors(at)) {
      if (on_path[next]) continue;
      on_path[next] = true;
      walk(start, next, used + 1, R::mul(prefix, g.weight(*g.find_arc(at, next))));
      on_path[next] = false;
    }
  };
  for (Vertex s = 0; s < n; ++s) {
    on_path[s] = true;
    walk(s, s, 1, R::one());
    on_path[s] = false;
  }
  return make_hamiltonian_result<R>(n, std::move(h_op), std::move(cycles));
}

/// Every non-empty subset of size <= max_size inducing a weakly connected
/// subgraph, in ascending lexicographic order of member lists.
std::vector<VertexSet> filter_connected_sets(const Topology& g, std::size_t max_size);

/// Connected sets whose closed neighbourhood is the whole vertex set.
std::vector<VertexSet> filter_connected_dominating_sets(const Topology& g);

}  // namespace simplepaths::oracle
