#include "simplepaths/oracle.hpp"

#include <algorithm>

namespace simplepaths::oracle {

void for_each_simple_path(const Topology& g, std::size_t max_len, const std::function<void(const SimplePath&)>& visit) {
  const std::size_t n = g.vertex_count();
  std::vector<bool> on_path(n, false);
  SimplePath path;
  std::function<void(Vertex)> walk = [&](Vertex at) {
    const Vertex start = path.vertices.front();
    for (Vertex next : g.out_neighbors(at)) {
      const ArcId arc = *g.find_arc(at, next);
      if (next == start) {
        path.word.push_back(arc);
        path.closed = true;
        visit(path);
        path.closed = false;
        path.word.pop_back();
        continue;
      }
      if (on_path[next] || path.word.size() + 1 > max_len) continue;
      on_path[next] = true;
      path.vertices.push_back(next);
      path.word.push_back(arc);
      visit(path);
      if (path.word.size() < max_len) walk(next);
      path.word.pop_back();
      path.vertices.pop_back();
      on_path[next] = false;
    }
  };
  for (Vertex s = 0; s < n; ++s) {
    path = SimplePath{{s}, {}, false};
    on_path[s] = true;
    walk(s);
    on_path[s] = false;
  }
}

std::vector<SimplePath> simple_paths(const Topology& g, std::size_t max_len) {
  std::vector<SimplePath> out;
  for_each_simple_path(g, max_len, [&](const SimplePath& p) { out.push_back(p); });
  return out;
}

std::vector<SimplePath> canonical_cycles(const Topology& g, std::size_t max_len) {
  std::vector<SimplePath> out;
  for_each_simple_path(g, max_len, [&](const SimplePath& p) {
    if (p.closed && *std::min_element(p.vertices.begin(), p.vertices.end()) == p.source()) out.push_back(p);
  });
  return out;
}

std::map<std::size_t, std::uint64_t> directed_cycle_census(const Topology& g, std::size_t max_len) {
  std::map<std::size_t, std::uint64_t> census;
  for (std::size_t k = 1; k <= max_len; ++k) census[k] = 0;
  for (const auto& c : canonical_cycles(g, max_len)) ++census[c.length()];
  return census;
}

std::vector<VertexSet> filter_connected_sets(const Topology& g, std::size_t max_size) {
  const std::size_t n = g.vertex_count();
  check_reference_limit(n, kDefaultReferenceLimit);
  std::vector<VertexSet> out;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    if (static_cast<std::size_t>(std::popcount(mask)) > max_size) continue;
    VertexSet s = VertexSet::from_mask(n, mask);
    if (weakly_connected_components(g, s).size() == 1) out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<VertexSet> filter_connected_dominating_sets(const Topology& g) {
  auto sets = filter_connected_sets(g, g.vertex_count());
  std::erase_if(sets, [&](const VertexSet& s) {
    VertexSet covered = s;
    for (Vertex v : s)
      for (Vertex u : g.weak_neighbors(v)) covered.insert(u);
    return covered.size() != g.vertex_count();
  });
  return sets;
}

}  // namespace simplepaths::oracle
