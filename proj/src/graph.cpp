#include "simplepaths/graph.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <set>
#include <sstream>
#include <tuple>

namespace simplepaths {

namespace {

constexpr std::size_t kMaxVertexCount = std::size_t{1} << 24;

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::size_t parse_count(std::string_view tok, std::size_t line, const char* what) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
    throw ParseError(line, std::string(what) + " is not a non-negative decimal integer: '" + std::string(tok) + "'");
  if (value >= kMaxVertexCount) throw ParseError(line, std::string(what) + " too large: " + std::string(tok));
  return value;
}

void build_csr(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& pairs, std::vector<std::size_t>& off,
               std::vector<Vertex>& data) {
  off.assign(n + 1, 0);
  for (auto [from, to] : pairs) ++off[from + 1];
  std::partial_sum(off.begin(), off.end(), off.begin());
  data.resize(pairs.size());
  auto cursor = off;
  for (auto [from, to] : pairs) data[cursor[from]++] = to;
  for (std::size_t v = 0; v < n; ++v) std::sort(data.begin() + off[v], data.begin() + off[v + 1]);
}

}  // namespace

std::string_view orientation_name(Orientation o) {
  return o == Orientation::Directed ? "directed" : "undirected";
}

Topology::Topology(std::size_t n, std::vector<Arc> arcs, Orientation orientation)
    : n_(n), orientation_(orientation), arcs_(std::move(arcs)) {
  if (n_ == 0) throw UsageError("graph must have at least one vertex");
  std::vector<std::pair<Vertex, Vertex>> out_pairs, in_pairs, weak_pairs;
  for (const Arc& a : arcs_) {
    if (a.src >= n_ || a.dst >= n_) throw UsageError("arc endpoint outside [0, n)");
    out_pairs.emplace_back(a.src, a.dst);
    in_pairs.emplace_back(a.dst, a.src);
    if (a.src != a.dst) {
      weak_pairs.emplace_back(a.src, a.dst);
      weak_pairs.emplace_back(a.dst, a.src);
    }
  }
  std::sort(weak_pairs.begin(), weak_pairs.end());
  weak_pairs.erase(std::unique(weak_pairs.begin(), weak_pairs.end()), weak_pairs.end());
  build_csr(n_, in_pairs, in_off_, in_src_);
  build_csr(n_, weak_pairs, weak_off_, weak_adj_);

  // Out lists carry arc ids so find_arc is a binary search.
  std::vector<ArcId> order(arcs_.size());
  std::iota(order.begin(), order.end(), ArcId{0});
  std::sort(order.begin(), order.end(), [&](ArcId x, ArcId y) {
    return std::tie(arcs_[x].src, arcs_[x].dst) < std::tie(arcs_[y].src, arcs_[y].dst);
  });
  out_off_.assign(n_ + 1, 0);
  out_dst_.clear();
  out_arc_.clear();
  for (std::size_t k = 0; k < order.size(); ++k) {
    const Arc& a = arcs_[order[k]];
    if (k > 0 && arcs_[order[k - 1]] == a) throw UsageError("duplicate arc (" + std::to_string(a.src) + ", " + std::to_string(a.dst) + ")");
    ++out_off_[a.src + 1];
    out_dst_.push_back(a.dst);
    out_arc_.push_back(order[k]);
  }
  std::partial_sum(out_off_.begin(), out_off_.end(), out_off_.begin());
}

std::optional<ArcId> Topology::find_arc(Vertex src, Vertex dst) const {
  if (src >= n_) return std::nullopt;
  auto first = out_dst_.begin() + static_cast<std::ptrdiff_t>(out_off_[src]);
  auto last = out_dst_.begin() + static_cast<std::ptrdiff_t>(out_off_[src + 1]);
  auto it = std::lower_bound(first, last, dst);
  if (it == last || *it != dst) return std::nullopt;
  return out_arc_[static_cast<std::size_t>(it - out_dst_.begin())];
}

EdgeList scan_edge_list(std::string_view text) {
  EdgeList list;
  std::size_t header_n = 0;
  std::size_t max_id = 0;
  bool any_edge = false;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    auto toks = split_ws(line);
    if (toks.empty() || toks.front().front() == '#') {
      if (end == text.size()) break;
      continue;
    }
    if (toks.front() == "n") {
      if (toks.size() != 2) throw ParseError(line_no, "header must be 'n <count>'");
      if (list.has_header) throw ParseError(line_no, "repeated 'n' header");
      header_n = parse_count(toks[1], line_no, "vertex count");
      list.has_header = true;
    } else {
      if (toks.size() != 2 && toks.size() != 3)
        throw ParseError(line_no, "expected 'u v' or 'u v w', got " + std::to_string(toks.size()) + " tokens");
      EdgeRecord rec{static_cast<Vertex>(parse_count(toks[0], line_no, "vertex id")),
                     static_cast<Vertex>(parse_count(toks[1], line_no, "vertex id")),
                     toks.size() == 3 ? std::optional<std::string>(std::string(toks[2])) : std::nullopt, line_no};
      max_id = std::max<std::size_t>({max_id, rec.src, rec.dst});
      any_edge = true;
      list.edges.push_back(std::move(rec));
    }
    if (end == text.size()) break;
  }

  if (list.has_header) {
    if (any_edge && max_id >= header_n)
      throw ParseError(line_no, "vertex id " + std::to_string(max_id) + " exceeds header count " + std::to_string(header_n));
    list.n = header_n;
  } else {
    if (!any_edge) throw ParseError(line_no, "no edges and no 'n' header");
    list.n = max_id + 1;
    std::vector<bool> seen(list.n, false);
    for (const auto& e : list.edges) seen[e.src] = seen[e.dst] = true;
    auto gap = std::find(seen.begin(), seen.end(), false);
    if (gap != seen.end())
      throw ParseError(line_no, "vertex id " + std::to_string(gap - seen.begin()) +
                                    " never appears; ids must be dense (or declare 'n <count>')");
  }
  if (list.n == 0) throw ParseError(line_no, "graph must have at least one vertex");
  return list;
}

std::vector<std::pair<Arc, std::size_t>> expand_arcs(const EdgeList& list, bool directed) {
  std::vector<std::pair<Arc, std::size_t>> arcs;
  std::set<std::pair<Vertex, Vertex>> seen;
  auto add = [&](Vertex u, Vertex v, std::size_t rec) {
    if (!seen.emplace(u, v).second)
      throw ParseError(list.edges[rec].line,
                       "duplicate arc (" + std::to_string(u) + ", " + std::to_string(v) + ")");
    arcs.push_back({Arc{u, v}, rec});
  };
  for (std::size_t r = 0; r < list.edges.size(); ++r) {
    const auto& e = list.edges[r];
    add(e.src, e.dst, r);
    if (!directed && e.src != e.dst) add(e.dst, e.src, r);
  }
  return arcs;
}

VertexSet weak_neighborhood(const Topology& g, const VertexSet& c) {
  if (c.empty()) throw UsageError("weak_neighborhood: empty set");
  VertexSet out(g.vertex_count());
  for (Vertex v : c)
    for (Vertex u : g.weak_neighbors(v))
      if (!c.contains(u)) out.insert(u);
  return out;
}

bool is_dominating(const Topology& g, const VertexSet& c) {
  return c.size() + weak_neighborhood(g, c).size() == g.vertex_count();
}

std::vector<VertexSet> weakly_connected_components(const Topology& g, const VertexSet& s) {
  if (s.empty()) throw UsageError("weakly_connected_components: empty set");
  std::vector<VertexSet> comps;
  VertexSet seen(g.vertex_count());
  std::vector<Vertex> stack;
  for (Vertex root : s) {
    if (seen.contains(root)) continue;
    VertexSet comp(g.vertex_count());
    stack.push_back(root);
    seen.insert(root);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      comp.insert(v);
      for (Vertex u : g.weak_neighbors(v)) {
        if (s.contains(u) && !seen.contains(u)) {
          seen.insert(u);
          stack.push_back(u);
        }
      }
    }
    comps.push_back(std::move(comp));
  }
  return comps;
}

}  // namespace simplepaths
