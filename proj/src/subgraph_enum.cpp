#include "simplepaths/subgraph_enum.hpp"

#include <algorithm>

namespace simplepaths {

ConnectedSetEnumerator::ConnectedSetEnumerator(const Topology& g, std::size_t max_size, bool dominating_only,
                                               const CancelToken* cancel)
    : g_(g),
      max_size_(max_size),
      dominating_only_(dominating_only),
      cancel_(cancel),
      in_set_(g.vertex_count()),
      cover_(g.vertex_count(), 0),
      ext_by_depth_(max_size + 1),
      mark_(g.vertex_count(), 0) {
  if (max_size < 1 || max_size > g.vertex_count())
    throw UsageError("max_size must lie in [1, " + std::to_string(g.vertex_count()) + "]");
  members_.reserve(max_size);
}

void ConnectedSetEnumerator::push(Vertex w) {
  if (cover_[w] > 0) --nbh_size_;
  in_set_.insert(w);
  members_.push_back(w);
  for (Vertex u : g_.weak_neighbors(w))
    if (cover_[u]++ == 0 && !in_set_.contains(u)) ++nbh_size_;
}

void ConnectedSetEnumerator::pop(Vertex w) {
  for (Vertex u : g_.weak_neighbors(w))
    if (--cover_[u] == 0 && !in_set_.contains(u)) --nbh_size_;
  members_.pop_back();
  in_set_.erase(w);
  if (cover_[w] > 0) ++nbh_size_;
}

// Sound over-approximation of what the branch can still cover: later members
// are drawn from `ext` or reached from it through vertices above the root that
// are not yet in the closed neighbourhood of the set.
bool ConnectedSetEnumerator::can_still_dominate(std::span<const Vertex> ext) {
  const std::size_t n = g_.vertex_count();
  if (members_.size() + nbh_size_ == n) return true;
  std::fill(mark_.begin(), mark_.end(), 0);
  // mark 1: reachable future member; 2: covered.
  bfs_stack_.assign(ext.begin(), ext.end());
  for (Vertex v : ext) mark_[v] = 1;
  while (!bfs_stack_.empty()) {
    Vertex v = bfs_stack_.back();
    bfs_stack_.pop_back();
    for (Vertex u : g_.weak_neighbors(v)) {
      if (mark_[u] == 1) continue;
      if (u > root_ && !in_set_.contains(u) && cover_[u] == 0) {
        mark_[u] = 1;
        bfs_stack_.push_back(u);
      } else {
        mark_[u] = 2;
      }
    }
  }
  for (Vertex x = 0; x < n; ++x) {
    if (in_set_.contains(x) || cover_[x] > 0) continue;
    if (mark_[x] == 0) return false;
  }
  return true;
}

void ConnectedSetEnumerator::extend(std::size_t depth, const Visitor& visit) {
  if (cancel_ && cancel_->stop_requested()) throw CancelledError("connected-set enumeration cancelled");
  std::vector<Vertex>& ext = ext_by_depth_[depth];
  if (dominating_only_ && !can_still_dominate(ext)) return;
  if (!dominating_only_ || members_.size() + nbh_size_ == g_.vertex_count()) {
    ++visits_;
    visit(ConnectedSetVisit{in_set_, members_, nbh_size_, root_});
  }
  if (members_.size() == max_size_) return;

  for (std::size_t i = 0; i < ext.size(); ++i) {
    const Vertex w = ext[i];
    std::vector<Vertex>& next = ext_by_depth_[depth + 1];
    next.assign(ext.begin() + static_cast<std::ptrdiff_t>(i) + 1, ext.end());
    // New candidates: neighbours of w above the root that are neither in the
    // set nor adjacent to it (those are already candidates or excluded).
    for (Vertex u : g_.weak_neighbors(w))
      if (u > root_ && !in_set_.contains(u) && cover_[u] == 0) next.push_back(u);
    std::sort(next.begin(), next.end());
    push(w);
    extend(depth + 1, visit);
    pop(w);
  }
}

std::uint64_t ConnectedSetEnumerator::run_root(Vertex root, const Visitor& visit) {
  if (root >= g_.vertex_count()) throw UsageError("root outside graph");
  root_ = root;
  visits_ = 0;
  push(root);
  auto& ext = ext_by_depth_[0];
  ext.clear();
  for (Vertex u : g_.weak_neighbors(root))
    if (u > root) ext.push_back(u);
  try {
    extend(0, visit);
  } catch (...) {
    // Unwind cleanly so the enumerator stays usable.
    while (!members_.empty()) pop(members_.back());
    throw;
  }
  pop(root);
  return visits_;
}

std::uint64_t ConnectedSetEnumerator::run(const Visitor& visit) {
  std::uint64_t total = 0;
  for (Vertex r = 0; r < g_.vertex_count(); ++r) total += run_root(r, visit);
  return total;
}

std::uint64_t enumerate_connected(const Topology& g, std::size_t max_size,
                                  const ConnectedSetEnumerator::Visitor& visit) {
  return ConnectedSetEnumerator(g, max_size).run(visit);
}

std::uint64_t enumerate_connected_dominating(const Topology& g, const ConnectedSetEnumerator::Visitor& visit) {
  return ConnectedSetEnumerator(g, g.vertex_count(), true).run(visit);
}

std::vector<std::uint64_t> count_connected_by_size(const Topology& g, std::size_t max_size) {
  std::vector<std::uint64_t> counts(max_size + 1, 0);
  enumerate_connected(g, max_size, [&](const ConnectedSetVisit& v) { ++counts[v.members.size()]; });
  return counts;
}

void check_reference_limit(std::size_t n, std::size_t limit) {
  if (limit > kHardReferenceLimit)
    throw LimitError("reference limit " + std::to_string(limit) + " exceeds hard cap " +
                     std::to_string(kHardReferenceLimit));
  if (n > limit)
    throw LimitError("all-subsets reference path limited to n <= " + std::to_string(limit) + " (graph has n = " +
                     std::to_string(n) + ")");
}

std::uint64_t enumerate_subsets_with_root(std::size_t n, Vertex root, const std::function<void(std::uint64_t)>& visit) {
  const std::size_t free_bits = n - 1 - root;
  const std::uint64_t base = std::uint64_t{1} << root;
  const std::uint64_t count = std::uint64_t{1} << free_bits;
  for (std::uint64_t rest = 0; rest < count; ++rest) visit(base | (rest << (root + 1)));
  return count;
}

std::uint64_t enumerate_all_subsets(const Topology& g, const std::function<void(const VertexSet&)>& visit,
                                    std::size_t limit) {
  const std::size_t n = g.vertex_count();
  check_reference_limit(n, limit);
  std::uint64_t total = 0;
  for (Vertex r = 0; r < n; ++r)
    total += enumerate_subsets_with_root(n, r, [&](std::uint64_t mask) { visit(VertexSet::from_mask(n, mask)); });
  return total;
}

}  // namespace simplepaths
