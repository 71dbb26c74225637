#pragma once

// Exactly-once enumeration of weakly connected induced vertex sets.
//
// Sets are grown from their minimum vertex (the root) and only ever extended
// by larger vertices. A branch extends by one candidate at a time; once a
// candidate has been handed to a branch, it and every vertex adjacent to the
// current set are excluded from the siblings' new candidates, which makes the
// emission unique without remembering visited sets.

#include <atomic>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "simplepaths/error.hpp"
#include "simplepaths/graph.hpp"
#include "simplepaths/vertex_set.hpp"

namespace simplepaths {

/// Cooperative cancellation shared by enumerators and engines.
struct CancelToken {
  std::atomic<bool> requested{false};
  void request() noexcept { requested.store(true, std::memory_order_relaxed); }
  bool stop_requested() const noexcept { return requested.load(std::memory_order_relaxed); }
};

struct ConnectedSetVisit {
  const VertexSet& set;
  std::span<const Vertex> members;  // insertion order, root first
  std::size_t nbh_size;             // |N(C)|
  Vertex root;
};

class ConnectedSetEnumerator {
 public:
  using Visitor = std::function<void(const ConnectedSetVisit&)>;

  /// With `dominating_only`, only sets D with D ∪ N(D) = V are reported and
  /// branches that can no longer reach such a set are cut.
  ConnectedSetEnumerator(const Topology& g, std::size_t max_size, bool dominating_only = false,
                         const CancelToken* cancel = nullptr);

  /// Visits every qualifying set whose minimum vertex is `root`. Returns the visit count.
  std::uint64_t run_root(Vertex root, const Visitor& visit);
  std::uint64_t run(const Visitor& visit);

 private:
  void extend(std::size_t depth, const Visitor& visit);
  void push(Vertex w);
  void pop(Vertex w);
  bool can_still_dominate(std::span<const Vertex> ext);

  const Topology& g_;
  std::size_t max_size_;
  bool dominating_only_;
  const CancelToken* cancel_;

  Vertex root_ = 0;
  VertexSet in_set_;
  std::vector<Vertex> members_;
  std::vector<std::uint32_t> cover_;  // number of members weakly adjacent to each vertex
  std::size_t nbh_size_ = 0;
  std::vector<std::vector<Vertex>> ext_by_depth_;
  std::uint64_t visits_ = 0;

  std::vector<Vertex> bfs_stack_;
  std::vector<std::uint8_t> mark_;
};

/// Every weakly connected C with 1 <= |C| <= max_size, exactly once.
std::uint64_t enumerate_connected(const Topology& g, std::size_t max_size,
                                  const ConnectedSetEnumerator::Visitor& visit);

/// Every weakly connected dominating set, exactly once.
std::uint64_t enumerate_connected_dominating(const Topology& g, const ConnectedSetEnumerator::Visitor& visit);

/// counts[s] = number of weakly connected sets of size s, for s = 1..max_size (counts[0] = 0).
std::vector<std::uint64_t> count_connected_by_size(const Topology& g, std::size_t max_size);

inline constexpr std::size_t kDefaultReferenceLimit = 20;
inline constexpr std::size_t kHardReferenceLimit = 40;

/// Every non-empty subset of {0..n-1} whose minimum is `root`, as bit masks.
std::uint64_t enumerate_subsets_with_root(std::size_t n, Vertex root, const std::function<void(std::uint64_t)>& visit);

/// All 2^n - 1 non-empty subsets. Throws LimitError when n > limit.
std::uint64_t enumerate_all_subsets(const Topology& g, const std::function<void(const VertexSet&)>& visit,
                                    std::size_t limit = kDefaultReferenceLimit);

void check_reference_limit(std::size_t n, std::size_t limit);

}  // namespace simplepaths
