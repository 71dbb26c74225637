#pragma once

// Matrix generating series of simple paths and cycles.
//
// For a vertex set C with local labeled adjacency W_C and |N(C)| = m, the
// open part collects (zW_C)^{|C|-1} (I - zW_C)^m and the closed part the
// diagonal of (zW_C)^{|C|} (I - zW_C)^m. Summed over all non-empty subsets
// (with m = n - |S|) or over weakly connected sets only (with m = |N(C)|),
// both sums give the same series. Taken literally the open sum also counts
// one zero-length path per vertex; that z^0 identity is removed, and checked,
// when a result is finalized.

#include <atomic>
#include <chrono>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "simplepaths/bigint.hpp"
#include "simplepaths/error.hpp"
#include "simplepaths/graph.hpp"
#include "simplepaths/parallel.hpp"
#include "simplepaths/ring.hpp"
#include "simplepaths/subgraph_enum.hpp"
#include "simplepaths/trunc_poly.hpp"

namespace simplepaths {

template <Ring R>
struct PathSeriesResult {
  std::size_t n = 0;
  std::size_t cap = 0;
  Orientation orientation = Orientation::Directed;
  /// P_op entries with at least one nonzero coefficient; never diagonal keys.
  std::map<std::pair<Vertex, Vertex>, TruncPoly<R>> open;
  /// Diagonal of P_cl, nonzero entries only.
  std::map<Vertex, TruncPoly<R>> closed;

  static constexpr std::string_view ring = R::name;

  friend bool operator==(const PathSeriesResult& a, const PathSeriesResult& b) {
    return a.n == b.n && a.cap == b.cap && a.orientation == b.orientation && a.open == b.open &&
           a.closed == b.closed;
  }
};

struct RunStats {
  std::uint64_t visited_sets = 0;
};

struct EngineOptions {
  std::size_t threads = 1;
  std::size_t reference_limit = kDefaultReferenceLimit;
  const CancelToken* cancel = nullptr;
};

/// Process-wide tally of empty-path / diagonal self-checks.
struct SelfCheckCounters {
  std::atomic<std::uint64_t> performed{0};
  std::atomic<std::uint64_t> failed{0};
};
SelfCheckCounters& self_check_counters();

/// (-1)^j C(m, j) for 0 <= m <= max_m, 0 <= j <= max_j.
class SignedBinomialTable {
 public:
  SignedBinomialTable(std::size_t max_m, std::size_t max_j);
  const BigInt& operator()(std::size_t m, std::size_t j) const { return rows_[m][j]; }
  bool is_zero(std::size_t m, std::size_t j) const { return j > m; }

 private:
  std::vector<std::vector<BigInt>> rows_;
};

namespace detail {

/// Sparse per-entry coefficient store used while summing contributions.
template <Ring R>
class SeriesAccumulator {
 public:
  using value_type = typename R::value_type;

  SeriesAccumulator(std::size_t n, std::size_t cap) : n_(n), cap_(cap) {}

  std::vector<value_type>& open_slot(Vertex i, Vertex j) {
    auto [it, fresh] = open_.try_emplace(key(i, j));
    if (fresh) it->second.assign(cap_ + 1, R::zero());
    return it->second;
  }
  std::vector<value_type>& closed_slot(Vertex i) {
    auto [it, fresh] = closed_.try_emplace(i);
    if (fresh) it->second.assign(cap_ + 1, R::zero());
    return it->second;
  }

  void merge(SeriesAccumulator&& other) {
    visited += other.visited;
    for (auto& [k, coeffs] : other.open_) add_into(open_, k, std::move(coeffs));
    for (auto& [k, coeffs] : other.closed_) add_into(closed_, k, std::move(coeffs));
  }

  /// Removes the z^0 identity of the open sum, asserting it is exactly the
  /// identity (and, for exact rings, that nothing else sits on the diagonal).
  PathSeriesResult<R> finish(Orientation orientation) && {
    auto& counters = self_check_counters();
    counters.performed.fetch_add(1, std::memory_order_relaxed);
    auto fail = [&](const std::string& why) {
      counters.failed.fetch_add(1, std::memory_order_relaxed);
      throw SelfCheckError("empty-path constant check failed: " + why);
    };

    PathSeriesResult<R> out;
    out.n = n_;
    out.cap = cap_;
    out.orientation = orientation;
    std::vector<bool> seen_constant(n_, false);
    for (auto& [k, coeffs] : open_) {
      const auto i = static_cast<Vertex>(k / n_);
      const auto j = static_cast<Vertex>(k % n_);
      if (i == j) {
        if (!(coeffs[0] == R::one())) fail("z^0 diagonal entry at vertex " + std::to_string(i) + " is not one");
        seen_constant[i] = true;
        if constexpr (R::kExact) {
          for (std::size_t d = 1; d <= cap_; ++d)
            if (!R::is_zero(coeffs[d]))
              fail("diagonal of the open sum has a nonzero z^" + std::to_string(d) + " term at vertex " +
                   std::to_string(i));
        }
        continue;
      }
      if (!R::is_zero(coeffs[0])) fail("off-diagonal z^0 term at (" + std::to_string(i) + ", " + std::to_string(j) + ")");
      TruncPoly<R> p(cap_);
      for (std::size_t d = 1; d <= cap_; ++d) p[d] = std::move(coeffs[d]);
      if (!p.is_zero()) out.open.emplace(std::make_pair(i, j), std::move(p));
    }
    for (Vertex v = 0; v < n_; ++v)
      if (!seen_constant[v]) fail("missing z^0 diagonal entry at vertex " + std::to_string(v));
    for (auto& [v, coeffs] : closed_) {
      if (!R::is_zero(coeffs[0])) fail("closed series has a z^0 term at vertex " + std::to_string(v));
      TruncPoly<R> p(cap_);
      for (std::size_t d = 1; d <= cap_; ++d) p[d] = std::move(coeffs[d]);
      if (!p.is_zero()) out.closed.emplace(v, std::move(p));
    }
    return out;
  }

  std::uint64_t visited = 0;

 private:
  std::uint64_t key(Vertex i, Vertex j) const { return std::uint64_t{i} * n_ + j; }

  template <class Map, class K>
  static void add_into(Map& map, const K& k, std::vector<value_type>&& coeffs) {
    auto [it, fresh] = map.try_emplace(k);
    if (fresh) {
      it->second = std::move(coeffs);
      return;
    }
    for (std::size_t d = 0; d < coeffs.size(); ++d) R::add_to(it->second[d], coeffs[d]);
  }

  std::size_t n_;
  std::size_t cap_;
  std::unordered_map<std::uint64_t, std::vector<value_type>> open_;
  std::unordered_map<Vertex, std::vector<value_type>> closed_;
};

/// Dense scratch for one connected set: W_C and its successive powers.
template <Ring R>
class PowerWorkspace {
 public:
  using value_type = typename R::value_type;

  explicit PowerWorkspace(std::size_t n) : pos_(n, -1) {}

  /// Loads W_C for ascending `members`.
  void load(const Graph<R>& g, std::span<const Vertex> members) {
    members_.assign(members.begin(), members.end());
    k_ = members_.size();
    for (std::size_t i = 0; i < k_; ++i) pos_[members_[i]] = static_cast<std::int32_t>(i);
    w_.assign(k_ * k_, R::zero());
    for (std::size_t i = 0; i < k_; ++i) {
      const Vertex src = members_[i];
      for (Vertex dst : g.out_neighbors(src)) {
        const std::int32_t j = pos_[dst];
        if (j >= 0) w_[i * k_ + static_cast<std::size_t>(j)] = g.weight(*g.find_arc(src, dst));
      }
    }
    for (Vertex v : members_) pos_[v] = -1;
    power_ = w_;
  }

  std::size_t dim() const noexcept { return k_; }
  const std::vector<Vertex>& members() const noexcept { return members_; }
  /// Current power W_C^d (starts at d = 1 after load()).
  const value_type& power(std::size_t i, std::size_t j) const { return power_[i * k_ + j]; }

  /// power <- power * W_C. Returns false when the new power is the zero matrix.
  bool step() {
    scratch_.assign(k_ * k_, R::zero());
    bool nonzero = false;
    for (std::size_t i = 0; i < k_; ++i) {
      for (std::size_t l = 0; l < k_; ++l) {
        const value_type& a = power_[i * k_ + l];
        if (R::is_zero(a)) continue;
        for (std::size_t j = 0; j < k_; ++j) {
          const value_type& b = w_[l * k_ + j];
          if (!R::is_zero(b)) R::add_product(scratch_[i * k_ + j], a, b);
        }
      }
    }
    for (const auto& x : scratch_)
      if (!R::is_zero(x)) {
        nonzero = true;
        break;
      }
    std::swap(power_, scratch_);
    return nonzero;
  }

  bool power_is_zero() const {
    for (const auto& x : power_)
      if (!R::is_zero(x)) return false;
    return true;
  }

 private:
  std::vector<std::int32_t> pos_;
  std::vector<Vertex> members_;
  std::size_t k_ = 0;
  std::vector<value_type> w_, power_, scratch_;
};

/// Adds one connected set's open and closed terms to `acc`. Because zW_C is
/// homogeneous of degree one, the z^d coefficient of
/// (zW_C)^{s-1} (I - zW_C)^m is (-1)^{d-s+1} C(m, d-s+1) W_C^d.
template <Ring R>
void accumulate_set(const Graph<R>& g, std::span<const Vertex> sorted_members, std::size_t nbh, std::size_t cap,
                    const SignedBinomialTable& binom, PowerWorkspace<R>& ws, SeriesAccumulator<R>& acc) {
  const std::size_t s = sorted_members.size();
  if (s == 1) R::add_to(acc.open_slot(sorted_members[0], sorted_members[0])[0], R::one());
  if (s - 1 > cap) return;
  ws.load(g, sorted_members);
  const std::size_t last = std::min(cap, s + nbh);  // binomials vanish beyond
  bool nonzero = !ws.power_is_zero();
  for (std::size_t d = 1; d <= last && nonzero; ++d) {
    if (d > 1) nonzero = ws.step();
    if (!nonzero) break;
    const auto& idx = ws.members();
    if (d + 1 >= s && !binom.is_zero(nbh, d + 1 - s)) {
      const BigInt& c = binom(nbh, d + 1 - s);
      for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = 0; j < s; ++j) {
          const auto& p = ws.power(i, j);
          if (!R::is_zero(p)) R::add_scaled(acc.open_slot(idx[i], idx[j])[d], c, p);
        }
    }
    if (d >= s && !binom.is_zero(nbh, d - s)) {
      const BigInt& c = binom(nbh, d - s);
      for (std::size_t i = 0; i < s; ++i) {
        const auto& p = ws.power(i, i);
        if (!R::is_zero(p)) R::add_scaled(acc.closed_slot(idx[i])[d], c, p);
      }
    }
  }
}

inline void check_cap(std::size_t cap, std::size_t n) {
  if (cap < 1 || cap > n)
    throw UsageError("max length must lie in [1, n] = [1, " + std::to_string(n) + "], got " + std::to_string(cap));
}

}  // namespace detail

/// (zW_C)^{|C|-1} (I_C - zW_C)^{nbh} truncated at cap, computed with
/// truncated polynomial matrix algebra.
template <Ring R>
LocalPolyMatrix<R> contribution_open(const LocalMatrix<R>& wc, std::size_t nbh, std::size_t cap) {
  auto x = LocalPolyMatrix<R>::z_times(wc, cap);
  return mat_mul_trunc(mat_pow_trunc(x, wc.dim() - 1), binom_expand_i_minus(x, nbh));
}

/// Diagonal of (zW_C)^{|C|} (I_C - zW_C)^{nbh} truncated at cap.
template <Ring R>
std::vector<TruncPoly<R>> contribution_closed(const LocalMatrix<R>& wc, std::size_t nbh, std::size_t cap) {
  auto x = LocalPolyMatrix<R>::z_times(wc, cap);
  auto full = mat_mul_trunc(mat_pow_trunc(x, wc.dim()), binom_expand_i_minus(x, nbh));
  std::vector<TruncPoly<R>> diag;
  diag.reserve(wc.dim());
  for (std::size_t i = 0; i < wc.dim(); ++i) diag.push_back(full.at(i, i));
  return diag;
}

/// P_op and P_cl up to degree cap, summed over weakly connected induced sets.
template <Ring R>
PathSeriesResult<R> path_series_connected(const Graph<R>& g, std::size_t cap, const EngineOptions& opt = {},
                                          RunStats* stats = nullptr) {
  const std::size_t n = g.vertex_count();
  detail::check_cap(cap, n);
  const std::size_t max_size = std::min(cap + 1, n);
  const SignedBinomialTable binom(n, cap + 1);
  const std::size_t workers = std::max<std::size_t>(1, opt.threads);

  struct WorkerState {
    ConnectedSetEnumerator enumerator;
    detail::PowerWorkspace<R> ws;
    std::vector<Vertex> sorted;
  };
  std::vector<std::unique_ptr<WorkerState>> states;
  for (std::size_t t = 0; t < workers; ++t)
    states.push_back(std::make_unique<WorkerState>(
        WorkerState{ConnectedSetEnumerator(g, max_size, false, opt.cancel), detail::PowerWorkspace<R>(n), {}}));

  detail::SeriesAccumulator<R> total(n, cap);
  ordered_root_reduce(
      n, workers,
      [&](std::size_t root, std::size_t id) {
        detail::SeriesAccumulator<R> part(n, cap);
        WorkerState& st = *states[id];
        part.visited = st.enumerator.run_root(static_cast<Vertex>(root), [&](const ConnectedSetVisit& v) {
          st.sorted.assign(v.members.begin(), v.members.end());
          std::sort(st.sorted.begin(), st.sorted.end());
          detail::accumulate_set(g, st.sorted, v.nbh_size, cap, binom, st.ws, part);
        });
        return part;
      },
      [&](detail::SeriesAccumulator<R>&& part) { total.merge(std::move(part)); }, opt.cancel);

  if (stats) stats->visited_sets = total.visited;
  return std::move(total).finish(g.orientation());
}

/// Reference route: the same series summed over all 2^n - 1 non-empty
/// subsets with exponent n - |S|, using polynomial matrix algebra throughout.
template <Ring R>
PathSeriesResult<R> path_series_all_subsets(const Graph<R>& g, std::size_t cap, const EngineOptions& opt = {},
                                            RunStats* stats = nullptr) {
  const std::size_t n = g.vertex_count();
  check_reference_limit(n, opt.reference_limit);
  detail::check_cap(cap, n);

  detail::SeriesAccumulator<R> total(n, cap);
  ordered_root_reduce(
      n, std::max<std::size_t>(1, opt.threads),
      [&](std::size_t root, std::size_t) {
        detail::SeriesAccumulator<R> part(n, cap);
        part.visited = enumerate_subsets_with_root(n, static_cast<Vertex>(root), [&](std::uint64_t mask) {
          if (opt.cancel && opt.cancel->stop_requested()) throw CancelledError("all-subsets enumeration cancelled");
          const VertexSet s = VertexSet::from_mask(n, mask);
          const std::size_t size = s.size();
          if (size - 1 > cap) return;
          const LocalMatrix<R> w = restrict_to(g, s);
          const std::size_t outside = n - size;
          const auto open = contribution_open(w, outside, cap);
          for (std::size_t i = 0; i < size; ++i)
            for (std::size_t j = 0; j < size; ++j) {
              const auto& p = open.at(i, j);
              if (p.is_zero()) continue;
              auto& slot = part.open_slot(w.index_map[i], w.index_map[j]);
              for (std::size_t d = 0; d <= cap; ++d) R::add_to(slot[d], p[d]);
            }
          if (size <= cap) {
            const auto closed = contribution_closed(w, outside, cap);
            for (std::size_t i = 0; i < size; ++i) {
              if (closed[i].is_zero()) continue;
              auto& slot = part.closed_slot(w.index_map[i]);
              for (std::size_t d = 0; d <= cap; ++d) R::add_to(slot[d], closed[i][d]);
            }
          }
        });
        return part;
      },
      [&](detail::SeriesAccumulator<R>&& part) { total.merge(std::move(part)); }, opt.cancel);

  if (stats) stats->visited_sets = total.visited;
  return std::move(total).finish(g.orientation());
}

enum class CycleNormalization { RawTrace, DirectedPerCycle, UndirectedPerCycle };

template <Ring R>
struct CycleCounts {
  /// t_k: sum over vertices of the z^k coefficient of the closed series.
  std::map<std::size_t, typename R::value_type> raw_trace;
  /// t_k / k: one per directed cycle.
  std::map<std::size_t, typename R::value_type> directed;
  /// Present for undirected inputs: t_k / (2k) for k >= 3, t_k / k for k in {1, 2}.
  std::map<std::size_t, typename R::value_type> undirected;
  /// Lengths whose undirected count is degenerate (self-loops, backtracks).
  std::vector<std::size_t> degenerate_lengths;
  Orientation orientation = Orientation::Directed;

  friend bool operator==(const CycleCounts&, const CycleCounts&) = default;
};

namespace detail {

template <Ring R>
typename R::value_type divide_or_fail(const typename R::value_type& a, const BigInt& d, const std::string& what) {
  if constexpr (!R::kDivision) {
    throw CapabilityError(std::string("ring '") + std::string(R::name) + "' does not support division (" + what + ")");
  } else {
    auto q = R::divide_exact(a, d);
    if (!q) throw SelfCheckError("non-exact division by " + to_decimal(d) + " in " + what);
    return *q;
  }
}

}  // namespace detail

/// Cycle counts by length from the closed series. Entries with a zero trace
/// are listed too, so every length 1..cap appears.
template <Ring R>
CycleCounts<R> cycle_counts(const PathSeriesResult<R>& res) {
  if constexpr (!R::kDivision) {
    throw CapabilityError(std::string("cycle counts need exact division, unavailable in ring '") +
                          std::string(R::name) + "'");
  } else {
    CycleCounts<R> out;
    out.orientation = res.orientation;
    for (std::size_t k = 1; k <= res.cap; ++k) {
      auto t = R::zero();
      for (const auto& [v, p] : res.closed) R::add_to(t, p[k]);
      auto c = detail::divide_or_fail<R>(t, BigInt(static_cast<unsigned long>(k)), "trace normalization");
      if (res.orientation == Orientation::UndirectedExpanded)
        out.undirected[k] = k >= 3 ? detail::divide_or_fail<R>(c, BigInt(2), "undirected normalization") : c;
      out.raw_trace[k] = std::move(t);
      out.directed[k] = std::move(c);
    }
    if (res.orientation == Orientation::UndirectedExpanded) out.degenerate_lengths = {1, 2};
    return out;
  }
}

template <Ring R>
struct HamiltonianResult {
  using value_type = typename R::value_type;
  std::size_t n = 0;
  std::vector<value_type> h_op;  // n x n, zero diagonal
  value_type ham_cycles = R::zero();
  std::vector<value_type> h;  // h_op + ham_cycles * identity

  const value_type& op(std::size_t i, std::size_t j) const { return h_op[i * n + j]; }
  const value_type& full(std::size_t i, std::size_t j) const { return h[i * n + j]; }

  friend bool operator==(const HamiltonianResult& a, const HamiltonianResult& b) {
    return a.n == b.n && a.h_op == b.h_op && a.ham_cycles == b.ham_cycles && a.h == b.h;
  }
};

template <Ring R>
HamiltonianResult<R> make_hamiltonian_result(std::size_t n, std::vector<typename R::value_type> h_op,
                                             typename R::value_type cycles) {
  HamiltonianResult<R> out;
  out.n = n;
  out.h = h_op;
  for (std::size_t i = 0; i < n; ++i) out.h[i * n + i] = cycles;
  out.h_op = std::move(h_op);
  out.ham_cycles = std::move(cycles);
  return out;
}

/// Hamiltonian path matrix and cycle count from the weakly connected
/// dominating sets D: H_op = sum (-1)^{n-|D|} W_D^{n-1} and
/// cycles = (1/n) sum (-1)^{n-|D|} Tr(W_D^n).
template <Ring R>
HamiltonianResult<R> hamiltonian_matrices(const Graph<R>& g, const EngineOptions& opt = {}, RunStats* stats = nullptr) {
  using V = typename R::value_type;
  if constexpr (!R::kDivision) {
    throw CapabilityError(std::string("Hamiltonian cycle counts need exact division, unavailable in ring '") +
                          std::string(R::name) + "'");
  } else {
    const std::size_t n = g.vertex_count();
    if (n == 1) {
      if (stats) stats->visited_sets = 1;
      return make_hamiltonian_result<R>(1, {R::zero()}, g.entry(0, 0));
    }

    struct Partial {
      std::vector<V> m;
      V trace_sum;
      std::uint64_t visited = 0;
    };
    const std::size_t workers = std::max<std::size_t>(1, opt.threads);
    struct WorkerState {
      ConnectedSetEnumerator enumerator;
      detail::PowerWorkspace<R> ws;
      std::vector<Vertex> sorted;
    };
    std::vector<std::unique_ptr<WorkerState>> states;
    for (std::size_t t = 0; t < workers; ++t)
      states.push_back(std::make_unique<WorkerState>(
          WorkerState{ConnectedSetEnumerator(g, n, true, opt.cancel), detail::PowerWorkspace<R>(n), {}}));

    std::vector<V> m(n * n, R::zero());
    V trace_sum = R::zero();
    std::uint64_t visited = 0;
    ordered_root_reduce(
        n, workers,
        [&](std::size_t root, std::size_t id) {
          Partial part{std::vector<V>(n * n, R::zero()), R::zero(), 0};
          WorkerState& st = *states[id];
          part.visited = st.enumerator.run_root(static_cast<Vertex>(root), [&](const ConnectedSetVisit& v) {
            st.sorted.assign(v.members.begin(), v.members.end());
            std::sort(st.sorted.begin(), st.sorted.end());
            const std::size_t s = st.sorted.size();
            const BigInt sign((n - s) % 2 == 0 ? 1 : -1);
            st.ws.load(g, st.sorted);
            bool nonzero = !st.ws.power_is_zero();
            for (std::size_t d = 2; d <= n - 1 && nonzero; ++d) nonzero = st.ws.step();
            if (!nonzero) return;
            for (std::size_t i = 0; i < s; ++i)
              for (std::size_t j = 0; j < s; ++j)
                R::add_scaled(part.m[st.sorted[i] * n + st.sorted[j]], sign, st.ws.power(i, j));
            if (!st.ws.step()) return;
            for (std::size_t i = 0; i < s; ++i) R::add_scaled(part.trace_sum, sign, st.ws.power(i, i));
          });
          return part;
        },
        [&](Partial&& part) {
          for (std::size_t e = 0; e < n * n; ++e) R::add_to(m[e], part.m[e]);
          R::add_to(trace_sum, part.trace_sum);
          visited += part.visited;
        },
        opt.cancel);

    if (stats) stats->visited_sets = visited;
    auto& counters = self_check_counters();
    counters.performed.fetch_add(1, std::memory_order_relaxed);
    if constexpr (R::kExact) {
      for (std::size_t i = 0; i < n; ++i)
        if (!R::is_zero(m[i * n + i])) {
          counters.failed.fetch_add(1, std::memory_order_relaxed);
          throw SelfCheckError("Hamiltonian open matrix has a nonzero diagonal at vertex " + std::to_string(i));
        }
    }
    for (std::size_t i = 0; i < n; ++i) m[i * n + i] = R::zero();
    V cycles = detail::divide_or_fail<R>(trace_sum, BigInt(static_cast<unsigned long>(n)), "Hamiltonian cycle count");
    return make_hamiltonian_result<R>(n, std::move(m), std::move(cycles));
  }
}

/// Undirected k-cycle count by the subset formula
/// (1/2k) sum_{i=0}^{k} (-1)^{k-i} C(n-i, n-k) sum_{|S|=i} Tr(W_S^k).
/// The inner sum runs over sets of size i; indexing it by n-i instead
/// breaks the match with the closed series (the triangle would give -1).
template <Ring R>
typename R::value_type perepechko_check(const Graph<R>& g, std::size_t k,
                                        std::size_t reference_limit = kDefaultReferenceLimit) {
  using V = typename R::value_type;
  const std::size_t n = g.vertex_count();
  if (g.orientation() != Orientation::UndirectedExpanded)
    throw UsageError("perepechko_check requires an undirected (bidirected) graph");
  if (k < 3 || k > n) throw UsageError("perepechko_check requires 3 <= k <= n");
  check_reference_limit(n, reference_limit);
  std::vector<V> trace_by_size(n + 1, R::zero());
  detail::PowerWorkspace<R> ws(n);
  for (Vertex r = 0; r < n; ++r) {
    enumerate_subsets_with_root(n, r, [&](std::uint64_t mask) {
      const auto members = VertexSet::from_mask(n, mask).to_vector();
      ws.load(g, members);
      bool nonzero = !ws.power_is_zero();
      for (std::size_t d = 2; d <= k && nonzero; ++d) nonzero = ws.step();
      if (!nonzero) return;
      for (std::size_t i = 0; i < members.size(); ++i) R::add_to(trace_by_size[members.size()], ws.power(i, i));
    });
  }
  V total = R::zero();
  for (std::size_t i = 0; i <= k; ++i) {
    BigInt c = binomial(static_cast<std::int64_t>(n - i), static_cast<std::int64_t>(n - k));
    if ((k - i) % 2 == 1) c = -c;
    R::add_scaled(total, c, trace_by_size[i]);
  }
  return detail::divide_or_fail<R>(total, BigInt(static_cast<unsigned long>(2 * k)), "undirected cycle formula");
}

/// Inclusion-exclusion weight of a path with v distinct vertices and length
/// len, summed over supersets S of its vertex set:
/// sum_s C(n-v, s-v) C(n-s, len+1-s) (-1)^{len+1-s} (open), with len in
/// place of len+1 for cycles. Evaluates to 1 exactly on simple paths.
BigInt ie_indicator(std::size_t n_total, std::size_t v, std::size_t len, bool closed);

}  // namespace simplepaths
