#pragma once

#include <algorithm>
#include <condition_variable>
#include <cstddef>
#include <exception>
#include <map>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

#include "simplepaths/subgraph_enum.hpp"

namespace simplepaths {

/// Map-reduce over roots 0..roots-1: work(root, worker) builds a partial
/// result, merge(partial) folds it into the caller's accumulator. Partials
/// are merged strictly in ascending root order whatever the worker count, so
/// the reduction order (and hence floating-point output) is fixed.
template <class Work, class Merge>
void ordered_root_reduce(std::size_t roots, std::size_t threads, Work&& work, Merge&& merge,
                         const CancelToken* cancel = nullptr) {
  using Partial = decltype(work(std::size_t{0}, std::size_t{0}));
  threads = std::max<std::size_t>(1, std::min(threads, roots));
  if (threads == 1) {
    for (std::size_t r = 0; r < roots; ++r) {
      if (cancel && cancel->stop_requested()) throw CancelledError("cancelled");
      merge(work(r, 0));
    }
    return;
  }

  const std::size_t window = 4 * threads;  // bound on partials held in memory
  std::mutex mu;
  std::condition_variable cv;
  std::map<std::size_t, Partial> ready;
  std::size_t next_claim = 0;
  std::size_t next_merge = 0;
  std::exception_ptr failure;

  auto worker = [&](std::size_t id) {
    for (;;) {
      std::size_t r;
      {
        std::unique_lock lock(mu);
        cv.wait(lock, [&] { return failure || next_claim >= roots || next_claim < next_merge + window; });
        if (failure || next_claim >= roots) return;
        r = next_claim++;
      }
      try {
        Partial p = work(r, id);
        std::lock_guard lock(mu);
        ready.emplace(r, std::move(p));
      } catch (...) {
        std::lock_guard lock(mu);
        if (!failure) failure = std::current_exception();
      }
      cv.notify_all();
    }
  };

  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker, t);

  try {
    while (next_merge < roots) {
      std::optional<Partial> p;
      {
        std::unique_lock lock(mu);
        cv.wait(lock, [&] { return failure || ready.count(next_merge) > 0; });
        if (failure) break;
        auto it = ready.find(next_merge);
        p.emplace(std::move(it->second));
        ready.erase(it);
      }
      merge(std::move(*p));
      {
        std::lock_guard lock(mu);
        ++next_merge;
      }
      cv.notify_all();
    }
  } catch (...) {
    std::lock_guard lock(mu);
    if (!failure) failure = std::current_exception();
  }
  cv.notify_all();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace simplepaths
