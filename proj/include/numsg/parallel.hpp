#pragma once

// Frontier-based parallel counting.
//
// The ordinary semigroups O_g = {0} U [g+1, inf) form the leftmost spine of
// the tree. Each O_g (g >= 1) has g + 1 sons: O_{g+1} (removing x = g + 1)
// and g non-ordinary sons (x in [g+2, 2g+1]). The subtrees under those
// non-ordinary sons are disjoint and, together with the spine, cover the
// whole tree, so they can be counted independently and summed.

#include <atomic>
#include <exception>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "numsg/core.hpp"
#include "numsg/explorer.hpp"

namespace numsg {

/// The ordinary semigroup of genus g, reached from the root along the
/// ordinary chain (each step removes the conductor).
template <class Kernel = kernel::VectorKernel>
Semigroup ordinary(unsigned genus, GenusBound bound) {
  if (genus > bound.value()) {
    throw bound_error("ordinary semigroup of genus " + std::to_string(genus) +
                      " lies beyond the bound");
  }
  Semigroup s = root(bound);
  for (unsigned g = 0; g < genus; ++g) s = son<Kernel>(s, s.conductor(), bound);
  return s;
}

/// Unit of parallel work: a non-ordinary son of an ordinary semigroup.
struct SubtreeTask {
  Semigroup root;
  GenusBound bound;
};

/// Lazily produces the frontier tasks in (genus ascending, x ascending)
/// order. Not thread-safe; parallel_count serializes access.
template <class Kernel = kernel::VectorKernel>
class FrontierStream {
 public:
  explicit FrontierStream(GenusBound bound)
      : bound_(bound), spine_(root(bound)) {
    if (bound.value() >= 2) {
      spine_ = son<Kernel>(spine_, 1, bound_);
      next_x_ = 3;
    }
  }

  std::optional<SubtreeTask> next() {
    while (bound_.value() >= 2 && spine_.genus() + 1 <= bound_.value()) {
      const unsigned g = spine_.genus();
      if (next_x_ <= 2 * g + 1) {
        const unsigned x = next_x_++;
        return SubtreeTask{son<Kernel>(spine_, x, bound_), bound_};
      }
      if (g + 2 > bound_.value()) break;
      spine_ = son<Kernel>(spine_, spine_.conductor(), bound_);
      next_x_ = spine_.genus() + 2;
    }
    return std::nullopt;
  }

 private:
  GenusBound bound_;
  Semigroup spine_;
  unsigned next_x_ = 0;
};

/// All frontier tasks for the bound, materialized. Empty when G < 2.
template <class Kernel = kernel::VectorKernel>
std::vector<SubtreeTask> frontier_tasks(GenusBound bound) {
  std::vector<SubtreeTask> out;
  FrontierStream<Kernel> stream(bound);
  while (auto task = stream.next()) out.push_back(std::move(*task));
  return out;
}

/// Same result as count(bound), computed by `workers` threads pulling
/// frontier tasks from a shared stream. Each worker keeps private counts,
/// merged once at the end. A failing worker stops the run and its exception
/// is rethrown.
template <class Kernel = kernel::VectorKernel>
GenusCounts parallel_count(GenusBound bound, unsigned workers) {
  if (workers == 0) throw std::invalid_argument("parallel_count needs at least one worker");

  // The ordinary spine contributes one semigroup per genus.
  GenusCounts total(bound);
  for (unsigned g = 0; g <= bound.value(); ++g) total.tally(g);

  FrontierStream<Kernel> stream(bound);
  std::mutex stream_mutex;
  std::atomic<bool> failed{false};
  std::exception_ptr first_error;
  std::mutex error_mutex;

  std::vector<GenusCounts> partial(workers, GenusCounts(bound));
  auto work = [&](unsigned id) {
    try {
      for (;;) {
        if (failed.load(std::memory_order_relaxed)) return;
        std::optional<SubtreeTask> task;
        {
          std::lock_guard lock(stream_mutex);
          task = stream.next();
        }
        if (!task) return;
        partial[id] += count_from<Kernel>(task->root, task->bound);
      }
    } catch (...) {
      failed = true;
      std::lock_guard lock(error_mutex);
      if (!first_error) first_error = std::current_exception();
    }
  };

  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned id = 0; id < workers; ++id) pool.emplace_back(work, id);
  }
  if (first_error) std::rethrow_exception(first_error);

  for (const auto& p : partial) total += p;
  return total;
}

}  // namespace numsg
