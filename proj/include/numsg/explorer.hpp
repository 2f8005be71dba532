#pragma once

// Depth-first exploration of the semigroup tree up to a genus bound, with an
// explicit stack. Counting is a tallying visitor over the same traversal.

#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "numsg/core.hpp"

namespace numsg {

class overflow_error : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

/// n_g for g = 0..G, exact 64-bit counters.
class GenusCounts {
 public:
  using value_type = std::uint64_t;

  explicit GenusCounts(GenusBound bound) : counts_(bound.value() + 1, 0) {}

  GenusCounts(GenusBound bound, std::vector<value_type> counts) : counts_(std::move(counts)) {
    if (counts_.size() != bound.value() + 1) throw bound_error("count vector does not match bound");
  }

  std::size_t size() const noexcept { return counts_.size(); }
  unsigned bound() const noexcept { return static_cast<unsigned>(counts_.size() - 1); }
  value_type operator[](std::size_t g) const { return counts_.at(g); }
  value_type back() const noexcept { return counts_.back(); }
  std::span<const value_type> values() const noexcept { return counts_; }

  void tally(unsigned genus) {
    auto& slot = counts_.at(genus);
    if (slot == std::numeric_limits<value_type>::max()) {
      throw overflow_error("count for genus " + std::to_string(genus) + " overflowed");
    }
    ++slot;
  }

  GenusCounts& operator+=(const GenusCounts& other) {
    if (other.size() != size()) throw bound_error("merging counts with different bounds");
    for (std::size_t g = 0; g < counts_.size(); ++g) {
      if (counts_[g] > std::numeric_limits<value_type>::max() - other.counts_[g]) {
        throw overflow_error("count for genus " + std::to_string(g) + " overflowed");
      }
      counts_[g] += other.counts_[g];
    }
    return *this;
  }

  friend bool operator==(const GenusCounts&, const GenusCounts&) = default;

 private:
  std::vector<value_type> counts_;
};

/// Stack observer that does nothing; tests pass their own to audit the stack.
struct NoStackProbe {
  void operator()(std::span<const Semigroup>) const noexcept {}
};

/// Visits every descendant-or-self of `start` with genus <= bound, each
/// exactly once, depth first. Sons are pushed in increasing x. `probe` sees
/// the stack after each node's sons have been pushed. Exceptions thrown by
/// the visitor abort the walk and propagate.
template <class Kernel = kernel::VectorKernel, class Visitor, class Probe = NoStackProbe>
void walk_from(const Semigroup& start, GenusBound bound, Visitor&& visit, Probe&& probe = {}) {
  if (start.delta().size() != bound.table_size()) {
    throw bound_error("subtree root was built for a different genus bound");
  }
  if (start.genus() > bound.value()) throw bound_error("subtree root lies beyond the genus bound");

  const unsigned G = bound.value();
  std::vector<Semigroup> stack;
  stack.reserve(static_cast<std::size_t>(G) * (G + 1) / 2 + 1);
  stack.push_back(start);

  while (!stack.empty()) {
    const Semigroup current = stack.back();
    stack.pop_back();
    visit(static_cast<const Semigroup&>(current));
    if (current.genus() < G) {
      for_each_son_candidate(current, [&](unsigned x) {
        stack.emplace_back(detail::son_tag, current, x, Kernel{});
      });
      probe(std::span<const Semigroup>(stack));
    }
  }
}

/// Visits every semigroup of genus <= bound exactly once.
template <class Kernel = kernel::VectorKernel, class Visitor>
void walk(GenusBound bound, Visitor&& visit) {
  walk_from<Kernel>(root(bound), bound, std::forward<Visitor>(visit));
}

/// Per-genus counts restricted to the subtree rooted at `start`.
template <class Kernel = kernel::VectorKernel>
GenusCounts count_from(const Semigroup& start, GenusBound bound) {
  GenusCounts counts(bound);
  walk_from<Kernel>(start, bound, [&](const Semigroup& s) { counts.tally(s.genus()); });
  return counts;
}

/// n_0, ..., n_G.
template <class Kernel = kernel::VectorKernel>
GenusCounts count(GenusBound bound) {
  return count_from<Kernel>(root(bound), bound);
}

}  // namespace numsg
