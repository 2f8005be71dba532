#pragma once

// Decomposition-number representation of numerical semigroups.
//
// A semigroup S of genus g <= G is stored as the table
//   delta[x] = d_S(x) = #{ y in S : x - y in S, 2y <= x },  x in [0, 3G]
// together with cached conductor, genus and multiplicity. Membership,
// irreducibility and all structural data are read off the table, and the
// son S \ {x} is obtained from the parent with one byte-lane pass.

#include <algorithm>
#include <array>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <cstring>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "numsg/kernel.hpp"

namespace numsg {

/// Largest supported genus bound: 1 + floor(3G/2) must fit one byte lane.
inline constexpr unsigned kMaxGenus = 169;

/// Thrown when a genus bound or index leaves the supported range.
class bound_error : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Maximum genus explored. Valid values are [0, kMaxGenus].
class GenusBound {
 public:
  explicit GenusBound(unsigned genus) : genus_(genus) {
    if (genus > kMaxGenus) {
      throw bound_error("genus bound " + std::to_string(genus) + " exceeds the supported maximum " +
                        std::to_string(kMaxGenus));
    }
  }

  unsigned value() const noexcept { return genus_; }
  /// Largest table index, 3G.
  std::size_t top() const noexcept { return 3u * genus_; }
  std::size_t table_size() const noexcept { return top() + 1; }

  friend bool operator==(GenusBound, GenusBound) = default;

 private:
  unsigned genus_;
};

/// Exact 8-bit decomposition counters d[0..3G]. Only the first size() lanes
/// are meaningful; copies move exactly those lanes.
class DecompTable {
 public:
  using lane_type = kernel::lane_t;
  static constexpr std::size_t kCapacity = 512;
  static_assert(kCapacity >= 3 * kMaxGenus + 1);

  DecompTable() noexcept = default;

  /// A zero-filled table of the given size.
  explicit DecompTable(std::size_t size) : size_(checked_size(size)) {
    std::memset(lanes_.data(), 0, size_);
  }

  DecompTable(const DecompTable& other) noexcept : size_(other.size_) {
    std::memcpy(lanes_.data(), other.lanes_.data(), size_);
  }

  DecompTable& operator=(const DecompTable& other) noexcept {
    size_ = other.size_;
    std::memmove(lanes_.data(), other.lanes_.data(), size_);
    return *this;
  }

  std::size_t size() const noexcept { return size_; }
  bool empty() const noexcept { return size_ == 0; }

  lane_type operator[](std::size_t i) const noexcept {
    assert(i < size_);
    return lanes_[i];
  }
  lane_type& operator[](std::size_t i) noexcept {
    assert(i < size_);
    return lanes_[i];
  }

  const lane_type* data() const noexcept { return lanes_.data(); }
  lane_type* data() noexcept { return lanes_.data(); }

  std::span<const lane_type> lanes() const noexcept { return {lanes_.data(), size_}; }
  std::span<lane_type> lanes() noexcept { return {lanes_.data(), size_}; }

  friend bool operator==(const DecompTable& a, const DecompTable& b) noexcept {
    return a.size_ == b.size_ && std::memcmp(a.lanes_.data(), b.lanes_.data(), a.size_) == 0;
  }

 private:
  static std::uint16_t checked_size(std::size_t size) {
    if (size > kCapacity) throw bound_error("decomposition table larger than lane capacity");
    return static_cast<std::uint16_t>(size);
  }

  std::uint16_t size_ = 0;
  // Lanes past size_ are never read.
  alignas(32) std::array<lane_type, kCapacity> lanes_;
};

namespace detail {
struct son_tag_t {
  explicit son_tag_t() = default;
};
inline constexpr son_tag_t son_tag{};
}  // namespace detail

/// One node of the semigroup tree: (conductor, genus, multiplicity, delta).
/// Values are immutable once built.
class Semigroup {
 public:
  /// Unchecked constructor; use validate() to audit hand-built values.
  Semigroup(unsigned conductor, unsigned genus, unsigned multiplicity, DecompTable delta)
      : c_(conductor), g_(genus), m_(multiplicity), delta_(std::move(delta)) {}

  /// Builds the son parent \ {x} in place. See son().
  template <class Kernel>
  Semigroup(detail::son_tag_t, const Semigroup& parent, unsigned x, Kernel)
      : c_(x + 1),
        g_(parent.g_ + 1),
        m_(x > parent.m_ ? parent.m_ : parent.m_ + 1),
        delta_(parent.delta_) {
    const std::size_t size = delta_.size();
    // Only lanes y >= x change: T.d[y] -= (S.d[y - x] > 0).
    const std::size_t len = x < size ? size - x : 0;
    Kernel::apply(parent.delta_.data(), delta_.data() + x, len);
  }

  unsigned conductor() const noexcept { return c_; }
  unsigned genus() const noexcept { return g_; }
  unsigned multiplicity() const noexcept { return m_; }
  const DecompTable& delta() const noexcept { return delta_; }

  /// The bound G the table was sized for (size = 3G + 1).
  unsigned bound() const noexcept {
    return delta_.empty() ? 0 : static_cast<unsigned>((delta_.size() - 1) / 3);
  }

  friend bool operator==(const Semigroup&, const Semigroup&) = default;

 private:
  std::uint16_t c_;
  std::uint16_t g_;
  std::uint16_t m_;
  DecompTable delta_;
};

/// The root of the tree, N = <1>, ready for exploration up to genus G.
/// The conductor is cached as 1 so that the first candidate window is [1, 2).
inline Semigroup root(GenusBound bound) {
  DecompTable delta(bound.table_size());
  for (std::size_t x = 0; x < delta.size(); ++x) {
    delta[x] = static_cast<DecompTable::lane_type>(1 + x / 2);
  }
  return Semigroup(1, 0, 1, std::move(delta));
}

/// The son S \ {x}. Requires S.genus() < G, x in [c, c + m) and delta[x] == 1.
/// Precondition violations are caught by assertions in debug builds; release
/// builds never write outside the table.
template <class Kernel = kernel::VectorKernel>
Semigroup son(const Semigroup& s, unsigned x, GenusBound bound) {
  assert(s.delta().size() == bound.table_size());
  assert(s.genus() < bound.value());
  assert(x >= s.conductor() && x < s.conductor() + s.multiplicity());
  assert(x < s.delta().size() && s.delta()[x] == 1);
  (void)bound;
  return Semigroup(detail::son_tag, s, x, Kernel{});
}

/// Calls f(x) for each removable generator x, in increasing order.
template <class F>
void for_each_son_candidate(const Semigroup& s, F&& f) {
  const auto& d = s.delta();
  const std::size_t end = std::min<std::size_t>(s.conductor() + s.multiplicity(), d.size());
  for (std::size_t x = s.conductor(); x < end; ++x) {
    if (d[x] == 1) f(static_cast<unsigned>(x));
  }
}

/// Irreducible elements in [c, c + m), i.e. the x whose removal yields a son.
inline std::vector<unsigned> son_candidates(const Semigroup& s) {
  std::vector<unsigned> out;
  for_each_son_candidate(s, [&](unsigned x) { out.push_back(x); });
  return out;
}

/// 1 + the largest index with d = 0, or 0 when there is none (N).
inline unsigned derive_conductor(const DecompTable& d) {
  unsigned c = 0;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i] == 0) c = static_cast<unsigned>(i + 1);
  }
  return c;
}

inline unsigned derive_genus(const DecompTable& d) {
  unsigned g = 0;
  for (std::size_t i = 0; i < d.size(); ++i) g += d[i] == 0;
  return g;
}

/// Least i >= 1 with d[i] > 0. Indices past the table count as members, so a
/// one-lane table (G = 0) yields 1.
inline unsigned derive_multiplicity(const DecompTable& d) {
  for (std::size_t i = 1; i < d.size(); ++i) {
    if (d[i] > 0) return static_cast<unsigned>(i);
  }
  return static_cast<unsigned>(std::max<std::size_t>(d.size(), 1));
}

/// { i >= 1 : d[i] = 1 }, the minimal generating set. Index 0 has d = 1 but
/// is never irreducible.
inline std::vector<unsigned> derive_irreducibles(const DecompTable& d) {
  std::vector<unsigned> out;
  for (std::size_t i = 1; i < d.size(); ++i) {
    if (d[i] == 1) out.push_back(static_cast<unsigned>(i));
  }
  return out;
}

/// Membership test. Every n past the table exceeds 2G >= c and belongs to S.
inline bool contains(const Semigroup& s, std::size_t n) {
  return n >= s.delta().size() || s.delta()[n] > 0;
}

/// Gaps of S in increasing order.
inline std::vector<unsigned> gaps(const Semigroup& s) {
  std::vector<unsigned> out;
  const auto& d = s.delta();
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i] == 0) out.push_back(static_cast<unsigned>(i));
  }
  return out;
}

inline std::vector<unsigned> generators(const Semigroup& s) {
  auto irr = derive_irreducibles(s.delta());
  // G = 0 tables hold no index >= 1; N is still generated by 1.
  if (irr.empty() && s.genus() == 0) irr.push_back(1);
  return irr;
}

/// A failed consistency check. `check` is a stable identifier.
struct Violation {
  std::string check;
  std::string detail;
};

/// Cross-checks the cached (c, g, m) against the table and audits the
/// structural bounds. Returns an empty list when everything holds.
///
/// Checks: "table-size", "d[0]=1", "lane-bound" (d[x] <= 1 + x/2),
/// "genus", "conductor", "multiplicity", "c<=2g", "m<=g+1".
inline std::vector<Violation> validate(const Semigroup& s) {
  std::vector<Violation> out;
  auto fail = [&](std::string check, std::string detail) {
    out.push_back({std::move(check), std::move(detail)});
  };
  const auto& d = s.delta();
  if (d.empty() || (d.size() - 1) % 3 != 0) {
    fail("table-size", "table size " + std::to_string(d.size()) + " is not 3G+1");
    return out;
  }
  if (d[0] != 1) fail("d[0]=1", "d[0] = " + std::to_string(d[0]));
  for (std::size_t x = 0; x < d.size(); ++x) {
    if (d[x] > 1 + x / 2) {
      fail("lane-bound", "d[" + std::to_string(x) + "] = " + std::to_string(d[x]) + " > " +
                             std::to_string(1 + x / 2));
    }
  }

  const unsigned g = derive_genus(d);
  const unsigned c = derive_conductor(d);
  const unsigned m = derive_multiplicity(d);
  if (g != s.genus()) {
    fail("genus", "cached " + std::to_string(s.genus()) + ", derived " + std::to_string(g));
  }
  // The root caches c = 1 while the table says c(N) = 0.
  const unsigned expected_c = (g == 0 && c == 0) ? 1 : c;
  if (expected_c != s.conductor()) {
    fail("conductor",
         "cached " + std::to_string(s.conductor()) + ", derived " + std::to_string(c));
  }
  if (m != s.multiplicity()) {
    fail("multiplicity",
         "cached " + std::to_string(s.multiplicity()) + ", derived " + std::to_string(m));
  }
  if (g >= 1 && c > 2 * g) {
    fail("c<=2g", "c = " + std::to_string(c) + ", g = " + std::to_string(g));
  }
  if (m > g + 1) fail("m<=g+1", "m = " + std::to_string(m) + ", g = " + std::to_string(g));
  return out;
}

}  // namespace numsg
