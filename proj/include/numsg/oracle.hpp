#pragma once

// Brute-force reference implementations over explicit membership bitmaps.
// Deliberately naive: quadratic scans, recursion, no shared code with the
// decomposition-table path. Used to check the fast path and to produce
// expected values for tests.

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace numsg::oracle {

class not_numerical_semigroup : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

using GapSet = std::vector<unsigned>;

/// True when a + b is a member for all members a, b with a + b inside the bitmap.
inline bool closed_under_addition(const std::vector<bool>& member) {
  const std::size_t B = member.size() - 1;
  for (std::size_t a = 1; a <= B; ++a) {
    if (!member[a]) continue;
    for (std::size_t b = a; a + b <= B; ++b) {
      if (member[b] && !member[a + b]) return false;
    }
  }
  return true;
}

/// A numerical semigroup restricted to [0, B]. Everything above B is a member.
class NaiveSemigroup {
 public:
  /// Wraps a membership bitmap over [0, B]. Throws when 0 is missing, the set
  /// is not closed under addition inside [0, B], or the bitmap is too short
  /// to pin the conductor (it must end with a run of m members).
  explicit NaiveSemigroup(std::vector<bool> member) : member_(std::move(member)) {
    if (member_.empty() || !member_[0]) throw not_numerical_semigroup("0 must be a member");
    const std::size_t B = member_.size() - 1;
    if (!closed_under_addition(member_)) throw not_numerical_semigroup("not closed under addition");
    c_ = 0;
    g_ = 0;
    m_ = 0;
    for (std::size_t x = 0; x <= B; ++x) {
      if (!member_[x]) {
        c_ = static_cast<unsigned>(x + 1);
        ++g_;
      } else if (x > 0 && m_ == 0) {
        m_ = static_cast<unsigned>(x);
      }
    }
    if (m_ == 0 || c_ + m_ > B + 1) {
      throw std::out_of_range("bitmap bound " + std::to_string(B) +
                              " too small to certify the conductor");
    }
  }

  unsigned bound() const noexcept { return static_cast<unsigned>(member_.size() - 1); }
  bool contains(std::size_t x) const noexcept { return x >= member_.size() || member_[x]; }
  unsigned conductor() const noexcept { return c_; }
  unsigned genus() const noexcept { return g_; }
  unsigned multiplicity() const noexcept { return m_; }

  GapSet gaps() const {
    GapSet out;
    for (unsigned x = 0; x < c_; ++x) {
      if (!member_[x]) out.push_back(x);
    }
    return out;
  }

  const std::vector<bool>& bitmap() const noexcept { return member_; }

  /// S \ {x}; throws not_numerical_semigroup when the result is not closed.
  NaiveSemigroup without(unsigned x) const {
    auto member = member_;
    member.at(x) = false;
    return NaiveSemigroup(std::move(member));
  }

 private:
  std::vector<bool> member_;
  unsigned c_ = 0;
  unsigned g_ = 0;
  unsigned m_ = 0;
};

/// Bitmap bound used for trees up to genus G: 3G plus the largest possible
/// multiplicity G + 1.
inline unsigned oracle_bound(unsigned G) { return 3 * G + G + 1; }

/// Smallest additively closed set containing 0 and the generators, over [0, B].
inline NaiveSemigroup closure(std::span<const unsigned> generators, unsigned B) {
  unsigned gcd = 0;
  for (unsigned x : generators) {
    if (x == 0) throw not_numerical_semigroup("generators must be positive");
    gcd = std::gcd(gcd, x);
  }
  if (gcd != 1) {
    throw not_numerical_semigroup("generators have gcd " + std::to_string(gcd) +
                                  "; the complement is infinite");
  }
  std::vector<bool> member(B + 1, false);
  member[0] = true;
  for (unsigned x = 1; x <= B; ++x) {
    for (unsigned a : generators) {
      if (a <= x && member[x - a]) {
        member[x] = true;
        break;
      }
    }
  }
  return NaiveSemigroup(std::move(member));
}

inline NaiveSemigroup closure(std::initializer_list<unsigned> generators, unsigned B) {
  return closure(std::span<const unsigned>(generators.begin(), generators.size()), B);
}

/// The semigroup with exactly the given gaps, over [0, B].
inline NaiveSemigroup from_gaps(std::span<const unsigned> gap_set, unsigned B) {
  std::vector<bool> member(B + 1, true);
  for (unsigned x : gap_set) member.at(x) = false;
  return NaiveSemigroup(std::move(member));
}

/// #{ y : y in S, x - y in S, 2y <= x }.
inline unsigned naive_decomp(const NaiveSemigroup& s, unsigned x) {
  unsigned n = 0;
  for (unsigned y = 0; 2 * y <= x; ++y) {
    if (s.contains(y) && s.contains(x - y)) ++n;
  }
  return n;
}

/// Nonzero members that are not a sum of two nonzero members.
inline std::vector<unsigned> naive_irreducibles(const NaiveSemigroup& s) {
  std::vector<unsigned> out;
  // Irreducibles lie below c + m; the bitmap covers that range.
  const unsigned limit = s.conductor() + s.multiplicity();
  for (unsigned x = 1; x <= limit; ++x) {
    if (!s.contains(x)) continue;
    bool reducible = false;
    for (unsigned y = 1; y < x && !reducible; ++y) {
      reducible = s.contains(y) && s.contains(x - y);
    }
    if (!reducible) out.push_back(x);
  }
  return out;
}

/// { x in S : x - m not in S }, taking x - m < 0 as "not in S".
inline std::vector<unsigned> apery_set(const NaiveSemigroup& s) {
  std::vector<unsigned> out;
  const unsigned m = s.multiplicity();
  for (unsigned x = 0; x < s.conductor() + m; ++x) {
    if (s.contains(x) && (x < m || !s.contains(x - m))) out.push_back(x);
  }
  return out;
}

namespace detail {
inline void enumerate_into(const NaiveSemigroup& s, unsigned G,
                           std::vector<std::vector<GapSet>>& out) {
  out[s.genus()].push_back(s.gaps());
  if (s.genus() == G) return;
  for (unsigned x : naive_irreducibles(s)) {
    if (x >= s.conductor()) enumerate_into(s.without(x), G, out);
  }
}
}  // namespace detail

inline constexpr unsigned kMaxOracleGenus = 14;

/// Every semigroup of genus <= G as its gap set, grouped by genus.
inline std::vector<std::vector<GapSet>> naive_enumerate(unsigned G) {
  if (G > kMaxOracleGenus) {
    throw std::out_of_range("naive enumeration is limited to genus " +
                            std::to_string(kMaxOracleGenus));
  }
  std::vector<std::vector<GapSet>> out(G + 1);
  detail::enumerate_into(closure({1}, oracle_bound(G)), G, out);
  return out;
}

}  // namespace numsg::oracle
