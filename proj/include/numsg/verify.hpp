#pragma once

// Self-check suites behind `numsg verify`: the fast decomposition-table path
// against the brute-force oracle and the structural invariants, at small genus.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "numsg/core.hpp"
#include "numsg/explorer.hpp"
#include "numsg/kernel.hpp"
#include "numsg/known_counts.hpp"
#include "numsg/oracle.hpp"
#include "numsg/parallel.hpp"

namespace numsg::verify {

struct SuiteResult {
  std::string name;
  bool passed = true;
  std::string detail;  // first failure, empty on success
};

struct Options {
  unsigned genus = 12;
  /// Test hook: every audited node has this lane flipped (zero <-> nonzero)
  /// before the checks run.
  std::optional<std::size_t> corrupt_lane;
  unsigned kernel_cases = 2000;
  std::uint64_t seed = 0x5eed;
};

namespace detail {

inline std::string join(const std::vector<unsigned>& v) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << '}';
  return os.str();
}

class Recorder {
 public:
  explicit Recorder(std::string name) { result_.name = std::move(name); }
  void fail(const std::string& what) {
    if (result_.passed) result_.detail = what;
    result_.passed = false;
  }
  bool ok() const { return result_.passed; }
  SuiteResult done() { return std::move(result_); }

 private:
  SuiteResult result_;
};

inline Semigroup maybe_corrupt(const Semigroup& s, const Options& opt) {
  if (!opt.corrupt_lane) return s;
  DecompTable t = s.delta();
  const std::size_t lane = *opt.corrupt_lane;
  if (lane >= t.size()) throw bound_error("corrupt lane index beyond the table");
  t[lane] = t[lane] == 0 ? 1 : 0;
  return Semigroup(s.conductor(), s.genus(), s.multiplicity(), std::move(t));
}

inline std::vector<Semigroup> collect(GenusBound bound) {
  std::vector<Semigroup> nodes;
  walk(bound, [&](const Semigroup& s) { nodes.push_back(s); });
  return nodes;
}

}  // namespace detail

inline SuiteResult check_counts(GenusBound bound) {
  detail::Recorder rec("counts");
  const auto fast = count(bound);
  const auto naive = oracle::naive_enumerate(bound.value());
  for (unsigned g = 0; g <= bound.value(); ++g) {
    if (fast[g] != kKnownCounts[g] || naive[g].size() != kKnownCounts[g]) {
      rec.fail("genus " + std::to_string(g) + ": count " + std::to_string(fast[g]) + ", oracle " +
               std::to_string(naive[g].size()) + ", published " + std::to_string(kKnownCounts[g]));
    }
  }
  return rec.done();
}

inline SuiteResult check_enumeration(GenusBound bound, const std::vector<Semigroup>& nodes) {
  detail::Recorder rec("enumeration");
  std::map<oracle::GapSet, long> balance;
  for (const auto& s : nodes) ++balance[gaps(s)];
  for (const auto& layer : oracle::naive_enumerate(bound.value())) {
    for (const auto& gs : layer) --balance[gs];
  }
  for (const auto& [gs, n] : balance) {
    if (n != 0) rec.fail("gap set " + detail::join(gs) + " multiplicity differs by " + std::to_string(n));
  }
  return rec.done();
}

inline SuiteResult check_delta(GenusBound bound, const std::vector<Semigroup>& nodes,
                               const Options& opt) {
  detail::Recorder rec("delta-vs-oracle");
  const unsigned B = oracle::oracle_bound(bound.value());
  for (const auto& node : nodes) {
    const Semigroup s = detail::maybe_corrupt(node, opt);
    const auto gens = generators(node);
    try {
      const auto naive = oracle::closure(gens, B);
      if (naive.gaps() != gaps(node)) {
        rec.fail("closure of " + detail::join(gens) + " does not reproduce gaps " +
                 detail::join(gaps(node)));
      }
      for (unsigned x = 0; x < s.delta().size(); ++x) {
        const unsigned want = oracle::naive_decomp(naive, x);
        if (s.delta()[x] != want) {
          rec.fail("gaps " + detail::join(gaps(node)) + ": d[" + std::to_string(x) + "] = " +
                   std::to_string(s.delta()[x]) + ", oracle " + std::to_string(want));
          break;
        }
      }
    } catch (const std::exception& e) {
      rec.fail("gaps " + detail::join(gaps(node)) + ": " + e.what());
    }
  }
  return rec.done();
}

inline SuiteResult check_invariants(GenusBound bound, const std::vector<Semigroup>& nodes,
                                    const Options& opt) {
  detail::Recorder rec("invariants");
  const unsigned B = oracle::oracle_bound(bound.value());
  for (const auto& node : nodes) {
    const Semigroup s = detail::maybe_corrupt(node, opt);
    const std::string where = "gaps " + detail::join(gaps(node)) + ": ";
    for (const auto& v : validate(s)) rec.fail(where + v.check + " (" + v.detail + ")");

    const auto cands = son_candidates(s);
    if (cands.size() > s.multiplicity()) rec.fail(where + "more sons than the multiplicity");

    if (s.genus() >= 1) {
      const unsigned c = s.conductor();
      for (unsigned x = 0; x < c; ++x) {
        if (contains(s, x) && contains(s, c - 1 - x)) {
          rec.fail(where + "gap symmetry broken at " + std::to_string(x));
        }
      }
    }

    try {
      const auto naive = oracle::from_gaps(gaps(s), B);
      const auto app = oracle::apery_set(naive);
      if (app.size() != naive.multiplicity()) rec.fail(where + "|Apery set| != m");
      for (unsigned x : oracle::naive_irreducibles(naive)) {
        if (x != naive.multiplicity() && !std::binary_search(app.begin(), app.end(), x)) {
          rec.fail(where + "irreducible " + std::to_string(x) + " outside the Apery set");
        }
      }
      std::vector<unsigned> expect;
      for (unsigned x : oracle::naive_irreducibles(naive)) {
        if (x >= s.conductor()) expect.push_back(x);
      }
      // Nodes at the bound are never expanded.
      if (s.genus() < bound.value() && cands != expect) {
        rec.fail(where + "son candidates " + detail::join(cands) + ", oracle " +
                 detail::join(expect));
      }
    } catch (const std::exception& e) {
      rec.fail(where + e.what());
    }
  }
  return rec.done();
}

inline SuiteResult check_kernel(const Options& opt) {
  detail::Recorder rec("kernel");
  std::mt19937_64 rng(opt.seed);
  std::uniform_int_distribution<int> lane(0, 255);
  std::uniform_int_distribution<std::size_t> length(0, 512);
  std::uniform_int_distribution<std::size_t> offset(0, 31);
  std::bernoulli_distribution zero(0.4);
  for (unsigned n = 0; n < opt.kernel_cases && rec.ok(); ++n) {
    const std::size_t len = length(rng), so = offset(rng), dof = offset(rng);
    std::vector<kernel::lane_t> src(len + so + 8), dst(len + dof + 8);
    for (auto& v : src) v = zero(rng) ? 0 : static_cast<kernel::lane_t>(lane(rng));
    for (auto& v : dst) v = static_cast<kernel::lane_t>(1 + lane(rng) % 255);
    auto a = dst, b = dst;
    kernel::decrement_where_nonzero_scalar(std::span(src).subspan(so), std::span(a).subspan(dof), len);
    kernel::decrement_where_nonzero_vector(std::span(src).subspan(so), std::span(b).subspan(dof), len);
    if (a != b) rec.fail("mismatch at case " + std::to_string(n) + " (len " + std::to_string(len) + ")");
  }
  return rec.done();
}

inline SuiteResult check_parallel(GenusBound bound) {
  detail::Recorder rec("parallel");
  const auto serial = count(bound);
  for (unsigned w : {1u, 2u, 4u}) {
    if (parallel_count(bound, w) != serial) {
      rec.fail("parallel_count with " + std::to_string(w) + " workers differs from count");
    }
  }
  return rec.done();
}

/// Runs every suite and returns one result per suite.
inline std::vector<SuiteResult> run(const Options& opt) {
  if (opt.genus > oracle::kMaxOracleGenus) {
    throw bound_error("verify is limited to genus " + std::to_string(oracle::kMaxOracleGenus));
  }
  const GenusBound bound(opt.genus);
  const auto nodes = detail::collect(bound);
  return {check_counts(bound),         check_enumeration(bound, nodes),
          check_delta(bound, nodes, opt), check_invariants(bound, nodes, opt),
          check_kernel(opt),           check_parallel(bound)};
}

}  // namespace numsg::verify
