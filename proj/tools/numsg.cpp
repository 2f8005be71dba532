// numsg: count, list and verify numerical semigroups by genus.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "numsg/numsg.hpp"
#include "numsg/report.hpp"
#include "numsg/verify.hpp"

namespace {

using numsg::GenusBound;
using numsg::GenusCounts;

enum class KernelChoice { scalar, vector };

KernelChoice parse_kernel(const std::string& name) {
  if (name == "scalar") return KernelChoice::scalar;
  if (name == "vector" || name == "auto") return KernelChoice::vector;
  throw std::invalid_argument("unknown kernel '" + name + "'");
}

std::string_view kernel_label(KernelChoice k) {
  return k == KernelChoice::scalar ? "scalar" : "vector";
}

// --threads wins over NUMSG_THREADS; the default is 1.
unsigned resolve_threads(std::optional<unsigned> flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("NUMSG_THREADS"); env && *env) {
    const long v = std::strtol(env, nullptr, 10);
    if (v < 1) throw std::invalid_argument("NUMSG_THREADS must be a positive integer");
    return static_cast<unsigned>(v);
  }
  return 1;
}

template <class Kernel>
GenusCounts run_count(GenusBound bound, unsigned threads) {
  return threads == 1 ? numsg::count<Kernel>(bound) : numsg::parallel_count<Kernel>(bound, threads);
}

GenusCounts run_count(GenusBound bound, unsigned threads, KernelChoice kernel) {
  return kernel == KernelChoice::scalar ? run_count<numsg::kernel::ScalarKernel>(bound, threads)
                                        : run_count<numsg::kernel::VectorKernel>(bound, threads);
}

int cmd_count(unsigned genus, std::optional<unsigned> threads_flag, const std::string& format,
              const std::string& kernel) {
  const GenusBound bound(genus);
  const unsigned threads = resolve_threads(threads_flag);
  const auto counts = run_count(bound, threads, parse_kernel(kernel));
  numsg::report::write_counts(std::cout, numsg::report::records(counts),
                              numsg::report::parse_format(format));
  return 0;
}

int cmd_list(unsigned genus, const std::string& format) {
  if (genus > numsg::oracle::kMaxOracleGenus) {
    throw numsg::bound_error("list is limited to genus " +
                             std::to_string(numsg::oracle::kMaxOracleGenus));
  }
  numsg::report::write_semigroups(std::cout, numsg::report::list_semigroups(GenusBound(genus)),
                                  numsg::report::parse_format(format));
  return 0;
}

int cmd_verify(unsigned genus, std::optional<std::size_t> corrupt_lane) {
  numsg::verify::Options opt;
  opt.genus = genus;
  opt.corrupt_lane = corrupt_lane;
  bool all = true;
  for (const auto& r : numsg::verify::run(opt)) {
    all = all && r.passed;
    std::cout << (r.passed ? "PASS " : "FAIL ") << r.name;
    if (!r.passed) std::cout << ": " << r.detail;
    std::cout << '\n';
  }
  std::cout << (all ? "all suites passed" : "verification failed") << " (genus <= " << genus
            << ")\n";
  return all ? 0 : 1;
}

int cmd_bench(unsigned genus, std::optional<unsigned> threads_flag, const std::string& kernel_name,
              unsigned from) {
  const unsigned threads = resolve_threads(threads_flag);
  const KernelChoice kernel = parse_kernel(kernel_name);
  std::cout << "# kernel=" << kernel_label(kernel);
  if (kernel == KernelChoice::vector) std::cout << " isa=" << numsg::kernel::vector_isa();
  std::cout << " threads=" << threads << '\n';
  std::cout << "genus,seconds,count\n";
  bool consistent = true;
  for (unsigned g = from; g <= genus; ++g) {
    const GenusBound bound(g);
    const auto start = std::chrono::steady_clock::now();
    const auto counts = run_count(bound, threads, kernel);
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    std::cout << g << ',' << elapsed.count() << ',' << counts.back() << '\n' << std::flush;
    if (g < numsg::kKnownCounts.size() && counts.back() != numsg::kKnownCounts[g]) {
      std::cerr << "numsg: count for genus " << g << " disagrees with the published value\n";
      consistent = false;
    }
  }
  return consistent ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Count and list numerical semigroups by genus"};
  app.require_subcommand(1);

  unsigned genus = 0;
  std::optional<unsigned> threads;
  std::string format = "table";
  std::string kernel = "auto";
  std::optional<std::size_t> corrupt_lane;
  unsigned from = 0;

  auto add_genus = [&](CLI::App* sub, unsigned max) {
    sub->add_option("-g,--genus", genus, "Maximum genus")
        ->required()
        ->check(CLI::Range(0u, max));
  };
  auto add_threads = [&](CLI::App* sub) {
    sub->add_option("-t,--threads", threads, "Worker threads (default 1, or NUMSG_THREADS)")
        ->check(CLI::PositiveNumber);
  };
  auto add_kernel = [&](CLI::App* sub) {
    sub->add_option("--kernel", kernel, "Son update kernel")
        ->check(CLI::IsMember({"scalar", "vector", "auto"}));
  };
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("-f,--format", format, "Output format")
        ->check(CLI::IsMember({"table", "csv", "json"}));
  };

  auto* count = app.add_subcommand("count", "Print n_g for every genus up to the bound");
  add_genus(count, numsg::kMaxGenus);
  add_threads(count);
  add_format(count);
  add_kernel(count);

  auto* list = app.add_subcommand("list", "List every semigroup up to a small genus");
  add_genus(list, numsg::oracle::kMaxOracleGenus);
  add_format(list);

  auto* verify = app.add_subcommand("verify", "Check the fast path against the brute-force oracle");
  add_genus(verify, numsg::oracle::kMaxOracleGenus);
  verify->add_option("--corrupt-lane", corrupt_lane,
                     "Test hook: flip this table lane in every audited node");

  auto* bench = app.add_subcommand("bench", "Time the exploration up to each genus");
  add_genus(bench, numsg::kMaxGenus);
  add_threads(bench);
  add_kernel(bench);
  bench->add_option("--from", from, "First genus to time");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    if (*count) return cmd_count(genus, threads, format, kernel);
    if (*list) return cmd_list(genus, format);
    if (*verify) return cmd_verify(genus, corrupt_lane);
    if (*bench) return cmd_bench(genus, threads, kernel, from);
  } catch (const std::exception& e) {
    std::cerr << "numsg: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
