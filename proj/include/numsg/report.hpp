#pragma once

// Output records for count results: genus, n_g and the ratio n_g / n_{g-1}
// truncated to five decimals, rendered as an aligned table, CSV or JSON.

#include <algorithm>
#include <cstdint>
#include <iomanip>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include <nlohmann/json.hpp>

#include "numsg/core.hpp"
#include "numsg/explorer.hpp"

namespace numsg::report {

struct OutputRecord {
  unsigned genus;
  std::uint64_t count;
  std::string ratio;  // empty for genus 0

  friend bool operator==(const OutputRecord&, const OutputRecord&) = default;
};

/// num / den truncated (not rounded) to `digits` decimals, always printing
/// exactly `digits` of them: 23/12 -> "1.91666". Empty when den is 0.
inline std::string truncated_ratio(std::uint64_t num, std::uint64_t den, unsigned digits = 5) {
  if (den == 0) return {};
  unsigned __int128 scale = 1;
  for (unsigned i = 0; i < digits; ++i) scale *= 10;
  const unsigned __int128 scaled = static_cast<unsigned __int128>(num) * scale / den;
  const auto whole = static_cast<std::uint64_t>(scaled / scale);
  auto frac = static_cast<std::uint64_t>(scaled % scale);

  std::string frac_digits(digits, '0');
  for (unsigned i = digits; i-- > 0;) {
    frac_digits[i] = static_cast<char>('0' + frac % 10);
    frac /= 10;
  }
  return digits == 0 ? std::to_string(whole) : std::to_string(whole) + "." + frac_digits;
}

inline std::vector<OutputRecord> records(std::span<const std::uint64_t> counts) {
  std::vector<OutputRecord> out;
  out.reserve(counts.size());
  for (std::size_t g = 0; g < counts.size(); ++g) {
    out.push_back({static_cast<unsigned>(g), counts[g],
                   g == 0 ? std::string{} : truncated_ratio(counts[g], counts[g - 1])});
  }
  return out;
}

inline std::vector<OutputRecord> records(const GenusCounts& counts) {
  return records(counts.values());
}

enum class Format { table, csv, json };

inline Format parse_format(std::string_view name) {
  if (name == "table") return Format::table;
  if (name == "csv") return Format::csv;
  if (name == "json") return Format::json;
  throw std::invalid_argument("unknown format '" + std::string(name) + "'");
}

inline nlohmann::json to_json(std::span<const OutputRecord> rows) {
  auto out = nlohmann::json::array();
  for (const auto& r : rows) {
    out.push_back({{"genus", r.genus}, {"count", r.count}, {"ratio", r.ratio}});
  }
  return out;
}

inline void write_counts(std::ostream& os, std::span<const OutputRecord> rows, Format format) {
  switch (format) {
    case Format::csv:
      os << "genus,count,ratio\n";
      for (const auto& r : rows) os << r.genus << ',' << r.count << ',' << r.ratio << '\n';
      break;
    case Format::json:
      os << to_json(rows).dump(2) << '\n';
      break;
    case Format::table:
      os << std::setw(4) << "g" << "  " << std::setw(20) << "n_g" << "  " << "n_g/n_{g-1}\n";
      for (const auto& r : rows) {
        os << std::setw(4) << r.genus << "  " << std::setw(20) << r.count << "  " << r.ratio
           << '\n';
      }
      break;
  }
}

/// One line of `numsg list`.
struct SemigroupRecord {
  unsigned genus;
  unsigned conductor;  // 0 for N
  unsigned multiplicity;
  std::vector<unsigned> generators;
  std::vector<unsigned> gaps;

  friend bool operator==(const SemigroupRecord&, const SemigroupRecord&) = default;
};

/// Every semigroup of genus <= bound, ordered by genus and then by sorted gap
/// list. Sorted gaps are the removal path from the root, so within a layer
/// this is the tree's left-to-right order.
inline std::vector<SemigroupRecord> list_semigroups(GenusBound bound) {
  std::vector<SemigroupRecord> rows;
  walk(bound, [&](const Semigroup& s) {
    rows.push_back({s.genus(), s.genus() == 0 ? 0u : s.conductor(), s.multiplicity(),
                    generators(s), gaps(s)});
  });
  std::sort(rows.begin(), rows.end(), [](const SemigroupRecord& a, const SemigroupRecord& b) {
    return std::tie(a.genus, a.gaps) < std::tie(b.genus, b.gaps);
  });
  return rows;
}

namespace detail {
inline std::string join(std::span<const unsigned> v, char sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(v[i]);
  }
  return out;
}
}  // namespace detail

inline void write_semigroups(std::ostream& os, std::span<const SemigroupRecord> rows,
                             Format format) {
  switch (format) {
    case Format::csv:
      os << "genus,conductor,multiplicity,generators,gaps\n";
      for (const auto& r : rows) {
        os << r.genus << ',' << r.conductor << ',' << r.multiplicity << ','
           << detail::join(r.generators, ' ') << ',' << detail::join(r.gaps, ' ') << '\n';
      }
      break;
    case Format::json: {
      auto out = nlohmann::json::array();
      for (const auto& r : rows) {
        out.push_back({{"genus", r.genus},
                       {"conductor", r.conductor},
                       {"multiplicity", r.multiplicity},
                       {"generators", r.generators},
                       {"gaps", r.gaps}});
      }
      os << out.dump(2) << '\n';
      break;
    }
    case Format::table:
      for (const auto& r : rows) {
        os << "g=" << r.genus << " c=" << r.conductor << " m=" << r.multiplicity << " <"
           << detail::join(r.generators, ',') << "> gaps={" << detail::join(r.gaps, ',')
           << "}\n";
      }
      break;
  }
}

}  // namespace numsg::report
