#include "algsearch/stats.hpp"

#include <charconv>
#include <cmath>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace algsearch {

Interval wilson_interval(std::uint64_t hits, std::uint64_t trials, double z) {
  if (trials == 0) {
    return {0.0, 1.0};
  }
  const double n = static_cast<double>(trials);
  const double p = static_cast<double>(hits) / n;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / n;
  const double centre = (p + z2 / (2.0 * n)) / denom;
  const double half = z * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n)) / denom;
  // The bounds are exactly 0 and 1 at the extremes; rounding would leave dust.
  return {hits == 0 ? 0.0 : std::max(0.0, centre - half),
          hits == trials ? 1.0 : std::min(1.0, centre + half)};
}

double Bin::freq() const {
  if (reference >= 0.0) {
    return reference;
  }
  return trials == 0 ? 0.0 : static_cast<double>(hits) / static_cast<double>(trials);
}

Interval Bin::ci() const {
  if (reference >= 0.0) {
    return {reference, reference};
  }
  return wilson_interval(hits, trials);
}

std::uint64_t FrequencyTable::total_trials() const {
  std::uint64_t t = 0;
  for (const auto& b : bins) {
    t += b.trials;
  }
  return t;
}

std::uint64_t FrequencyTable::total_hits() const {
  std::uint64_t h = 0;
  for (const auto& b : bins) {
    h += b.hits;
  }
  return h;
}

std::pair<std::uint64_t, std::uint64_t> bin_bounds(std::uint64_t size, Binning binning) {
  if (binning == Binning::exact || size == 0) {
    return {size, size};
  }
  const std::uint64_t lo = std::uint64_t{1} << (63 - __builtin_clzll(size));
  return {lo, lo == (std::uint64_t{1} << 63) ? ~std::uint64_t{0} : 2 * lo - 1};
}

FrequencyTable aggregate(std::span<const Observation> observations, Binning binning,
                         std::string series) {
  std::map<std::uint64_t, Bin> bins;
  for (const auto& obs : observations) {
    const auto [lo, hi] = bin_bounds(obs.size, binning);
    Bin& bin = bins[lo];
    bin.lo = lo;
    bin.hi = hi;
    ++bin.trials;
    bin.hits += obs.hit ? 1 : 0;
  }
  FrequencyTable table{std::move(series), {}};
  for (auto& [lo, bin] : bins) {
    table.bins.push_back(bin);
  }
  return table;
}

std::string format_double(double value) {
  char buffer[64];
  const auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
  if (ec != std::errc()) {
    throw std::runtime_error("format_double failed");
  }
  return std::string(buffer, ptr);
}

void write_csv(std::ostream& out, std::span<const FrequencyTable> tables) {
  out << kCsvHeader << '\n';
  for (const auto& table : tables) {
    for (const auto& bin : table.bins) {
      const Interval ci = bin.ci();
      out << bin.lo << ',' << bin.hi << ',' << bin.trials << ',' << bin.hits << ','
          << format_double(bin.freq()) << ',' << format_double(ci.lo) << ','
          << format_double(ci.hi) << ',' << table.series << '\n';
    }
  }
}

std::vector<FrequencyTable> read_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kCsvHeader) {
    throw std::runtime_error("CSV header does not match: expected " + std::string(kCsvHeader));
  }
  std::vector<FrequencyTable> tables;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) {
      continue;
    }
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) {
      fields.push_back(field);
    }
    if (fields.size() != 8) {
      throw std::runtime_error("CSV line " + std::to_string(line_no) + ": expected 8 fields");
    }
    Bin bin;
    try {
      bin.lo = std::stoull(fields[0]);
      bin.hi = std::stoull(fields[1]);
      bin.trials = std::stoull(fields[2]);
      bin.hits = std::stoull(fields[3]);
      const double freq = std::stod(fields[4]);
      const double ci_lo = std::stod(fields[5]);
      const double ci_hi = std::stod(fields[6]);
      if (freq < 0.0 || freq > 1.0 || ci_lo > freq || freq > ci_hi) {
        throw std::runtime_error("frequency or interval out of range");
      }
      const double counted = bin.trials == 0 ? 0.0 : static_cast<double>(bin.hits) / bin.trials;
      if (bin.trials == 0 || freq != counted) {
        bin.reference = freq;
      }
    } catch (const std::logic_error& e) {
      throw std::runtime_error("CSV line " + std::to_string(line_no) + ": " + e.what());
    }
    if (tables.empty() || tables.back().series != fields[7]) {
      tables.push_back({fields[7], {}});
    }
    tables.back().bins.push_back(bin);
  }
  return tables;
}

}  // namespace algsearch
