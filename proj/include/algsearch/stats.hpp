#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace algsearch {

/// Bins with fewer trials than this are flagged as under-sampled.
constexpr std::uint64_t kMinTrialsPerBin = 1000;

struct Interval {
  double lo = 0.0;
  double hi = 1.0;
};

/// Wilson score interval; z = 1.96 gives 95% coverage. Empty samples give [0, 1].
Interval wilson_interval(std::uint64_t hits, std::uint64_t trials, double z = 1.959963984540054);

struct Bin {
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;
  std::uint64_t trials = 0;
  std::uint64_t hits = 0;
  /// Overrides hits/trials for reference curves (e.g. a theoretical bound).
  double reference = -1.0;

  double freq() const;
  Interval ci() const;
  bool low_sample() const { return reference < 0.0 && trials < kMinTrialsPerBin; }
};

/// One series of binned frequencies, e.g. "free_identity" by word length.
struct FrequencyTable {
  std::string series;
  std::vector<Bin> bins;

  std::uint64_t total_trials() const;
  std::uint64_t total_hits() const;
};

enum class Binning {
  exact,       // one bin per value
  geometric2,  // [0,0], [1,1], [2,3], [4,7], ...
};

struct Observation {
  std::uint64_t size = 0;
  bool hit = false;
};

std::pair<std::uint64_t, std::uint64_t> bin_bounds(std::uint64_t size, Binning binning);

/// Bins observations by size (ascending bins). Empty input gives an empty table.
FrequencyTable aggregate(std::span<const Observation> observations, Binning binning,
                         std::string series);

/// Header of the frequency CSV files.
inline constexpr const char* kCsvHeader = "bin_lo,bin_hi,trials,hits,freq,ci_lo,ci_hi,series";

void write_csv(std::ostream& out, std::span<const FrequencyTable> tables);

/// Reads a CSV written by write_csv. Throws std::runtime_error on schema violations.
std::vector<FrequencyTable> read_csv(std::istream& in);

/// Shortest round-trippable decimal form, identical on every platform.
std::string format_double(double value);

}  // namespace algsearch
