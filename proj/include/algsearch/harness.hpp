#pragma once

// Experiment drivers. Every trial draws from its own RandomStream derived
// from (master_seed, trial index), so results do not depend on the number of
// workers or on scheduling; records are always emitted in trial order.

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "algsearch/descriptions.hpp"
#include "algsearch/permgroup.hpp"
#include "algsearch/stats.hpp"

namespace algsearch {

/// Runs body(i) for i in [0, count) on `workers` threads (at least one).
void parallel_for(std::uint64_t count, unsigned workers,
                  const std::function<void(std::uint64_t)>& body);

// ----------------------------------------------------------------- words

struct WordExperimentConfig {
  /// Each space contributes `samples` trials; trials are numbered across spaces.
  std::vector<WordDescSpace> spaces;
  std::uint64_t samples = 1000;
  int rank = 2;
  std::uint64_t master_seed = 1;
  unsigned workers = 1;
  bool record_timing = false;
};

struct WordTrialRecord {
  std::uint64_t trial = 0;
  std::size_t space = 0;
  std::string description;
  std::uint64_t word_length = 0;
  bool identity_free = false;
  bool identity_abelian = false;
  std::optional<double> elapsed_ms;
};

struct WordSearchResult {
  std::vector<WordTrialRecord> records;
  FrequencyTable free_identity;
  FrequencyTable abelian_identity;
};

/// Throws std::invalid_argument for an invalid configuration.
WordSearchResult run_word_search(const WordExperimentConfig& config);

struct WordBaselineConfig {
  std::vector<std::uint64_t> lengths;
  std::uint64_t samples = 1000;
  int rank = 2;
  std::uint64_t master_seed = 1;
  unsigned workers = 1;
};

struct WordBaselineResult {
  FrequencyTable free_identity;      // series word_baseline
  FrequencyTable abelian_identity;   // reported, not part of the CSV series set
};

WordBaselineResult run_word_baseline(const WordBaselineConfig& config);

// ----------------------------------------------------------- permutations

struct PermExperimentConfig {
  PolyDescSpace space;
  std::uint64_t samples = 1000;
  std::size_t degree_cap = 20000;
  std::uint64_t master_seed = 1;
  unsigned workers = 1;
  bool record_timing = false;
  /// Descriptions evaluated as extra trials after the sampled ones.
  std::vector<PolyDescription> injected;
};

struct PermTrialRecord {
  std::uint64_t trial = 0;
  std::string description;
  std::uint64_t integer_bits = 0;
  std::uint64_t degree = 0;
  GroupLabel label = GroupLabel::trivial;
  std::optional<bool> solvable;
  std::optional<std::uint64_t> order_bits;
  std::optional<double> elapsed_ms;
};

struct PermSearchResult {
  std::vector<PermTrialRecord> records;
  FrequencyTable non_giant;       // hits: label `other`
  FrequencyTable solvable;        // hits: `other` and solvable
  FrequencyTable bound;           // theorem3_bound at each bin's lower edge
  std::uint64_t overflow = 0;
};

/// Evaluates one description and classifies the decoded pair.
PermTrialRecord evaluate_perm_trial(const PolyDescription& desc, std::size_t degree_cap);

PermSearchResult run_perm_search(const PermExperimentConfig& config);

struct PermBaselineConfig {
  std::vector<std::uint64_t> degrees;
  std::uint64_t samples = 1000;
  std::uint64_t master_seed = 1;
  unsigned workers = 1;
};

struct PermBaselineRow {
  std::uint64_t n = 0;
  std::uint64_t samples = 0;
  std::uint64_t other = 0;
  std::uint64_t trivial = 0;
  std::uint64_t giant = 0;          // S_n or A_n itself
  std::uint64_t smaller_giant = 0;  // S_m or A_m with m < n
  double bound = 0.0;
};

struct PermBaselineResult {
  std::vector<PermBaselineRow> rows;
  FrequencyTable sn_baseline;  // hits: label `other`
  FrequencyTable bound;
};

PermBaselineResult run_perm_baseline(const PermBaselineConfig& config);

// ------------------------------------------------------------------ output

void write_jsonl(std::ostream& out, const std::vector<WordTrialRecord>& records);
void write_jsonl(std::ostream& out, const std::vector<PermTrialRecord>& records);

/// Metadata line describing a run (generator algorithm, seed, parameters).
std::string run_metadata_json(const std::string& command, std::uint64_t master_seed);

}  // namespace algsearch
