#include <doctest.h>

#include <cmath>
#include <sstream>

#include "algsearch/harness.hpp"
#include "algsearch/stats.hpp"
#include "oracles.hpp"

using namespace algsearch;

namespace {

std::string csv(const std::vector<FrequencyTable>& tables) {
  std::ostringstream out;
  write_csv(out, tables);
  return out.str();
}

template <typename Records>
std::string jsonl(const Records& records) {
  std::ostringstream out;
  write_jsonl(out, records);
  return out.str();
}

bool within_sigmas(std::uint64_t hits, std::uint64_t trials, double p, double sigmas) {
  const double sd = std::sqrt(trials * p * (1 - p));
  return std::abs(static_cast<double>(hits) - trials * p) <= sigmas * sd + 1e-9;
}

}  // namespace

TEST_CASE("Wilson intervals") {
  const auto none = wilson_interval(0, 1000);
  CHECK(none.lo == 0.0);
  CHECK(none.hi == doctest::Approx(0.0038).epsilon(0.02));
  const auto all = wilson_interval(1000, 1000);
  CHECK(all.hi == 1.0);
  CHECK(all.lo == doctest::Approx(0.9962).epsilon(0.0001));
  const auto half = wilson_interval(50, 100);
  CHECK(half.lo == doctest::Approx(0.5 - (0.5 - half.lo)));
  CHECK(half.lo + half.hi == doctest::Approx(1.0));
  CHECK(wilson_interval(0, 0).hi == 1.0);
}

TEST_CASE("aggregation and binning") {
  CHECK(aggregate({}, Binning::exact, "s").bins.empty());
  CHECK(bin_bounds(0, Binning::geometric2) == std::pair<std::uint64_t, std::uint64_t>{0, 0});
  CHECK(bin_bounds(1, Binning::geometric2) == std::pair<std::uint64_t, std::uint64_t>{1, 1});
  CHECK(bin_bounds(5, Binning::geometric2) == std::pair<std::uint64_t, std::uint64_t>{4, 7});
  CHECK(bin_bounds(567, Binning::geometric2) == std::pair<std::uint64_t, std::uint64_t>{512, 1023});
  const std::vector<Observation> obs{{3, true}, {3, false}, {9, true}, {12, false}};
  const auto table = aggregate(obs, Binning::geometric2, "x");
  REQUIRE(table.bins.size() == 2);
  CHECK(table.bins[0].lo == 2);
  CHECK(table.bins[0].trials == 2);
  CHECK(table.bins[1].hits == 1);
  CHECK(table.total_trials() == 4);
  CHECK(table.bins[0].low_sample());
}

TEST_CASE("CSV round trip and schema checks") {
  FrequencyTable a{"non_giant", {{8, 15, 1200, 30}, {16, 31, 10, 0}}};
  Bin ref{8, 15, 0, 0, 0.125};
  FrequencyTable b{"theorem3_bound", {ref}};
  const std::string text = csv({a, b});
  CHECK(text.rfind(std::string(kCsvHeader) + "\n", 0) == 0);
  std::istringstream in(text);
  const auto back = read_csv(in);
  REQUIRE(back.size() == 2);
  CHECK(back[0].series == "non_giant");
  CHECK(back[0].bins[0].hits == 30);
  CHECK(back[1].bins[0].freq() == 0.125);
  CHECK(csv(back) == text);

  std::istringstream bad_header("lo,hi\n");
  CHECK_THROWS(read_csv(bad_header));
  std::istringstream bad_row(std::string(kCsvHeader) + "\n1,1,10,2,0.9,0.1,0.3,x\n");
  CHECK_THROWS(read_csv(bad_row));
}

TEST_CASE("word search: empty descriptions are the identity") {
  WordExperimentConfig cfg;
  cfg.spaces = {{0, 1, 0}};
  cfg.samples = 10;
  const auto result = run_word_search(cfg);
  REQUIRE(result.free_identity.bins.size() == 1);
  CHECK(result.free_identity.bins[0].freq() == 1.0);
  CHECK(result.abelian_identity.bins[0].freq() == 1.0);
  CHECK(result.records.size() == 10);
}

TEST_CASE("word search: abelian hits dominate free hits") {
  WordExperimentConfig cfg;
  cfg.spaces = {{1, 2, 4}};
  cfg.samples = 2000;
  cfg.master_seed = 41;
  const auto result = run_word_search(cfg);
  REQUIRE(result.free_identity.bins.size() == result.abelian_identity.bins.size());
  for (std::size_t k = 0; k < result.free_identity.bins.size(); ++k) {
    CHECK(result.abelian_identity.bins[k].hits >= result.free_identity.bins[k].hits);
    CHECK(result.abelian_identity.bins[k].trials == result.free_identity.bins[k].trials);
  }
  for (const auto& r : result.records) {
    CHECK((!r.identity_free || r.identity_abelian));
    CHECK(r.word_length % 2 == 0);
  }
  CHECK(result.free_identity.total_trials() == cfg.samples);
}

TEST_CASE("word search is deterministic across runs and worker counts") {
  WordExperimentConfig cfg;
  cfg.spaces = {{3, 2, 8}, {2, 3, 5}};
  cfg.samples = 500;
  cfg.master_seed = 42;
  const auto one = run_word_search(cfg);
  cfg.workers = 4;
  const auto four = run_word_search(cfg);
  CHECK(csv({one.free_identity, one.abelian_identity}) ==
        csv({four.free_identity, four.abelian_identity}));
  CHECK(jsonl(one.records) == jsonl(four.records));
  CHECK(one.records.size() == 1000);
  cfg.master_seed = 43;
  CHECK(jsonl(run_word_search(cfg).records) != jsonl(one.records));
  cfg.spaces.clear();
  CHECK_THROWS_AS(run_word_search(cfg), std::invalid_argument);
}

TEST_CASE("word baseline") {
  WordBaselineConfig cfg;
  cfg.lengths = {1, 2, 21};
  cfg.samples = 20000;
  cfg.master_seed = 44;
  const auto result = run_word_baseline(cfg);
  REQUIRE(result.free_identity.bins.size() == 3);
  CHECK(result.free_identity.series == "word_baseline");
  CHECK(result.free_identity.bins[0].hits == 0);
  // Exhaustive: 4 of the 16 two-letter words are x X or X x.
  CHECK(within_sigmas(result.free_identity.bins[1].hits, cfg.samples, 0.25, 4.0));
  CHECK(result.free_identity.bins[2].hits == 0);
  CHECK(result.abelian_identity.bins[2].hits == 0);
}

TEST_CASE("permutation search: empty descriptions decode to the trivial group") {
  PermExperimentConfig cfg;
  cfg.space = {0, 2, 1, 20, 0, 20, 0};
  cfg.samples = 5;
  const auto result = run_perm_search(cfg);
  REQUIRE(result.records.size() == 5);
  for (const auto& r : result.records) {
    CHECK(r.label == GroupLabel::trivial);
    CHECK(r.degree == 0);
  }
  CHECK(result.non_giant.total_hits() == 0);
}

TEST_CASE("permutation search: a fixed description as an injected trial") {
  PermExperimentConfig cfg;
  cfg.space = {7, 2, 1, 20, 0, 20, 8};
  cfg.samples = 3;
  cfg.injected = {parse_poly_description("8,2,3,1;6,7,4,2;15")};
  const auto result = run_perm_search(cfg);
  REQUIRE(result.records.size() == 4);
  const auto& r = result.records.back();
  CHECK(r.trial == 3);
  CHECK(r.degree == 11);
  CHECK(r.description == "8,2,3,1;6,7,4,2;15");
  CHECK(r.label == GroupLabel::alternating_giant);
  CHECK(r.solvable == false);
  CHECK(r.order_bits == bit_length(BigNat(19958400)));
}

TEST_CASE("permutation search: determinism, consistency and conservation") {
  PermExperimentConfig cfg;
  cfg.space = {7, 2, 1, 20, 0, 20, 16};
  cfg.samples = 150;
  cfg.master_seed = 45;
  const auto one = run_perm_search(cfg);
  cfg.workers = 3;
  const auto three = run_perm_search(cfg);
  CHECK(jsonl(one.records) == jsonl(three.records));
  CHECK(csv({one.non_giant, one.solvable, one.bound}) ==
        csv({three.non_giant, three.solvable, three.bound}));
  for (const auto& r : one.records) {
    const bool giant = r.label == GroupLabel::symmetric_giant || r.label == GroupLabel::alternating_giant;
    if (giant) {
      CHECK(r.solvable == (r.degree <= 4));
    }
    CHECK(r.solvable.has_value() == (r.label != GroupLabel::degree_overflow));
  }
  CHECK(one.non_giant.total_trials() + one.overflow == cfg.samples);
  CHECK(one.solvable.total_hits() <= one.non_giant.total_hits());

  cfg.degree_cap = 200;
  const auto capped = run_perm_search(cfg);
  CHECK(capped.overflow > 0);
  CHECK(capped.non_giant.total_trials() + capped.overflow == cfg.samples);
}

TEST_CASE("S_n baseline: n = 2 and n = 4 against exhaustive enumeration") {
  PermBaselineConfig cfg;
  cfg.degrees = {2, 4};
  cfg.samples = 20000;
  cfg.master_seed = 46;
  const auto result = run_perm_baseline(cfg);
  REQUIRE(result.rows.size() == 2);

  // n = 2: only (id, id) fails to generate S_2, and it is trivial, not other.
  CHECK(result.rows[0].other == 0);
  CHECK(within_sigmas(result.rows[0].trivial, cfg.samples, 0.25, 4.0));

  // n = 4: the fraction of the 576 pairs whose group is `other`.
  std::vector<oracle::Perm> s4;
  oracle::Perm p = oracle::identity(4);
  do {
    s4.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  int other = 0;
  for (const auto& g : s4) {
    for (const auto& h : s4) {
      other += oracle::classify({g, h}, 4) == "other" ? 1 : 0;
    }
  }
  CHECK(within_sigmas(result.rows[1].other, cfg.samples, other / 576.0, 4.0));
  CHECK(result.sn_baseline.series == "sn_baseline");
  CHECK(result.bound.bins.size() == 2);
  CHECK(result.rows[1].bound == doctest::Approx(theorem3_bound(4)));
}
