#include "algsearch/harness.hpp"

#include <atomic>
#include <chrono>
#include <exception>
#include <mutex>
#include <ostream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "algsearch/codec.hpp"
#include "algsearch/freewords.hpp"
#include "algsearch/random_stream.hpp"

namespace algsearch {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

FrequencyTable bound_table(const FrequencyTable& like) {
  FrequencyTable bound{"theorem3_bound", {}};
  for (const auto& bin : like.bins) {
    if (bin.lo == 0) {
      continue;
    }
    Bin b;
    b.lo = bin.lo;
    b.hi = bin.hi;
    b.reference = theorem3_bound(bin.lo);
    bound.bins.push_back(b);
  }
  return bound;
}

}  // namespace

void parallel_for(std::uint64_t count, unsigned workers,
                  const std::function<void(std::uint64_t)>& body) {
  workers = std::max(1u, workers);
  if (workers == 1 || count < 2) {
    for (std::uint64_t i = 0; i < count; ++i) {
      body(i);
    }
    return;
  }
  std::atomic<std::uint64_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&] {
    while (true) {
      const std::uint64_t i = next.fetch_add(1);
      if (i >= count) {
        return;
      }
      try {
        body(i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) {
          failure = std::current_exception();
        }
        next.store(count);
        return;
      }
    }
  };
  std::vector<std::thread> threads;
  for (unsigned w = 0; w < workers; ++w) {
    threads.emplace_back(work);
  }
  for (auto& t : threads) {
    t.join();
  }
  if (failure) {
    std::rethrow_exception(failure);
  }
}

// ----------------------------------------------------------------- words

WordSearchResult run_word_search(const WordExperimentConfig& config) {
  if (config.samples == 0) {
    throw std::invalid_argument("samples must be >= 1");
  }
  if (config.spaces.empty()) {
    throw std::invalid_argument("at least one description space is required");
  }
  for (const auto& space : config.spaces) {
    if (space.c == 0) {
      throw std::invalid_argument("image length c must be >= 1");
    }
  }
  const GenAlphabet alphabet(config.rank);
  const std::uint64_t total = config.samples * config.spaces.size();

  WordSearchResult result;
  result.records.resize(total);
  parallel_for(total, config.workers, [&](std::uint64_t trial) {
    const auto start = Clock::now();
    RandomStream rng = RandomStream::substream(config.master_seed, trial);
    const std::size_t space = trial / config.samples;
    const WordDescription desc = sample_word_description(config.spaces[space], alphabet, rng);
    const Word w = eval_word_description(desc);
    WordTrialRecord& rec = result.records[trial];
    rec.trial = trial;
    rec.space = space;
    rec.description = format_word_description(desc, alphabet);
    rec.word_length = w.size();
    rec.identity_free = is_identity_free(w);
    rec.identity_abelian = is_identity_abelian(w, config.rank);
    if (config.record_timing) {
      rec.elapsed_ms = elapsed_ms(start);
    }
  });

  std::vector<Observation> free_obs;
  std::vector<Observation> abelian_obs;
  for (const auto& rec : result.records) {
    free_obs.push_back({rec.word_length, rec.identity_free});
    abelian_obs.push_back({rec.word_length, rec.identity_abelian});
  }
  result.free_identity = aggregate(free_obs, Binning::exact, "free_identity");
  result.abelian_identity = aggregate(abelian_obs, Binning::exact, "abelian_identity");
  return result;
}

WordBaselineResult run_word_baseline(const WordBaselineConfig& config) {
  if (config.samples == 0) {
    throw std::invalid_argument("samples must be >= 1");
  }
  const GenAlphabet alphabet(config.rank);
  const std::uint64_t total = config.samples * config.lengths.size();
  std::vector<Observation> free_obs(total);
  std::vector<Observation> abelian_obs(total);
  parallel_for(total, config.workers, [&](std::uint64_t trial) {
    RandomStream rng = RandomStream::substream(config.master_seed, trial);
    const std::uint64_t length = config.lengths[trial / config.samples];
    const Word w = sample_word_exact(alphabet.size(), length, rng);
    free_obs[trial] = {length, is_identity_free(w)};
    abelian_obs[trial] = {length, is_identity_abelian(w, config.rank)};
  });
  return {aggregate(free_obs, Binning::exact, "word_baseline"),
          aggregate(abelian_obs, Binning::exact, "word_baseline_abelian")};
}

// ----------------------------------------------------------- permutations

PermTrialRecord evaluate_perm_trial(const PolyDescription& desc, std::size_t degree_cap) {
  PermTrialRecord rec;
  rec.description = format_poly_description(desc);
  const BigNat m = eval_poly_description(desc);
  rec.integer_bits = bit_length(m);
  const auto [i, j] = nat_to_pair(m);
  // Index m needs factorial_digits(m - 1).size() + 1 points; check before decoding.
  const std::size_t digits = std::max(factorial_digits(i - 1).size(), factorial_digits(j - 1).size());
  if (digits + 1 > degree_cap) {
    rec.degree = digits + 1;
    rec.label = GroupLabel::degree_overflow;
    return rec;
  }
  const Permutation g = nat_to_perm(i);
  const Permutation h = nat_to_perm(j);
  ClassifyOptions options;
  options.degree_cap = degree_cap;
  const GroupClass cls = classify(g, h, options);
  rec.degree = cls.degree;
  rec.label = cls.label;
  if (cls.order) {
    rec.order_bits = bit_length(*cls.order);
  } else if (cls.is_giant()) {
    BigNat f;
    mpz_fac_ui(f.get_mpz_t(), cls.degree);
    rec.order_bits = bit_length(cls.label == GroupLabel::alternating_giant ? BigNat(f / 2) : f);
  }
  if (cls.label == GroupLabel::other) {
    rec.solvable = is_solvable_by_constituents(PermGroup({g, h}));
  } else if (cls.label == GroupLabel::trivial) {
    rec.solvable = true;
  } else if (cls.is_giant()) {
    rec.solvable = cls.degree <= 4;
  }
  return rec;
}

PermSearchResult run_perm_search(const PermExperimentConfig& config) {
  if (config.samples == 0) {
    throw std::invalid_argument("samples must be >= 1");
  }
  if (config.space.lead_min == 0 || config.space.lead_min > config.space.lead_max ||
      config.space.coeff_min > config.space.coeff_max) {
    throw std::invalid_argument("invalid coefficient ranges");
  }
  const std::uint64_t total = config.samples + config.injected.size();
  PermSearchResult result;
  result.records.resize(total);
  parallel_for(total, config.workers, [&](std::uint64_t trial) {
    const auto start = Clock::now();
    PolyDescription desc;
    if (trial < config.samples) {
      RandomStream rng = RandomStream::substream(config.master_seed, trial);
      desc = sample_poly_description(config.space, rng);
    } else {
      desc = config.injected[trial - config.samples];
    }
    PermTrialRecord rec = evaluate_perm_trial(desc, config.degree_cap);
    rec.trial = trial;
    if (config.record_timing) {
      rec.elapsed_ms = elapsed_ms(start);
    }
    result.records[trial] = std::move(rec);
  });

  std::vector<Observation> non_giant;
  std::vector<Observation> solvable;
  for (const auto& rec : result.records) {
    if (rec.label == GroupLabel::degree_overflow) {
      ++result.overflow;
      continue;
    }
    const bool other = rec.label == GroupLabel::other;
    non_giant.push_back({rec.degree, other});
    solvable.push_back({rec.degree, other && rec.solvable.value_or(false)});
  }
  result.non_giant = aggregate(non_giant, Binning::geometric2, "non_giant");
  result.solvable = aggregate(solvable, Binning::geometric2, "solvable");
  result.bound = bound_table(result.non_giant);
  return result;
}

PermBaselineResult run_perm_baseline(const PermBaselineConfig& config) {
  if (config.samples == 0) {
    throw std::invalid_argument("samples must be >= 1");
  }
  for (auto n : config.degrees) {
    if (n < 2) {
      throw std::invalid_argument("baseline degrees must be >= 2");
    }
  }
  const std::uint64_t total = config.samples * config.degrees.size();
  std::vector<GroupClass> classes(total);
  parallel_for(total, config.workers, [&](std::uint64_t trial) {
    RandomStream rng = RandomStream::substream(config.master_seed, trial);
    const auto n = config.degrees[trial / config.samples];
    const auto [g, h] = random_sn_pair(n, rng);
    classes[trial] = classify(g, h);
  });

  PermBaselineResult result;
  result.sn_baseline.series = "sn_baseline";
  result.bound.series = "theorem3_bound";
  for (std::size_t k = 0; k < config.degrees.size(); ++k) {
    PermBaselineRow row;
    row.n = config.degrees[k];
    row.samples = config.samples;
    row.bound = theorem3_bound(row.n);
    for (std::uint64_t t = k * config.samples; t < (k + 1) * config.samples; ++t) {
      switch (classes[t].label) {
        case GroupLabel::other:
          ++row.other;
          break;
        case GroupLabel::trivial:
          ++row.trivial;
          break;
        default:
          // Both elements may fix n, leaving a giant on fewer points.
          ++(classes[t].degree == row.n ? row.giant : row.smaller_giant);
      }
    }
    result.rows.push_back(row);
    Bin bin;
    bin.lo = bin.hi = row.n;
    bin.trials = row.samples;
    bin.hits = row.other;
    result.sn_baseline.bins.push_back(bin);
    Bin ref;
    ref.lo = ref.hi = row.n;
    ref.reference = row.bound;
    result.bound.bins.push_back(ref);
  }
  return result;
}

// ------------------------------------------------------------------ output

void write_jsonl(std::ostream& out, const std::vector<WordTrialRecord>& records) {
  for (const auto& rec : records) {
    nlohmann::ordered_json j;
    j["trial"] = rec.trial;
    j["space"] = rec.space;
    j["description"] = rec.description;
    j["word_length"] = rec.word_length;
    j["identity_in_free"] = rec.identity_free;
    j["identity_in_abelian"] = rec.identity_abelian;
    if (rec.elapsed_ms) {
      j["elapsed_ms"] = *rec.elapsed_ms;
    }
    out << j.dump() << '\n';
  }
}

void write_jsonl(std::ostream& out, const std::vector<PermTrialRecord>& records) {
  for (const auto& rec : records) {
    nlohmann::ordered_json j;
    j["trial"] = rec.trial;
    j["description"] = rec.description;
    j["integer_bits"] = rec.integer_bits;
    j["degree"] = rec.degree;
    j["class"] = std::string(label_name(rec.label));
    j["in_target"] = rec.label == GroupLabel::other;
    j["solvable"] = rec.solvable ? nlohmann::ordered_json(*rec.solvable) : nullptr;
    j["order_bits"] = rec.order_bits ? nlohmann::ordered_json(*rec.order_bits) : nullptr;
    if (rec.elapsed_ms) {
      j["elapsed_ms"] = *rec.elapsed_ms;
    }
    out << j.dump() << '\n';
  }
}

std::string run_metadata_json(const std::string& command, std::uint64_t master_seed) {
  nlohmann::ordered_json j;
  j["command"] = command;
  j["master_seed"] = master_seed;
  j["rng"] = std::string(RandomStream::kAlgorithm);
  j["substreams"] = "splitmix64(master ^ splitmix64(index ^ 0xd1b54a32d192ed03))";
  return j.dump();
}

}  // namespace algsearch
