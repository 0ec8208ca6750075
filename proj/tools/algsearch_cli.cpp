// algsearch: command-line driver for the codecs, description evaluators,
// group classification and the search experiments.

#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "algsearch/codec.hpp"
#include "algsearch/descriptions.hpp"
#include "algsearch/freewords.hpp"
#include "algsearch/harness.hpp"
#include "algsearch/permgroup.hpp"
#include "algsearch/stats.hpp"

namespace {

using namespace algsearch;
using json = nlohmann::ordered_json;

constexpr int kConfigError = 2;

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json perm_json(const Permutation& p) {
  json j;
  j["one_line"] = p.to_one_line_string();
  j["cycles"] = p.to_cycle_string();
  j["degree"] = p.max_moved();
  return j;
}

std::vector<std::uint64_t> parse_list(const std::string& text) {
  std::vector<std::uint64_t> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      values.push_back(std::stoull(item, &used));
      if (used != item.size()) {
        throw std::invalid_argument(item);
      }
    } catch (const std::logic_error&) {
      throw ConfigError("not a list of non-negative integers: " + text);
    }
  }
  if (values.empty()) {
    throw ConfigError("empty list");
  }
  return values;
}

/// Writes to --out when given, otherwise to stdout.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) {
        throw ConfigError("cannot open output file " + path);
      }
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

void write_metadata(const std::string& out_path, const std::string& command, std::uint64_t seed) {
  if (out_path.empty()) {
    return;
  }
  std::ofstream meta(out_path + ".meta.json", std::ios::binary);
  meta << run_metadata_json(command, seed) << '\n';
}

void check_format(const std::string& format) {
  if (format != "csv" && format != "jsonl") {
    throw ConfigError("--format must be csv or jsonl");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Algorithmic search over short descriptions: word and permutation-group experiments"};
  app.require_subcommand(1);

  // encode
  auto* encode = app.add_subcommand("encode", "Encode a binary word, pair or permutation as a natural number");
  std::string enc_word, enc_pair, enc_perm;
  bool enc_empty = false;
  auto* enc_word_opt = encode->add_option("--word", enc_word, "binary word, e.g. 0101");
  encode->add_flag("--empty-word", enc_empty, "encode the empty word");
  encode->add_option("--pair", enc_pair, "pair i,j of positive integers");
  encode->add_option("--perm", enc_perm, "permutation, [2,3,4,1] or (1,2,3,4)");
  (void)enc_word_opt;

  // decode
  auto* decode = app.add_subcommand("decode", "Decode a natural number m >= 1 as word, pair, permutation and permutation pair");
  std::string dec_value;
  decode->add_option("value", dec_value, "decimal natural number")->required();

  // eval-desc
  auto* eval = app.add_subcommand("eval-desc", "Evaluate a word or polynomial description");
  std::string eval_text;
  int eval_rank = 2;
  bool eval_decode = false;
  eval->add_option("description", eval_text, "e.g. 8,2,3,1;6,7,4,2;15 or ab,bB,aB,AA;abAA")->required();
  eval->add_option("--rank", eval_rank, "generator rank for word descriptions");
  eval->add_flag("--classify", eval_decode, "also decode the integer to a permutation pair and classify it");

  // shared experiment options
  std::uint64_t seed = 1;
  std::uint64_t samples = 1000;
  unsigned workers = 1;
  std::string out_path;
  std::string format = "csv";
  bool timing = false;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--seed", seed, "master seed");
    sub->add_option("--samples", samples, "samples per configuration");
    sub->add_option("--workers", workers, "worker threads");
    sub->add_option("--out", out_path, "output file (default stdout)");
  };

  // run-words
  auto* run_words = app.add_subcommand("run-words", "Algorithmic word search");
  add_common(run_words);
  unsigned d = 1, c = 2, max_seed = 4;
  std::string max_seed_list;
  std::vector<std::string> spaces;
  int rank = 2;
  run_words->add_option("--d", d, "number of homomorphisms");
  run_words->add_option("--c", c, "image word length");
  run_words->add_option("--M", max_seed_list, "max seed length (comma list runs several spaces)");
  run_words->add_option("--space", spaces, "extra space as d,c,M (repeatable)");
  run_words->add_option("--rank", rank, "generator rank");
  run_words->add_option("--format", format, "csv|jsonl");
  run_words->add_flag("--timing", timing, "add elapsed_ms to records");
  std::string words_baseline_lengths;
  run_words->add_option("--baseline-lengths", words_baseline_lengths,
                        "also append the random-word baseline at these lengths (csv only)");

  // run-words-baseline
  auto* run_words_base = app.add_subcommand("run-words-baseline", "Uniform random words of fixed lengths");
  add_common(run_words_base);
  std::string lengths = "64,72,80";
  run_words_base->add_option("--lengths", lengths, "comma-separated word lengths");
  run_words_base->add_option("--rank", rank, "generator rank");

  // run-perms
  auto* run_perms = app.add_subcommand("run-perms", "Algorithmic permutation-group search");
  add_common(run_perms);
  PolyDescSpace poly_space;
  poly_space.count = 7;
  poly_space.degree = 2;
  poly_space.max_seed_length = 64;
  std::size_t degree_cap = 20000;
  std::vector<std::string> injected;
  run_perms->add_option("--poly-count", poly_space.count, "polynomials per description");
  run_perms->add_option("--poly-degree", poly_space.degree, "polynomial degree");
  run_perms->add_option("--lead-min", poly_space.lead_min, "minimum leading coefficient");
  run_perms->add_option("--lead-max", poly_space.lead_max, "maximum leading coefficient");
  run_perms->add_option("--coeff-min", poly_space.coeff_min, "minimum other coefficient");
  run_perms->add_option("--coeff-max", poly_space.coeff_max, "maximum other coefficient");
  run_perms->add_option("--M", poly_space.max_seed_length, "maximum seed word length");
  run_perms->add_option("--degree-cap", degree_cap, "classify only up to this degree");
  run_perms->add_option("--inject", injected, "extra fixed description (repeatable)");
  run_perms->add_option("--format", format, "csv|jsonl");
  run_perms->add_flag("--timing", timing, "add elapsed_ms to records");

  // run-perms-baseline
  auto* run_perms_base = app.add_subcommand("run-perms-baseline", "Uniform pairs from S_n");
  add_common(run_perms_base);
  std::string degrees = "10,20,50";
  run_perms_base->add_option("--n", degrees, "comma-separated degrees");

  // classify
  auto* classify_cmd = app.add_subcommand("classify", "Classify the group generated by two permutations");
  std::string perm_g, perm_h;
  classify_cmd->add_option("first", perm_g, "first permutation")->required();
  classify_cmd->add_option("second", perm_h, "second permutation")->required();
  classify_cmd->add_option("--degree-cap", degree_cap, "maximum degree");

  // report
  auto* report = app.add_subcommand("report", "Summarize a frequency CSV");
  std::string report_path;
  report->add_option("csv", report_path, "CSV written by run-*")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kConfigError;
  }

  try {
    if (encode->parsed()) {
      const int given = (enc_empty || !enc_word.empty()) + !enc_pair.empty() + !enc_perm.empty();
      if (given != 1) {
        throw ConfigError("give exactly one of --word/--empty-word, --pair, --perm");
      }
      if (!enc_pair.empty()) {
        const auto comma = enc_pair.find(',');
        if (comma == std::string::npos) {
          throw ConfigError("--pair expects i,j");
        }
        std::cout << to_string(pair_to_nat(parse_bignat(enc_pair.substr(0, comma)),
                                           parse_bignat(enc_pair.substr(comma + 1))))
                  << '\n';
      } else if (!enc_perm.empty()) {
        std::cout << to_string(perm_to_nat(Permutation::parse(enc_perm))) << '\n';
      } else {
        std::cout << to_string(word_to_nat(BinaryWord(enc_word))) << '\n';
      }
      return 0;
    }

    if (decode->parsed()) {
      const BigNat m = parse_bignat(dec_value);
      const auto [i, j] = nat_to_pair(m);
      const auto [g, h] = nat_to_perm_pair(m);
      json out;
      out["value"] = to_string(m);
      out["word"] = nat_to_word(m).str();
      out["pair"] = {to_string(i), to_string(j)};
      out["perm"] = perm_json(nat_to_perm(m));
      out["perm_pair"] = {perm_json(g), perm_json(h)};
      std::cout << out.dump(2) << '\n';
      return 0;
    }

    if (eval->parsed()) {
      json out;
      out["description"] = eval_text;
      if (looks_like_poly_description(eval_text)) {
        const auto desc = parse_poly_description(eval_text);
        const BigNat m = eval_poly_description(desc);
        out["kind"] = "poly";
        out["value"] = to_string(m);
        out["bits"] = bit_length(m);
        if (eval_decode) {
          const auto rec = evaluate_perm_trial(desc, degree_cap);
          const auto [g, h] = nat_to_perm_pair(m);
          out["perm_pair"] = {perm_json(g), perm_json(h)};
          out["class"] = std::string(label_name(rec.label));
          out["degree"] = rec.degree;
          out["solvable"] = rec.solvable ? json(*rec.solvable) : json(nullptr);
        }
      } else {
        const GenAlphabet alphabet(eval_rank);
        const auto desc = parse_word_description(eval_text, alphabet);
        const Word w = eval_word_description(desc);
        out["kind"] = "words";
        out["word"] = alphabet.format(w);
        out["length"] = w.size();
        out["reduced"] = alphabet.format(free_reduce(w));
        out["identity_in_free"] = is_identity_free(w);
        out["identity_in_abelian"] = is_identity_abelian(w, eval_rank);
      }
      std::cout << out.dump(2) << '\n';
      return 0;
    }

    if (run_words->parsed()) {
      check_format(format);
      WordExperimentConfig cfg;
      cfg.samples = samples;
      cfg.master_seed = seed;
      cfg.workers = workers;
      cfg.rank = rank;
      cfg.record_timing = timing;
      if (!max_seed_list.empty() || spaces.empty()) {
        for (auto m : max_seed_list.empty() ? std::vector<std::uint64_t>{max_seed}
                                            : parse_list(max_seed_list)) {
          cfg.spaces.push_back({d, c, static_cast<unsigned>(m)});
        }
      }
      for (const auto& s : spaces) {
        const auto v = parse_list(s);
        if (v.size() != 3) {
          throw ConfigError("--space expects d,c,M");
        }
        cfg.spaces.push_back({static_cast<unsigned>(v[0]), static_cast<unsigned>(v[1]),
                              static_cast<unsigned>(v[2])});
      }
      const auto result = run_word_search(cfg);
      Output out(out_path);
      if (format == "jsonl") {
        write_jsonl(out.stream(), result.records);
      } else {
        std::vector<FrequencyTable> tables{result.free_identity, result.abelian_identity};
        if (!words_baseline_lengths.empty()) {
          WordBaselineConfig base;
          base.lengths = parse_list(words_baseline_lengths);
          base.samples = samples;
          base.rank = rank;
          base.master_seed = seed;
          base.workers = workers;
          tables.push_back(run_word_baseline(base).free_identity);
        }
        write_csv(out.stream(), tables);
      }
      write_metadata(out_path, "run-words", seed);
      return 0;
    }

    if (run_words_base->parsed()) {
      WordBaselineConfig cfg;
      cfg.lengths = parse_list(lengths);
      cfg.samples = samples;
      cfg.rank = rank;
      cfg.master_seed = seed;
      cfg.workers = workers;
      const auto result = run_word_baseline(cfg);
      Output out(out_path);
      const std::vector<FrequencyTable> tables{result.free_identity};
      write_csv(out.stream(), tables);
      write_metadata(out_path, "run-words-baseline", seed);
      return 0;
    }

    if (run_perms->parsed()) {
      check_format(format);
      PermExperimentConfig cfg;
      cfg.space = poly_space;
      cfg.samples = samples;
      cfg.degree_cap = degree_cap;
      cfg.master_seed = seed;
      cfg.workers = workers;
      cfg.record_timing = timing;
      for (const auto& text : injected) {
        cfg.injected.push_back(parse_poly_description(text));
      }
      const auto result = run_perm_search(cfg);
      Output out(out_path);
      if (format == "jsonl") {
        write_jsonl(out.stream(), result.records);
      } else {
        const std::vector<FrequencyTable> tables{result.non_giant, result.solvable, result.bound};
        write_csv(out.stream(), tables);
      }
      write_metadata(out_path, "run-perms", seed);
      if (result.overflow > 0) {
        std::cerr << result.overflow << " trials exceeded the degree cap\n";
      }
      return 0;
    }

    if (run_perms_base->parsed()) {
      PermBaselineConfig cfg;
      cfg.degrees = parse_list(degrees);
      cfg.samples = samples;
      cfg.master_seed = seed;
      cfg.workers = workers;
      const auto result = run_perm_baseline(cfg);
      Output out(out_path);
      const std::vector<FrequencyTable> tables{result.sn_baseline, result.bound};
      write_csv(out.stream(), tables);
      for (const auto& row : result.rows) {
        std::cerr << "n=" << row.n << " samples=" << row.samples << " other=" << row.other
                  << " trivial=" << row.trivial << " giant=" << row.giant
                  << " smaller_giant=" << row.smaller_giant
                  << " bound=" << format_double(row.bound) << '\n';
      }
      write_metadata(out_path, "run-perms-baseline", seed);
      return 0;
    }

    if (classify_cmd->parsed()) {
      const Permutation g = Permutation::parse(perm_g);
      const Permutation h = Permutation::parse(perm_h);
      ClassifyOptions options;
      options.degree_cap = degree_cap;
      const GroupClass cls = classify(g, h, options);
      json out;
      out["g"] = g.to_cycle_string();
      out["h"] = h.to_cycle_string();
      out["class"] = std::string(label_name(cls.label));
      out["degree"] = cls.degree;
      out["in_target"] = cls.in_target();
      if (cls.label != GroupLabel::degree_overflow) {
        const PermGroup group({g, h});
        out["order"] = to_string(group.order());
        out["solvable"] = is_solvable_by_constituents(group);
      }
      std::cout << out.dump() << '\n';
      return 0;
    }

    if (report->parsed()) {
      std::ifstream in(report_path, std::ios::binary);
      if (!in) {
        throw ConfigError("cannot open " + report_path);
      }
      for (const auto& table : read_csv(in)) {
        std::cout << table.series << ": " << table.total_hits() << " hits / "
                  << table.total_trials() << " trials\n";
        for (const auto& bin : table.bins) {
          const auto ci = bin.ci();
          std::cout << "  [" << bin.lo << ", " << bin.hi << "] trials=" << bin.trials
                    << " hits=" << bin.hits << " freq=" << format_double(bin.freq()) << " ci=["
                    << format_double(ci.lo) << ", " << format_double(ci.hi) << "]"
                    << (bin.low_sample() ? "  (under 1000 trials)" : "") << '\n';
        }
      }
      return 0;
    }
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kConfigError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kConfigError;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kConfigError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
