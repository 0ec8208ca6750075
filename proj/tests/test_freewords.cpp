#include <doctest.h>

#include <cmath>
#include <vector>

#include "algsearch/descriptions.hpp"
#include "algsearch/freewords.hpp"

using namespace algsearch;

namespace {

const GenAlphabet kRank2(2);

Word w(const char* text) { return kRank2.parse(text); }

/// Probability that a uniform word of length len over x, X, y, Y is trivial
/// in F_2: a simple random walk on the 4-regular tree returning to its root.
double free_return_probability(int len) {
  std::vector<double> at(len + 2, 0.0);
  at[0] = 1.0;
  for (int step = 0; step < len; ++step) {
    std::vector<double> next(len + 2, 0.0);
    next[1] += at[0];
    for (int d = 1; d <= len; ++d) {
      next[d - 1] += at[d] * 0.25;
      next[d + 1] += at[d] * 0.75;
    }
    at = std::move(next);
  }
  return at[0];
}

}  // namespace

TEST_CASE("free reduction examples") {
  CHECK(free_reduce(w("aA")).empty());
  CHECK(free_reduce(w("abBA")).empty());
  CHECK(free_reduce(w("abAB")) == w("abAB"));
  CHECK(free_reduce(w("aabBAb")) == w("ab"));
}

TEST_CASE("identity tests") {
  CHECK(is_identity_free(w("aAbB")));
  CHECK_FALSE(is_identity_free(w("abAB")));
  CHECK(is_identity_free(Word{}));
  CHECK(is_identity_abelian(w("abAB")));
  CHECK_FALSE(is_identity_abelian(w("aab")));
  CHECK(is_identity_abelian(Word{}));
  CHECK_THROWS_AS(is_identity_abelian(Word{4}, 2), std::domain_error);
  CHECK(is_identity_abelian(GenAlphabet(3).parse("cbCB"), 3));
}

TEST_CASE("reduction is idempotent, non-increasing and keeps parity") {
  RandomStream rng(21);
  for (int k = 0; k < 5000; ++k) {
    const Word x = sample_word_up_to(4, 30, rng);
    const Word r = free_reduce(x);
    CHECK(free_reduce(r) == r);
    CHECK(r.size() <= x.size());
    CHECK(r.size() % 2 == x.size() % 2);
    for (std::size_t i = 0; i + 1 < r.size(); ++i) {
      CHECK(r[i + 1] != inverse_letter(r[i]));
    }
  }
}

TEST_CASE("free identity implies abelian identity") {
  RandomStream rng(22);
  int free_hits = 0;
  for (int k = 0; k < 100000; ++k) {
    const Word x = sample_word_exact(4, 2 * (1 + rng.below(5)), rng);
    if (is_identity_free(x)) {
      ++free_hits;
      REQUIRE(is_identity_abelian(x));
    }
  }
  CHECK(free_hits > 0);
}

TEST_CASE("random walk oracle") {
  CHECK(free_return_probability(2) == doctest::Approx(0.25));
  CHECK(free_return_probability(4) == doctest::Approx(28.0 / 256.0));
  CHECK(free_return_probability(21) == 0.0);
  // Brute force at length 6 over all 4^6 words.
  int trivial = 0;
  for (int code = 0; code < 4096; ++code) {
    Word x;
    for (int i = 0, c = code; i < 6; ++i, c /= 4) x.push_back(static_cast<Letter>(c % 4));
    trivial += is_identity_free(x) ? 1 : 0;
  }
  CHECK(trivial / 4096.0 == doctest::Approx(free_return_probability(6)));
}

TEST_CASE("identity frequency of random words of length 20 matches the walk") {
  const double p = free_return_probability(20);
  CHECK(p == doctest::Approx(0.002038).epsilon(0.001));
  RandomStream rng(23);
  const int draws = 100000;
  int hits = 0;
  for (int k = 0; k < draws; ++k) {
    hits += is_identity_free(sample_word_exact(4, 20, rng)) ? 1 : 0;
  }
  const double sigma = std::sqrt(draws * p * (1 - p));
  CHECK(std::abs(hits - draws * p) <= 4.0 * sigma);
  // Rare, and rarer as words get longer.
  CHECK(free_return_probability(40) < p / 10);
}
