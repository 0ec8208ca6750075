#include <doctest.h>

#include <cmath>
#include <map>

#include "algsearch/codec.hpp"
#include "algsearch/descriptions.hpp"

using namespace algsearch;

namespace {

const GenAlphabet kRank2(2);

MonoidHom hom(std::initializer_list<const char*> images) {
  MonoidHom h;
  for (const char* img : images) {
    h.images.push_back(kRank2.parse(img));
  }
  return h;
}

Poly poly(std::initializer_list<unsigned> coeffs) {
  Poly p;
  for (unsigned c : coeffs) p.coeffs.emplace_back(c);
  return p;
}

/// Upper 0.1% point of chi-square with df degrees of freedom (Wilson-Hilferty).
double chi2_critical(double df) {
  const double z = 3.090232306167813;
  const double a = 2.0 / (9.0 * df);
  return df * std::pow(1.0 - a + z * std::sqrt(a), 3.0);
}

}  // namespace

TEST_CASE("apply_hom examples") {
  const MonoidHom h = hom({"ab", "bB", "aB", "AA"});
  CHECK(kRank2.format(apply_hom(h, kRank2.parse("b"))) == "aB");
  CHECK(apply_hom(h, Word{}).empty());
  const MonoidHom id = hom({"a", "A", "b", "B"});
  CHECK(kRank2.format(apply_hom(id, kRank2.parse("abAB"))) == "abAB");
  CHECK_THROWS_AS(apply_hom(h, Word{4}), std::domain_error);
}

TEST_CASE("eval_word_description examples") {
  const MonoidHom h = hom({"ab", "bB", "aB", "AA"});
  CHECK(kRank2.format(eval_word_description({{}, kRank2.parse("abAA")})) == "abAA");
  CHECK(kRank2.format(eval_word_description({{h}, kRank2.parse("aA")})) == "abbB");
  const MonoidHom twice = hom({"aa", "AA", "bb", "BB"});
  CHECK(eval_word_description({{twice, twice}, kRank2.parse("ab")}).size() == 8);

  // The two-hom worked example, under our conventions (the last hom is
  // applied first). The printed result there cannot be matched; this is the
  // value our conventions give.
  const auto desc = parse_word_description("ab,bB,aB,AA;bb,BA,BB,AB;abAA", kRank2);
  CHECK(kRank2.format(eval_word_description(desc)) == "aBaBAAAAAAbBAAbB");
}

TEST_CASE("eval_poly examples") {
  CHECK(eval_poly(poly({7}), 12345) == 7);
  CHECK(eval_poly(poly({6, 7, 4, 2}), 15) == 21887);
  CHECK(eval_poly(poly({8, 2, 3, 1}), 21887) == parse_bignat("83879080636024"));
  CHECK(eval_poly_description({{}, 15}) == 15);
  CHECK(eval_poly_description({{poly({8, 2, 3, 1}), poly({6, 7, 4, 2})}, 15}) ==
        parse_bignat("83879080636024"));
  CHECK(eval_poly_description({{poly({1, 0}), poly({1, 0})}, 9}) == 9);
}

TEST_CASE("length law and associativity of composition") {
  RandomStream rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const unsigned d = static_cast<unsigned>(rng.below(5));
    const unsigned c = 1 + static_cast<unsigned>(rng.below(3));
    const WordDescSpace space{d, c, 6};
    const WordDescription desc = sample_word_description(space, kRank2, rng);
    const Word w = eval_word_description(desc);
    CHECK(w.size() == desc.seed.size() * static_cast<std::size_t>(std::pow(c, d)));
    if (d >= 1) {
      WordDescription inner{{desc.homs.begin() + 1, desc.homs.end()}, desc.seed};
      CHECK(apply_hom(desc.homs.front(), eval_word_description(inner)) == w);
    }
  }
}

TEST_CASE("polynomial descriptions are monotone in the seed") {
  RandomStream rng(12);
  const PolyDescSpace space{3, 2, 1, 20, 0, 20, 8};
  for (int trial = 0; trial < 200; ++trial) {
    const auto desc = sample_poly_description(space, rng);
    const BigNat x = desc.seed;
    for (const auto& p : desc.polys) {
      CHECK(eval_poly(p, x + 1) > eval_poly(p, x));
    }
    CHECK(eval_poly_description(desc) >= desc.seed);
  }
}

TEST_CASE("size bound for 7 quadratics at M = 1000") {
  // x < 2^b and all 3 coefficients <= 20 give p(x) <= 60 x^2 < 2^(2b + log2 60).
  double bound = 1001.0;
  for (int k = 0; k < 7; ++k) {
    bound = 2.0 * bound + std::log2(60.0);
  }
  CHECK(bound < 140000.0);
  RandomStream rng(13);
  const PolyDescSpace space{7, 2, 1, 20, 0, 20, 1000};
  for (int trial = 0; trial < 100; ++trial) {
    const auto desc = sample_poly_description(space, rng);
    CHECK(static_cast<double>(bit_length(eval_poly_description(desc))) <= bound);
  }
}

TEST_CASE("word sampler examples") {
  RandomStream rng(14);
  const auto trivial = sample_word_description({0, 1, 0}, kRank2, rng);
  CHECK(trivial.homs.empty());
  CHECK(trivial.seed.empty());

  RandomStream a(99), b(99);
  const WordDescSpace space{3, 2, 8};
  CHECK(sample_word_description(space, kRank2, a) == sample_word_description(space, kRank2, b));
  CHECK_THROWS_AS(sample_word_description({1, 0, 1}, kRank2, rng), std::invalid_argument);
}

TEST_CASE("single homomorphisms are uniform (d=1, c=1, M=0)") {
  RandomStream rng(15);
  std::map<std::string, int> counts;
  const int draws = 100000;
  for (int k = 0; k < draws; ++k) {
    counts[format_word_description(sample_word_description({1, 1, 0}, kRank2, rng), kRank2)]++;
  }
  CHECK(counts.size() == 256);
  const double expected = draws / 256.0;
  double chi2 = 0.0;
  for (const auto& [desc, count] : counts) {
    chi2 += (count - expected) * (count - expected) / expected;
  }
  CHECK(chi2 < chi2_critical(255));
}

TEST_CASE("whole descriptions are uniform (d=1, c=1, M=1)") {
  RandomStream rng(16);
  std::map<std::string, int> counts;
  const int draws = 1000000;
  for (int k = 0; k < draws; ++k) {
    counts[format_word_description(sample_word_description({1, 1, 1}, kRank2, rng), kRank2)]++;
  }
  // 256 homomorphisms times 5 seeds (the empty word and 4 letters).
  const double cells = 256.0 * 5.0;
  CHECK(counts.size() == 1280);
  const double p = 1.0 / cells;
  const double sigma = std::sqrt(draws * p * (1 - p));
  double chi2 = 0.0;
  for (const auto& [desc, count] : counts) {
    CHECK(std::abs(count - draws * p) <= 4.0 * sigma);
    chi2 += (count - draws * p) * (count - draws * p) / (draws * p);
  }
  CHECK(chi2 < chi2_critical(cells - 1));
}

TEST_CASE("seed lengths follow the word count, not a uniform length") {
  RandomStream rng(17);
  std::map<std::size_t, int> by_length;
  const int draws = 200000;
  for (int k = 0; k < draws; ++k) {
    by_length[sample_word_up_to(4, 3, rng).size()]++;
  }
  // 1 + 4 + 16 + 64 = 85 words.
  const double total = 85.0;
  const std::map<std::size_t, double> expected{{0, 1 / total}, {1, 4 / total}, {2, 16 / total}, {3, 64 / total}};
  for (const auto& [len, p] : expected) {
    const double sigma = std::sqrt(draws * p * (1 - p));
    CHECK(std::abs(by_length[len] - draws * p) <= 4.0 * sigma);
  }
}

TEST_CASE("poly sampler respects the space") {
  RandomStream rng(18);
  const auto empty = sample_poly_description({0, 2, 1, 20, 0, 20, 0}, rng);
  CHECK(empty.polys.empty());
  CHECK(empty.seed == 1);

  const PolyDescSpace quadratics{7, 2, 1, 20, 0, 20, 1000};
  for (int k = 0; k < 500; ++k) {
    const auto desc = sample_poly_description(quadratics, rng);
    REQUIRE(desc.polys.size() == 7);
    for (const auto& p : desc.polys) {
      REQUIRE(p.coeffs.size() == 3);
      CHECK(p.coeffs[0] >= 1);
      CHECK(p.coeffs[0] <= 20);
      CHECK(p.coeffs[1] <= 20);
      CHECK(p.coeffs[2] <= 20);
    }
    CHECK(desc.seed >= 1);
    CHECK(bit_length(desc.seed) <= 1001);
  }
  RandomStream a(5), b(5);
  CHECK(sample_poly_description(quadratics, a) == sample_poly_description(quadratics, b));
  CHECK_THROWS_AS(sample_poly_description({1, 2, 0, 20, 0, 20, 4}, rng), std::invalid_argument);
}

TEST_CASE("text forms round trip") {
  const char* poly_text = "8,2,3,1;6,7,4,2;15";
  CHECK(format_poly_description(parse_poly_description(poly_text)) == poly_text);
  CHECK(looks_like_poly_description(poly_text));
  CHECK_FALSE(looks_like_poly_description("ab,bB,aB,AA;abAA"));
  CHECK_THROWS(parse_poly_description("8,2;0"));
  CHECK_THROWS(parse_poly_description("0,2;5"));

  RandomStream rng(19);
  for (int k = 0; k < 200; ++k) {
    const auto w = sample_word_description({3, 2, 5}, kRank2, rng);
    CHECK(parse_word_description(format_word_description(w, kRank2), kRank2) == w);
    const auto p = sample_poly_description({4, 2, 1, 20, 0, 20, 30}, rng);
    CHECK(parse_poly_description(format_poly_description(p)) == p);
  }
}
