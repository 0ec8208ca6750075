#pragma once

// Short program-like descriptions of large objects: a list of
// transformations plus a seed. Transformations are listed outermost first,
// so the last listed one is applied to the seed first.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "algsearch/bignat.hpp"
#include "algsearch/random_stream.hpp"
#include "algsearch/words.hpp"

namespace algsearch {

/// Monoid endomorphism of the free monoid on a GenAlphabet, given by the
/// image of each letter in alphabet order (a, A, b, B, ... for rank 2).
struct MonoidHom {
  std::vector<Word> images;

  friend bool operator==(const MonoidHom&, const MonoidHom&) = default;
};

struct WordDescription {
  std::vector<MonoidHom> homs;
  Word seed;

  friend bool operator==(const WordDescription&, const WordDescription&) = default;
};

/// The finite set of word descriptions with d homomorphisms whose image words
/// all have length c, and a seed of length at most max_seed_length.
struct WordDescSpace {
  unsigned d = 0;
  unsigned c = 1;
  unsigned max_seed_length = 0;
};

/// Polynomial with non-negative coefficients, highest degree first.
struct Poly {
  std::vector<BigNat> coeffs;

  std::size_t degree() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }
  friend bool operator==(const Poly&, const Poly&) = default;
};

struct PolyDescription {
  std::vector<Poly> polys;
  BigNat seed = 1;

  friend bool operator==(const PolyDescription&, const PolyDescription&) = default;
};

/// count polynomials of the given degree; the leading coefficient is drawn
/// from [lead_min, lead_max] and every other one from [coeff_min, coeff_max].
/// The seed is word_to_nat of a binary word of length <= max_seed_length.
struct PolyDescSpace {
  unsigned count = 0;
  unsigned degree = 2;
  std::uint64_t lead_min = 1;
  std::uint64_t lead_max = 20;
  std::uint64_t coeff_min = 0;
  std::uint64_t coeff_max = 20;
  unsigned max_seed_length = 0;
};

/// Throws std::domain_error if w contains a letter the hom has no image for.
Word apply_hom(const MonoidHom& h, const Word& w);

Word eval_word_description(const WordDescription& desc);

BigNat eval_poly(const Poly& p, const BigNat& x);

BigNat eval_poly_description(const PolyDescription& desc);

/// Uniform over all words of length <= max_length on an alphabet of the given
/// size, i.e. a word of length l is drawn with probability proportional to size^l.
Word sample_word_up_to(std::size_t alphabet_size, unsigned max_length, RandomStream& rng);

/// Uniform over the size^length words of exactly that length.
Word sample_word_exact(std::size_t alphabet_size, std::size_t length, RandomStream& rng);

/// Throws std::invalid_argument for c == 0.
WordDescription sample_word_description(const WordDescSpace& space, const GenAlphabet& alphabet,
                                        RandomStream& rng);

/// Throws std::invalid_argument for empty or inverted coefficient ranges or lead_min == 0.
PolyDescription sample_poly_description(const PolyDescSpace& space, RandomStream& rng);

// Text forms: "ab,bB,aB,AA;bb,BA,BB,AB;abAA" and "8,2,3,1;6,7,4,2;15".
// Transformations are joined by ';' and the seed comes last.
std::string format_word_description(const WordDescription& desc, const GenAlphabet& alphabet);
WordDescription parse_word_description(std::string_view text, const GenAlphabet& alphabet);
std::string format_poly_description(const PolyDescription& desc);
PolyDescription parse_poly_description(std::string_view text);

/// True when text only uses digits, ',' and ';' (and is non-empty).
bool looks_like_poly_description(std::string_view text);

}  // namespace algsearch
