#include "algsearch/random_stream.hpp"

#include <bit>
#include <stdexcept>
#include <vector>

namespace algsearch {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

RandomStream::RandomStream(std::uint64_t seed) {
  std::uint64_t s = seed;
  for (auto& word : state_) {
    s += 0x9e3779b97f4a7c15ULL;
    word = splitmix64(s);
  }
}

RandomStream RandomStream::substream(std::uint64_t master, std::uint64_t index) {
  return RandomStream(splitmix64(master ^ splitmix64(index ^ 0xd1b54a32d192ed03ULL)));
}

std::uint64_t RandomStream::next() {
  const std::uint64_t result = std::rotl(state_[1] * 5, 7) * 9;
  const std::uint64_t t = state_[1] << 17;
  state_[2] ^= state_[0];
  state_[3] ^= state_[1];
  state_[1] ^= state_[2];
  state_[0] ^= state_[3];
  state_[2] ^= t;
  state_[3] = std::rotl(state_[3], 45);
  return result;
}

std::uint64_t RandomStream::below(std::uint64_t bound) {
  if (bound == 0) {
    throw std::invalid_argument("RandomStream::below: zero bound");
  }
  // Lemire's multiply-shift with rejection; exact for every bound.
  unsigned __int128 m = static_cast<unsigned __int128>(next()) * bound;
  auto low = static_cast<std::uint64_t>(m);
  if (low < bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    while (low < threshold) {
      m = static_cast<unsigned __int128>(next()) * bound;
      low = static_cast<std::uint64_t>(m);
    }
  }
  return static_cast<std::uint64_t>(m >> 64);
}

std::uint64_t RandomStream::between(std::uint64_t lo, std::uint64_t hi) {
  if (hi < lo) {
    throw std::invalid_argument("RandomStream::between: empty range");
  }
  if (lo == 0 && hi == ~std::uint64_t{0}) {
    return next();
  }
  return lo + below(hi - lo + 1);
}

BigNat RandomStream::below(const BigNat& bound) {
  if (sgn(bound) <= 0) {
    throw std::invalid_argument("RandomStream::below: non-positive bound");
  }
  const std::size_t bits = bit_length(bound);
  const std::size_t words = (bits + 63) / 64;
  const unsigned top_bits = static_cast<unsigned>(bits - 64 * (words - 1));
  const std::uint64_t top_mask = top_bits == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << top_bits) - 1);
  std::vector<std::uint64_t> buffer(words);
  BigNat candidate;
  do {
    for (auto& w : buffer) {
      w = next();
    }
    buffer.back() &= top_mask;
    // Least significant word first, native endianness within a word.
    mpz_import(candidate.get_mpz_t(), words, -1, sizeof(std::uint64_t), 0, 0, buffer.data());
  } while (candidate >= bound);
  return candidate;
}

double RandomStream::unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

}  // namespace algsearch
