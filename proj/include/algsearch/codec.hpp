#pragma once

// Bijections  {0,1}* <-> N <-> N x N <-> S_omega x S_omega  with N = {1,2,3,...}.
//
// Words are numbered in bijective binary (shortlex): e, 0, 1, 00, 01, ...
// map to 1, 2, 3, 4, 5, ...  Pairs are enumerated along anti-diagonals:
// (1,1), (1,2), (2,1), (1,3), (2,2), (3,1), ...  Permutations are decoded
// from the factorial-base digits of m - 1 by position swaps, so that the
// indices 1..n! are exactly the permutations fixing every point above n.

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "algsearch/bignat.hpp"
#include "algsearch/permutation.hpp"

namespace algsearch {

/// A word over {0,1}; the empty word is valid.
class BinaryWord {
 public:
  BinaryWord() = default;
  /// Throws std::invalid_argument on characters other than '0' and '1'.
  explicit BinaryWord(std::string_view bits);

  std::size_t size() const { return bits_.size(); }
  bool empty() const { return bits_.empty(); }
  const std::string& str() const { return bits_; }

  friend bool operator==(const BinaryWord&, const BinaryWord&) = default;
  friend auto operator<=>(const BinaryWord&, const BinaryWord&) = default;

 private:
  std::string bits_;
};

BigNat word_to_nat(const BinaryWord& w);

/// Throws std::domain_error when m < 1.
BinaryWord nat_to_word(const BigNat& m);

/// Throws std::domain_error when m < 1.
std::pair<BigNat, BigNat> nat_to_pair(const BigNat& m);

/// Throws std::domain_error when i < 1 or j < 1.
BigNat pair_to_nat(const BigNat& i, const BigNat& j);

/// Digits d_1, d_2, ... with n = sum d_i * i! and 0 <= d_i <= i; no trailing zeros.
std::vector<std::uint32_t> factorial_digits(const BigNat& n);

/// Throws std::domain_error when m < 1.
Permutation nat_to_perm(const BigNat& m);

BigNat perm_to_nat(const Permutation& p);

/// Throws std::domain_error when m < 1.
std::pair<Permutation, Permutation> nat_to_perm_pair(const BigNat& m);

}  // namespace algsearch
