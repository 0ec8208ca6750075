#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace algsearch {

/// Letter index into a GenAlphabet: 2k is generator x_{k+1}, 2k+1 its inverse.
using Letter = std::uint8_t;
using Word = std::vector<Letter>;

constexpr Letter inverse_letter(Letter l) { return l ^ 1; }

/// The 2r symbols x_1, X_1, ..., x_r, X_r, written a, A, b, B, ... in text.
class GenAlphabet {
 public:
  static constexpr int kMaxRank = 26;

  /// Throws std::invalid_argument unless 1 <= rank <= 26.
  explicit GenAlphabet(int rank = 2);

  int rank() const { return rank_; }
  std::size_t size() const { return 2 * static_cast<std::size_t>(rank_); }

  char symbol(Letter l) const;
  /// Throws std::invalid_argument for characters outside the alphabet.
  Letter letter(char symbol) const;

  Word parse(std::string_view text) const;
  std::string format(const Word& w) const;

 private:
  int rank_;
};

}  // namespace algsearch
