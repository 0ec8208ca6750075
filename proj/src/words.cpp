#include "algsearch/words.hpp"

#include <stdexcept>

namespace algsearch {

GenAlphabet::GenAlphabet(int rank) : rank_(rank) {
  if (rank < 1 || rank > kMaxRank) {
    throw std::invalid_argument("alphabet rank must be in [1, 26]");
  }
}

char GenAlphabet::symbol(Letter l) const {
  if (l >= size()) {
    throw std::invalid_argument("letter outside alphabet");
  }
  const char base = (l % 2 == 0) ? 'a' : 'A';
  return static_cast<char>(base + l / 2);
}

Letter GenAlphabet::letter(char symbol) const {
  if (symbol >= 'a' && symbol < 'a' + rank_) {
    return static_cast<Letter>(2 * (symbol - 'a'));
  }
  if (symbol >= 'A' && symbol < 'A' + rank_) {
    return static_cast<Letter>(2 * (symbol - 'A') + 1);
  }
  throw std::invalid_argument(std::string("symbol '") + symbol + "' is not in the alphabet");
}

Word GenAlphabet::parse(std::string_view text) const {
  if (text == "\"\"") {
    return {};
  }
  Word w;
  w.reserve(text.size());
  for (char ch : text) {
    w.push_back(letter(ch));
  }
  return w;
}

std::string GenAlphabet::format(const Word& w) const {
  std::string s;
  s.reserve(w.size());
  for (Letter l : w) {
    s.push_back(symbol(l));
  }
  return s;
}

}  // namespace algsearch
