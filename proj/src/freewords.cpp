#include "algsearch/freewords.hpp"

#include <stdexcept>

namespace algsearch {

Word free_reduce(const Word& w) {
  Word stack;
  stack.reserve(w.size());
  for (Letter l : w) {
    if (!stack.empty() && stack.back() == inverse_letter(l)) {
      stack.pop_back();
    } else {
      stack.push_back(l);
    }
  }
  return stack;
}

bool is_identity_free(const Word& w) {
  if (w.size() % 2 != 0) {
    return false;
  }
  return free_reduce(w).empty();
}

bool is_identity_abelian(const Word& w, int rank) {
  std::vector<long long> exponent(static_cast<std::size_t>(rank), 0);
  for (Letter l : w) {
    const std::size_t gen = l / 2;
    if (gen >= exponent.size()) {
      throw std::domain_error("is_identity_abelian: letter outside the alphabet");
    }
    exponent[gen] += (l % 2 == 0) ? 1 : -1;
  }
  for (long long e : exponent) {
    if (e != 0) {
      return false;
    }
  }
  return true;
}

}  // namespace algsearch
