#include "algsearch/bignat.hpp"

#include <cmath>
#include <stdexcept>

namespace algsearch {

BigNat parse_bignat(std::string_view text) {
  if (text.empty()) {
    throw std::invalid_argument("empty natural number");
  }
  for (char ch : text) {
    if (ch < '0' || ch > '9') {
      throw std::invalid_argument("not a decimal natural number: " + std::string(text));
    }
  }
  return BigNat(std::string(text), 10);
}

std::string to_string(const BigNat& n) { return n.get_str(10); }

std::size_t bit_length(const BigNat& n) {
  if (sgn(n) == 0) {
    return 0;
  }
  return mpz_sizeinbase(n.get_mpz_t(), 2);
}

BigNat isqrt(const BigNat& n) {
  if (sgn(n) < 0) {
    throw std::domain_error("isqrt of a negative value");
  }
  BigNat root;
  mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
  return root;
}

double log2_factorial(std::size_t n) {
  return std::lgamma(static_cast<double>(n) + 1.0) / std::log(2.0);
}

}  // namespace algsearch
