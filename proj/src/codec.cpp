#include "algsearch/codec.hpp"

#include <algorithm>
#include <stdexcept>

namespace algsearch {

namespace {

void require_positive(const BigNat& m, const char* what) {
  if (sgn(m) <= 0) {
    throw std::domain_error(std::string(what) + ": argument must be >= 1");
  }
}

}  // namespace

BinaryWord::BinaryWord(std::string_view bits) : bits_(bits) {
  for (char ch : bits_) {
    if (ch != '0' && ch != '1') {
      throw std::invalid_argument("binary word may only contain 0 and 1");
    }
  }
}

BigNat word_to_nat(const BinaryWord& w) {
  return BigNat("1" + w.str(), 2);
}

BinaryWord nat_to_word(const BigNat& m) {
  require_positive(m, "nat_to_word");
  return BinaryWord(std::string_view(m.get_str(2)).substr(1));
}

std::pair<BigNat, BigNat> nat_to_pair(const BigNat& m) {
  require_positive(m, "nat_to_pair");
  // Smallest t with t(t+1)/2 >= m. The isqrt estimate is within one step.
  BigNat t = (isqrt(BigNat(8 * m)) - 1) / 2;
  if (sgn(t) < 0) {
    t = 0;
  }
  while (t * (t + 1) / 2 < m) {
    ++t;
  }
  while (t > 1 && (t - 1) * t / 2 >= m) {
    --t;
  }
  BigNat i = m - t * (t - 1) / 2;
  BigNat j = t + 1 - i;
  return {std::move(i), std::move(j)};
}

BigNat pair_to_nat(const BigNat& i, const BigNat& j) {
  require_positive(i, "pair_to_nat");
  require_positive(j, "pair_to_nat");
  const BigNat s = i + j;
  return (s - 1) * (s - 2) / 2 + i;
}

std::vector<std::uint32_t> factorial_digits(const BigNat& n) {
  if (sgn(n) < 0) {
    throw std::domain_error("factorial_digits: negative argument");
  }
  std::vector<std::uint32_t> digits;
  BigNat rest = n;
  std::uint64_t radix = 2;  // digit d_i has radix i + 1
  std::vector<std::uint64_t> group;
  while (sgn(rest) != 0) {
    // Peel several radices with one multi-precision division.
    group.clear();
    std::uint64_t product = 1;
    while (product <= ~std::uint64_t{0} / (radix + group.size())) {
      product *= radix + group.size();
      group.push_back(radix + group.size());
      if (group.size() == 16) {
        break;
      }
    }
    std::uint64_t low = mpz_fdiv_q_ui(rest.get_mpz_t(), rest.get_mpz_t(), product);
    for (std::uint64_t r : group) {
      digits.push_back(static_cast<std::uint32_t>(low % r));
      low /= r;
    }
    radix += group.size();
  }
  while (!digits.empty() && digits.back() == 0) {
    digits.pop_back();
  }
  return digits;
}

Permutation nat_to_perm(const BigNat& m) {
  require_positive(m, "nat_to_perm");
  const auto digits = factorial_digits(m - 1);
  const std::size_t k = digits.size();
  if (k == 0) {
    return Permutation();
  }
  std::vector<Point> img(k + 1);
  for (std::size_t x = 0; x <= k; ++x) {
    img[x] = static_cast<Point>(x);
  }
  // 1-indexed positions i+1 and i+1-d_i are zero-based i and i-d_i.
  for (std::size_t i = k; i >= 1; --i) {
    std::swap(img[i], img[i - digits[i - 1]]);
  }
  return Permutation::from_zero_based(std::move(img));
}

BigNat perm_to_nat(const Permutation& p) {
  const std::size_t n = p.max_moved();
  if (n == 0) {
    return 1;
  }
  std::vector<Point> img(p.zero_based().begin(), p.zero_based().begin() + n);
  std::vector<Point> where(n);
  for (std::size_t x = 0; x < n; ++x) {
    where[img[x]] = static_cast<Point>(x);
  }
  // Position i+1 (zero-based i) is final after the swap for digit d_i, so its
  // value reveals d_i; swapping the values back undoes that step.
  const std::size_t k = n - 1;
  std::vector<std::uint32_t> digits(k);
  for (std::size_t i = k; i >= 1; --i) {
    const Point v = img[i];
    digits[i - 1] = static_cast<std::uint32_t>(i - v);
    const Point pos = where[i];
    img[pos] = v;
    where[v] = pos;
    img[i] = static_cast<Point>(i);
    where[i] = static_cast<Point>(i);
  }
  BigNat acc = 0;
  for (std::size_t i = k; i >= 1; --i) {
    acc += digits[i - 1];
    acc *= static_cast<unsigned long>(i);
  }
  return acc + 1;
}

std::pair<Permutation, Permutation> nat_to_perm_pair(const BigNat& m) {
  auto [i, j] = nat_to_pair(m);
  return {nat_to_perm(i), nat_to_perm(j)};
}

}  // namespace algsearch
