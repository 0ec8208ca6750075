#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>

namespace algsearch {

/// Arbitrary-precision natural number. Values handled by this library are
/// never negative; parse_bignat rejects signs.
using BigNat = mpz_class;

/// Parses a non-empty string of decimal digits. Throws std::invalid_argument
/// on anything else.
BigNat parse_bignat(std::string_view text);

std::string to_string(const BigNat& n);

/// Number of bits in the binary representation; 0 for 0.
std::size_t bit_length(const BigNat& n);

/// Floor of the square root.
BigNat isqrt(const BigNat& n);

/// log2(n!) computed in floating point, used only for reporting.
double log2_factorial(std::size_t n);

}  // namespace algsearch
