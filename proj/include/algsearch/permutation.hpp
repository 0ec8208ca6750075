#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace algsearch {

/// A point of {1, 2, 3, ...}. Point 0 is never a valid point.
using Point = std::uint32_t;

/// Finite-support permutation of {1, 2, 3, ...}.
///
/// Stored as a zero-based image array of length degree(); every point beyond
/// the stored degree is fixed. Two permutations compare equal when they act
/// identically, regardless of how many trailing fixed points are stored.
class Permutation {
 public:
  Permutation() = default;

  /// From one-line notation: images[i] is the image of point i + 1.
  /// Throws std::invalid_argument unless images is a permutation of 1..size.
  explicit Permutation(std::span<const Point> images);
  Permutation(std::initializer_list<Point> images);

  /// From disjoint or non-disjoint cycles, composed left to right.
  static Permutation from_cycles(const std::vector<std::vector<Point>>& cycles);

  /// Takes ownership of a zero-based image array (image of i is zero_based[i]).
  static Permutation from_zero_based(std::vector<Point> zero_based);

  /// Parses "[2,3,4,1]" (one-line) or "(1,2,3)(4,5)" / "()" (cycles).
  static Permutation parse(std::string_view text);

  std::size_t degree() const { return images_.size(); }

  /// Largest non-fixed point, 0 for the identity.
  Point max_moved() const;

  bool is_identity() const { return max_moved() == 0; }
  bool is_even() const;

  /// Image of a 1-indexed point.
  Point operator()(Point p) const {
    return p >= 1 && p <= images_.size() ? images_[p - 1] + 1 : p;
  }

  Permutation inverse() const;

  /// Same action, stored with exactly n points (n must be >= max_moved()).
  Permutation padded(std::size_t n) const;

  /// One-line form over 1..degree(), 1-indexed images.
  std::vector<Point> one_line() const;

  /// Nontrivial cycles, each starting at its smallest point, ordered by that point.
  std::vector<std::vector<Point>> cycles() const;

  /// Zero-based image array.
  std::span<const Point> zero_based() const { return images_; }

  std::string to_one_line_string() const;
  std::string to_cycle_string() const;

  friend bool operator==(const Permutation& a, const Permutation& b);

 private:
  std::vector<Point> images_;
};

/// p then q: the result maps x to q(p(x)).
Permutation compose(const Permutation& p, const Permutation& q);

}  // namespace algsearch
