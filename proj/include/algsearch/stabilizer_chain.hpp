#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "algsearch/bignat.hpp"
#include "algsearch/permutation.hpp"

namespace algsearch {

/// Zero-based image array over {0, ..., n-1}; the working representation of
/// group algorithms, where every element of a group shares one degree n.
using PermArray = std::vector<Point>;

/// Base and strong generating set with one Schreier vector per level.
///
/// Level i stores its base point, the strong generators fixing every earlier
/// base point, the fundamental orbit in discovery order, and a Schreier
/// vector: for each orbit point the label of the strong generator that first
/// reached it (kRoot for the base point, kAbsent off the orbit). Transversal
/// elements are rebuilt on demand by walking labels back to the root.
///
/// The chain grows incrementally. extend() keeps it complete (deterministic
/// Schreier-Sims: every Schreier generator sifts to the identity).
/// extend_unverified() only sifts and records residues, which yields a chain
/// whose order() is a lower bound on the group order until complete() runs.
class StabilizerChain {
 public:
  static constexpr std::int32_t kRoot = -1;
  static constexpr std::int32_t kAbsent = -2;

  struct Level {
    Point base = 0;
    std::vector<std::size_t> generators;
    std::vector<Point> orbit;
    std::vector<std::int32_t> schreier;
    std::vector<std::size_t> checked;  // per generator slot: orbit prefix already tested
  };

  explicit StabilizerChain(std::size_t degree);

  /// Complete chain for the group generated by gens (all of the given degree).
  static StabilizerChain build(std::size_t degree, std::span<const PermArray> gens);

  /// Complete chain; the degree is the largest point moved by any generator.
  static StabilizerChain build(std::span<const Permutation> gens);

  /// Adds g to the generating set and restores completeness.
  /// Returns false when g was already a member.
  bool extend(const PermArray& g);

  /// Adds g without checking Schreier generators. Returns false when g sifts.
  bool extend_unverified(const PermArray& g);

  /// Tests every untested Schreier generator; afterwards the chain is exact.
  void complete();
  bool is_complete() const { return complete_; }

  std::size_t degree() const { return degree_; }
  const std::vector<Level>& levels() const { return levels_; }
  std::size_t strong_generator_count() const { return gens_.size(); }
  const PermArray& strong_generator(std::size_t k) const { return gens_[k]; }

  /// Base points, 1-indexed.
  std::vector<Point> base() const;

  /// Product of the fundamental orbit lengths.
  BigNat order() const;

  bool contains(std::span<const Point> g) const;
  bool contains(const Permutation& p) const;

  /// Element mapping the base point of `level` to the zero-based point.
  PermArray transversal(std::size_t level, Point point) const;

  /// Sifts g in place starting at level `from`. Returns the first level where
  /// g's base image leaves the fundamental orbit, or levels().size() if none.
  std::size_t sift(PermArray& g, std::size_t from = 0) const;

 private:
  PermArray transversal_inverse(std::size_t level, Point point) const;
  void add_strong_generator(PermArray g, std::size_t first_level, std::size_t last_level);
  void add_level(const PermArray& moving);
  void run_from(std::size_t level);

  std::size_t degree_;
  std::vector<PermArray> gens_;
  std::vector<PermArray> inverses_;
  std::vector<Level> levels_;
  bool complete_ = true;
};

PermArray identity_array(std::size_t n);
bool is_identity_array(std::span<const Point> g);
/// g then h.
PermArray compose_arrays(std::span<const Point> g, std::span<const Point> h);
PermArray invert_array(std::span<const Point> g);

}  // namespace algsearch
