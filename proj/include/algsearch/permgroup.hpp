#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "algsearch/bignat.hpp"
#include "algsearch/permutation.hpp"
#include "algsearch/random_stream.hpp"
#include "algsearch/stabilizer_chain.hpp"

namespace algsearch {

/// Finitely generated permutation group with a lazily built, cached
/// stabilizer chain. The cache makes a PermGroup unsafe to share between
/// threads until chain() has been called once.
class PermGroup {
 public:
  /// Throws std::invalid_argument for an empty generator list.
  explicit PermGroup(std::vector<Permutation> generators);
  PermGroup(std::vector<Permutation> generators, StabilizerChain chain);

  const std::vector<Permutation>& generators() const { return gens_; }

  /// Largest point moved by any generator.
  Point degree() const { return degree_; }

  /// Points moved by some generator, ascending.
  std::vector<Point> support() const;

  const StabilizerChain& chain() const;
  BigNat order() const { return chain().order(); }
  bool contains(const Permutation& p) const { return chain().contains(p); }
  bool is_trivial() const { return degree_ == 0; }

  /// Generators as image arrays over {0, ..., degree()-1}.
  std::vector<PermArray> generator_arrays() const;

 private:
  std::vector<Permutation> gens_;
  Point degree_ = 0;
  mutable std::optional<StabilizerChain> chain_;
};

struct SchreierOrbit {
  Point root = 0;
  std::vector<Point> orbit;            // 1-indexed, discovery order, orbit[0] == root
  std::vector<std::int32_t> schreier;  // indexed by point; generator index, -1 root, -2 absent

  bool contains(Point p) const {
    return p < schreier.size() && schreier[p] != StabilizerChain::kAbsent;
  }
};

/// Orbit of `point` under gens with a Schreier vector over 1..max degree.
SchreierOrbit orbit_with_schreier(const std::vector<Permutation>& gens, Point point);

/// Element of <gens> mapping the orbit root to `point`, read off the Schreier vector.
Permutation schreier_transversal(const std::vector<Permutation>& gens, const SchreierOrbit& orbit,
                                 Point point);

StabilizerChain schreier_sims(const std::vector<Permutation>& gens);

BigNat order(const PermGroup& group);

bool is_member(const StabilizerChain& chain, const Permutation& p);

enum class GroupLabel { symmetric_giant, alternating_giant, trivial, other, degree_overflow };

std::string_view label_name(GroupLabel label);

struct GroupClass {
  GroupLabel label = GroupLabel::trivial;
  /// Largest moved point of <g,h>.
  std::size_t degree = 0;
  /// Exact order when it was determined along the way.
  std::optional<BigNat> order;

  /// Member of the search target: neither trivial nor any embedded S_n / A_n.
  bool in_target() const { return label == GroupLabel::other; }
  bool is_giant() const {
    return label == GroupLabel::symmetric_giant || label == GroupLabel::alternating_giant;
  }
};

struct ClassifyOptions {
  std::size_t degree_cap = 20000;
  /// Random elements inspected for a Jordan prime cycle.
  unsigned jordan_attempts = 50;
  /// When false, only the order-based definition is used.
  bool fast_paths = true;
};

/// Classifies <g, h>. Giants are S_n / A_n acting on exactly {1, ..., n};
/// groups whose support is not an initial segment are `other`.
GroupClass classify(const Permutation& g, const Permutation& h, const ClassifyOptions& options = {});

/// Commutator subgroup: normal closure of the generator commutators.
PermGroup derived_subgroup(const PermGroup& group);

/// Iterates the derived series until it reaches 1 or stabilizes.
/// Throws std::logic_error if the series does not settle in the provable
/// number of steps.
bool is_solvable(const PermGroup& group);

/// Solvability through transitive constituents: a subdirect product of its
/// constituents is solvable iff each constituent is. Constituents are first
/// screened by cheap proofs of non-solvability (a Jordan element, a primitive
/// action of non-prime-power degree, a non-solvable block action, or an order
/// above the largest solvable subgroup of S_k); the derived series runs only
/// when none applies.
bool is_solvable_by_constituents(const PermGroup& group);

/// Two independent uniform elements of S_n. Throws for n == 0.
std::pair<Permutation, Permutation> random_sn_pair(std::size_t n, RandomStream& rng);

/// Upper bound on the probability that two uniform elements of S_n generate
/// neither S_n nor A_n: 1/n + 8.8/n^2.
double theorem3_bound(std::size_t n);

// Lower-level tools shared by classification and solvability.

/// Orbits on {0, ..., n-1}; each orbit sorted ascending; orbits ordered by smallest point.
std::vector<std::vector<Point>> orbits(std::span<const PermArray> gens, std::size_t n);

/// True when the transitive group has a nontrivial block system (n >= 3 assumed).
bool is_imprimitive(std::span<const PermArray> gens, std::size_t n);

/// Searches random elements for a cycle of prime length p with n/2 < p <= n-3.
/// For a transitive group, success proves the group contains A_n.
bool find_jordan_element(std::span<const PermArray> gens, std::size_t n, unsigned attempts,
                         RandomStream& rng);

/// Product replacement generator of nearly uniform random group elements.
class RandomElements {
 public:
  RandomElements(std::span<const PermArray> gens, std::size_t n, RandomStream& rng);
  PermArray next();

 private:
  RandomStream& rng_;
  std::vector<PermArray> slots_;
  PermArray accumulator_;
};

}  // namespace algsearch
