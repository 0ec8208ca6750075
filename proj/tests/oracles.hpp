#pragma once
// Brute-force reference implementations used to check the real code.
// Everything here is deliberately naive.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "algsearch/permgroup.hpp"
#include "algsearch/permutation.hpp"

namespace oracle {

using Perm = std::vector<std::uint32_t>;  // zero-based images on a fixed degree

inline Perm identity(std::size_t n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0u);
  return p;
}

/// Apply a then b.
inline Perm then(const Perm& a, const Perm& b) {
  Perm r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    r[i] = b[a[i]];
  }
  return r;
}

inline Perm on_degree(const algsearch::Permutation& p, std::size_t n) {
  Perm r = identity(n);
  for (std::size_t i = 0; i < n; ++i) {
    r[i] = p(static_cast<std::uint32_t>(i + 1)) - 1;
  }
  return r;
}

/// Every element of <gens>, by breadth-first closure.
inline std::set<Perm> closure(const std::vector<Perm>& gens, std::size_t n) {
  std::set<Perm> seen{identity(n)};
  std::vector<Perm> frontier{identity(n)};
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const auto& x : frontier) {
      for (const auto& g : gens) {
        Perm y = then(x, g);
        if (seen.insert(y).second) {
          next.push_back(std::move(y));
        }
      }
    }
    frontier = std::move(next);
  }
  return seen;
}

inline bool is_even(const Perm& p) {
  std::size_t inversions = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = i + 1; j < p.size(); ++j) {
      inversions += p[i] > p[j] ? 1 : 0;
    }
  }
  return inversions % 2 == 0;
}

inline bool is_abelian(const std::set<Perm>& group) {
  for (const auto& a : group) {
    for (const auto& b : group) {
      if (then(a, b) != then(b, a)) {
        return false;
      }
    }
  }
  return true;
}

/// Commutator subgroup as the closure of all commutators of all elements.
inline std::set<Perm> derived(const std::set<Perm>& group, std::size_t n) {
  std::set<Perm> commutators;
  for (const auto& a : group) {
    Perm ai(n);
    for (std::size_t i = 0; i < n; ++i) ai[a[i]] = i;
    for (const auto& b : group) {
      Perm bi(n);
      for (std::size_t i = 0; i < n; ++i) bi[b[i]] = i;
      commutators.insert(then(then(ai, bi), then(a, b)));
    }
  }
  return closure({commutators.begin(), commutators.end()}, n);
}

inline bool is_solvable(std::set<Perm> group, std::size_t n) {
  while (group.size() > 1) {
    auto next = derived(group, n);
    if (next.size() == group.size()) {
      return false;
    }
    group = std::move(next);
  }
  return true;
}

/// Label by the definition: support must be {1..m} with m the largest moved
/// point, and the element set must equal Sym or Alt of that support.
inline std::string classify(const std::vector<Perm>& gens, std::size_t n) {
  const auto group = closure(gens, n);
  std::size_t m = 0;
  std::vector<bool> moved(n, false);
  for (const auto& g : group) {
    for (std::size_t i = 0; i < n; ++i) {
      if (g[i] != i) {
        moved[i] = true;
        m = std::max(m, i + 1);
      }
    }
  }
  if (m == 0) {
    return "trivial";
  }
  for (std::size_t i = 0; i < m; ++i) {
    if (!moved[i]) {
      return "other";
    }
  }
  // Enumerate Sym(m) and Alt(m) on the first m points explicitly.
  std::set<Perm> sym, alt;
  Perm p = identity(m);
  do {
    Perm full = identity(n);
    std::copy(p.begin(), p.end(), full.begin());
    sym.insert(full);
    if (is_even(p)) {
      alt.insert(full);
    }
  } while (std::next_permutation(p.begin(), p.end()));
  if (group == sym) {
    return "symmetric_giant";
  }
  if (group == alt) {
    return "alternating_giant";
  }
  return "other";
}

/// Generators of a random subgroup of S_7, mixing several shapes so the
/// sample is not dominated by S_7 itself.
inline std::vector<algsearch::Permutation> random_s7_generators(algsearch::RandomStream& rng) {
  using algsearch::compose;
  using algsearch::Permutation;
  auto random_perm = [&](std::size_t n) { return algsearch::random_sn_pair(n, rng).first; };
  const Permutation g = random_perm(7);
  switch (rng.below(4)) {
    case 0:
      return {g, random_perm(7)};
    case 1:  // the second generator fixes some points
      return {random_perm(2 + rng.below(4)), g};
    case 2: {  // a conjugate of a power of g
      Permutation h = g;
      for (std::uint64_t e = rng.below(5); e > 0; --e) h = compose(h, g);
      const Permutation c = random_perm(7);
      return {g, compose(compose(c.inverse(), h), c)};
    }
    default:  // preserves {1..4} and {5, 6, 7}
      return {random_perm(4), compose(Permutation::from_cycles({{5, 6, 7}}), random_perm(3))};
  }
}

}  // namespace oracle
