#include "algsearch/permgroup.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace algsearch {

namespace {

constexpr std::uint64_t kClassifySeed = 0x5eed'c1a5'51f7'0001ULL;

BigNat factorial(std::size_t n) {
  BigNat f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

PermArray padded_array(const Permutation& p, std::size_t n) {
  const Permutation q = p.padded(n);
  return PermArray(q.zero_based().begin(), q.zero_based().end());
}

Permutation to_permutation(PermArray a) { return Permutation::from_zero_based(std::move(a)); }

std::vector<bool> prime_table(std::size_t n) {
  std::vector<bool> prime(n + 1, true);
  prime[0] = false;
  if (n >= 1) {
    prime[1] = false;
  }
  for (std::size_t p = 2; p * p <= n; ++p) {
    if (prime[p]) {
      for (std::size_t q = p * p; q <= n; q += p) {
        prime[q] = false;
      }
    }
  }
  return prime;
}

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n), size_(n, 1) {
    std::iota(parent_.begin(), parent_.end(), Point{0});
  }
  Point find(Point x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  bool unite(Point a, Point b) {
    a = find(a);
    b = find(b);
    if (a == b) {
      return false;
    }
    if (size_[a] < size_[b]) {
      std::swap(a, b);
    }
    parent_[b] = a;
    size_[a] += size_[b];
    return true;
  }
  std::size_t class_size(Point x) { return size_[find(x)]; }

 private:
  std::vector<Point> parent_;
  std::vector<std::size_t> size_;
};

/// Restriction of gens to the invariant set `points`, relabelled 0..k-1.
std::vector<PermArray> restrict_to(std::span<const PermArray> gens, const std::vector<Point>& points,
                                   std::size_t n) {
  std::vector<Point> index(n, 0);
  for (std::size_t k = 0; k < points.size(); ++k) {
    index[points[k]] = static_cast<Point>(k);
  }
  std::vector<PermArray> out;
  for (const auto& g : gens) {
    PermArray r(points.size());
    for (std::size_t k = 0; k < points.size(); ++k) {
      r[k] = index[g[points[k]]];
    }
    if (!is_identity_array(r)) {
      out.push_back(std::move(r));
    }
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------- PermGroup

PermGroup::PermGroup(std::vector<Permutation> generators) : gens_(std::move(generators)) {
  if (gens_.empty()) {
    throw std::invalid_argument("a permutation group needs at least one generator");
  }
  for (const auto& g : gens_) {
    degree_ = std::max(degree_, g.max_moved());
  }
}

PermGroup::PermGroup(std::vector<Permutation> generators, StabilizerChain chain)
    : PermGroup(std::move(generators)) {
  if (chain.degree() < degree_ || !chain.is_complete()) {
    throw std::invalid_argument("supplied chain does not fit the generators");
  }
  chain_ = std::move(chain);
}

std::vector<Point> PermGroup::support() const {
  std::vector<bool> moved(degree_ + 1, false);
  for (const auto& g : gens_) {
    for (Point p = 1; p <= g.max_moved(); ++p) {
      if (g(p) != p) {
        moved[p] = true;
      }
    }
  }
  std::vector<Point> s;
  for (Point p = 1; p <= degree_; ++p) {
    if (moved[p]) {
      s.push_back(p);
    }
  }
  return s;
}

std::vector<PermArray> PermGroup::generator_arrays() const {
  std::vector<PermArray> arrays;
  arrays.reserve(gens_.size());
  for (const auto& g : gens_) {
    arrays.push_back(padded_array(g, degree_));
  }
  return arrays;
}

const StabilizerChain& PermGroup::chain() const {
  if (!chain_) {
    chain_ = StabilizerChain::build(degree_, generator_arrays());
  }
  return *chain_;
}

// ------------------------------------------------------------------ orbits

SchreierOrbit orbit_with_schreier(const std::vector<Permutation>& gens, Point point) {
  if (point == 0) {
    throw std::invalid_argument("points are numbered from 1");
  }
  Point n = point;
  for (const auto& g : gens) {
    n = std::max(n, g.max_moved());
  }
  SchreierOrbit result;
  result.root = point;
  result.schreier.assign(n + 1, StabilizerChain::kAbsent);
  result.schreier[point] = StabilizerChain::kRoot;
  result.orbit.push_back(point);
  for (std::size_t k = 0; k < result.orbit.size(); ++k) {
    const Point x = result.orbit[k];
    for (std::size_t label = 0; label < gens.size(); ++label) {
      const Point y = gens[label](x);
      if (result.schreier[y] == StabilizerChain::kAbsent) {
        result.schreier[y] = static_cast<std::int32_t>(label);
        result.orbit.push_back(y);
      }
    }
  }
  return result;
}

Permutation schreier_transversal(const std::vector<Permutation>& gens, const SchreierOrbit& orbit,
                                 Point point) {
  if (!orbit.contains(point)) {
    throw std::invalid_argument("point is not in the orbit");
  }
  // Walking labels back to the root multiplies the inverses in order, which
  // gives the inverse of the transversal element.
  Permutation walk_inverse;
  while (point != orbit.root) {
    const Permutation inv = gens[static_cast<std::size_t>(orbit.schreier[point])].inverse();
    walk_inverse = compose(walk_inverse, inv);
    point = inv(point);
  }
  return walk_inverse.inverse();
}

std::vector<std::vector<Point>> orbits(std::span<const PermArray> gens, std::size_t n) {
  std::vector<bool> seen(n, false);
  std::vector<std::vector<Point>> result;
  for (Point start = 0; start < n; ++start) {
    if (seen[start]) {
      continue;
    }
    std::vector<Point> orbit{start};
    seen[start] = true;
    for (std::size_t k = 0; k < orbit.size(); ++k) {
      for (const auto& g : gens) {
        const Point y = g[orbit[k]];
        if (!seen[y]) {
          seen[y] = true;
          orbit.push_back(y);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    result.push_back(std::move(orbit));
  }
  return result;
}

namespace {

/// Block id per point for a nontrivial block system, or empty when the
/// transitive group is primitive. Minimal blocks containing {0, beta}
/// (Atkinson); a block larger than n/2 must be everything, which ends that
/// attempt early.
std::vector<Point> find_block_system(std::span<const PermArray> gens, std::size_t n) {
  std::vector<std::pair<Point, Point>> queue;
  for (Point beta = 1; beta < n; ++beta) {
    UnionFind classes(n);
    queue.clear();
    classes.unite(0, beta);
    queue.emplace_back(0, beta);
    bool whole = false;
    for (std::size_t k = 0; k < queue.size() && !whole; ++k) {
      const auto [x, y] = queue[k];
      for (const auto& g : gens) {
        const Point a = classes.find(g[x]);
        const Point b = classes.find(g[y]);
        if (a != b) {
          classes.unite(a, b);
          queue.emplace_back(a, b);
          if (2 * classes.class_size(0) > n) {
            whole = true;
            break;
          }
        }
      }
    }
    if (!whole && classes.class_size(0) < n) {
      std::vector<Point> root_id(n, static_cast<Point>(n));
      std::vector<Point> id(n);
      Point next = 0;
      for (Point x = 0; x < n; ++x) {
        Point& slot = root_id[classes.find(x)];
        if (slot == n) {
          slot = next++;
        }
        id[x] = slot;
      }
      return id;
    }
  }
  return {};
}

bool is_prime_power(std::size_t k) {
  if (k < 2) {
    return false;
  }
  std::size_t p = 2;
  while (k % p != 0) {
    ++p;
  }
  while (k % p == 0) {
    k /= p;
  }
  return k == 1;
}

}  // namespace

bool is_imprimitive(std::span<const PermArray> gens, std::size_t n) {
  return !find_block_system(gens, n).empty();
}

RandomElements::RandomElements(std::span<const PermArray> gens, std::size_t n, RandomStream& rng)
    : rng_(rng), accumulator_(identity_array(n)) {
  const std::size_t count = std::max<std::size_t>(10, gens.size());
  for (std::size_t k = 0; k < count; ++k) {
    slots_.push_back(gens.empty() ? identity_array(n) : gens[k % gens.size()]);
  }
  for (int warmup = 0; warmup < 50; ++warmup) {
    next();
  }
}

PermArray RandomElements::next() {
  const std::size_t r = slots_.size();
  const std::size_t i = rng_.below(r);
  std::size_t j = rng_.below(r - 1);
  if (j >= i) {
    ++j;
  }
  const PermArray& other = slots_[j];
  const PermArray factor = rng_.below(2) == 0 ? other : invert_array(other);
  if (rng_.below(2) == 0) {
    slots_[i] = compose_arrays(slots_[i], factor);
  } else {
    slots_[i] = compose_arrays(factor, slots_[i]);
  }
  accumulator_ = compose_arrays(accumulator_, slots_[i]);
  return accumulator_;
}

bool find_jordan_element(std::span<const PermArray> gens, std::size_t n, unsigned attempts,
                         RandomStream& rng) {
  if (n < 8 || gens.empty()) {
    return false;  // no prime p with n/2 < p <= n-3
  }
  const auto prime = prime_table(n);
  RandomElements elements(gens, n, rng);
  std::vector<bool> seen(n);
  for (unsigned a = 0; a < attempts; ++a) {
    const PermArray x = elements.next();
    std::fill(seen.begin(), seen.end(), false);
    for (Point start = 0; start < n; ++start) {
      if (seen[start]) {
        continue;
      }
      std::size_t length = 0;
      for (Point y = start; !seen[y]; y = x[y]) {
        seen[y] = true;
        ++length;
      }
      if (prime[length] && 2 * length > n && length + 3 <= n) {
        return true;
      }
    }
  }
  return false;
}

// --------------------------------------------------------------- chains

StabilizerChain schreier_sims(const std::vector<Permutation>& gens) {
  return StabilizerChain::build(std::span<const Permutation>(gens));
}

BigNat order(const PermGroup& group) { return group.order(); }

bool is_member(const StabilizerChain& chain, const Permutation& p) { return chain.contains(p); }

// ----------------------------------------------------------- classification

std::string_view label_name(GroupLabel label) {
  switch (label) {
    case GroupLabel::symmetric_giant:
      return "symmetric_giant";
    case GroupLabel::alternating_giant:
      return "alternating_giant";
    case GroupLabel::trivial:
      return "trivial";
    case GroupLabel::other:
      return "other";
    case GroupLabel::degree_overflow:
      return "degree_overflow";
  }
  return "unknown";
}

GroupClass classify(const Permutation& g, const Permutation& h, const ClassifyOptions& options) {
  GroupClass result;
  const std::size_t n = std::max(g.max_moved(), h.max_moved());
  result.degree = n;
  if (n == 0) {
    result.label = GroupLabel::trivial;
    result.order = BigNat(1);
    return result;
  }
  if (n > options.degree_cap) {
    result.label = GroupLabel::degree_overflow;
    return result;
  }

  const std::vector<PermArray> gens{padded_array(g, n), padded_array(h, n)};
  result.label = GroupLabel::other;

  // Giants act on exactly {1, ..., n}: every point is moved and the action is transitive.
  for (Point x = 0; x < n; ++x) {
    if (gens[0][x] == x && gens[1][x] == x) {
      return result;
    }
  }
  if (orbits(gens, n).size() != 1) {
    return result;
  }

  const bool all_even = g.is_even() && h.is_even();
  const BigNat full = factorial(n);
  const BigNat target = all_even ? BigNat(full / 2) : full;
  auto decide = [&](const BigNat& group_order) {
    result.order = group_order;
    if (group_order == full) {
      result.label = GroupLabel::symmetric_giant;
    } else if (all_even && group_order == full / 2) {
      result.label = GroupLabel::alternating_giant;
    } else {
      result.label = GroupLabel::other;
    }
    return result;
  };

  if (!options.fast_paths || n <= 8) {
    return decide(StabilizerChain::build(n, gens).order());
  }

  RandomStream rng(kClassifySeed ^ n);
  // Jordan: a primitive group with a p-cycle, p <= n-3, contains A_n. A
  // transitive group holding an element with a prime cycle of length p > n/2
  // is primitive, and a power of that element is a p-cycle.
  if (find_jordan_element(gens, n, options.jordan_attempts, rng)) {
    return decide(target);
  }
  if (is_imprimitive(gens, n)) {
    return result;  // S_n and A_n are primitive for n >= 3
  }

  // Random Schreier-Sims gives a lower bound on the order; reaching the
  // target certifies the giant. Otherwise finish the chain deterministically.
  StabilizerChain chain(n);
  for (const auto& gen : gens) {
    chain.extend_unverified(gen);
  }
  RandomElements elements(gens, n, rng);
  for (int quiet = 0; quiet < 30 && chain.order() < target;) {
    quiet = chain.extend_unverified(elements.next()) ? 0 : quiet + 1;
  }
  if (chain.order() == target) {
    return decide(target);
  }
  chain.complete();
  return decide(chain.order());
}

// -------------------------------------------------------------- solvability

PermGroup derived_subgroup(const PermGroup& group) {
  const std::size_t n = group.degree();
  if (n == 0) {
    return PermGroup({Permutation()});
  }
  const auto gens = group.generator_arrays();
  std::vector<PermArray> inverses;
  for (const auto& g : gens) {
    inverses.push_back(invert_array(g));
  }

  StabilizerChain chain(n);
  std::vector<PermArray> normal_gens;
  auto add = [&](const PermArray& x) {
    if (chain.extend(x)) {
      normal_gens.push_back(x);
    }
  };
  for (std::size_t a = 0; a < gens.size(); ++a) {
    for (std::size_t b = a + 1; b < gens.size(); ++b) {
      // [g_a, g_b] = g_a^-1 g_b^-1 g_a g_b
      add(compose_arrays(compose_arrays(inverses[a], inverses[b]), compose_arrays(gens[a], gens[b])));
    }
  }
  // Normal closure: conjugate every new generator by every generator of G.
  for (std::size_t k = 0; k < normal_gens.size(); ++k) {
    for (std::size_t a = 0; a < gens.size(); ++a) {
      add(compose_arrays(compose_arrays(inverses[a], normal_gens[k]), gens[a]));
    }
  }

  std::vector<Permutation> out;
  for (auto& x : normal_gens) {
    out.push_back(to_permutation(std::move(x)));
  }
  if (out.empty()) {
    return PermGroup({Permutation()});
  }
  return PermGroup(std::move(out), std::move(chain));
}

bool is_solvable(const PermGroup& group) {
  const BigNat start_order = group.order();
  const std::size_t limit = 2 * bit_length(start_order) + 2;
  PermGroup current = group;
  BigNat current_order = start_order;
  for (std::size_t step = 0; step <= limit; ++step) {
    if (current_order == 1) {
      return true;
    }
    PermGroup next = derived_subgroup(current);
    BigNat next_order = next.order();
    if (next_order == current_order) {
      return false;
    }
    current = std::move(next);
    current_order = std::move(next_order);
  }
  throw std::logic_error("derived series did not settle; derived_subgroup is inconsistent");
}

namespace {

/// Dixon: a solvable subgroup of S_k has order at most 24^((k-1)/3).
BigNat solvable_order_limit(std::size_t k) {
  BigNat limit;
  mpz_ui_pow_ui(limit.get_mpz_t(), 24, (k - 1) / 3 + 1);
  return limit;
}

/// Cheap proof that a transitive group is not solvable. False means
/// "no certificate found", not "solvable".
bool certify_nonsolvable(std::span<const PermArray> gens, std::size_t k, RandomStream& rng) {
  if (k < 5 || gens.empty()) {
    return false;  // transitive groups of degree <= 4 are solvable
  }
  if (find_jordan_element(gens, k, 50, rng)) {
    return true;  // contains A_k with k >= 8
  }
  const auto blocks = find_block_system(gens, k);
  if (blocks.empty() && !is_prime_power(k)) {
    return true;  // primitive solvable groups have prime-power degree
  }
  if (!blocks.empty()) {
    // The action on the blocks is a quotient, so it must be solvable too.
    const std::size_t m = *std::max_element(blocks.begin(), blocks.end()) + 1;
    std::vector<Point> first(m, static_cast<Point>(k));
    for (Point x = 0; x < k; ++x) {
      if (first[blocks[x]] == k) {
        first[blocks[x]] = x;
      }
    }
    std::vector<PermArray> quotient;
    for (const auto& g : gens) {
      PermArray q(m);
      for (std::size_t b = 0; b < m; ++b) {
        q[b] = blocks[g[first[b]]];
      }
      if (!is_identity_array(q)) {
        quotient.push_back(std::move(q));
      }
    }
    if (certify_nonsolvable(quotient, m, rng)) {
      return true;
    }
    // The setwise stabilizer of block 0 acting on that block is a section
    // of G. Schreier's lemma gives its generators from a block transversal.
    std::vector<PermArray> transversal(m);
    std::vector<bool> reached(m, false);
    std::vector<std::size_t> queue{0};
    transversal[0] = identity_array(k);
    reached[0] = true;
    for (std::size_t q = 0; q < queue.size(); ++q) {
      for (const auto& g : gens) {
        const std::size_t next = blocks[g[first[queue[q]]]];
        if (!reached[next]) {
          reached[next] = true;
          transversal[next] = compose_arrays(transversal[queue[q]], g);
          queue.push_back(next);
        }
      }
    }
    std::vector<Point> block;
    std::vector<Point> index(k, 0);
    for (Point x = 0; x < k; ++x) {
      if (blocks[x] == 0) {
        index[x] = static_cast<Point>(block.size());
        block.push_back(x);
      }
    }
    std::vector<PermArray> section;
    std::set<PermArray> seen;
    for (std::size_t b = 0; b < m; ++b) {
      for (const auto& g : gens) {
        const PermArray x = compose_arrays(transversal[b], g);
        const PermArray y = compose_arrays(x, invert_array(transversal[blocks[x[first[0]]]]));
        PermArray r(block.size());
        for (std::size_t i = 0; i < block.size(); ++i) {
          r[i] = index[y[block[i]]];
        }
        if (!is_identity_array(r) && seen.insert(r).second) {
          section.push_back(std::move(r));
        }
      }
    }
    if (certify_nonsolvable(section, block.size(), rng)) {
      return true;
    }
  }
  // Random Schreier-Sims only ever underestimates the order.
  const BigNat limit = solvable_order_limit(k);
  StabilizerChain chain(k);
  for (const auto& g : gens) {
    chain.extend_unverified(g);
  }
  RandomElements elements(gens, k, rng);
  for (int quiet = 0; quiet < 10 && chain.order() <= limit;) {
    quiet = chain.extend_unverified(elements.next()) ? 0 : quiet + 1;
  }
  return chain.order() > limit;
}

}  // namespace

bool is_solvable_by_constituents(const PermGroup& group) {
  const std::size_t n = group.degree();
  if (n == 0) {
    return true;
  }
  const auto gens = group.generator_arrays();
  RandomStream rng(kClassifySeed ^ (n << 20));
  std::vector<std::vector<PermArray>> pending;
  for (const auto& orbit : orbits(gens, n)) {
    if (orbit.size() < 3) {
      continue;  // constituents of degree <= 2 are abelian
    }
    auto restricted = restrict_to(gens, orbit, n);
    if (certify_nonsolvable(restricted, orbit.size(), rng)) {
      return false;
    }
    pending.push_back(std::move(restricted));
  }
  // No cheap certificate: run the exact derived series, smallest first.
  std::sort(pending.begin(), pending.end(),
            [](const auto& x, const auto& y) { return x.front().size() < y.front().size(); });
  for (auto& restricted : pending) {
    std::vector<Permutation> perms;
    for (auto& r : restricted) {
      perms.push_back(to_permutation(std::move(r)));
    }
    if (!is_solvable(PermGroup(std::move(perms)))) {
      return false;
    }
  }
  return true;
}

// ------------------------------------------------------------- baselines

std::pair<Permutation, Permutation> random_sn_pair(std::size_t n, RandomStream& rng) {
  if (n == 0) {
    throw std::invalid_argument("random_sn_pair: n must be >= 1");
  }
  auto shuffle = [&] {
    PermArray a = identity_array(n);
    for (std::size_t i = n; i > 1; --i) {
      std::swap(a[i - 1], a[rng.below(i)]);
    }
    return to_permutation(std::move(a));
  };
  Permutation first = shuffle();
  Permutation second = shuffle();
  return {std::move(first), std::move(second)};
}

double theorem3_bound(std::size_t n) {
  if (n == 0) {
    throw std::invalid_argument("theorem3_bound: n must be >= 1");
  }
  const double x = static_cast<double>(n);
  return 1.0 / x + 8.8 / (x * x);
}

}  // namespace algsearch
