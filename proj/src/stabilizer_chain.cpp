#include "algsearch/stabilizer_chain.hpp"

#include <stdexcept>

namespace algsearch {

PermArray identity_array(std::size_t n) {
  PermArray id(n);
  for (std::size_t i = 0; i < n; ++i) {
    id[i] = static_cast<Point>(i);
  }
  return id;
}

bool is_identity_array(std::span<const Point> g) {
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g[i] != i) {
      return false;
    }
  }
  return true;
}

PermArray compose_arrays(std::span<const Point> g, std::span<const Point> h) {
  PermArray out(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    out[i] = h[g[i]];
  }
  return out;
}

PermArray invert_array(std::span<const Point> g) {
  PermArray out(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    out[g[i]] = static_cast<Point>(i);
  }
  return out;
}

StabilizerChain::StabilizerChain(std::size_t degree) : degree_(degree) {}

StabilizerChain StabilizerChain::build(std::size_t degree, std::span<const PermArray> gens) {
  StabilizerChain chain(degree);
  for (const auto& g : gens) {
    if (g.size() != degree) {
      throw std::invalid_argument("generator degree does not match the chain degree");
    }
    chain.extend(g);
  }
  return chain;
}

StabilizerChain StabilizerChain::build(std::span<const Permutation> gens) {
  Point n = 0;
  for (const auto& g : gens) {
    n = std::max(n, g.max_moved());
  }
  std::vector<PermArray> arrays;
  arrays.reserve(gens.size());
  for (const auto& g : gens) {
    const Permutation q = g.padded(n);
    arrays.emplace_back(q.zero_based().begin(), q.zero_based().end());
  }
  return build(n, arrays);
}

std::vector<Point> StabilizerChain::base() const {
  std::vector<Point> b;
  b.reserve(levels_.size());
  for (const auto& level : levels_) {
    b.push_back(level.base + 1);
  }
  return b;
}

BigNat StabilizerChain::order() const {
  BigNat result = 1;
  for (const auto& level : levels_) {
    result *= static_cast<unsigned long>(level.orbit.size());
  }
  return result;
}

std::size_t StabilizerChain::sift(PermArray& g, std::size_t from) const {
  for (std::size_t l = from; l < levels_.size(); ++l) {
    const Level& level = levels_[l];
    Point beta = g[level.base];
    if (level.schreier[beta] == kAbsent) {
      return l;
    }
    while (beta != level.base) {
      const auto& inv = inverses_[static_cast<std::size_t>(level.schreier[beta])];
      for (auto& x : g) {
        x = inv[x];
      }
      beta = inv[beta];
    }
  }
  return levels_.size();
}

bool StabilizerChain::contains(std::span<const Point> g) const {
  if (g.size() != degree_) {
    throw std::invalid_argument("contains: degree mismatch");
  }
  PermArray h(g.begin(), g.end());
  return sift(h) == levels_.size() && is_identity_array(h);
}

bool StabilizerChain::contains(const Permutation& p) const {
  if (p.max_moved() > degree_) {
    return false;
  }
  const Permutation q = p.padded(degree_);
  return contains(q.zero_based());
}

PermArray StabilizerChain::transversal_inverse(std::size_t level, Point point) const {
  const Level& lv = levels_[level];
  PermArray u = identity_array(degree_);
  while (point != lv.base) {
    const auto& inv = inverses_[static_cast<std::size_t>(lv.schreier[point])];
    for (auto& x : u) {
      x = inv[x];
    }
    point = inv[point];
  }
  return u;
}

PermArray StabilizerChain::transversal(std::size_t level, Point point) const {
  if (levels_[level].schreier[point] == kAbsent) {
    throw std::invalid_argument("transversal: point is not in the fundamental orbit");
  }
  return invert_array(transversal_inverse(level, point));
}

void StabilizerChain::add_level(const PermArray& moving) {
  Level level;
  for (std::size_t i = 0; i < moving.size(); ++i) {
    if (moving[i] != i) {
      level.base = static_cast<Point>(i);
      break;
    }
  }
  level.schreier.assign(degree_, kAbsent);
  level.schreier[level.base] = kRoot;
  level.orbit.push_back(level.base);
  levels_.push_back(std::move(level));
}

void StabilizerChain::add_strong_generator(PermArray g, std::size_t first_level,
                                           std::size_t last_level) {
  const std::size_t label = gens_.size();
  inverses_.push_back(invert_array(g));
  gens_.push_back(std::move(g));
  const PermArray& s = gens_.back();
  for (std::size_t l = first_level; l <= last_level; ++l) {
    Level& level = levels_[l];
    level.generators.push_back(label);
    level.checked.push_back(0);
    const std::size_t old_size = level.orbit.size();
    for (std::size_t k = 0; k < old_size; ++k) {
      const Point image = s[level.orbit[k]];
      if (level.schreier[image] == kAbsent) {
        level.schreier[image] = static_cast<std::int32_t>(label);
        level.orbit.push_back(image);
      }
    }
    for (std::size_t k = old_size; k < level.orbit.size(); ++k) {
      const Point point = level.orbit[k];
      for (std::size_t gl : level.generators) {
        const Point image = gens_[gl][point];
        if (level.schreier[image] == kAbsent) {
          level.schreier[image] = static_cast<std::int32_t>(gl);
          level.orbit.push_back(image);
        }
      }
    }
  }
}

bool StabilizerChain::extend_unverified(const PermArray& g) {
  if (g.size() != degree_) {
    throw std::invalid_argument("extend: degree mismatch");
  }
  PermArray h = g;
  const std::size_t j = sift(h);
  if (j == levels_.size() && is_identity_array(h)) {
    return false;
  }
  if (j == levels_.size()) {
    add_level(h);
  }
  add_strong_generator(std::move(h), 0, j);
  complete_ = false;
  return true;
}

bool StabilizerChain::extend(const PermArray& g) {
  const bool was_complete = complete_;
  if (g.size() != degree_) {
    throw std::invalid_argument("extend: degree mismatch");
  }
  PermArray h = g;
  const std::size_t j = sift(h);
  if (j == levels_.size() && is_identity_array(h)) {
    return false;
  }
  if (j == levels_.size()) {
    add_level(h);
  }
  add_strong_generator(std::move(h), 0, j);
  if (was_complete) {
    run_from(j);
  } else {
    run_from(levels_.size() - 1);
  }
  complete_ = true;
  return true;
}

void StabilizerChain::complete() {
  if (!complete_ && !levels_.empty()) {
    run_from(levels_.size() - 1);
  }
  complete_ = true;
}

void StabilizerChain::run_from(std::size_t start) {
  // Work from the deepest dirty level upwards. A Schreier generator that
  // fails to sift adds its residue to the levels it stabilizes and moves the
  // cursor down to where it failed; per-slot `checked` counters make sure no
  // Schreier generator is tested twice.
  std::ptrdiff_t i = static_cast<std::ptrdiff_t>(start);
  while (i >= 0) {
    const auto li = static_cast<std::size_t>(i);
    bool descended = false;
    for (std::size_t slot = 0; slot < levels_[li].generators.size() && !descended; ++slot) {
      while (levels_[li].checked[slot] < levels_[li].orbit.size()) {
        const Level& level = levels_[li];
        const Point beta = level.orbit[level.checked[slot]];
        const std::size_t label = level.generators[slot];
        const Point gamma = gens_[label][beta];
        ++levels_[li].checked[slot];
        if (level.schreier[gamma] == static_cast<std::int32_t>(label)) {
          continue;  // tree edge: the Schreier generator is trivial
        }
        // h = u_beta * s * u_gamma^-1 fixes the base point of this level.
        const PermArray u_beta = invert_array(transversal_inverse(li, beta));
        const PermArray u_gamma_inv = transversal_inverse(li, gamma);
        const PermArray& s = gens_[label];
        PermArray h(degree_);
        for (std::size_t x = 0; x < degree_; ++x) {
          h[x] = u_gamma_inv[s[u_beta[x]]];
        }
        const std::size_t j = sift(h, li + 1);
        if (j == levels_.size() && is_identity_array(h)) {
          continue;
        }
        if (j == levels_.size()) {
          add_level(h);
        }
        add_strong_generator(std::move(h), li + 1, j);
        i = static_cast<std::ptrdiff_t>(j);
        descended = true;
        break;
      }
    }
    if (!descended) {
      --i;
    }
  }
}

}  // namespace algsearch
