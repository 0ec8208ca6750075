#include "algsearch/permutation.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace algsearch {

namespace {

void check_bijective(const std::vector<Point>& zero_based) {
  std::vector<bool> seen(zero_based.size(), false);
  for (Point v : zero_based) {
    if (v >= zero_based.size() || seen[v]) {
      throw std::invalid_argument("image list is not a permutation");
    }
    seen[v] = true;
  }
}

}  // namespace

Permutation::Permutation(std::span<const Point> images) {
  images_.reserve(images.size());
  for (Point v : images) {
    if (v == 0) {
      throw std::invalid_argument("point 0 in one-line notation");
    }
    images_.push_back(v - 1);
  }
  check_bijective(images_);
}

Permutation::Permutation(std::initializer_list<Point> images)
    : Permutation(std::span<const Point>(images.begin(), images.size())) {}

Permutation Permutation::from_zero_based(std::vector<Point> zero_based) {
  check_bijective(zero_based);
  Permutation p;
  p.images_ = std::move(zero_based);
  return p;
}

Permutation Permutation::from_cycles(const std::vector<std::vector<Point>>& cycles) {
  Permutation result;
  for (const auto& cycle : cycles) {
    if (cycle.empty()) {
      continue;
    }
    Point top = 0;
    for (Point p : cycle) {
      if (p == 0) {
        throw std::invalid_argument("point 0 in cycle notation");
      }
      top = std::max(top, p);
    }
    std::vector<Point> img(top);
    for (Point i = 0; i < top; ++i) {
      img[i] = i;
    }
    std::vector<bool> used(top, false);
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      const Point from = cycle[k] - 1;
      if (used[from]) {
        throw std::invalid_argument("repeated point in a cycle");
      }
      used[from] = true;
      img[from] = cycle[(k + 1) % cycle.size()] - 1;
    }
    Permutation c;
    c.images_ = std::move(img);
    result = compose(result, c);
  }
  return result;
}

Permutation Permutation::parse(std::string_view text) {
  auto skip_space = [&](std::size_t& i) {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) {
      ++i;
    }
  };
  auto read_point = [&](std::size_t& i) {
    skip_space(i);
    Point value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), value);
    if (ec != std::errc() || ptr == text.data() + i) {
      throw std::invalid_argument("expected a point in permutation: " + std::string(text));
    }
    i = static_cast<std::size_t>(ptr - text.data());
    skip_space(i);
    return value;
  };

  std::size_t i = 0;
  skip_space(i);
  if (i == text.size()) {
    throw std::invalid_argument("empty permutation text");
  }
  if (text[i] == '[') {
    ++i;
    skip_space(i);
    std::vector<Point> images;
    if (i < text.size() && text[i] == ']') {
      ++i;
    } else {
      while (true) {
        images.push_back(read_point(i));
        if (i < text.size() && text[i] == ',') {
          ++i;
          continue;
        }
        if (i < text.size() && text[i] == ']') {
          ++i;
          break;
        }
        throw std::invalid_argument("malformed one-line permutation: " + std::string(text));
      }
    }
    skip_space(i);
    if (i != text.size()) {
      throw std::invalid_argument("trailing characters in permutation: " + std::string(text));
    }
    return Permutation(images);
  }

  std::vector<std::vector<Point>> cycles;
  while (i < text.size()) {
    if (text[i] != '(') {
      throw std::invalid_argument("malformed cycle notation: " + std::string(text));
    }
    ++i;
    skip_space(i);
    std::vector<Point> cycle;
    if (i < text.size() && text[i] == ')') {
      ++i;
    } else {
      while (true) {
        cycle.push_back(read_point(i));
        if (i < text.size() && text[i] == ',') {
          ++i;
          continue;
        }
        if (i < text.size() && text[i] == ')') {
          ++i;
          break;
        }
        throw std::invalid_argument("malformed cycle notation: " + std::string(text));
      }
    }
    cycles.push_back(std::move(cycle));
    skip_space(i);
  }
  return from_cycles(cycles);
}

Point Permutation::max_moved() const {
  for (std::size_t i = images_.size(); i-- > 0;) {
    if (images_[i] != i) {
      return static_cast<Point>(i + 1);
    }
  }
  return 0;
}

bool Permutation::is_even() const {
  std::vector<bool> seen(images_.size(), false);
  std::size_t transpositions = 0;
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start]) {
      continue;
    }
    std::size_t length = 0;
    for (std::size_t x = start; !seen[x]; x = images_[x]) {
      seen[x] = true;
      ++length;
    }
    transpositions += length - 1;
  }
  return transpositions % 2 == 0;
}

Permutation Permutation::inverse() const {
  Permutation inv;
  inv.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) {
    inv.images_[images_[i]] = static_cast<Point>(i);
  }
  return inv;
}

Permutation Permutation::padded(std::size_t n) const {
  if (n < max_moved()) {
    throw std::invalid_argument("padded: degree below the largest moved point");
  }
  Permutation p;
  p.images_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    p.images_[i] = i < images_.size() ? images_[i] : static_cast<Point>(i);
  }
  return p;
}

std::vector<Point> Permutation::one_line() const {
  std::vector<Point> out(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) {
    out[i] = images_[i] + 1;
  }
  return out;
}

std::vector<std::vector<Point>> Permutation::cycles() const {
  std::vector<std::vector<Point>> out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start] || images_[start] == start) {
      continue;
    }
    std::vector<Point> cycle;
    for (std::size_t x = start; !seen[x]; x = images_[x]) {
      seen[x] = true;
      cycle.push_back(static_cast<Point>(x + 1));
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

std::string Permutation::to_one_line_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (i > 0) {
      s += ',';
    }
    s += std::to_string(images_[i] + 1);
  }
  s += ']';
  return s;
}

std::string Permutation::to_cycle_string() const {
  const auto cs = cycles();
  if (cs.empty()) {
    return "()";
  }
  std::string s;
  for (const auto& cycle : cs) {
    s += '(';
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      if (k > 0) {
        s += ',';
      }
      s += std::to_string(cycle[k]);
    }
    s += ')';
  }
  return s;
}

bool operator==(const Permutation& a, const Permutation& b) {
  const std::size_t n = std::max(a.images_.size(), b.images_.size());
  for (std::size_t i = 0; i < n; ++i) {
    const Point ia = i < a.images_.size() ? a.images_[i] : static_cast<Point>(i);
    const Point ib = i < b.images_.size() ? b.images_[i] : static_cast<Point>(i);
    if (ia != ib) {
      return false;
    }
  }
  return true;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  const std::size_t n = std::max(p.degree(), q.degree());
  std::vector<Point> img(n);
  const auto pz = p.zero_based();
  const auto qz = q.zero_based();
  for (std::size_t i = 0; i < n; ++i) {
    const Point mid = i < pz.size() ? pz[i] : static_cast<Point>(i);
    img[i] = mid < qz.size() ? qz[mid] : mid;
  }
  return Permutation::from_zero_based(std::move(img));
}

}  // namespace algsearch
