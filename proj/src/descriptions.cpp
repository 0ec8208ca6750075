#include "algsearch/descriptions.hpp"

#include <stdexcept>

#include "algsearch/codec.hpp"

namespace algsearch {

namespace {

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    if (pos == std::string_view::npos) {
      parts.push_back(text.substr(start));
      return parts;
    }
    parts.push_back(text.substr(start, pos - start));
    start = pos + 1;
  }
}

}  // namespace

Word apply_hom(const MonoidHom& h, const Word& w) {
  std::size_t total = 0;
  for (Letter l : w) {
    if (l >= h.images.size()) {
      throw std::domain_error("apply_hom: letter outside the homomorphism's alphabet");
    }
    total += h.images[l].size();
  }
  Word out;
  out.reserve(total);
  for (Letter l : w) {
    const Word& image = h.images[l];
    out.insert(out.end(), image.begin(), image.end());
  }
  return out;
}

Word eval_word_description(const WordDescription& desc) {
  Word w = desc.seed;
  for (auto it = desc.homs.rbegin(); it != desc.homs.rend(); ++it) {
    w = apply_hom(*it, w);
  }
  return w;
}

BigNat eval_poly(const Poly& p, const BigNat& x) {
  BigNat acc = 0;
  for (const BigNat& c : p.coeffs) {
    acc *= x;
    acc += c;
  }
  return acc;
}

BigNat eval_poly_description(const PolyDescription& desc) {
  BigNat v = desc.seed;
  for (auto it = desc.polys.rbegin(); it != desc.polys.rend(); ++it) {
    v = eval_poly(*it, v);
  }
  return v;
}

Word sample_word_exact(std::size_t alphabet_size, std::size_t length, RandomStream& rng) {
  Word w(length);
  for (auto& l : w) {
    l = static_cast<Letter>(rng.below(alphabet_size));
  }
  return w;
}

Word sample_word_up_to(std::size_t alphabet_size, unsigned max_length, RandomStream& rng) {
  if (alphabet_size == 0) {
    throw std::invalid_argument("sample_word_up_to: empty alphabet");
  }
  // There are cumulative[l] = 1 + k + ... + k^l words of length <= l. Draw a
  // uniform index below cumulative[max] and read off the length it falls in.
  std::vector<BigNat> cumulative(max_length + 1);
  BigNat power = 1;
  BigNat sum = 0;
  for (unsigned l = 0; l <= max_length; ++l) {
    sum += power;
    cumulative[l] = sum;
    power *= static_cast<unsigned long>(alphabet_size);
  }
  const BigNat u = rng.below(cumulative[max_length]);
  unsigned length = 0;
  while (u >= cumulative[length]) {
    ++length;
  }
  return sample_word_exact(alphabet_size, length, rng);
}

WordDescription sample_word_description(const WordDescSpace& space, const GenAlphabet& alphabet,
                                        RandomStream& rng) {
  if (space.c == 0) {
    throw std::invalid_argument("image word length c must be >= 1");
  }
  WordDescription desc;
  desc.homs.resize(space.d);
  for (auto& h : desc.homs) {
    h.images.resize(alphabet.size());
    for (auto& image : h.images) {
      image = sample_word_exact(alphabet.size(), space.c, rng);
    }
  }
  desc.seed = sample_word_up_to(alphabet.size(), space.max_seed_length, rng);
  return desc;
}

PolyDescription sample_poly_description(const PolyDescSpace& space, RandomStream& rng) {
  if (space.lead_min == 0 || space.lead_min > space.lead_max ||
      space.coeff_min > space.coeff_max) {
    throw std::invalid_argument("invalid coefficient ranges");
  }
  PolyDescription desc;
  desc.polys.resize(space.count);
  for (auto& p : desc.polys) {
    p.coeffs.resize(space.degree + 1);
    if (space.degree == 0) {
      // A constant polynomial has no separate leading term.
      p.coeffs[0] = static_cast<unsigned long>(rng.between(space.coeff_min, space.coeff_max));
      continue;
    }
    p.coeffs[0] = static_cast<unsigned long>(rng.between(space.lead_min, space.lead_max));
    for (std::size_t k = 1; k < p.coeffs.size(); ++k) {
      p.coeffs[k] = static_cast<unsigned long>(rng.between(space.coeff_min, space.coeff_max));
    }
  }
  const Word bits = sample_word_up_to(2, space.max_seed_length, rng);
  std::string text(bits.size(), '0');
  for (std::size_t i = 0; i < bits.size(); ++i) {
    text[i] = bits[i] ? '1' : '0';
  }
  desc.seed = word_to_nat(BinaryWord(text));
  return desc;
}

std::string format_word_description(const WordDescription& desc, const GenAlphabet& alphabet) {
  std::string s;
  for (const auto& h : desc.homs) {
    for (std::size_t i = 0; i < h.images.size(); ++i) {
      if (i > 0) {
        s += ',';
      }
      s += alphabet.format(h.images[i]);
    }
    s += ';';
  }
  s += alphabet.format(desc.seed);
  return s;
}

WordDescription parse_word_description(std::string_view text, const GenAlphabet& alphabet) {
  const auto parts = split(text, ';');
  WordDescription desc;
  for (std::size_t k = 0; k + 1 < parts.size(); ++k) {
    MonoidHom h;
    for (auto image : split(parts[k], ',')) {
      h.images.push_back(alphabet.parse(image));
    }
    if (h.images.size() != alphabet.size()) {
      throw std::invalid_argument("homomorphism " + std::to_string(k + 1) + " lists " +
                                  std::to_string(h.images.size()) + " images, expected " +
                                  std::to_string(alphabet.size()));
    }
    desc.homs.push_back(std::move(h));
  }
  desc.seed = alphabet.parse(parts.back());
  return desc;
}

std::string format_poly_description(const PolyDescription& desc) {
  std::string s;
  for (const auto& p : desc.polys) {
    for (std::size_t i = 0; i < p.coeffs.size(); ++i) {
      if (i > 0) {
        s += ',';
      }
      s += to_string(p.coeffs[i]);
    }
    s += ';';
  }
  s += to_string(desc.seed);
  return s;
}

PolyDescription parse_poly_description(std::string_view text) {
  const auto parts = split(text, ';');
  PolyDescription desc;
  for (std::size_t k = 0; k + 1 < parts.size(); ++k) {
    Poly p;
    for (auto c : split(parts[k], ',')) {
      p.coeffs.push_back(parse_bignat(c));
    }
    if (p.coeffs.size() > 1 && sgn(p.coeffs.front()) == 0) {
      throw std::invalid_argument("polynomial " + std::to_string(k + 1) +
                                  " has a zero leading coefficient");
    }
    desc.polys.push_back(std::move(p));
  }
  desc.seed = parse_bignat(parts.back());
  if (sgn(desc.seed) == 0) {
    throw std::invalid_argument("polynomial description seed must be >= 1");
  }
  return desc;
}

bool looks_like_poly_description(std::string_view text) {
  if (text.empty()) {
    return false;
  }
  for (char ch : text) {
    if (!(ch >= '0' && ch <= '9') && ch != ',' && ch != ';') {
      return false;
    }
  }
  return true;
}

}  // namespace algsearch
