#include "charpos/permutation.hpp"

#include <cctype>
#include <limits>
#include <numeric>

#include "charpos/errors.hpp"

namespace charpos {

Permutation Permutation::identity(std::size_t degree) {
  if (degree > std::numeric_limits<point_type>::max())
    throw MalformedPermutation("degree " + std::to_string(degree) + " too large");
  std::vector<point_type> images(degree);
  std::iota(images.begin(), images.end(), point_type{0});
  return Permutation(std::move(images));
}

Permutation Permutation::from_images(std::vector<point_type> images) {
  std::vector<bool> seen(images.size(), false);
  for (auto x : images) {
    if (x >= images.size() || seen[x])
      throw MalformedPermutation("image list is not a bijection");
    seen[x] = true;
  }
  return Permutation(std::move(images));
}

Permutation Permutation::from_cycles(std::size_t degree,
                                     const std::vector<std::vector<std::size_t>>& cycles) {
  Permutation p = identity(degree);
  std::vector<bool> used(degree, false);
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      std::size_t x = cycle[i];
      if (x < 1 || x > degree)
        throw MalformedPermutation("point " + std::to_string(x) + " outside 1.." +
                                   std::to_string(degree));
      if (used[x - 1])
        throw MalformedPermutation("point " + std::to_string(x) + " repeated in cycles");
      used[x - 1] = true;
      std::size_t y = cycle[(i + 1) % cycle.size()];
      if (y < 1 || y > degree)
        throw MalformedPermutation("point " + std::to_string(y) + " outside 1.." +
                                   std::to_string(degree));
      p.images_[x - 1] = static_cast<point_type>(y - 1);
    }
  }
  return p;
}

Permutation Permutation::parse(std::string_view text, std::size_t degree) {
  std::vector<std::vector<std::size_t>> cycles;
  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_space();
  if (i == text.size()) throw MalformedPermutation("empty permutation text");
  while (i < text.size()) {
    if (text[i] != '(')
      throw MalformedPermutation("expected '(' in \"" + std::string(text) + "\"");
    ++i;
    std::vector<std::size_t> cycle;
    for (;;) {
      skip_space();
      if (i == text.size())
        throw MalformedPermutation("unterminated cycle in \"" + std::string(text) + "\"");
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw MalformedPermutation("unexpected character '" + std::string(1, text[i]) +
                                   "' in \"" + std::string(text) + "\"");
      std::size_t value = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        value = value * 10 + static_cast<std::size_t>(text[i] - '0');
        if (value > 1'000'000) throw MalformedPermutation("point out of range");
        ++i;
      }
      cycle.push_back(value);
    }
    if (!cycle.empty()) cycles.push_back(std::move(cycle));
    skip_space();
  }
  return from_cycles(degree, cycles);
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  if (degree() != rhs.degree()) throw MalformedPermutation("degree mismatch in product");
  std::vector<point_type> out(images_.size());
  for (std::size_t x = 0; x < images_.size(); ++x) out[x] = rhs.images_[images_[x]];
  return Permutation(std::move(out));
}

Permutation Permutation::inverse() const {
  std::vector<point_type> out(images_.size());
  for (std::size_t x = 0; x < images_.size(); ++x)
    out[images_[x]] = static_cast<point_type>(x);
  return Permutation(std::move(out));
}

Permutation Permutation::conjugate_by(const Permutation& g) const {
  // (g^-1 p g)(x) = g(p(g^-1(x))); equivalently maps g(x) -> g(p(x)).
  if (degree() != g.degree()) throw MalformedPermutation("degree mismatch in conjugation");
  std::vector<point_type> out(images_.size());
  for (std::size_t x = 0; x < images_.size(); ++x) out[g.images_[x]] = g.images_[images_[x]];
  return Permutation(std::move(out));
}

Permutation Permutation::pow(long long k) const {
  Permutation base = k < 0 ? inverse() : *this;
  unsigned long long e = k < 0 ? static_cast<unsigned long long>(-k) : static_cast<unsigned long long>(k);
  Permutation result = identity(degree());
  while (e) {
    if (e & 1ULL) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t x = 0; x < images_.size(); ++x)
    if (images_[x] != x) return false;
  return true;
}

std::size_t Permutation::order() const {
  std::vector<bool> seen(images_.size(), false);
  std::size_t result = 1;
  for (std::size_t x = 0; x < images_.size(); ++x) {
    if (seen[x]) continue;
    std::size_t len = 0;
    for (std::size_t y = x; !seen[y]; y = images_[y]) {
      seen[y] = true;
      ++len;
    }
    result = std::lcm(result, len);
  }
  return result;
}

std::string Permutation::to_string() const {
  std::string out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t x = 0; x < images_.size(); ++x) {
    if (seen[x] || images_[x] == x) continue;
    out += '(';
    bool first = true;
    for (std::size_t y = x; !seen[y]; y = images_[y]) {
      seen[y] = true;
      if (!first) out += ' ';
      out += std::to_string(y + 1);
      first = false;
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  // FNV-1a over the image sequence
  std::uint64_t h = 1469598103934665603ULL;
  for (auto x : p.images()) {
    h ^= x;
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

std::vector<Permutation> parse_permutation_list(std::string_view text, std::size_t degree) {
  std::vector<Permutation> out;
  std::size_t start = 0;
  int depth = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i < text.size() && text[i] == '(') ++depth;
    if (i < text.size() && text[i] == ')') --depth;
    if (i == text.size() || (text[i] == ',' && depth == 0)) {
      auto piece = text.substr(start, i - start);
      bool blank = true;
      for (char c : piece)
        if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
      if (!blank) out.push_back(Permutation::parse(piece, degree));
      start = i + 1;
    }
  }
  return out;
}

} // namespace charpos
