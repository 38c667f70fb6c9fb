#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace charpos {

/// A bijection of {0, ..., n-1}. Points are printed 1-based in cycle notation.
///
/// Products act on the right: `(a * b)(x) == b(a(x))`, i.e. apply `a` first.
/// This is the usual convention for permutation groups and makes
/// `x^(ab) = (x^a)^b`.
class Permutation {
public:
  using point_type = std::uint16_t;

  Permutation() = default;

  static Permutation identity(std::size_t degree);

  /// Throws MalformedPermutation unless `images` is a bijection.
  static Permutation from_images(std::vector<point_type> images);

  /// Builds a permutation of the given degree from 1-based disjoint cycles.
  /// Throws MalformedPermutation on out-of-range or repeated points.
  static Permutation from_cycles(std::size_t degree,
                                 const std::vector<std::vector<std::size_t>>& cycles);

  /// Parses disjoint-cycle notation such as "(1 2 3)(4 5)" or "()".
  /// Throws MalformedPermutation on bad syntax or points.
  static Permutation parse(std::string_view text, std::size_t degree);

  std::size_t degree() const noexcept { return images_.size(); }
  point_type operator[](std::size_t x) const noexcept { return images_[x]; }
  std::span<const point_type> images() const noexcept { return images_; }

  Permutation operator*(const Permutation& rhs) const;
  Permutation inverse() const;
  /// g^-1 * this * g
  Permutation conjugate_by(const Permutation& g) const;
  Permutation pow(long long k) const;

  bool is_identity() const noexcept;
  std::size_t order() const;

  /// Disjoint-cycle notation with 1-based points; the identity prints as "()".
  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
    return a.images_ <=> b.images_;
  }

private:
  explicit Permutation(std::vector<point_type> images) : images_(std::move(images)) {}

  std::vector<point_type> images_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

/// Parses permutations separated by ',' between cycles, e.g. "(1 2),(1 2 3)".
std::vector<Permutation> parse_permutation_list(std::string_view text, std::size_t degree);

} // namespace charpos
