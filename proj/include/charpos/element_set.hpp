#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace charpos {

/// Subset of a group's element indices, stored as a bitset.
///
/// Element indices follow the group's lexicographic element order, so the
/// ascending member list of an ElementSet is exactly the sorted element list
/// of the subset; comparisons below use that list as the canonical key.
class ElementSet {
public:
  ElementSet() = default;
  explicit ElementSet(std::size_t universe) : universe_(universe), words_((universe + 63) / 64, 0) {}

  std::size_t universe() const noexcept { return universe_; }

  bool test(std::size_t i) const noexcept { return (words_[i >> 6] >> (i & 63)) & 1ULL; }
  void set(std::size_t i) noexcept { words_[i >> 6] |= (1ULL << (i & 63)); }
  void reset(std::size_t i) noexcept { words_[i >> 6] &= ~(1ULL << (i & 63)); }

  std::size_t count() const noexcept {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }

  bool is_subset_of(const ElementSet& other) const noexcept {
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k] & ~other.words_[k]) return false;
    return true;
  }

  ElementSet& operator&=(const ElementSet& other) noexcept {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= other.words_[k];
    return *this;
  }
  ElementSet& operator|=(const ElementSet& other) noexcept {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= other.words_[k];
    return *this;
  }
  friend ElementSet operator&(ElementSet a, const ElementSet& b) noexcept { return a &= b; }

  /// Ascending list of members.
  std::vector<std::size_t> members() const {
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < words_.size(); ++k) {
      auto w = words_[k];
      while (w) {
        out.push_back(k * 64 + static_cast<std::size_t>(std::countr_zero(w)));
        w &= w - 1;
      }
    }
    return out;
  }

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      auto w = words_[k];
      while (w) {
        f(k * 64 + static_cast<std::size_t>(std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  std::size_t hash() const noexcept {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ universe_;
    for (auto w : words_) {
      h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }

  friend bool operator==(const ElementSet&, const ElementSet&) = default;

  /// Canonical-key order: lexicographic comparison of the ascending member
  /// lists.
  friend std::strong_ordering canonical_compare(const ElementSet& a, const ElementSet& b) noexcept {
    for (std::size_t k = 0; k < a.words_.size() && k < b.words_.size(); ++k) {
      auto diff = a.words_[k] ^ b.words_[k];
      if (!diff) continue;
      auto bit = diff & (~diff + 1);
      auto below = bit - 1;
      // The first difference is at `bit`; it belongs to exactly one list. That
      // list is smaller unless the other list has run out (is a prefix).
      bool a_has = a.words_[k] & bit;
      bool a_more = (a.words_[k] & ~below & ~bit) != 0 || a.tail_nonzero(k + 1);
      bool b_more = (b.words_[k] & ~below & ~bit) != 0 || b.tail_nonzero(k + 1);
      if (a_has) return b_more ? std::strong_ordering::less : std::strong_ordering::greater;
      return a_more ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    return std::strong_ordering::equal;
  }

private:
  bool tail_nonzero(std::size_t from) const noexcept {
    for (std::size_t k = from; k < words_.size(); ++k)
      if (words_[k]) return true;
    return false;
  }

  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const noexcept { return s.hash(); }
};

} // namespace charpos
