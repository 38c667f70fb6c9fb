#pragma once

#include <cstddef>
#include <vector>

#include "charpos/perm_group.hpp"

namespace charpos {

struct ConjugacyClass {
  std::size_t representative; // smallest element index in the class
  std::size_t size;
  std::size_t element_order;
  std::vector<std::size_t> members; // ascending element indices
};

/// Conjugacy classes of a PermGroup.
///
/// Classes are ordered by element order, then class size, then smallest
/// member. Class 0 is therefore always the identity class. Power maps are
/// stored for every k in [0, exponent).
class ClassTable {
public:
  explicit ClassTable(const PermGroup& G);

  std::size_t size() const noexcept { return classes_.size(); }
  const ConjugacyClass& operator[](std::size_t c) const noexcept { return classes_[c]; }
  const std::vector<ConjugacyClass>& classes() const noexcept { return classes_; }

  std::size_t class_of(std::size_t element) const noexcept { return class_of_[element]; }
  std::size_t group_order() const noexcept { return order_; }
  std::size_t exponent() const noexcept { return exponent_; }

  /// Class of g^k for g in class c; k is reduced modulo the exponent.
  std::size_t power(std::size_t c, long long k) const noexcept;
  std::size_t inverse_class(std::size_t c) const noexcept { return power(c, -1); }
  std::size_t centralizer_order(std::size_t c) const noexcept { return order_ / classes_[c].size; }

  /// Element set that is the union of the given classes.
  ElementSet union_of(const std::vector<std::size_t>& class_indices) const;
  /// Classes meeting the (normal) subset `s`.
  std::vector<std::size_t> classes_in(const ElementSet& s) const;

private:
  std::vector<ConjugacyClass> classes_;
  std::vector<std::size_t> class_of_;
  std::vector<std::vector<std::size_t>> power_maps_; // [k][c]
  std::size_t order_ = 0;
  std::size_t exponent_ = 1;
};

ClassTable conjugacy_classes(const PermGroup& G);

/// |C_G(g)|; throws NotInGroup if g is not an element of G.
std::size_t centralizer_order(const PermGroup& G, const Permutation& g);

} // namespace charpos
