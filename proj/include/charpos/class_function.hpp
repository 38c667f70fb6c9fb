#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "charpos/cyclotomic.hpp"
#include "charpos/element_set.hpp"
#include "charpos/perm_group.hpp"
#include "charpos/subgroups.hpp"

namespace charpos {

class CharacterTable;

/// A function on the conjugacy classes of a group, indexed like
/// group().classes().
class ClassFunction {
public:
  ClassFunction(PermGroup G, std::vector<Cyclotomic> values);

  static ClassFunction trivial(const PermGroup& G);
  static ClassFunction regular(const PermGroup& G);
  /// Number of fixed points in the natural action on {1..degree}.
  static ClassFunction permutation_character(const PermGroup& G);

  const PermGroup& group() const noexcept { return group_; }
  const std::vector<Cyclotomic>& values() const noexcept { return values_; }
  const Cyclotomic& operator[](std::size_t c) const noexcept { return values_[c]; }
  std::size_t size() const noexcept { return values_.size(); }

  /// Value at the identity class.
  const Cyclotomic& degree_value() const noexcept { return values_.front(); }
  /// The degree as an integer; throws NotACharacter if it is not a positive integer.
  std::size_t degree() const;

  ClassFunction conj() const;
  ClassFunction operator-() const;
  friend ClassFunction operator+(const ClassFunction& a, const ClassFunction& b);
  friend ClassFunction operator-(const ClassFunction& a, const ClassFunction& b);
  /// Pointwise product.
  friend ClassFunction operator*(const ClassFunction& a, const ClassFunction& b);
  friend ClassFunction operator*(const Rational& r, const ClassFunction& a);
  friend bool operator==(const ClassFunction& a, const ClassFunction& b);

  /// Values joined by tabs.
  std::string to_string() const;

private:
  PermGroup group_;
  std::vector<Cyclotomic> values_;
};

/// Throws GroupMismatch unless a and b live on the same group.
void require_same_group(const PermGroup& a, const PermGroup& b);

/// (1/|G|) sum over classes of |class| a(g) conj(b(g)). Throws NotACharacter
/// if the result is not rational.
Rational inner_product(const ClassFunction& a, const ClassFunction& b);

/// Restriction to a subgroup, via the record's class fusion.
ClassFunction restrict(const ClassFunction& chi, const SubgroupRecord& H);
/// Induction from a subgroup to its parent.
ClassFunction induce(const ClassFunction& phi, const SubgroupRecord& H);

/// Irreducible constituents as (row index in T, multiplicity). Throws
/// NotACharacter unless every multiplicity is a nonnegative integer and the
/// decomposition reconstructs theta.
std::vector<std::pair<std::size_t, std::size_t>> constituents(const ClassFunction& theta,
                                                              const CharacterTable& T);

/// Elements g with chi(g) = chi(1), as an element set of chi.group().
/// Throws InternalError if that set is not a subgroup.
ElementSet kernel_set(const ClassFunction& chi);
PermGroup kernel(const ClassFunction& chi);

} // namespace charpos
