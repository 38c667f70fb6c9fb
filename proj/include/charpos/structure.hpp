#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "charpos/element_set.hpp"
#include "charpos/perm_group.hpp"

namespace charpos {

struct DerivedSeries {
  /// G = terms[0] > terms[1] > ... ending at the trivial group, or, when G is
  /// not solvable, ending with the perfect term listed twice.
  std::vector<PermGroup> terms;
  bool solvable = false;
  /// Index of the first trivial term; only meaningful when solvable.
  std::size_t derived_length = 0;
};

PermGroup derived_subgroup(const PermGroup& G);
DerivedSeries derived_series(const PermGroup& G);

/// Derived series of the subgroup H of G as element sets of G, stopping at
/// the first repeated term. The first entry is H itself.
std::vector<ElementSet> derived_series_sets(const PermGroup& G, const ElementSet& H);

/// Smallest k with A^(k) <= B (subgroups of G), i.e. dl(A/B) when B is normal
/// in A. Returns nullopt if the derived series of A stabilizes outside B.
std::optional<std::size_t> relative_derived_length(const PermGroup& G, const ElementSet& A,
                                                   const ElementSet& B);

struct StructureFlags {
  bool abelian = false;
  bool nilpotent = false;
  bool supersolvable = false;
  bool solvable = false;
  bool perfect = false;
};

StructureFlags structural_predicates(const PermGroup& G);

} // namespace charpos
