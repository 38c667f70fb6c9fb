#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "charpos/element_set.hpp"
#include "charpos/permutation.hpp"

namespace charpos {

class ClassTable;

inline constexpr std::size_t kDefaultElementCap = 5000;

namespace detail {
struct GroupData;
}

/// A finite permutation group with its full element list.
///
/// Elements are kept sorted lexicographically by image sequence, so element
/// index 0 is always the identity. The object is an immutable handle: copies
/// share the same data, and lazily computed tables (Cayley table, conjugacy
/// classes) are built at most once and are safe to read from several threads.
class PermGroup {
public:
  /// Enumerates the closure of `gens`. Throws CapExceeded if more than `cap`
  /// elements appear, MalformedPermutation if a generator has the wrong degree.
  static PermGroup from_generators(std::size_t degree, std::vector<Permutation> gens,
                                   std::size_t cap = kDefaultElementCap);

  static PermGroup trivial(std::size_t degree);

  std::size_t degree() const noexcept;
  std::size_t order() const noexcept;
  const std::vector<Permutation>& generators() const noexcept;
  const std::vector<Permutation>& elements() const noexcept;
  const Permutation& element(std::size_t i) const noexcept { return elements()[i]; }

  std::optional<std::size_t> index_of(const Permutation& p) const;
  bool contains(const Permutation& p) const { return index_of(p).has_value(); }

  /// Index-level arithmetic. Small groups use a Cayley table.
  std::size_t product(std::size_t i, std::size_t j) const;
  std::size_t inverse(std::size_t i) const;
  /// Index of g^-1 * x * g.
  std::size_t conjugate(std::size_t x, std::size_t g) const {
    return product(product(inverse(g), x), g);
  }
  std::size_t power(std::size_t i, long long k) const;

  std::size_t element_order(std::size_t i) const;
  std::size_t exponent() const noexcept;
  std::vector<std::size_t> generator_indices() const;

  bool is_abelian() const;

  /// Conjugacy classes, computed on first use.
  const ClassTable& classes() const;

  ElementSet all_elements() const;
  ElementSet identity_set() const;

  /// Materializes a subgroup given by element indices of this group.
  /// `subset` must be closed under products; generators are chosen greedily
  /// in element order.
  PermGroup subgroup(const ElementSet& subset) const;

  /// Element indices (in this group) of the elements of `other`, which must
  /// be a subset. Throws NotInGroup otherwise.
  ElementSet embed(const PermGroup& other) const;

  /// True when both handles refer to the same underlying object.
  bool same_object(const PermGroup& other) const noexcept { return data_ == other.data_; }
  /// Same degree and same element set.
  bool equals(const PermGroup& other) const;

private:
  explicit PermGroup(std::shared_ptr<detail::GroupData> data) : data_(std::move(data)) {}
  static PermGroup from_sorted_elements(std::size_t degree, std::vector<Permutation> gens,
                                        std::vector<Permutation> elements);

  std::shared_ptr<detail::GroupData> data_;
};

// ---------------------------------------------------------------------------
// Index-level subgroup arithmetic inside an ambient group.

/// Subgroup of `G` generated by the given element indices.
ElementSet generate(const PermGroup& G, std::span<const std::size_t> gens);

/// A small generating set of the subgroup `H`, greedy in element order.
std::vector<std::size_t> generating_set(const PermGroup& G, const ElementSet& H);

/// Smallest subgroup containing `H` that is normalized by all of `by`.
ElementSet normal_closure(const PermGroup& G, const ElementSet& H,
                          std::span<const std::size_t> by);

/// [A, B] for subgroups A, B of G given by generators; the result is closed
/// under conjugation by A and B.
ElementSet commutator_subgroup(const PermGroup& G, std::span<const std::size_t> a_gens,
                               std::span<const std::size_t> b_gens);

ElementSet derived_subgroup(const PermGroup& G, const ElementSet& H);

/// True when every element of `by` normalizes `H`.
bool is_normalized_by(const PermGroup& G, const ElementSet& H, std::span<const std::size_t> by);

/// H^g as an element set.
ElementSet conjugate_set(const PermGroup& G, const ElementSet& H, std::size_t g);

} // namespace charpos
