#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "charpos/class_function.hpp"
#include "charpos/class_table.hpp"
#include "charpos/perm_group.hpp"

namespace charpos {

/// The irreducible characters of a group.
///
/// Rows produced by character_table() are ordered with the trivial character
/// first, then by degree, then lexicographically on serialized values.
class CharacterTable {
public:
  /// Wraps the given rows. With verify set, checks the degree sum and row
  /// orthogonality and throws InternalError on failure.
  static CharacterTable from_rows(const PermGroup& G, std::vector<ClassFunction> rows,
                                  bool verify = true);

  /// Inverse of to_text(). The class lines must match G's classes
  /// (GroupMismatch otherwise); ParseError on malformed input.
  static CharacterTable from_text(const PermGroup& G, std::string_view text);

  const PermGroup& group() const noexcept;
  const ClassTable& classes() const;
  std::size_t size() const noexcept;
  const ClassFunction& operator[](std::size_t i) const noexcept;
  const std::vector<ClassFunction>& irreducibles() const noexcept;

  std::size_t degree(std::size_t i) const noexcept;
  const std::vector<std::size_t>& degrees() const noexcept;
  /// Distinct degrees, ascending.
  std::vector<std::size_t> cd() const;
  std::size_t linear_count() const noexcept;

  /// "order N classes k exponent e", then one line per class
  /// "rep<TAB>size<TAB>order", then one line per row of tab-separated values.
  std::string to_text() const;

private:
  struct Data;
  explicit CharacterTable(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
  std::shared_ptr<const Data> d_;
};

/// Exact character table by the Dixon-Schneider method. Every table is
/// checked before it is returned.
CharacterTable character_table(const PermGroup& G);

struct TableReport {
  std::vector<std::string> violations;
  std::size_t kernel_samples = 0; // induced characters checked against conjugated kernels
  std::size_t normal_samples = 0; // (normal subgroup, induced character) pairs checked
  bool ok() const noexcept { return violations.empty(); }
};

struct VerifyOptions {
  /// Subgroup classes (smallest first, trivial and whole group excluded) used
  /// for the kernel checks on induced characters.
  std::size_t subgroup_samples = 6;
  std::size_t subgroup_cap = 1024;
};

/// Checks every table invariant (row count, degree sum, row and column
/// orthogonality, linear rows versus [G:G']), and that on sampled subgroups
/// H and phi in Irr(H): ker(phi^G) is the intersection of the conjugates of
/// ker(phi), and normal N of G inside ker(phi) lie inside ker(phi^G).
TableReport verify_table(const CharacterTable& T, const VerifyOptions& opts = {});

} // namespace charpos
