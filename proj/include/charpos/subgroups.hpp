#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <unordered_map>
#include <vector>

#include "charpos/element_set.hpp"
#include "charpos/perm_group.hpp"

namespace charpos {

inline constexpr std::size_t kDefaultSubgroupCap = 1024;

/// A subgroup together with its embedding into a parent group.
struct SubgroupRecord {
  PermGroup subgroup;
  PermGroup parent;
  /// fusion[c] is the parent class containing class c of the subgroup.
  std::vector<std::size_t> fusion;
  bool is_normal = false;
};

/// Parent class of each subgroup class representative. Throws NotInGroup when
/// `sub` is not contained in `parent`.
std::vector<std::size_t> class_fusion(const PermGroup& parent, const PermGroup& sub);
std::vector<std::size_t> class_fusion(const SubgroupRecord& H);

SubgroupRecord make_subgroup_record(const PermGroup& parent, const PermGroup& sub);

/// Every subgroup of a group, found by cyclic extension.
///
/// Starting from the trivial group, each known subgroup U is joined with every
/// cyclic subgroup of prime-power order not already inside U. Every subgroup
/// is reached this way because each element is a product of commuting
/// prime-power parts that are powers of it. New subgroups are deduplicated by
/// element set. Subgroups are sorted by order, then canonical key (sorted
/// element list), and grouped into conjugacy classes whose representative is
/// the member with the smallest key.
class SubgroupLattice {
public:
  /// Throws CapExceeded if |G| > cap.
  explicit SubgroupLattice(PermGroup G, std::size_t cap = kDefaultSubgroupCap);

  const PermGroup& group() const noexcept { return group_; }
  std::size_t size() const noexcept { return sets_.size(); }
  const ElementSet& set(std::size_t i) const noexcept { return sets_[i]; }
  std::size_t order(std::size_t i) const noexcept { return orders_[i]; }
  const std::vector<std::size_t>& generators(std::size_t i) const noexcept { return gens_[i]; }
  std::optional<std::size_t> find(const ElementSet& s) const;

  std::size_t trivial_index() const noexcept { return 0; }
  std::size_t whole_index() const noexcept { return sets_.size() - 1; }

  std::size_t class_count() const noexcept { return class_members_.size(); }
  std::size_t class_of(std::size_t i) const noexcept { return class_of_[i]; }
  const std::vector<std::size_t>& class_members(std::size_t cls) const noexcept {
    return class_members_[cls];
  }
  std::size_t representative(std::size_t cls) const noexcept { return class_members_[cls].front(); }
  bool is_representative(std::size_t i) const noexcept { return representative(class_of_[i]) == i; }
  /// Element g with set(i) == set(representative)^g.
  std::size_t conjugator(std::size_t i) const noexcept { return conjugator_[i]; }
  bool is_normal(std::size_t i) const noexcept { return class_members(class_of_[i]).size() == 1; }

  /// Lattice indices of subgroups of set(i) (including i itself), ascending.
  std::vector<std::size_t> subgroups_of(std::size_t i) const;

  /// Subgroups of set(i) up to conjugacy *within* set(i): one representative
  /// (smallest index) per orbit, ascending.
  std::vector<std::size_t> subgroups_up_to_conjugacy_in(std::size_t i) const;

  /// The subgroup as a PermGroup; built once and cached.
  const PermGroup& materialize(std::size_t i) const;
  SubgroupRecord record(std::size_t i) const;

private:
  PermGroup group_;
  std::vector<ElementSet> sets_;
  std::vector<std::size_t> orders_;
  std::vector<std::vector<std::size_t>> gens_;
  std::unordered_map<ElementSet, std::size_t, ElementSetHash> lookup_;
  std::vector<std::size_t> class_of_;
  std::vector<std::vector<std::size_t>> class_members_;
  std::vector<std::size_t> conjugator_;

  struct Cache;
  std::shared_ptr<Cache> cache_;
};

/// All subgroups of G, each with fusion data.
std::vector<SubgroupRecord> all_subgroups(const PermGroup& G, std::size_t cap = kDefaultSubgroupCap);

/// One representative per conjugacy class of subgroups.
std::vector<SubgroupRecord> subgroups_up_to_conjugacy(const PermGroup& G,
                                                      std::size_t cap = kDefaultSubgroupCap);

} // namespace charpos
