#include "charpos/subgroups.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>

#include "charpos/class_table.hpp"
#include "charpos/errors.hpp"

namespace charpos {

std::vector<std::size_t> class_fusion(const PermGroup& parent, const PermGroup& sub) {
  const auto& sub_classes = sub.classes();
  const auto& parent_classes = parent.classes();
  std::vector<std::size_t> fusion(sub_classes.size());
  for (std::size_t c = 0; c < sub_classes.size(); ++c) {
    const auto& rep = sub.element(sub_classes[c].representative);
    auto idx = parent.index_of(rep);
    if (!idx)
      throw NotInGroup("class fusion: " + rep.to_string() + " is not in the parent group");
    fusion[c] = parent_classes.class_of(*idx);
  }
  return fusion;
}

std::vector<std::size_t> class_fusion(const SubgroupRecord& H) {
  return class_fusion(H.parent, H.subgroup);
}

SubgroupRecord make_subgroup_record(const PermGroup& parent, const PermGroup& sub) {
  SubgroupRecord rec{sub, parent, class_fusion(parent, sub), false};
  // Containment was checked by class_fusion only on representatives.
  auto set = parent.embed(sub);
  rec.is_normal = is_normalized_by(parent, set, parent.generator_indices());
  return rec;
}

// ---------------------------------------------------------------------------

struct SubgroupLattice::Cache {
  explicit Cache(std::size_t n) : once(new std::once_flag[n]), groups(n) {}
  std::unique_ptr<std::once_flag[]> once;
  std::vector<std::optional<PermGroup>> groups;
};

namespace {

bool is_prime_power(std::size_t n) {
  if (n < 2) return false;
  std::size_t p = 2;
  while (n % p) ++p;
  while (n % p == 0) n /= p;
  return n == 1;
}

} // namespace

SubgroupLattice::SubgroupLattice(PermGroup G, std::size_t cap) : group_(std::move(G)) {
  if (group_.order() > cap) throw CapExceeded("subgroup enumeration (group order)", cap);
  const auto n = group_.order();

  struct Found {
    ElementSet set;
    std::vector<std::size_t> gens;
  };
  std::vector<Found> found;
  std::unordered_map<ElementSet, std::size_t, ElementSetHash> index;

  auto add = [&](ElementSet s, std::vector<std::size_t> gens) {
    auto [it, inserted] = index.emplace(s, found.size());
    if (inserted) found.push_back({std::move(s), std::move(gens)});
  };

  add(group_.identity_set(), {});

  // Cyclic subgroups of prime-power order, one generator each.
  std::vector<std::size_t> cyclic_gens;
  {
    std::unordered_map<ElementSet, std::size_t, ElementSetHash> cyclic;
    for (std::size_t x = 1; x < n; ++x) {
      if (!is_prime_power(group_.element_order(x))) continue;
      std::size_t gen[] = {x};
      auto s = generate(group_, gen);
      if (cyclic.emplace(s, x).second) cyclic_gens.push_back(x);
    }
  }

  for (std::size_t head = 0; head < found.size(); ++head) {
    for (auto z : cyclic_gens) {
      if (found[head].set.test(z)) continue;
      auto gens = found[head].gens;
      gens.push_back(z);
      auto s = generate(group_, gens);
      if (!index.count(s)) add(std::move(s), std::move(gens));
    }
  }

  std::vector<std::size_t> perm(found.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::size_t> counts(found.size());
  for (std::size_t i = 0; i < found.size(); ++i) counts[i] = found[i].set.count();
  std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
    if (counts[a] != counts[b]) return counts[a] < counts[b];
    return canonical_compare(found[a].set, found[b].set) < 0;
  });

  sets_.reserve(found.size());
  for (auto p : perm) {
    lookup_.emplace(found[p].set, sets_.size());
    orders_.push_back(counts[p]);
    // Re-derive a greedy generating set so generators do not depend on the
    // discovery order.
    gens_.push_back(generating_set(group_, found[p].set));
    sets_.push_back(std::move(found[p].set));
  }

  // Conjugacy classes of subgroups: orbits under the group's generators.
  constexpr std::size_t unassigned = static_cast<std::size_t>(-1);
  class_of_.assign(sets_.size(), unassigned);
  conjugator_.assign(sets_.size(), 0);
  const auto ggens = group_.generator_indices();
  for (std::size_t start = 0; start < sets_.size(); ++start) {
    if (class_of_[start] != unassigned) continue;
    const auto cls = class_members_.size();
    std::vector<std::size_t> orbit{start};
    class_of_[start] = cls;
    for (std::size_t h = 0; h < orbit.size(); ++h) {
      for (auto s : ggens) {
        auto image = conjugate_set(group_, sets_[orbit[h]], s);
        auto j = lookup_.at(image);
        if (class_of_[j] == unassigned) {
          class_of_[j] = cls;
          conjugator_[j] = group_.product(conjugator_[orbit[h]], s);
          orbit.push_back(j);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    class_members_.push_back(std::move(orbit));
  }

  cache_ = std::make_shared<Cache>(sets_.size());
}

std::optional<std::size_t> SubgroupLattice::find(const ElementSet& s) const {
  auto it = lookup_.find(s);
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::size_t> SubgroupLattice::subgroups_of(std::size_t i) const {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j <= i; ++j)
    if (orders_[i] % orders_[j] == 0 && sets_[j].is_subset_of(sets_[i])) out.push_back(j);
  return out;
}

std::vector<std::size_t> SubgroupLattice::subgroups_up_to_conjugacy_in(std::size_t i) const {
  const auto subs = subgroups_of(i);
  const auto& hgens = gens_[i];
  std::vector<bool> done(sets_.size(), false);
  std::vector<std::size_t> reps;
  for (auto start : subs) {
    if (done[start]) continue;
    reps.push_back(start);
    done[start] = true;
    std::vector<std::size_t> orbit{start};
    for (std::size_t h = 0; h < orbit.size(); ++h)
      for (auto s : hgens) {
        auto j = lookup_.at(conjugate_set(group_, sets_[orbit[h]], s));
        if (!done[j]) {
          done[j] = true;
          orbit.push_back(j);
        }
      }
  }
  return reps;
}

const PermGroup& SubgroupLattice::materialize(std::size_t i) const {
  std::call_once(cache_->once[i], [&] { cache_->groups[i] = group_.subgroup(sets_[i]); });
  return *cache_->groups[i];
}

SubgroupRecord SubgroupLattice::record(std::size_t i) const {
  const auto& sub = materialize(i);
  return SubgroupRecord{sub, group_, class_fusion(group_, sub), is_normal(i)};
}

std::vector<SubgroupRecord> all_subgroups(const PermGroup& G, std::size_t cap) {
  SubgroupLattice lattice(G, cap);
  std::vector<SubgroupRecord> out;
  out.reserve(lattice.size());
  for (std::size_t i = 0; i < lattice.size(); ++i) out.push_back(lattice.record(i));
  return out;
}

std::vector<SubgroupRecord> subgroups_up_to_conjugacy(const PermGroup& G, std::size_t cap) {
  SubgroupLattice lattice(G, cap);
  std::vector<SubgroupRecord> out;
  for (std::size_t c = 0; c < lattice.class_count(); ++c)
    out.push_back(lattice.record(lattice.representative(c)));
  return out;
}

} // namespace charpos
