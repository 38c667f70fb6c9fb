#include "charpos/class_table.hpp"

#include <algorithm>
#include <tuple>

#include "charpos/errors.hpp"

namespace charpos {

ClassTable::ClassTable(const PermGroup& G) : order_(G.order()), exponent_(G.exponent()) {
  const auto n = G.order();
  const auto gens = G.generator_indices();
  constexpr std::size_t unassigned = static_cast<std::size_t>(-1);
  std::vector<std::size_t> orbit_id(n, unassigned);
  std::vector<ConjugacyClass> found;

  for (std::size_t start = 0; start < n; ++start) {
    if (orbit_id[start] != unassigned) continue;
    const auto id = found.size();
    std::vector<std::size_t> orbit{start};
    orbit_id[start] = id;
    for (std::size_t head = 0; head < orbit.size(); ++head)
      for (auto g : gens) {
        auto y = G.conjugate(orbit[head], g);
        if (orbit_id[y] == unassigned) {
          orbit_id[y] = id;
          orbit.push_back(y);
        }
      }
    std::sort(orbit.begin(), orbit.end());
    found.push_back({orbit.front(), orbit.size(), G.element_order(start), std::move(orbit)});
  }

  std::vector<std::size_t> perm(found.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
    return std::tie(found[a].element_order, found[a].size, found[a].representative) <
           std::tie(found[b].element_order, found[b].size, found[b].representative);
  });
  classes_.reserve(found.size());
  class_of_.assign(n, 0);
  for (std::size_t c = 0; c < perm.size(); ++c) {
    classes_.push_back(std::move(found[perm[c]]));
    for (auto x : classes_.back().members) class_of_[x] = c;
  }

  power_maps_.assign(exponent_, std::vector<std::size_t>(classes_.size(), 0));
  for (std::size_t c = 0; c < classes_.size(); ++c) {
    const auto rep = classes_[c].representative;
    const auto ord = classes_[c].element_order;
    std::vector<std::size_t> powers(ord);
    powers[0] = 0;
    for (std::size_t k = 1; k < ord; ++k) powers[k] = G.product(powers[k - 1], rep);
    for (std::size_t k = 0; k < exponent_; ++k) power_maps_[k][c] = class_of_[powers[k % ord]];
  }
}

std::size_t ClassTable::power(std::size_t c, long long k) const noexcept {
  const auto e = static_cast<long long>(exponent_);
  auto r = static_cast<std::size_t>(((k % e) + e) % e);
  return power_maps_[r][c];
}

ElementSet ClassTable::union_of(const std::vector<std::size_t>& class_indices) const {
  ElementSet s(order_);
  for (auto c : class_indices)
    for (auto x : classes_[c].members) s.set(x);
  return s;
}

std::vector<std::size_t> ClassTable::classes_in(const ElementSet& s) const {
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < classes_.size(); ++c)
    if (s.test(classes_[c].representative)) out.push_back(c);
  return out;
}

ClassTable conjugacy_classes(const PermGroup& G) { return ClassTable(G); }

std::size_t centralizer_order(const PermGroup& G, const Permutation& g) {
  auto idx = G.index_of(g);
  if (!idx) throw NotInGroup(g.to_string() + " is not an element of the group");
  const auto& ct = G.classes();
  return ct.centralizer_order(ct.class_of(*idx));
}

} // namespace charpos
