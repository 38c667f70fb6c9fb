#include "charpos/perm_group.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

#include "charpos/class_table.hpp"
#include "charpos/errors.hpp"

namespace charpos {

namespace {
// Groups up to this order get a full Cayley table (4 bytes per entry).
constexpr std::size_t kCayleyLimit = 2048;
} // namespace

namespace detail {

struct GroupData {
  std::size_t degree = 0;
  std::vector<Permutation> generators;
  std::vector<Permutation> elements;
  std::unordered_map<Permutation, std::uint32_t, PermutationHash> index;
  std::vector<std::uint32_t> inverses;
  std::vector<std::uint32_t> orders;
  std::size_t exponent = 1;

  mutable std::once_flag cayley_once;
  mutable std::vector<std::uint32_t> cayley;

  mutable std::once_flag classes_once;
  mutable std::unique_ptr<ClassTable> classes;
};

} // namespace detail

PermGroup PermGroup::from_sorted_elements(std::size_t degree, std::vector<Permutation> gens,
                                          std::vector<Permutation> elements) {
  auto data = std::make_shared<detail::GroupData>();
  data->degree = degree;
  data->generators = std::move(gens);
  data->elements = std::move(elements);
  const auto n = data->elements.size();
  data->index.reserve(n * 2);
  for (std::size_t i = 0; i < n; ++i)
    data->index.emplace(data->elements[i], static_cast<std::uint32_t>(i));
  data->inverses.resize(n);
  data->orders.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    data->inverses[i] = data->index.at(data->elements[i].inverse());
    data->orders[i] = static_cast<std::uint32_t>(data->elements[i].order());
    data->exponent = std::lcm(data->exponent, static_cast<std::size_t>(data->orders[i]));
  }
  return PermGroup(std::move(data));
}

PermGroup PermGroup::from_generators(std::size_t degree, std::vector<Permutation> gens,
                                     std::size_t cap) {
  for (const auto& g : gens)
    if (g.degree() != degree)
      throw MalformedPermutation("generator " + g.to_string() + " has degree " +
                                 std::to_string(g.degree()) + ", expected " +
                                 std::to_string(degree));
  std::vector<Permutation> nontrivial;
  for (auto& g : gens)
    if (!g.is_identity()) nontrivial.push_back(g);

  if (cap == 0) throw CapExceeded("element enumeration", cap);
  std::unordered_set<Permutation, PermutationHash> seen;
  std::vector<Permutation> elements{Permutation::identity(degree)};
  seen.insert(elements.front());
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (const auto& s : nontrivial) {
      Permutation next = elements[head] * s;
      if (seen.insert(next).second) {
        if (elements.size() >= cap) throw CapExceeded("element enumeration", cap);
        elements.push_back(std::move(next));
      }
    }
  }
  std::sort(elements.begin(), elements.end());
  return from_sorted_elements(degree, std::move(gens), std::move(elements));
}

PermGroup PermGroup::trivial(std::size_t degree) { return from_generators(degree, {}); }

std::size_t PermGroup::degree() const noexcept { return data_->degree; }
std::size_t PermGroup::order() const noexcept { return data_->elements.size(); }
const std::vector<Permutation>& PermGroup::generators() const noexcept { return data_->generators; }
const std::vector<Permutation>& PermGroup::elements() const noexcept { return data_->elements; }
std::size_t PermGroup::exponent() const noexcept { return data_->exponent; }

std::optional<std::size_t> PermGroup::index_of(const Permutation& p) const {
  auto it = data_->index.find(p);
  if (it == data_->index.end()) return std::nullopt;
  return it->second;
}

std::size_t PermGroup::product(std::size_t i, std::size_t j) const {
  const auto n = order();
  if (n <= kCayleyLimit) {
    std::call_once(data_->cayley_once, [&] {
      auto& table = data_->cayley;
      table.resize(n * n);
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
          table[a * n + b] = data_->index.at(data_->elements[a] * data_->elements[b]);
    });
    return data_->cayley[i * n + j];
  }
  return data_->index.at(data_->elements[i] * data_->elements[j]);
}

std::size_t PermGroup::inverse(std::size_t i) const { return data_->inverses[i]; }

std::size_t PermGroup::power(std::size_t i, long long k) const {
  const auto ord = static_cast<long long>(data_->orders[i]);
  long long e = ((k % ord) + ord) % ord;
  std::size_t result = 0;
  for (long long t = 0; t < e; ++t) result = product(result, i);
  return result;
}

std::size_t PermGroup::element_order(std::size_t i) const { return data_->orders[i]; }

std::vector<std::size_t> PermGroup::generator_indices() const {
  std::vector<std::size_t> out;
  for (const auto& g : data_->generators)
    if (!g.is_identity()) out.push_back(data_->index.at(g));
  return out;
}

bool PermGroup::is_abelian() const {
  const auto& gens = data_->generators;
  for (std::size_t a = 0; a < gens.size(); ++a)
    for (std::size_t b = a + 1; b < gens.size(); ++b)
      if (gens[a] * gens[b] != gens[b] * gens[a]) return false;
  return true;
}

const ClassTable& PermGroup::classes() const {
  std::call_once(data_->classes_once,
                 [&] { data_->classes = std::make_unique<ClassTable>(*this); });
  return *data_->classes;
}

ElementSet PermGroup::all_elements() const {
  ElementSet s(order());
  for (std::size_t i = 0; i < order(); ++i) s.set(i);
  return s;
}

ElementSet PermGroup::identity_set() const {
  ElementSet s(order());
  s.set(0);
  return s;
}

PermGroup PermGroup::subgroup(const ElementSet& subset) const {
  std::vector<Permutation> elems;
  elems.reserve(subset.count());
  subset.for_each([&](std::size_t i) { elems.push_back(data_->elements[i]); });
  std::vector<Permutation> gens;
  for (auto i : generating_set(*this, subset)) gens.push_back(data_->elements[i]);
  return from_sorted_elements(degree(), std::move(gens), std::move(elems));
}

ElementSet PermGroup::embed(const PermGroup& other) const {
  ElementSet s(order());
  for (const auto& p : other.elements()) {
    auto idx = index_of(p);
    if (!idx) throw NotInGroup(p.to_string() + " is not an element of the parent group");
    s.set(*idx);
  }
  return s;
}

bool PermGroup::equals(const PermGroup& other) const {
  return degree() == other.degree() && elements() == other.elements();
}

// ---------------------------------------------------------------------------

ElementSet generate(const PermGroup& G, std::span<const std::size_t> gens) {
  ElementSet set(G.order());
  std::vector<std::size_t> queue{0};
  set.set(0);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (auto s : gens) {
      auto next = G.product(queue[head], s);
      if (!set.test(next)) {
        set.set(next);
        queue.push_back(next);
      }
    }
  }
  return set;
}

std::vector<std::size_t> generating_set(const PermGroup& G, const ElementSet& H) {
  std::vector<std::size_t> gens;
  ElementSet current = G.identity_set();
  const auto target = H.count();
  H.for_each([&](std::size_t i) {
    if (current.count() == target || current.test(i)) return;
    gens.push_back(i);
    current = generate(G, gens);
  });
  return gens;
}

ElementSet normal_closure(const PermGroup& G, const ElementSet& H,
                          std::span<const std::size_t> by) {
  auto gens = generating_set(G, H);
  ElementSet N = H;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t k = 0; k < gens.size() && !changed; ++k) {
      for (auto g : by) {
        auto c = G.conjugate(gens[k], g);
        if (!N.test(c)) {
          gens.push_back(c);
          N = generate(G, gens);
          changed = true;
          break;
        }
      }
    }
  }
  return N;
}

ElementSet commutator_subgroup(const PermGroup& G, std::span<const std::size_t> a_gens,
                               std::span<const std::size_t> b_gens) {
  std::vector<std::size_t> comms;
  for (auto a : a_gens)
    for (auto b : b_gens) {
      auto c = G.product(G.product(G.inverse(a), G.inverse(b)), G.product(a, b));
      if (c != 0) comms.push_back(c);
    }
  std::sort(comms.begin(), comms.end());
  comms.erase(std::unique(comms.begin(), comms.end()), comms.end());
  ElementSet C = generate(G, comms);
  std::vector<std::size_t> by(a_gens.begin(), a_gens.end());
  by.insert(by.end(), b_gens.begin(), b_gens.end());
  return normal_closure(G, C, by);
}

ElementSet derived_subgroup(const PermGroup& G, const ElementSet& H) {
  auto gens = generating_set(G, H);
  return commutator_subgroup(G, gens, gens);
}

bool is_normalized_by(const PermGroup& G, const ElementSet& H, std::span<const std::size_t> by) {
  auto gens = generating_set(G, H);
  for (auto h : gens)
    for (auto g : by)
      if (!H.test(G.conjugate(h, g))) return false;
  return true;
}

ElementSet conjugate_set(const PermGroup& G, const ElementSet& H, std::size_t g) {
  ElementSet out(G.order());
  H.for_each([&](std::size_t x) { out.set(G.conjugate(x, g)); });
  return out;
}

} // namespace charpos
