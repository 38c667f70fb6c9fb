#include "charpos/structure.hpp"

#include "charpos/class_table.hpp"

namespace charpos {

std::vector<ElementSet> derived_series_sets(const PermGroup& G, const ElementSet& H) {
  std::vector<ElementSet> terms{H};
  for (;;) {
    auto next = derived_subgroup(G, terms.back());
    if (next == terms.back()) break;
    terms.push_back(std::move(next));
  }
  return terms;
}

std::optional<std::size_t> relative_derived_length(const PermGroup& G, const ElementSet& A,
                                                   const ElementSet& B) {
  auto terms = derived_series_sets(G, A);
  for (std::size_t k = 0; k < terms.size(); ++k)
    if (terms[k].is_subset_of(B)) return k;
  return std::nullopt;
}

PermGroup derived_subgroup(const PermGroup& G) {
  return G.subgroup(derived_subgroup(G, G.all_elements()));
}

DerivedSeries derived_series(const PermGroup& G) {
  DerivedSeries out;
  auto sets = derived_series_sets(G, G.all_elements());
  for (const auto& s : sets) out.terms.push_back(G.subgroup(s));
  out.solvable = sets.back().count() == 1;
  out.derived_length = out.solvable ? sets.size() - 1 : 0;
  // A non-solvable series is shown with its repeated perfect term.
  if (!out.solvable) out.terms.push_back(out.terms.back());
  return out;
}

namespace {

bool is_prime(std::size_t n) {
  if (n < 2) return false;
  for (std::size_t p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

bool is_nilpotent(const PermGroup& G) {
  const auto ggens = G.generator_indices();
  ElementSet term = G.all_elements();
  for (;;) {
    if (term.count() == 1) return true;
    auto tgens = generating_set(G, term);
    auto next = commutator_subgroup(G, tgens, ggens);
    // [term, G] is normal in G; close under G to be safe with the generators.
    next = normal_closure(G, next, ggens);
    if (next == term) return false;
    term = std::move(next);
  }
}

// Climbs a chain of normal subgroups with prime-order factors. Any chief
// series of a supersolvable group has prime-order factors, so a failure to
// find a prime step above some normal N is conclusive.
bool is_supersolvable(const PermGroup& G) {
  const auto ggens = G.generator_indices();
  const auto& classes = G.classes();
  ElementSet N = G.identity_set();
  while (N.count() < G.order()) {
    bool stepped = false;
    for (std::size_t c = 1; c < classes.size() && !stepped; ++c) {
      auto g = classes[c].representative;
      if (N.test(g)) continue;
      auto gens = generating_set(G, N);
      gens.push_back(g);
      auto M = normal_closure(G, generate(G, gens), ggens);
      if (is_prime(M.count() / N.count())) {
        N = std::move(M);
        stepped = true;
      }
    }
    if (!stepped) return false;
  }
  return true;
}

} // namespace

StructureFlags structural_predicates(const PermGroup& G) {
  StructureFlags f;
  f.abelian = G.is_abelian();
  auto series = derived_series_sets(G, G.all_elements());
  f.solvable = series.back().count() == 1;
  f.perfect = series.size() == 1;
  f.nilpotent = f.abelian || is_nilpotent(G);
  f.supersolvable = f.nilpotent ? true : (f.solvable && is_supersolvable(G));
  return f;
}

} // namespace charpos
