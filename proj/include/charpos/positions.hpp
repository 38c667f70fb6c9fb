#pragma once

#include <cstddef>
#include <limits>
#include <memory>
#include <optional>
#include <vector>

#include "charpos/character_table.hpp"
#include "charpos/element_set.hpp"
#include "charpos/subgroups.hpp"

namespace charpos {

/// A character table together with the degree list cd(G) = {f_1 < ... < f_n}
/// and the data the position predicates keep asking for: kernels of the
/// irreducibles and the derived series.
class PositionContext {
public:
  explicit PositionContext(CharacterTable T);

  const CharacterTable& table() const noexcept { return table_; }
  const PermGroup& group() const noexcept { return table_.group(); }
  const std::vector<std::size_t>& cd() const noexcept { return cd_; }
  std::size_t n() const noexcept { return cd_.size(); }

  /// 1-based index of chi(1) in cd.
  std::size_t pos(std::size_t chi) const noexcept { return pos_[chi]; }
  std::size_t pos_of_degree(std::size_t degree) const;

  const ElementSet& kernel(std::size_t chi) const noexcept { return kernels_[chi]; }
  /// G^(i); the series is extended by its last term once it stabilizes.
  const ElementSet& derived_term(std::size_t i) const noexcept;
  bool solvable() const noexcept { return derived_.back().count() == 1; }
  /// Number of strict steps down to the trivial group (only if solvable).
  std::size_t derived_length() const noexcept { return derived_.size() - 1; }

private:
  CharacterTable table_;
  std::vector<std::size_t> cd_;
  std::vector<std::size_t> pos_;
  std::vector<ElementSet> kernels_;
  std::vector<ElementSet> derived_;
};

struct PosExtrema {
  std::size_t min = 0;
  std::size_t max = 0;
};

/// Positions of the smallest and largest irreducible constituents of theta.
/// Throws NotACharacter for non-characters and for the zero function.
PosExtrema pos_extrema(const PositionContext& ctx, const ClassFunction& theta);

struct PosindResult {
  std::size_t value = 0;
  std::vector<std::size_t> minimizers; // rows psi of Irr(H) attaining it
};

/// Everything about one subgroup H of G that the position predicates use.
struct SubgroupPositions {
  SubgroupRecord record;
  PositionContext context; // of H itself: positions of phi are relative to cd(H)
  /// restriction[chi][psi] = [chi_H, psi] = [chi, psi^G]
  std::vector<std::vector<std::size_t>> restriction;
  PosindResult posind;
  /// Per chi of G: smallest pos_H over the constituents of chi_H.
  std::vector<std::size_t> pos_min;
  bool proper = true;
};

SubgroupPositions analyze_subgroup(const PositionContext& G, SubgroupRecord H);
/// Same, reusing an already computed context of H.
SubgroupPositions analyze_subgroup(const PositionContext& G, SubgroupRecord H, PositionContext Hctx);

/// min over psi in Irr(H) of the maximal position of psi^G.
PosindResult posind(const PositionContext& G, const SubgroupRecord& H);

inline constexpr std::size_t kNoIndex = std::numeric_limits<std::size_t>::max();

struct PrtWitness {
  SubgroupRecord subgroup;
  std::size_t lattice_index = kNoIndex;
  std::size_t chi = 0;
  std::size_t phi = 0;
  std::size_t pos_phi = 0;
  std::size_t posind_value = 0;
  std::size_t pos_chi = 0;
};

/// Witness when pos_min(chi_H) + posind(G,H) <= pos(chi); phi is the first
/// constituent of minimal position. Throws PreconditionViolation if H = G.
std::optional<PrtWitness> is_prt(const PositionContext& G, const SubgroupPositions& H, std::size_t chi);
std::optional<PrtWitness> is_prt(const PositionContext& G, const SubgroupRecord& H, std::size_t chi);

/// phi is a constituent of chi_H and pos_H(phi) + posind(G,H) <= pos(chi).
bool is_prt_with(const PositionContext& G, const SubgroupPositions& H, std::size_t chi, std::size_t phi);
bool is_prt_with(const PositionContext& G, const SubgroupRecord& H, std::size_t chi, std::size_t phi);

/// G^(pos chi) lies in ker chi.
bool is_taketa_character(const PositionContext& ctx, std::size_t chi);

struct CliffordObstruction {
  std::size_t phi = 0;       // row of Irr(G')
  std::size_t phi_degree = 0;
  std::size_t pos_phi = 0;   // in cd(G')
  std::size_t t = 0;         // size of the G-orbit of phi, i.e. [G : I_G(phi)]
  bool divides = false;      // phi(1) t divides chi(1)
};

/// D_0 = G and D_i the intersection of the kernels of all chi with pos <= i.
std::vector<ElementSet> d_series(const PositionContext& ctx);

/// Subgroup-driven predicates for one group, with per-subgroup data computed
/// on first use and shared afterwards. Safe for concurrent readers.
class PositionEngine {
public:
  explicit PositionEngine(const PermGroup& G, std::size_t subgroup_cap = kDefaultSubgroupCap);
  PositionEngine(PositionContext ctx, SubgroupLattice lattice);

  const PositionContext& context() const noexcept { return *ctx_; }
  const SubgroupLattice& lattice() const noexcept { return *lattice_; }
  std::size_t derived_index() const noexcept { return derived_index_; }

  const SubgroupPositions& subgroup(std::size_t lattice_index) const;

  /// Proper subgroups up to conjugacy: G' first, then by decreasing order,
  /// then by canonical key.
  const std::vector<std::size_t>& search_order() const noexcept { return order_; }

  std::optional<PrtWitness> pr_witness(std::size_t chi) const;
  std::optional<PrtWitness> taketa_pr_witness(std::size_t chi) const;
  /// For nonlinear chi with (G, G', chi) not a PRT. Throws
  /// PreconditionViolation otherwise.
  CliffordObstruction clifford_obstruction(std::size_t chi) const;

private:
  std::shared_ptr<const PositionContext> ctx_;
  std::shared_ptr<const SubgroupLattice> lattice_;
  std::size_t derived_index_ = 0;
  std::vector<std::size_t> order_;
  struct Cache;
  std::shared_ptr<Cache> cache_;
};

} // namespace charpos
