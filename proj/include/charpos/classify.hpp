#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "charpos/perm_group.hpp"
#include "charpos/positions.hpp"
#include "charpos/structure.hpp"
#include "charpos/subgroups.hpp"

namespace charpos {

struct ClassifyOptions {
  /// Treat supersolvable subgroups as IPR leaves without searching them.
  bool fast_paths = true;
  std::size_t subgroup_cap = kDefaultSubgroupCap;
};

// ---------------------------------------------------------------------------
// Group predicates

bool is_taketa_group(const PositionContext& ctx);

/// chi = phi^G with phi linear on H, [G:H] = chi(1).
struct MonomialWitness {
  std::size_t chi = 0;
  std::size_t lattice_index = kNoIndex;
  SubgroupRecord subgroup;
  std::size_t phi = 0;
};

/// One entry per row of the table; linear rows get nullopt, as do nonlinear
/// rows that are not monomial.
std::vector<std::optional<MonomialWitness>> monomial_witnesses(const PositionEngine& E);
bool is_m_group(const PositionEngine& E);
bool is_pr_group(const PositionEngine& E);
bool is_weak_ipr_group(const PositionEngine& E);

/// Replayable proof that a group is an IPR-group.
///
/// Nodes are subgroups of one ambient group, one per conjugacy class that the
/// search needed; node 0 is the group itself. An entry of node K names a
/// nonlinear chi of K, a proper subgroup H of K with (K, H, chi, phi) a PRT,
/// and the node K0 with H = K0^conjugator that proves H is IPR. Orders drop
/// strictly along entries, so the structure is acyclic.
struct IprCertificate {
  struct Entry {
    std::size_t chi = 0;
    std::size_t chi_degree = 0;
    std::size_t pos_chi = 0;
    std::vector<Permutation> subgroup_generators;
    std::vector<std::size_t> fusion;
    std::size_t phi = 0;
    std::size_t pos_phi = 0;
    std::size_t posind = 0;
    Permutation conjugator;
    std::size_t child = 0;
  };
  enum class Leaf { none, abelian, supersolvable };
  struct Node {
    std::vector<Permutation> generators;
    std::size_t order = 0;
    Leaf leaf = Leaf::none;
    std::vector<Entry> entries;
  };

  std::size_t degree = 0;
  std::vector<Node> nodes;
};

std::string_view to_string(IprCertificate::Leaf leaf);

/// Exhaustive search up to conjugacy. nullopt means the group is not IPR.
std::optional<IprCertificate> is_ipr_group(const PositionEngine& E, bool fast_paths = true);

struct ReplayResult {
  bool ok = true;
  std::string message;
};

/// Rebuilds every group, table, fusion and positional index from the stored
/// generators and rechecks every claim of the certificate.
ReplayResult replay_certificate(const IprCertificate& cert);

// ---------------------------------------------------------------------------
// Statement checks and the aggregate report

enum class Outcome { holds, vacuous, violated, skipped };
std::string_view to_string(Outcome o);

struct StatementCheck {
  std::string id;
  Outcome outcome = Outcome::holds;
  std::string detail;
};

/// The fixed statement ids, in report order.
const std::vector<std::string>& statement_ids();

struct ClassificationReport {
  std::string name;
  std::size_t order = 0;
  std::size_t degree = 0;
  std::vector<Permutation> generators;
  bool fast_paths = true;

  StructureFlags structure;
  /// nullopt when the subgroup cap prevented the search.
  std::optional<bool> m_group;
  bool taketa_group = false;
  std::optional<bool> pr_group;
  std::optional<bool> weak_ipr_group;
  std::optional<bool> ipr_group;

  std::optional<std::size_t> derived_length; // solvable groups only
  std::vector<std::size_t> cd;
  std::optional<bool> taketa_inequality;     // solvable groups only

  std::vector<StatementCheck> statements;
  std::vector<MonomialWitness> monomial;
  std::vector<PrtWitness> pr;
  std::vector<PrtWitness> taketa_pr;
  std::optional<IprCertificate> certificate;
  std::vector<std::string> skipped;

  std::vector<const StatementCheck*> violations() const;
};

ClassificationReport classify(const PermGroup& G, const ClassifyOptions& opts = {}, std::string name = {});

/// The statement part of classify().
std::vector<StatementCheck> verify_statements(const PermGroup& G, const ClassifyOptions& opts = {});

} // namespace charpos
