#include "charpos/classify.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <unordered_map>

#include "charpos/errors.hpp"

namespace charpos {

bool is_taketa_group(const PositionContext& ctx) {
  for (std::size_t chi = 0; chi < ctx.table().size(); ++chi)
    if (!is_taketa_character(ctx, chi)) return false;
  return true;
}

std::vector<std::optional<MonomialWitness>> monomial_witnesses(const PositionEngine& E) {
  const auto& ctx = E.context();
  const auto& T = ctx.table();
  const auto& L = E.lattice();
  const auto order = ctx.group().order();
  std::vector<std::optional<MonomialWitness>> out(T.size());
  for (std::size_t chi = 0; chi < T.size(); ++chi) {
    const auto d = T.degree(chi);
    if (d == 1) continue;
    for (auto h : E.search_order()) {
      if (order / L.order(h) != d) continue;
      const auto& S = E.subgroup(h);
      const auto& TH = S.context.table();
      for (std::size_t phi = 0; phi < TH.size() && !out[chi]; ++phi)
        if (TH.degree(phi) == 1 && S.restriction[chi][phi] == 1) out[chi] = MonomialWitness{chi, h, S.record, phi};
      if (out[chi]) break;
    }
  }
  return out;
}

bool is_m_group(const PositionEngine& E) {
  auto w = monomial_witnesses(E);
  const auto& T = E.context().table();
  for (std::size_t chi = 0; chi < T.size(); ++chi)
    if (T.degree(chi) > 1 && !w[chi]) return false;
  return true;
}

bool is_pr_group(const PositionEngine& E) {
  const auto& T = E.context().table();
  for (std::size_t chi = 0; chi < T.size(); ++chi)
    if (T.degree(chi) > 1 && !E.pr_witness(chi)) return false;
  return true;
}

bool is_weak_ipr_group(const PositionEngine& E) {
  const auto& T = E.context().table();
  for (std::size_t chi = 0; chi < T.size(); ++chi)
    if (T.degree(chi) > 1 && !E.taketa_pr_witness(chi)) return false;
  return true;
}

std::string_view to_string(IprCertificate::Leaf leaf) {
  switch (leaf) {
  case IprCertificate::Leaf::abelian: return "abelian";
  case IprCertificate::Leaf::supersolvable: return "supersolvable";
  case IprCertificate::Leaf::none: break;
  }
  return "none";
}

// ---------------------------------------------------------------------------
// IPR search

namespace {

class IprSearch {
public:
  IprSearch(const PositionEngine& E, bool fast) : E_(E), L_(E.lattice()), fast_(fast) {}

  std::optional<IprCertificate> run() {
    const auto whole = L_.whole_index();
    if (!solve(whole)) return std::nullopt;
    // Number the nodes reachable from the root in breadth-first order.
    IprCertificate cert;
    cert.degree = E_.context().group().degree();
    std::map<std::size_t, std::size_t> id{{whole, 0}};
    std::deque<std::size_t> queue{whole};
    while (!queue.empty()) {
      auto r = queue.front();
      queue.pop_front();
      auto node = *memo_.at(r);
      for (auto& e : node.entries) {
        auto [it, fresh] = id.emplace(e.child, id.size());
        if (fresh) queue.push_back(e.child);
        e.child = it->second;
      }
      cert.nodes.push_back(std::move(node));
    }
    return cert;
  }

private:
  const PositionContext& context_of(std::size_t i) {
    auto it = contexts_.find(i);
    if (it == contexts_.end())
      it = contexts_.emplace(i, PositionContext(character_table(L_.materialize(i)))).first;
    return it->second;
  }

  std::vector<std::size_t> candidates(std::size_t r) {
    if (r == L_.whole_index()) return E_.search_order();
    const auto& G = E_.context().group();
    auto derived = L_.find(derived_subgroup(G, L_.set(r)));
    if (!derived) throw InternalError("derived subgroup missing from the subgroup lattice");
    std::vector<std::size_t> out;
    for (auto h : L_.subgroups_up_to_conjugacy_in(r))
      if (h != r) out.push_back(h);
    std::sort(out.begin(), out.end(), [&](std::size_t a, std::size_t b) {
      if ((a == *derived) != (b == *derived)) return a == *derived;
      if (L_.order(a) != L_.order(b)) return L_.order(a) > L_.order(b);
      return a < b;
    });
    return out;
  }

  bool solve(std::size_t r) {
    if (auto it = memo_.find(r); it != memo_.end()) return it->second.has_value();
    const bool top = r == L_.whole_index();
    const auto& K = top ? E_.context().group() : L_.materialize(r);
    IprCertificate::Node node;
    node.generators = K.generators();
    node.order = K.order();
    if (K.is_abelian()) {
      node.leaf = IprCertificate::Leaf::abelian;
    } else if (fast_ && structural_predicates(K).supersolvable) {
      node.leaf = IprCertificate::Leaf::supersolvable;
    } else {
      const auto& ctx = top ? E_.context() : context_of(r);
      const auto cands = candidates(r);
      std::map<std::size_t, SubgroupPositions> local;
      auto analysis = [&](std::size_t h) -> const SubgroupPositions& {
        if (top) return E_.subgroup(h);
        auto it = local.find(h);
        if (it == local.end())
          it = local.emplace(h, analyze_subgroup(ctx, make_subgroup_record(K, L_.materialize(h)), context_of(h))).first;
        return it->second;
      };
      const auto& T = ctx.table();
      for (std::size_t chi = 0; chi < T.size(); ++chi) {
        if (T.degree(chi) == 1) continue;
        bool found = false;
        for (auto h : cands) {
          const auto& S = analysis(h);
          auto w = is_prt(ctx, S, chi);
          if (!w) continue;
          const auto rep = L_.representative(L_.class_of(h));
          if (!solve(rep)) continue;
          IprCertificate::Entry e;
          e.chi = chi;
          e.chi_degree = T.degree(chi);
          e.pos_chi = w->pos_chi;
          e.subgroup_generators = S.record.subgroup.generators();
          e.fusion = S.record.fusion;
          e.phi = w->phi;
          e.pos_phi = w->pos_phi;
          e.posind = w->posind_value;
          e.conjugator = E_.context().group().element(L_.conjugator(h));
          e.child = rep;
          node.entries.push_back(std::move(e));
          found = true;
          break;
        }
        if (!found) {
          memo_.emplace(r, std::nullopt);
          return false;
        }
      }
    }
    memo_.emplace(r, std::move(node));
    return true;
  }

  const PositionEngine& E_;
  const SubgroupLattice& L_;
  bool fast_;
  std::map<std::size_t, std::optional<IprCertificate::Node>> memo_;
  std::map<std::size_t, PositionContext> contexts_;
};

} // namespace

std::optional<IprCertificate> is_ipr_group(const PositionEngine& E, bool fast_paths) {
  return IprSearch(E, fast_paths).run();
}

ReplayResult replay_certificate(const IprCertificate& cert) {
  auto fail = [](std::string msg) { return ReplayResult{false, std::move(msg)}; };
  if (cert.nodes.empty()) return fail("certificate has no nodes");
  try {
    std::vector<PermGroup> groups;
    for (const auto& node : cert.nodes) groups.push_back(PermGroup::from_generators(cert.degree, node.generators));
    for (std::size_t k = 0; k < cert.nodes.size(); ++k) {
      const auto& node = cert.nodes[k];
      const auto& K = groups[k];
      const auto where = "node " + std::to_string(k) + ": ";
      if (K.order() != node.order) return fail(where + "order mismatch");
      switch (node.leaf) {
      case IprCertificate::Leaf::abelian:
        if (!K.is_abelian()) return fail(where + "leaf is not abelian");
        if (!node.entries.empty()) return fail(where + "leaf with entries");
        continue;
      case IprCertificate::Leaf::supersolvable:
        if (!structural_predicates(K).supersolvable) return fail(where + "leaf is not supersolvable");
        if (!node.entries.empty()) return fail(where + "leaf with entries");
        continue;
      case IprCertificate::Leaf::none:
        break;
      }
      PositionContext ctx(character_table(K));
      const auto& T = ctx.table();
      std::vector<bool> covered(T.size(), false);
      for (const auto& e : node.entries) {
        const auto at = where + "chi " + std::to_string(e.chi) + ": ";
        if (e.chi >= T.size()) return fail(at + "no such character");
        if (T.degree(e.chi) != e.chi_degree || ctx.pos(e.chi) != e.pos_chi) return fail(at + "degree or position mismatch");
        if (e.chi_degree == 1) return fail(at + "entry for a linear character");
        covered[e.chi] = true;
        auto H = PermGroup::from_generators(cert.degree, e.subgroup_generators);
        if (H.order() >= K.order()) return fail(at + "witness subgroup is not proper");
        auto rec = make_subgroup_record(K, H);
        if (rec.fusion != e.fusion) return fail(at + "class fusion mismatch");
        auto S = analyze_subgroup(ctx, std::move(rec));
        if (e.phi >= S.context.table().size() || S.restriction[e.chi][e.phi] == 0)
          return fail(at + "phi is not a constituent of the restriction");
        if (S.context.pos(e.phi) != e.pos_phi || S.posind.value != e.posind) return fail(at + "position mismatch");
        if (e.pos_phi + e.posind > e.pos_chi) return fail(at + "inequality fails");
        if (e.child >= cert.nodes.size()) return fail(at + "dangling child");
        const auto& child = cert.nodes[e.child];
        if (child.order != H.order()) return fail(at + "child order differs from the witness subgroup");
        std::vector<Permutation> moved;
        for (const auto& g : child.generators) moved.push_back(g.conjugate_by(e.conjugator));
        if (!PermGroup::from_generators(cert.degree, moved).equals(H))
          return fail(at + "witness subgroup is not the conjugated child");
      }
      for (std::size_t chi = 0; chi < T.size(); ++chi)
        if (T.degree(chi) > 1 && !covered[chi]) return fail(where + "chi " + std::to_string(chi) + " has no entry");
    }
  } catch (const Error& e) {
    return fail(e.what());
  }
  return {};
}

} // namespace charpos
