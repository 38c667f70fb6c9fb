#include <algorithm>
#include <memory>

#include "charpos/classify.hpp"
#include "charpos/errors.hpp"

namespace charpos {

std::string_view to_string(Outcome o) {
  switch (o) {
  case Outcome::holds: return "holds";
  case Outcome::vacuous: return "vacuous";
  case Outcome::violated: return "violated";
  case Outcome::skipped: return "skipped";
  }
  return "?";
}

const std::vector<std::string>& statement_ids() {
  static const std::vector<std::string> ids{
      "prop.properties.1", "prop.properties.2", "prop.properties.3", "prop.properties.4",
      "prop.properties.5", "lemma.xgr1",        "prop.xgr2",         "prop.taketa2",
      "prop.pos2",         "prop.monomialcharacter", "cor.m_pr",     "cor.m_weakipr",
      "thm.taketa_mgroup", "prop.supersolvable", "thm.iprtaketa",    "cor.weakipr",
      "thm.weakipr_taketa", "taketa.inequality", "prop.dl2_ipr",     "cor.pr_not_perfect",
      "normalseries.d1",   "thm.di.1",          "thm.di.2",          "thm.di.3",
      "cor.d2",            "thm.final.bound"};
  return ids;
}

std::vector<const StatementCheck*> ClassificationReport::violations() const {
  std::vector<const StatementCheck*> out;
  for (const auto& s : statements)
    if (s.outcome == Outcome::violated) out.push_back(&s);
  return out;
}

namespace {

// Accumulates one statement: any failed instance makes it violated, no
// instance at all makes it vacuous.
struct Check {
  std::size_t instances = 0;
  std::string failure;

  void expect(bool ok, const std::string& what) {
    ++instances;
    if (!ok && failure.empty()) failure = what;
  }
  StatementCheck result(std::string id) const {
    if (!failure.empty()) return {std::move(id), Outcome::violated, failure};
    if (instances == 0) return {std::move(id), Outcome::vacuous, "hypothesis never applies"};
    return {std::move(id), Outcome::holds, std::to_string(instances) + " instance" + (instances == 1 ? "" : "s")};
  }
};

StatementCheck skipped(std::string id) { return {std::move(id), Outcome::skipped, "subgroup cap exceeded"}; }

std::string chi_label(std::size_t chi) { return "chi " + std::to_string(chi); }

std::string quotient_dl(const std::optional<std::size_t>& v) { return v ? std::to_string(*v) : "infinite"; }

struct Facts {
  const PositionContext* ctx = nullptr;
  const PositionEngine* engine = nullptr; // null when the subgroup cap was hit
  StructureFlags structure;
  bool fast_paths = true;
  bool taketa = false;
  std::optional<bool> m, pr, weak_ipr, ipr;
  std::vector<std::optional<MonomialWitness>> monomial;
  std::vector<std::optional<PrtWitness>> pr_w, tpr_w;
};

void subgroup_statements(const Facts& f, std::vector<StatementCheck>& out) {
  if (!f.engine) {
    for (const char* id : {"prop.properties.1", "prop.properties.2", "prop.properties.3", "prop.properties.4",
                           "prop.properties.5", "lemma.xgr1", "prop.xgr2", "prop.taketa2", "prop.pos2",
                           "prop.monomialcharacter"})
      out.push_back(skipped(id));
    return;
  }
  const auto& E = *f.engine;
  const auto& ctx = *f.ctx;
  const auto& L = E.lattice();
  const auto& G = ctx.group();
  const auto& T = ctx.table();
  const auto& derived = ctx.derived_term(1);

  // posind is constant on conjugacy classes of subgroups.
  std::vector<std::size_t> pi(L.size());
  for (std::size_t i = 0; i < L.size(); ++i) pi[i] = E.subgroup(L.representative(L.class_of(i))).posind.value;

  Check p1, p2, p3, p4, p5;
  for (std::size_t h = 0; h < L.size(); ++h) {
    for (auto k : L.subgroups_of(h))
      p1.expect(pi[k] >= pi[h], "posind drops from subgroup " + std::to_string(h) + " to " + std::to_string(k));
    p3.expect((pi[h] == 1) == derived.is_subset_of(L.set(h)), "subgroup " + std::to_string(h));
    if (L.order(h) < G.order())
      p5.expect(pi[h] < G.order() / L.order(h), "subgroup " + std::to_string(h) + " has posind " +
                                                    std::to_string(pi[h]) + " >= index");
  }
  p2.expect(pi[L.whole_index()] == 1, "posind(G,G) = " + std::to_string(pi[L.whole_index()]));
  p2.expect(pi[E.derived_index()] == 1, "posind(G,G') = " + std::to_string(pi[E.derived_index()]));
  p4.expect(pi[L.trivial_index()] == ctx.n(), "posind(G,1) = " + std::to_string(pi[L.trivial_index()]));
  out.push_back(p1.result("prop.properties.1"));
  out.push_back(p2.result("prop.properties.2"));
  out.push_back(p3.result("prop.properties.3"));
  out.push_back(p4.result("prop.properties.4"));
  out.push_back(p5.result("prop.properties.5"));

  const auto& D = E.subgroup(E.derived_index());
  Check xgr1, xgr2, taketa2, pos2, monomial;
  for (std::size_t chi = 0; chi < T.size(); ++chi) {
    const auto p = ctx.pos(chi);
    if (p == 2) {
      const bool a = f.pr_w[chi].has_value(), b = f.tpr_w[chi].has_value(), c = is_taketa_character(ctx, chi);
      pos2.expect(a == b && b == c, chi_label(chi) + ": PR " + std::to_string(a) + ", Taketa-PR " +
                                        std::to_string(b) + ", Taketa " + std::to_string(c));
    }
    if (p == 1) continue;
    if (f.monomial[chi]) monomial.expect(f.pr_w[chi].has_value(), chi_label(chi) + " is monomial but not PR");
    const bool prt_on_derived = D.proper && is_prt(ctx, D, chi).has_value();
    if (D.proper) {
      for (std::size_t phi = 0; phi < D.context.table().size(); ++phi)
        if (D.restriction[chi][phi])
          xgr1.expect(is_prt_with(ctx, D, chi, phi) == (D.context.pos(phi) < p),
                      chi_label(chi) + ", phi " + std::to_string(phi));
      if (ctx.derived_term(2).is_subset_of(ctx.kernel(chi)))
        taketa2.expect(prt_on_derived, chi_label(chi) + ": G'' in the kernel but (G,G',chi) is no PRT");
    }
    if (!prt_on_derived) {
      auto c = E.clifford_obstruction(chi);
      xgr2.expect(c.pos_phi >= p && c.divides, chi_label(chi) + ": phi " + std::to_string(c.phi) + ", t " +
                                                   std::to_string(c.t));
    }
  }
  out.push_back(xgr1.result("lemma.xgr1"));
  out.push_back(xgr2.result("prop.xgr2"));
  out.push_back(taketa2.result("prop.taketa2"));
  out.push_back(pos2.result("prop.pos2"));
  out.push_back(monomial.result("prop.monomialcharacter"));
}

// hypothesis => conclusion, where either side may be unknown.
StatementCheck implication(std::string id, std::optional<bool> hyp, std::optional<bool> concl, const char* what) {
  if (!hyp) return skipped(std::move(id));
  if (!*hyp) return {std::move(id), Outcome::vacuous, "hypothesis fails"};
  if (!concl) return skipped(std::move(id));
  if (!*concl) return {std::move(id), Outcome::violated, what};
  return {std::move(id), Outcome::holds, "1 instance"};
}

void group_statements(const Facts& f, std::vector<StatementCheck>& out) {
  const auto& ctx = *f.ctx;
  const auto& s = f.structure;
  const auto n = ctx.n();

  out.push_back(implication("cor.m_pr", f.m, f.pr, "M-group that is not PR"));
  out.push_back(implication("cor.m_weakipr", f.m, f.weak_ipr, "M-group that is not weak IPR"));
  out.push_back(implication("thm.taketa_mgroup", f.m, f.taketa, "M-group that is not a Taketa-group"));
  if (f.fast_paths) {
    out.push_back(implication("prop.supersolvable", s.supersolvable, f.m, "supersolvable group that is not an M-group"));
  } else {
    std::optional<bool> both;
    if (f.m && f.ipr) both = *f.m && *f.ipr;
    out.push_back(implication("prop.supersolvable", s.supersolvable, both, "supersolvable group that is not M and IPR"));
  }
  out.push_back(implication("thm.iprtaketa", f.ipr, f.taketa, "IPR-group that is not a Taketa-group"));
  out.push_back(implication("cor.weakipr", f.ipr, f.weak_ipr, "IPR-group that is not weak IPR"));
  out.push_back(implication("thm.weakipr_taketa", f.weak_ipr, f.taketa, "weak IPR-group that is not a Taketa-group"));
  out.push_back(implication("taketa.inequality", f.taketa, s.solvable && ctx.derived_length() <= n,
                            "Taketa-group that is not solvable with dl <= |cd|"));
  out.push_back(implication("prop.dl2_ipr", s.solvable && ctx.derived_length() <= 2, f.ipr,
                            "group of derived length <= 2 that is not IPR"));
  {
    // Only meaningful for nonabelian groups: the trivial derived subgroup of
    // an abelian group counts as perfect here.
    std::optional<bool> hyp;
    if (f.pr) hyp = *f.pr && !s.abelian;
    const auto& D1 = ctx.derived_term(1);
    const bool not_perfect = ctx.derived_term(2) != D1;
    out.push_back(implication("cor.pr_not_perfect", hyp, not_perfect, "nonabelian PR-group with perfect G'"));
  }

  const auto& G = ctx.group();
  auto D = d_series(ctx);
  auto Di = [&](std::size_t i) -> const ElementSet& { return D[std::min(i, n)]; };
  auto rdl = [&](const ElementSet& A, const ElementSet& B) { return relative_derived_length(G, A, B); };
  {
    Check c;
    c.expect(D.size() == n + 1, "series has the wrong length");
    c.expect(D.front() == G.all_elements(), "D_0 is not G");
    c.expect(D[std::min<std::size_t>(1, n)] == ctx.derived_term(1), "D_1 is not G'");
    c.expect(D.back().count() == 1, "D_n is not trivial");
    for (std::size_t i = 1; i < D.size(); ++i) {
      c.expect(D[i].is_subset_of(D[i - 1]), "D_" + std::to_string(i) + " not inside D_" + std::to_string(i - 1));
      c.expect(is_normalized_by(G, D[i], G.generator_indices()), "D_" + std::to_string(i) + " not normal");
    }
    out.push_back(c.result("normalseries.d1"));
  }
  Check di1, di2, di3, d2, final_bound;
  if (s.solvable) {
    for (std::size_t i = 1; i <= n; ++i) {
      auto q = rdl(Di(i - 1), Di(i));
      di1.expect(q && *q <= 3, "dl(D_" + std::to_string(i - 1) + "/D_" + std::to_string(i) + ") = " + quotient_dl(q));
      if (q && *q == 3) {
        auto q2 = rdl(Di(i - 1), Di(i + 1));
        di2.expect(q2 && *q2 <= 4,
                   "dl(D_" + std::to_string(i - 1) + "/D_" + std::to_string(i + 1) + ") = " + quotient_dl(q2));
      }
    }
    for (std::size_t i = 0; i <= std::min<std::size_t>(3, n); ++i) {
      auto q = rdl(Di(n - i), G.identity_set());
      di3.expect(q && *q <= i, "dl(D_" + std::to_string(n - i) + ") = " + quotient_dl(q));
    }
  }
  out.push_back(di1.result("thm.di.1"));
  out.push_back(di2.result("thm.di.2"));
  out.push_back(di3.result("thm.di.3"));

  if (!f.pr) {
    out.push_back(skipped("cor.d2"));
    out.push_back(skipped("thm.final.bound"));
    return;
  }
  if (s.solvable && *f.pr) {
    auto q = rdl(G.all_elements(), Di(2));
    d2.expect(q && *q <= 2, "dl(G/D_2) = " + quotient_dl(q));
    if (n >= 6)
      final_bound.expect(ctx.derived_length() + 4 <= 2 * n,
                         "dl = " + std::to_string(ctx.derived_length()) + " with |cd| = " + std::to_string(n));
  }
  out.push_back(d2.result("cor.d2"));
  out.push_back(final_bound.result("thm.final.bound"));
}

} // namespace

ClassificationReport classify(const PermGroup& G, const ClassifyOptions& opts, std::string name) {
  ClassificationReport r;
  r.name = std::move(name);
  r.order = G.order();
  r.degree = G.degree();
  r.generators = G.generators();
  r.fast_paths = opts.fast_paths;
  r.structure = structural_predicates(G);

  PositionContext ctx(character_table(G));
  r.cd = ctx.cd();
  r.taketa_group = is_taketa_group(ctx);
  if (ctx.solvable()) {
    r.derived_length = ctx.derived_length();
    r.taketa_inequality = ctx.derived_length() <= ctx.n();
  }

  std::unique_ptr<PositionEngine> engine;
  try {
    engine = std::make_unique<PositionEngine>(ctx, SubgroupLattice(G, opts.subgroup_cap));
  } catch (const CapExceeded&) {
    r.skipped = {"m_group", "pr_group", "weak_ipr_group", "ipr_group"};
  }

  Facts f;
  f.ctx = engine ? &engine->context() : &ctx;
  f.engine = engine.get();
  f.structure = r.structure;
  f.fast_paths = opts.fast_paths;
  f.taketa = r.taketa_group;
  const auto& T = f.ctx->table();
  f.pr_w.assign(T.size(), std::nullopt);
  f.tpr_w.assign(T.size(), std::nullopt);
  f.monomial.assign(T.size(), std::nullopt);
  if (engine) {
    f.monomial = monomial_witnesses(*engine);
    bool m = true, pr = true, wipr = true;
    for (std::size_t chi = 0; chi < T.size(); ++chi) {
      if (T.degree(chi) == 1) continue;
      f.pr_w[chi] = engine->pr_witness(chi);
      f.tpr_w[chi] = engine->taketa_pr_witness(chi);
      m = m && f.monomial[chi].has_value();
      pr = pr && f.pr_w[chi].has_value();
      wipr = wipr && f.tpr_w[chi].has_value();
      if (f.monomial[chi]) r.monomial.push_back(*f.monomial[chi]);
      if (f.pr_w[chi]) r.pr.push_back(*f.pr_w[chi]);
      if (f.tpr_w[chi]) r.taketa_pr.push_back(*f.tpr_w[chi]);
    }
    r.m_group = f.m = m;
    r.pr_group = f.pr = pr;
    r.weak_ipr_group = f.weak_ipr = wipr;
    r.certificate = is_ipr_group(*engine, opts.fast_paths);
    r.ipr_group = f.ipr = r.certificate.has_value();
  }

  subgroup_statements(f, r.statements);
  group_statements(f, r.statements);
  // Report in the fixed order.
  const auto& ids = statement_ids();
  std::sort(r.statements.begin(), r.statements.end(), [&](const StatementCheck& a, const StatementCheck& b) {
    return std::find(ids.begin(), ids.end(), a.id) < std::find(ids.begin(), ids.end(), b.id);
  });
  if (r.statements.size() != ids.size()) throw InternalError("statement list is incomplete");
  return r;
}

std::vector<StatementCheck> verify_statements(const PermGroup& G, const ClassifyOptions& opts) {
  return classify(G, opts).statements;
}

} // namespace charpos
