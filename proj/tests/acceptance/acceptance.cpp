// One PASS/FAIL line per acceptance criterion. Exit status is the number of
// failed criteria (capped at 1 for ctest).

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "classical_tables.hpp"

#include "charpos/classify.hpp"
#include "charpos/constructors.hpp"
#include "charpos/corpus.hpp"
#include "charpos/errors.hpp"
#include "charpos/positions.hpp"
#include "charpos/report_json.hpp"
#include "charpos/structure.hpp"

using namespace charpos;

namespace {

struct Verdict {
  bool pass = true;
  std::string detail;
};

// Collects failures; only the first few are printed.
struct Failures {
  std::vector<std::string> items;
  std::size_t checks = 0;
  void check(bool ok, const std::string& what) {
    ++checks;
    if (!ok) items.push_back(what);
  }
  Verdict outcome(const std::string& summary) const {
    if (items.empty()) return {true, summary + ", " + std::to_string(checks) + " checks"};
    std::string d = std::to_string(items.size()) + " failures:";
    for (std::size_t i = 0; i < items.size() && i < 5; ++i) d += " [" + items[i] + "]";
    return {false, d};
  }
};

struct CorpusGroup {
  std::string name;
  PermGroup group;
};

std::vector<CorpusGroup> corpus_groups(std::size_t max_order) {
  auto spec = default_corpus();
  std::vector<CorpusGroup> out;
  for (const auto& e : spec.entries) {
    auto G = resolve(e, spec.cap);
    if (G.order() <= max_order) out.push_back({e.name, G});
  }
  return out;
}

// Lazily computed scans shared by several criteria.
const ScanReport& scan_with(bool fast) {
  static std::optional<ScanReport> on, off;
  auto& slot = fast ? on : off;
  if (!slot) {
    auto spec = default_corpus();
    spec.fast_paths = fast;
    slot = scan(spec);
  }
  return *slot;
}

Verdict classical_fixtures() {
  Failures f;
  for (const auto& fx : fixtures::classical_tables()) f.check(fixtures::matches(fx, character_table(fx.build())), fx.name);
  return f.outcome(std::to_string(fixtures::classical_tables().size()) + " tables");
}

Verdict table_invariants() {
  Failures f;
  auto groups = corpus_groups(96);
  for (const auto& [name, G] : groups) {
    auto T = character_table(G);
    std::size_t sum = 0;
    for (auto d : T.degrees()) sum += d * d;
    f.check(sum == G.order(), name + ": sum of squared degrees");
    f.check(T.linear_count() * derived_subgroup(G).order() == G.order(), name + ": |Lin(G)| != [G:G']");
    const auto& C = T.classes();
    for (std::size_t i = 0; i < T.size(); ++i)
      for (std::size_t j = 0; j < T.size(); ++j)
        f.check(inner_product(T[i], T[j]) == Rational(i == j ? 1 : 0), name + ": row orthogonality");
    for (std::size_t a = 0; a < C.size(); ++a)
      for (std::size_t b = 0; b < C.size(); ++b) {
        CyclotomicSum s(1);
        for (std::size_t i = 0; i < T.size(); ++i) s.add_product(T[i][a], T[i][b].conj(), Rational(1));
        const auto expect = a == b ? Cyclotomic(static_cast<long long>(C.centralizer_order(a))) : Cyclotomic(0);
        f.check(s.value() == expect, name + ": column orthogonality");
      }
  }
  return f.outcome(std::to_string(groups.size()) + " groups");
}

Verdict frobenius_and_transitivity() {
  Failures f;
  auto groups = corpus_groups(48);
  std::size_t triples = 0;
  for (const auto& [name, G] : groups) {
    auto T = character_table(G);
    SubgroupLattice L(G);
    for (std::size_t cls = 0; cls < L.class_count(); ++cls) {
      const auto h = L.representative(cls);
      auto HG = L.record(h);
      auto TH = character_table(HG.subgroup);
      for (std::size_t phi = 0; phi < TH.size(); ++phi) {
        auto induced = induce(TH[phi], HG);
        for (std::size_t chi = 0; chi < T.size(); ++chi) {
          f.check(inner_product(induced, T[chi]) == inner_product(TH[phi], restrict(T[chi], HG)),
                  name + ": reciprocity");
          ++triples;
        }
      }
      // (phi^H)^G = phi^G for K <= H, K up to conjugacy in H.
      for (auto k : L.subgroups_up_to_conjugacy_in(h)) {
        if (k == h) continue;
        auto KG = L.record(k);
        auto KH = make_subgroup_record(HG.subgroup, KG.subgroup);
        auto TK = character_table(KG.subgroup);
        for (const auto& phi : TK.irreducibles())
          f.check(induce(induce(phi, KH), HG) == induce(phi, KG), name + ": transitivity");
      }
    }
  }
  return f.outcome(std::to_string(groups.size()) + " groups, " + std::to_string(triples) + " (H, phi, chi)");
}

Verdict properties() {
  Failures f;
  auto groups = corpus_groups(48);
  for (const auto& [name, G] : groups) {
    PositionEngine E(G);
    const auto& ctx = E.context();
    const auto& L = E.lattice();
    const auto& derived = ctx.derived_term(1);
    // Every subgroup, not just class representatives.
    std::vector<std::size_t> pi(L.size());
    for (std::size_t i = 0; i < L.size(); ++i) pi[i] = E.subgroup(i).posind.value;
    for (std::size_t h = 0; h < L.size(); ++h) {
      for (auto k : L.subgroups_of(h)) f.check(pi[k] >= pi[h], name + ": (1)");
      f.check((pi[h] == 1) == derived.is_subset_of(L.set(h)), name + ": (3)");
      if (L.order(h) < G.order()) f.check(pi[h] < G.order() / L.order(h), name + ": (5)");
    }
    f.check(pi[L.whole_index()] == 1, name + ": (2) posind(G,G)");
    f.check(pi[E.derived_index()] == 1, name + ": (2) posind(G,G')");
    f.check(pi[L.trivial_index()] == ctx.n(), name + ": (4) posind(G,1)");
  }
  return f.outcome(std::to_string(groups.size()) + " groups");
}

Verdict pos2() {
  Failures f;
  std::size_t chars = 0;
  for (const auto& [name, G] : corpus_groups(96)) {
    PositionEngine E(G);
    const auto& ctx = E.context();
    for (std::size_t chi = 0; chi < ctx.table().size(); ++chi) {
      if (ctx.pos(chi) != 2) continue;
      ++chars;
      const bool pr = E.pr_witness(chi).has_value();
      const bool tpr = E.taketa_pr_witness(chi).has_value();
      const bool tk = is_taketa_character(ctx, chi);
      f.check(pr == tpr && tpr == tk, name + " chi " + std::to_string(chi));
    }
  }
  return f.outcome(std::to_string(chars) + " characters of position 2");
}

Verdict theorem_suite() {
  Failures f;
  const auto& r = scan_with(true);
  for (const auto& v : r.violations) f.check(false, v.group + ": " + v.statement + ": " + v.detail);
  std::size_t applied = 0;
  for (const auto& g : r.groups) {
    f.check(g.statements.size() == statement_ids().size(), g.name + ": statement list");
    for (const auto& s : g.statements) {
      f.check(s.outcome != charpos::Outcome::skipped, g.name + ": " + s.id + " skipped");
      if (s.outcome == charpos::Outcome::holds) ++applied;
    }
  }
  f.check(r.unverified.empty(), "corpus groups skipped by caps");
  return f.outcome(std::to_string(r.groups.size()) + " groups, " + std::to_string(applied) + " statements applied");
}

Verdict reduced_scale() {
  Failures f;
  // Full search: the supersolvable shortcut would assume part of the claim.
  const auto& r = scan_with(false);
  for (const auto& g : r.m_implies_ipr.counterexamples) f.check(false, g + ": M-group but not IPR");
  for (const auto& g : r.taketa_implies_pr.counterexamples) f.check(false, g + ": Taketa-group but not PR");
  std::size_t m = 0, t = 0;
  for (const auto& g : r.groups) {
    f.check(g.m_group.has_value() && g.ipr_group.has_value() && g.pr_group.has_value(), g.name + ": skipped");
    if (g.m_group.value_or(false)) {
      ++m;
      f.check(g.ipr_group.value_or(false), g.name + ": M-group but not IPR");
    }
    if (g.taketa_group) {
      ++t;
      f.check(g.pr_group.value_or(false), g.name + ": Taketa-group but not PR");
    }
  }
  return f.outcome(std::to_string(m) + " M-groups, " + std::to_string(t) + " Taketa-groups");
}

Verdict sl23_times_c2() {
  auto G = direct_product(sl23(), cyclic(2));
  PositionEngine E(G);
  const auto& ctx = E.context();
  const auto& L = E.lattice();
  std::size_t q8_shaped = 0, hits = 0;
  std::string first;
  for (std::size_t i = 0; i < L.size(); ++i) {
    if (L.order(i) != 8) continue;
    const auto& H = L.materialize(i);
    std::size_t involutions = 0;
    for (std::size_t x = 0; x < H.order(); ++x) involutions += H.element_order(x) == 2;
    if (H.exponent() != 4 || involutions != 1) continue;
    ++q8_shaped;
    const auto& S = E.subgroup(i);
    const auto& TH = S.context.table();
    auto pos_max = [&](std::size_t psi) {
      std::size_t top = 0;
      for (std::size_t chi = 0; chi < ctx.table().size(); ++chi)
        if (S.restriction[chi][psi]) top = std::max(top, ctx.pos(chi));
      return top;
    };
    bool minimizer_pos2 = false;
    for (auto phi : S.posind.minimizers) minimizer_pos2 = minimizer_pos2 || S.context.pos(phi) == 2;
    bool linear_worse = true;
    for (std::size_t psi = 0; psi < TH.size(); ++psi)
      if (TH.degree(psi) == 1) linear_worse = linear_worse && pos_max(psi) > S.posind.value;
    if (minimizer_pos2 && linear_worse) {
      if (!hits) {
        first = "posind " + std::to_string(S.posind.value) + " on <";
        for (std::size_t g = 0; g < H.generators().size(); ++g) first += (g ? ", " : "") + H.generators()[g].to_string();
        first += ">";
      }
      ++hits;
    }
  }
  std::string summary = std::to_string(q8_shaped) + " Q8-shaped subgroups, " + std::to_string(hits) + " realize it";
  if (hits) summary += "; e.g. " + first;
  return {hits > 0, summary};
}

Verdict negative_controls() {
  Failures f;
  auto sl = classify(sl23(), {}, "SL(2,3)");
  f.check(sl.m_group == false, "SL(2,3) classified M");
  f.check(sl.pr_group == false, "SL(2,3) classified PR");
  f.check(!sl.taketa_group, "SL(2,3) classified Taketa");
  f.check(sl.structure.solvable, "SL(2,3) not solvable");
  f.check(sl.derived_length == 3u && sl.cd.size() == 3, "SL(2,3) dl or |cd| is not 3");
  auto a5 = classify(alternating(5), {}, "A5");
  f.check(a5.structure.perfect, "A5 not perfect");
  f.check(a5.pr_group == false, "A5 classified PR");
  return f.outcome("SL(2,3) and A5");
}

Verdict certificate_replay() {
  Failures f;
  std::size_t replayed = 0;
  for (bool fast : {true, false}) {
    for (const auto& g : scan_with(fast).groups) {
      if (!g.certificate) continue;
      // Through text, as a consumer of the report would see it.
      auto text = to_json(*g.certificate).dump();
      auto cert = certificate_from_json(Json::parse(text));
      auto r = replay_certificate(cert);
      f.check(r.ok, g.name + (fast ? " (fast)" : " (full)") + ": " + r.message);
      ++replayed;
    }
  }
  const auto& on = scan_with(true).groups;
  const auto& off = scan_with(false).groups;
  f.check(on.size() == off.size(), "scans cover different groups");
  for (std::size_t i = 0; i < on.size() && i < off.size(); ++i)
    f.check(on[i].ipr_group == off[i].ipr_group, on[i].name + ": fast path changes the IPR verdict");
  return f.outcome(std::to_string(replayed) + " certificates replayed");
}

} // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    std::function<Verdict()> run;
    double budget_seconds;
  };
  const std::vector<Criterion> criteria{
      {1, "character-table fixtures", classical_fixtures, 10},
      {2, "table invariants over the corpus", table_invariants, 120},
      {3, "Frobenius reciprocity and transitivity, |G| <= 48", frobenius_and_transitivity, 300},
      {4, "positional index properties (1)-(5), |G| <= 48", properties, 0},
      {5, "position-2 predicates agree", pos2, 0},
      {6, "theorem suite has no violations", theorem_suite, 0},
      {7, "M => IPR and Taketa => PR at reduced scale", reduced_scale, 0},
      {8, "SL(2,3) x C2 positional-index example", sl23_times_c2, 60},
      {9, "negative controls", negative_controls, 0},
      {10, "certificate replay and fast-path agreement", certificate_replay, 0},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    Verdict o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.budget_seconds > 0 && secs > c.budget_seconds) {
      o.pass = false;
      o.detail += "; over the " + std::to_string(static_cast<int>(c.budget_seconds)) + " s budget";
    }
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(1);
    line << (o.pass ? "PASS" : "FAIL") << " " << c.id << " " << c.title << " (" << secs << " s): " << o.detail;
    std::cout << line.str() << std::endl;
    failed += o.pass ? 0 : 1;
  }
  return failed ? 1 : 0;
}
