#include "doctest.h"

#include "charpos/constructors.hpp"
#include "charpos/errors.hpp"
#include "charpos/positions.hpp"
#include "charpos/structure.hpp"

using namespace charpos;

namespace {

SubgroupRecord sub(const PermGroup& G, const std::string& gens) {
  return make_subgroup_record(G, PermGroup::from_generators(G.degree(), parse_permutation_list(gens, G.degree())));
}

std::size_t row_of_degree(const CharacterTable& T, std::size_t d) {
  for (std::size_t i = 0; i < T.size(); ++i)
    if (T.degree(i) == d) return i;
  return T.size();
}

std::size_t first_of_order(const SubgroupLattice& L, std::size_t order) {
  for (std::size_t i = 0; i < L.size(); ++i)
    if (L.order(i) == order) return i;
  return L.size();
}

} // namespace

TEST_CASE("pos") {
  PositionContext S3(character_table(symmetric(3)));
  CHECK(S3.cd() == std::vector<std::size_t>{1, 2});
  CHECK(S3.pos(0) == 1);
  CHECK(S3.pos(1) == 1);
  CHECK(S3.pos(2) == 2);
  PositionContext SL(character_table(sl23()));
  CHECK(SL.pos(row_of_degree(SL.table(), 3)) == 3);
  for (std::size_t i = 0; i < SL.table().size(); ++i) CHECK(SL.pos(i) <= SL.table().degree(i));
}

TEST_CASE("pos_extrema") {
  auto G = symmetric(3);
  PositionContext ctx(character_table(G));
  for (std::size_t i = 0; i < ctx.table().size(); ++i) {
    auto e = pos_extrema(ctx, ctx.table()[i]);
    CHECK(e.min == ctx.pos(i));
    CHECK(e.max == ctx.pos(i));
  }
  auto reg = pos_extrema(ctx, ClassFunction::regular(G));
  CHECK(reg.min == 1);
  CHECK(reg.max == ctx.n());
  auto A3 = sub(G, "(1 2 3)");
  auto e = pos_extrema(ctx, induce(ClassFunction::trivial(A3.subgroup), A3));
  CHECK(e.min == 1);
  CHECK(e.max == 1);
  CHECK_THROWS_AS(pos_extrema(ctx, ClassFunction::trivial(G) - ClassFunction::trivial(G)), NotACharacter);
}

TEST_CASE("posind examples") {
  for (const auto& G : {symmetric(3), symmetric(4), sl23(), alternating(5), generalized_quaternion(8)}) {
    PositionContext ctx(character_table(G));
    CHECK(posind(ctx, make_subgroup_record(G, G)).value == 1);
    CHECK(posind(ctx, make_subgroup_record(G, derived_subgroup(G))).value == 1);
    CHECK(posind(ctx, make_subgroup_record(G, PermGroup::trivial(G.degree()))).value == ctx.n());
  }
  auto S3 = symmetric(3);
  PositionContext ctx(character_table(S3));
  auto r = posind(ctx, sub(S3, "(1 2)"));
  CHECK(r.value == 2);
  CHECK(r.minimizers.size() == 2);
}

TEST_CASE("is_prt") {
  auto S3 = symmetric(3);
  PositionContext ctx(character_table(S3));
  auto A3 = sub(S3, "(1 2 3)");
  auto w = is_prt(ctx, A3, 2);
  REQUIRE(w.has_value());
  CHECK(w->pos_phi == 1);
  CHECK(w->posind_value == 1);
  CHECK(w->pos_chi == 2);
  CHECK(w->pos_phi + w->posind_value <= w->pos_chi);
  CHECK_FALSE(is_prt(ctx, A3, 0).has_value());
  CHECK_FALSE(is_prt(ctx, A3, 1).has_value());
  CHECK_THROWS_AS(is_prt(ctx, make_subgroup_record(S3, S3), 2), PreconditionViolation);

  auto SL = sl23();
  PositionContext sctx(character_table(SL));
  auto Q8 = make_subgroup_record(SL, derived_subgroup(SL));
  CHECK(Q8.subgroup.order() == 8);
  for (std::size_t i = 0; i < sctx.table().size(); ++i)
    if (sctx.table().degree(i) == 2 && kernel_set(sctx.table()[i]).count() == 1)
      CHECK_FALSE(is_prt(sctx, Q8, i).has_value());
}

TEST_CASE("is_prt_with") {
  auto S3 = symmetric(3);
  PositionContext ctx(character_table(S3));
  auto A3 = sub(S3, "(1 2 3)");
  CHECK(is_prt_with(ctx, A3, 2, 1));
  CHECK(is_prt_with(ctx, A3, 2, 2));
  CHECK_FALSE(is_prt_with(ctx, A3, 2, 0)); // trivial is not a constituent

  auto Q = generalized_quaternion(8);
  PositionContext q(character_table(Q));
  SubgroupLattice L(Q);
  auto Z = L.record(first_of_order(L, 2));
  auto chi = row_of_degree(q.table(), 2);
  auto TZ = character_table(Z.subgroup);
  // The degree-2 character restricts to twice the nontrivial linear character of the center.
  CHECK(is_prt_with(q, Z, chi, 1));
  CHECK_FALSE(is_prt_with(q, Z, chi, 0));
}

TEST_CASE("character predicates on SL(2,3) and Q8") {
  PositionEngine sl(sl23());
  const auto& T = sl.context().table();
  for (std::size_t i = 0; i < T.size(); ++i) {
    if (T.degree(i) != 2) continue;
    CHECK_FALSE(sl.pr_witness(i).has_value());
    CHECK_FALSE(is_taketa_character(sl.context(), i));
    CHECK_FALSE(sl.taketa_pr_witness(i).has_value());
    auto c = sl.clifford_obstruction(i);
    CHECK(c.phi_degree == 2);
    CHECK(c.t == 1);
    CHECK(c.divides);
    CHECK(c.pos_phi >= sl.context().pos(i));
  }
  PositionEngine q(generalized_quaternion(8));
  auto chi = row_of_degree(q.context().table(), 2);
  auto w = q.pr_witness(chi);
  REQUIRE(w.has_value());
  CHECK(w->lattice_index == q.derived_index());
  CHECK(is_taketa_character(q.context(), chi));
  CHECK(q.taketa_pr_witness(chi).has_value());
  for (std::size_t i = 0; i < q.context().table().size(); ++i)
    if (q.context().pos(i) == 1) CHECK(is_taketa_character(q.context(), i));
}

TEST_CASE("clifford obstruction precondition") {
  PositionEngine s3(symmetric(3));
  CHECK_THROWS_AS(s3.clifford_obstruction(2), PreconditionViolation);
  CHECK_THROWS_AS(s3.clifford_obstruction(0), PreconditionViolation);
}

TEST_CASE("search order starts with G' then decreasing order") {
  PositionEngine e(symmetric(4));
  const auto& order = e.search_order();
  REQUIRE_FALSE(order.empty());
  CHECK(order.front() == e.derived_index());
  for (std::size_t i = 2; i < order.size(); ++i) CHECK(e.lattice().order(order[i - 1]) >= e.lattice().order(order[i]));
  for (auto i : order) CHECK(e.lattice().order(i) < 24);
}

TEST_CASE("d_series") {
  {
    auto G = symmetric(4);
    PositionContext ctx(character_table(G));
    auto D = d_series(ctx);
    std::vector<std::size_t> orders;
    for (const auto& d : D) orders.push_back(d.count());
    CHECK(orders == std::vector<std::size_t>{24, 12, 4, 1});
  }
  for (const auto& G : {symmetric(3), sl23(), alternating(5), frobenius21(), direct_product(sl23(), cyclic(2)),
                        extraspecial27(), dihedral(16)}) {
    PositionContext ctx(character_table(G));
    auto D = d_series(ctx);
    CHECK(D.size() == ctx.n() + 1);
    CHECK(D[1] == ctx.derived_term(1));
    CHECK(D.back().count() == 1);
    for (std::size_t i = 1; i < D.size(); ++i) {
      CHECK(D[i].is_subset_of(D[i - 1]));
      CHECK(is_normalized_by(G, D[i], G.generator_indices()));
    }
  }
}

TEST_CASE("posind properties and lemmas on small groups") {
  for (const auto& G : {symmetric(4), sl23(), dihedral(8), frobenius21(), direct_product(symmetric(3), cyclic(2))}) {
    PositionEngine e(G);
    const auto& ctx = e.context();
    const auto& L = e.lattice();
    std::vector<std::size_t> pi(L.size());
    for (std::size_t i = 0; i < L.size(); ++i) pi[i] = e.subgroup(L.representative(L.class_of(i))).posind.value;
    for (std::size_t h = 0; h < L.size(); ++h) {
      // (3) posind = 1 iff G' <= H
      CHECK((pi[h] == 1) == ctx.derived_term(1).is_subset_of(L.set(h)));
      // (5) H < G implies posind < [G:H]
      if (L.order(h) < G.order()) CHECK(pi[h] < G.order() / L.order(h));
      // (1) K <= H implies posind(K) >= posind(H)
      for (auto k : L.subgroups_of(h)) CHECK(pi[k] >= pi[h]);
    }
    // xgr1 and taketa2 on G'
    const auto& D = e.subgroup(e.derived_index());
    if (D.proper) {
      for (std::size_t chi = 0; chi < ctx.table().size(); ++chi) {
        if (ctx.pos(chi) == 1) continue;
        for (std::size_t phi = 0; phi < D.context.table().size(); ++phi)
          if (D.restriction[chi][phi])
            CHECK(is_prt_with(ctx, D, chi, phi) == (D.context.pos(phi) < ctx.pos(chi)));
        if (ctx.derived_term(2).is_subset_of(ctx.kernel(chi))) CHECK(is_prt(ctx, D, chi).has_value());
      }
    }
    // pos2 equivalence
    for (std::size_t chi = 0; chi < ctx.table().size(); ++chi) {
      if (ctx.pos(chi) != 2) continue;
      bool pr = e.pr_witness(chi).has_value();
      bool tpr = e.taketa_pr_witness(chi).has_value();
      bool tk = is_taketa_character(ctx, chi);
      CHECK(pr == tpr);
      CHECK(pr == tk);
    }
  }
}
