#include "doctest.h"

#include <chrono>

#include "charpos/character_table.hpp"
#include "charpos/constructors.hpp"
#include "charpos/errors.hpp"
#include "charpos/structure.hpp"
#include "charpos/subgroups.hpp"
#include "../support/classical_tables.hpp"

using namespace charpos;

namespace {

SubgroupRecord sub(const PermGroup& G, const std::string& gens) {
  return make_subgroup_record(G, PermGroup::from_generators(G.degree(), parse_permutation_list(gens, G.degree())));
}

// Index of the row equal to the given values, or T.size().
std::size_t find_row(const CharacterTable& T, const std::vector<Cyclotomic>& values) {
  for (std::size_t i = 0; i < T.size(); ++i)
    if (T[i].values() == values) return i;
  return T.size();
}

std::size_t degree_row(const CharacterTable& T, std::size_t d) {
  for (std::size_t i = 0; i < T.size(); ++i)
    if (T.degree(i) == d) return i;
  return T.size();
}

} // namespace

TEST_CASE("computed tables match the classical fixtures") {
  for (const auto& fx : fixtures::classical_tables()) {
    auto T = character_table(fx.build());
    CHECK_MESSAGE(fixtures::matches(fx, T), fx.name);
  }
}

TEST_CASE("matcher rejects a wrong fixture") {
  auto fx = fixtures::classical_tables()[0];
  fx.rows[2][2] = Cyclotomic(1);
  CHECK_FALSE(fixtures::matches(fx, character_table(symmetric(3))));
}

TEST_CASE("table examples") {
  auto S3 = character_table(symmetric(3));
  CHECK(S3.degrees() == std::vector<std::size_t>{1, 1, 2});
  CHECK(S3.cd() == std::vector<std::size_t>{1, 2});

  auto C4 = character_table(cyclic(4));
  CHECK(C4.linear_count() == 4);
  for (const auto& chi : C4.irreducibles())
    for (const auto& v : chi.values()) {
      bool unit = v == Cyclotomic(1) || v == Cyclotomic(-1) || v == Cyclotomic::root_of_unity(4) ||
                  v == Cyclotomic::root_of_unity(4, 3);
      CHECK(unit);
    }

  auto SL = character_table(sl23());
  CHECK(SL.degrees() == std::vector<std::size_t>{1, 1, 1, 2, 2, 2, 3});
  CHECK(SL.cd() == std::vector<std::size_t>{1, 2, 3});

  // Trivial character first, degrees ascending.
  for (const auto& G : {symmetric(4), alternating(5), dihedral(8), sl23(), frobenius21(), cyclic(6)}) {
    auto T = character_table(G);
    CHECK(T[0] == ClassFunction::trivial(G));
    CHECK(std::is_sorted(T.degrees().begin(), T.degrees().end()));
  }
}

TEST_CASE("trivial group and tiny groups") {
  auto T1 = character_table(PermGroup::trivial(1));
  CHECK(T1.size() == 1);
  CHECK(T1.degrees() == std::vector<std::size_t>{1});
  auto T2 = character_table(cyclic(2));
  CHECK(T2.size() == 2);
}

TEST_CASE("inner products") {
  auto G = symmetric(3);
  auto T = character_table(G);
  for (const auto& chi : T.irreducibles()) CHECK(inner_product(chi, chi) == Rational(1));
  auto A3 = sub(G, "(1 2 3)");
  auto ind = induce(ClassFunction::trivial(A3.subgroup), A3);
  CHECK(inner_product(ind, ClassFunction::trivial(G)) == Rational(1));
  auto reg = ClassFunction::regular(G);
  CHECK(inner_product(reg, T[degree_row(T, 2)]) == Rational(2));
  CHECK_THROWS_AS(inner_product(reg, ClassFunction::trivial(cyclic(3))), GroupMismatch);
}

TEST_CASE("restriction") {
  auto G = symmetric(3);
  auto T = character_table(G);
  auto A3 = sub(G, "(1 2 3)");
  auto TA = character_table(A3.subgroup);
  CHECK(restrict(ClassFunction::trivial(G), A3) == ClassFunction::trivial(A3.subgroup));
  auto chi2 = T[degree_row(T, 2)];
  auto r = restrict(chi2, A3);
  CHECK(r == TA[1] + TA[2]);
  auto whole = make_subgroup_record(G, G);
  for (const auto& chi : T.irreducibles()) CHECK(restrict(chi, whole) == chi);
  CHECK_THROWS_AS(restrict(ClassFunction::trivial(cyclic(3)), A3), GroupMismatch);
}

TEST_CASE("induction") {
  auto G = symmetric(3);
  auto T = character_table(G);
  auto A3 = sub(G, "(1 2 3)");
  auto TA = character_table(A3.subgroup);
  auto ind1 = induce(ClassFunction::trivial(A3.subgroup), A3);
  CHECK(ind1.degree() == 2);
  CHECK(ind1 == T[0] + T[1]);
  CHECK(induce(TA[1], A3) == T[2]);
  CHECK(induce(TA[2], A3) == T[2]);

  auto C2 = sub(G, "(1 2)");
  auto ind2 = induce(ClassFunction::trivial(C2.subgroup), C2);
  CHECK(ind2.degree() == 3);
  CHECK(ind2 == ClassFunction::permutation_character(G));
  auto cons = constituents(ind2, T);
  CHECK(cons == std::vector<std::pair<std::size_t, std::size_t>>{{0, 1}, {2, 1}});
}

TEST_CASE("constituents") {
  auto G = symmetric(3);
  auto T = character_table(G);
  for (std::size_t i = 0; i < T.size(); ++i)
    CHECK(constituents(T[i], T) == std::vector<std::pair<std::size_t, std::size_t>>{{i, 1}});
  auto reg = constituents(ClassFunction::regular(G), T);
  CHECK(reg == std::vector<std::pair<std::size_t, std::size_t>>{{0, 1}, {1, 1}, {2, 2}});
  CHECK_THROWS_AS(constituents(T[0] - T[1], T), NotACharacter);
  CHECK_THROWS_AS(constituents(Rational(1, 2) * T[0], T), NotACharacter);
}

TEST_CASE("kernels") {
  auto G = symmetric(3);
  auto T = character_table(G);
  CHECK(kernel(T[0]).order() == 6);
  auto sign = T[1];
  auto K = kernel(sign);
  CHECK(K.order() == 3);
  CHECK(K.equals(alternating(3)));
  auto Q = generalized_quaternion(8);
  auto TQ = character_table(Q);
  CHECK(kernel(TQ[degree_row(TQ, 2)]).order() == 1);

  for (const auto& H : {symmetric(4), sl23(), alternating(5), frobenius21(), direct_product(symmetric(3), cyclic(2))}) {
    auto TH = character_table(H);
    ElementSet meet = H.all_elements();
    for (const auto& chi : TH.irreducibles()) {
      auto k = kernel_set(chi);
      CHECK(is_normalized_by(H, k, H.generator_indices()));
      meet &= k;
    }
    CHECK(meet.count() == 1);
  }
}

TEST_CASE("verify_table") {
  for (const auto& G : {symmetric(3), symmetric(4), sl23(), generalized_quaternion(8), frobenius21(), alternating(5)}) {
    auto rep = verify_table(character_table(G));
    CHECK(rep.ok());
    CHECK(rep.kernel_samples > 0);
    for (const auto& v : rep.violations) MESSAGE(v);
  }
  // One perturbed value.
  auto G = symmetric(4);
  auto T = character_table(G);
  auto rows = T.irreducibles();
  auto vals = rows[3].values();
  vals[1] = vals[1] + Cyclotomic(1);
  rows[3] = ClassFunction(G, vals);
  CHECK_THROWS_AS(CharacterTable::from_rows(G, rows, true), InternalError);
  auto bad = verify_table(CharacterTable::from_rows(G, rows, false));
  CHECK_FALSE(bad.ok());
  bool orth = false;
  for (const auto& v : bad.violations)
    if (v.find("inner product") != std::string::npos || v.find("orthogonality") != std::string::npos) orth = true;
  CHECK(orth);
}

TEST_CASE("kernel of an induced character is the core of the kernel") {
  // S3, C2 = <(1 2)>, sign character of C2.
  auto G = symmetric(3);
  auto C2 = sub(G, "(1 2)");
  auto TC = character_table(C2.subgroup);
  auto sgn = TC[1];
  auto K = kernel_set(induce(sgn, C2));
  auto ker_phi = G.embed(C2.subgroup.subgroup(kernel_set(sgn)));
  ElementSet meet = G.all_elements();
  for (std::size_t g = 0; g < G.order(); ++g) meet &= conjugate_set(G, ker_phi, g);
  CHECK(meet == K);
  CHECK(K.count() == 1);
}

TEST_CASE("Frobenius reciprocity and transitivity") {
  for (const auto& G : {symmetric(4), sl23(), dihedral(8), frobenius21(), alternating(4),
                        direct_product(symmetric(3), cyclic(2))}) {
    auto T = character_table(G);
    SubgroupLattice L(G);
    for (std::size_t cls = 0; cls < L.class_count(); ++cls) {
      auto h = L.representative(cls);
      auto rec = L.record(h);
      auto TH = character_table(rec.subgroup);
      for (const auto& phi : TH.irreducibles()) {
        auto ind = induce(phi, rec);
        for (const auto& chi : T.irreducibles())
          CHECK(inner_product(ind, chi) == inner_product(phi, restrict(chi, rec)));
      }
      // Transitivity through every subgroup of h.
      for (auto kk : L.subgroups_up_to_conjugacy_in(h)) {
        auto K = L.materialize(kk);
        auto KinH = make_subgroup_record(rec.subgroup, K);
        auto KinG = L.record(kk);
        auto TK = character_table(K);
        for (const auto& psi : TK.irreducibles())
          CHECK(induce(induce(psi, KinH), rec) == induce(psi, KinG));
      }
    }
  }
}

TEST_CASE("Clifford shape on normal subgroups") {
  for (const auto& G : {symmetric(4), sl23(), frobenius21(), direct_product(sl23(), cyclic(2))}) {
    auto T = character_table(G);
    SubgroupLattice L(G);
    for (std::size_t i = 0; i < L.size(); ++i) {
      if (!L.is_normal(i)) continue;
      auto rec = L.record(i);
      auto TN = character_table(rec.subgroup);
      for (const auto& chi : T.irreducibles()) {
        auto cons = constituents(restrict(chi, rec), TN);
        REQUIRE_FALSE(cons.empty());
        for (const auto& [idx, m] : cons) {
          CHECK(TN.degree(idx) == TN.degree(cons[0].first));
          CHECK(m == cons[0].second);
        }
      }
    }
  }
}

TEST_CASE("text round trip") {
  for (const auto& G : {symmetric(4), alternating(5), sl23(), frobenius21(), cyclic(6), PermGroup::trivial(2)}) {
    auto T = character_table(G);
    auto text = T.to_text();
    auto U = CharacterTable::from_text(G, text);
    CHECK(U.to_text() == text);
    for (std::size_t i = 0; i < T.size(); ++i) CHECK(U[i] == T[i]);
  }
  auto S3 = symmetric(3);
  auto text = character_table(S3).to_text();
  CHECK(text.substr(0, text.find('\n')) == "order 6 classes 3 exponent 6");
  CHECK_THROWS_AS(CharacterTable::from_text(cyclic(6), text), GroupMismatch);
  auto broken = text;
  broken.replace(broken.rfind("E(1)"), 4, "E(x)");
  CHECK_THROWS_AS(CharacterTable::from_text(S3, broken), ParseError);
  CHECK_THROWS_AS(CharacterTable::from_text(S3, "order 6"), ParseError);
}

TEST_CASE("every corpus-sized table is verified quickly") {
  auto start = std::chrono::steady_clock::now();
  for (const auto& expr : {"symmetric(4)", "direct_product(sl23(),cyclic(4))", "direct_product(symmetric(4),cyclic(4))",
                           "elementary_abelian(2,5)", "generalized_quaternion(96)", "direct_product(alternating(4),cyclic(8))"}) {
    auto G = construct(expr);
    auto T = character_table(G);
    TableReport rep = verify_table(T, VerifyOptions{0, 1024});
    CHECK_MESSAGE(rep.ok(), expr);
  }
  auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  MESSAGE("order-96 tables took " << secs << " s");
}
