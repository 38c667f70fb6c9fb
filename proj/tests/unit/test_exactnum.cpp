#include "doctest.h"

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "charpos/cyclotomic.hpp"
#include "charpos/errors.hpp"
#include "charpos/modular.hpp"
#include "charpos/rational.hpp"

using namespace charpos;

namespace {

Cyclotomic E(std::size_t n, long long k = 1) { return Cyclotomic::root_of_unity(n, k); }

std::complex<double> evaluate_dense(const std::vector<long long>& c) {
  std::complex<double> z{0, 0};
  const double n = static_cast<double>(c.size());
  for (std::size_t j = 0; j < c.size(); ++j)
    z += static_cast<double>(c[j]) * std::polar(1.0, 2 * std::numbers::pi * j / n);
  return z;
}

std::vector<long long> random_dense(std::mt19937& rng, std::size_t n) {
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::vector<long long> c(n);
  for (auto& x : c) x = coeff(rng);
  return c;
}

Cyclotomic random_value(std::mt19937& rng) {
  static const std::size_t conductors[] = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 15, 16, 20, 24, 30};
  std::uniform_int_distribution<std::size_t> pick(0, std::size(conductors) - 1);
  auto c = random_dense(rng, conductors[pick(rng)]);
  return Cyclotomic::from_powers(std::span<const long long>(c));
}

} // namespace

TEST_CASE("rational basics") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(1, -2).to_string() == "-1/2");
  CHECK(Rational::parse("-6/4") == Rational(-3, 2));
  CHECK(Rational::parse("7").to_integer() == 7);
  CHECK_FALSE(Rational(1, 3).to_integer().has_value());
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK_THROWS_AS(Rational(1, 0), PreconditionViolation);
  CHECK_THROWS_AS(Rational::parse("1/0"), PreconditionViolation);
  CHECK_THROWS_AS(Rational::parse("x"), PreconditionViolation);
  CHECK_THROWS_AS(Rational(1) / Rational(0), PreconditionViolation);
}

TEST_CASE("cyclotomic examples") {
  CHECK(E(4) * E(4) == Cyclotomic(-1));
  CHECK(E(3) + E(3, 2) == Cyclotomic(-1));
  CHECK(E(5).conj() == E(5, 4));
  CHECK((E(4) * E(4)).is_rational());
  CHECK(E(2) == Cyclotomic(-1));
  CHECK(E(1) == Cyclotomic(1));
  CHECK(E(6) == -E(3, 2));
  CHECK(E(8) * E(8) == E(4));
  CHECK((E(8) + E(8, 7)) * (E(8) + E(8, 7)) == Cyclotomic(2));
  // sqrt(-3) = zeta3 - zeta3^2
  auto s = E(3) - E(3, 2);
  CHECK(s * s == Cyclotomic(-3));
  // Gauss sum for 5: (zeta5 + zeta5^4) - (zeta5^2 + zeta5^3) squared is 5
  auto g = E(5) + E(5, 4) - E(5, 2) - E(5, 3);
  CHECK(g * g == Cyclotomic(5));
  CHECK(g.conductor() == 5);
  CHECK((E(12) + E(12, 11)).conductor() == 12);
  CHECK((E(12, 2) + E(12, 10)) == Cyclotomic(1));
}

TEST_CASE("sum of all n-th roots is zero") {
  for (std::size_t n = 2; n <= 40; ++n) {
    Cyclotomic s;
    for (std::size_t j = 0; j < n; ++j) s += E(n, static_cast<long long>(j));
    CHECK_MESSAGE(s.is_zero(), "n = " << n);
    CHECK(s.conductor() == 1);
  }
}

TEST_CASE("conductor is minimal") {
  for (std::size_t n = 1; n <= 60; ++n) {
    const std::size_t expected = (n % 4 == 2) ? n / 2 : n;
    CHECK_MESSAGE(E(n).conductor() == expected, "n = " << n);
  }
  // Values in a subfield embedded in a larger one reduce back down.
  CHECK((E(20, 4) * E(20, 8)).conductor() == 5);
  CHECK((E(9, 3) + E(9, 6)) == Cyclotomic(-1));
}

TEST_CASE("canonical form matches numerical value and embedding") {
  std::mt19937 rng(12345);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + rng() % 36;
    auto c = random_dense(rng, n);
    auto x = Cyclotomic::from_powers(std::span<const long long>(c));
    CHECK(std::abs(x.approximate() - evaluate_dense(c)) < 1e-9);
    // Same value written in Q(zeta_{kn}).
    const std::size_t k = 1 + rng() % 4;
    std::vector<long long> wide(n * k, 0);
    for (std::size_t j = 0; j < n; ++j) wide[j * k] = c[j];
    CHECK(Cyclotomic::from_powers(std::span<const long long>(wide)) == x);
    // Same value through an arithmetic detour.
    auto y = random_value(rng);
    CHECK((x + y) - y == x);
    CHECK(x.is_zero() == (std::abs(evaluate_dense(c)) < 1e-9));
  }
}

TEST_CASE("equal values along different routes") {
  std::mt19937 rng(777);
  for (int trial = 0; trial < 1000; ++trial) {
    auto a = random_value(rng), b = random_value(rng), c = random_value(rng);
    CHECK((a + b) * c == a * c + b * c);
    CHECK(a * b == b * a);
    if (trial % 4 == 0) CHECK((a * b) * c == a * (b * c));
    CHECK((a + b) + c == a + (b + c));
    CHECK(a.conj().conj() == a);
    CHECK((a * b).conj() == a.conj() * b.conj());
    CHECK(a - a == Cyclotomic());
  }
}

TEST_CASE("conj on rationals is the identity") {
  for (long long v : {-5LL, 0LL, 1LL, 12LL}) CHECK(Cyclotomic(v).conj() == Cyclotomic(v));
  CHECK(Cyclotomic(Rational(3, 7)).conj() == Cyclotomic(Rational(3, 7)));
}

TEST_CASE("serialization round trip") {
  CHECK(Cyclotomic().to_string() == "E(1): 0");
  CHECK(Cyclotomic(-3).to_string() == "E(1): -3");
  CHECK(E(3).to_string() == "E(3): 1*z^1");
  std::mt19937 rng(99);
  for (int trial = 0; trial < 300; ++trial) {
    auto x = random_value(rng) * Rational(1, 1 + static_cast<long long>(rng() % 5));
    auto s = x.to_string();
    auto y = Cyclotomic::parse(s);
    CHECK(y == x);
    CHECK(y.to_string() == s);
  }
  CHECK_THROWS_AS(Cyclotomic::parse("E(3): 1*z^3"), PreconditionViolation);
  CHECK_THROWS_AS(Cyclotomic::parse("3"), PreconditionViolation);
  CHECK_THROWS_AS(Cyclotomic::parse("E(0): 1"), PreconditionViolation);
}

TEST_CASE("galois action") {
  CHECK(E(7).galois(2) == E(7, 2));
  CHECK(E(8).galois(3) == E(8, 3));
  auto b7 = E(7) + E(7, 2) + E(7, 4);
  CHECK(b7.galois(2) == b7);
  CHECK(b7.galois(3) == b7.conj());
  CHECK_THROWS_AS(E(6).galois(3), PreconditionViolation);
}

TEST_CASE("accumulator agrees with direct arithmetic") {
  std::mt19937 rng(4242);
  for (int trial = 0; trial < 100; ++trial) {
    CyclotomicSum acc;
    Cyclotomic direct;
    for (int i = 0; i < 5; ++i) {
      auto a = random_value(rng), b = random_value(rng);
      Rational s(1 + static_cast<long long>(rng() % 4), 1 + static_cast<long long>(rng() % 3));
      acc.add_product(a, b, s);
      direct += a * b * s;
    }
    CHECK(acc.value() == direct);
  }
}

TEST_CASE("choose_dixon_prime") {
  auto f = choose_dixon_prime(6, 6);
  CHECK(f.p == 7);
  CHECK(f.z == 3);
  CHECK(choose_dixon_prime(8, 4).p == 13);
  CHECK(choose_dixon_prime(8, 4).z == 5);
  CHECK(choose_dixon_prime(1, 1).p == 3);
  CHECK(choose_dixon_prime(1, 1).z == 1);
  // Independent brute-force check of the selection rule.
  for (std::size_t order : {2u, 12u, 24u, 60u, 120u, 168u, 1000u}) {
    for (std::size_t e = 1; e <= order; ++e) {
      if (order % e) continue;
      auto g = choose_dixon_prime(order, e);
      std::uint64_t expected = 2;
      while (!(expected % e == 1 % e && expected * expected > 4 * order && is_prime(expected))) ++expected;
      CHECK(g.p == expected);
      CHECK(g.p % e == 1 % e);
      // z has order exactly e and is the smallest such residue.
      std::uint64_t x = 1;
      std::size_t ord = 0;
      do { x = x * g.z % g.p; ++ord; } while (x != 1);
      CHECK(ord == e);
      for (std::uint64_t w = 1; w < g.z; ++w) {
        std::uint64_t y = 1;
        std::size_t o = 0;
        do { y = y * w % g.p; ++o; } while (y != 1);
        CHECK(o != e);
      }
    }
  }
  CHECK_THROWS_AS(choose_dixon_prime(6, 4), PreconditionViolation);
}

TEST_CASE("lift_value examples") {
  auto f = choose_dixon_prime(6, 6);
  std::vector<std::uint64_t> constant(6, 4);
  CHECK(lift_value(constant, f, 4) == Cyclotomic(4));
  // 1 + zeta_2 = 0 on an element of order 2: residues (2, 0).
  std::vector<std::uint64_t> two{2, 0};
  CHECK(lift_value(two, f, 2) == Cyclotomic(0));
  // zeta_3 at k = 0, 1, 2 maps to 1, w, w^2 with w = z^2.
  auto w = f.root(3, 1);
  std::vector<std::uint64_t> z3{1, w, f.mul(w, w)};
  CHECK(lift_value(z3, f, 1) == E(3));
  std::vector<std::uint64_t> bad{5, 0};
  CHECK_THROWS_AS(lift_value(bad, f, 1), InternalError);
}

TEST_CASE("lift inverts reduction exhaustively for e <= 6, d <= 4") {
  for (std::size_t e = 1; e <= 6; ++e) {
    auto f = choose_dixon_prime(16 * e, e);
    const std::size_t d = 4;
    std::vector<long long> m(e, 0);
    std::size_t count = 0;
    for (;;) {
      std::vector<std::uint64_t> residues(e);
      for (std::size_t k = 0; k < e; ++k) {
        std::uint64_t acc = 0;
        for (std::size_t j = 0; j < e; ++j)
          acc = f.add(acc, f.mul(static_cast<std::uint64_t>(m[j]), f.root(e, static_cast<long long>(j * k))));
        residues[k] = acc;
      }
      auto expected = Cyclotomic::from_powers(std::span<const long long>(m));
      REQUIRE(residues[1 % e] == f.reduce(expected));
      REQUIRE(lift_value(residues, f, d) == expected);
      ++count;
      std::size_t pos = 0;
      while (pos < e && m[pos] == static_cast<long long>(d)) m[pos++] = 0;
      if (pos == e) break;
      ++m[pos];
    }
    CHECK(count == static_cast<std::size_t>(std::pow(d + 1, e)));
  }
}

TEST_CASE("modular reduction respects arithmetic") {
  auto f = choose_dixon_prime(24 * 5, 24);
  std::mt19937 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    auto a = random_value(rng), b = random_value(rng);
    if (24 % a.conductor() || 24 % b.conductor()) continue;
    CHECK(f.reduce(a + b) == f.add(f.reduce(a), f.reduce(b)));
    CHECK(f.reduce(a * b) == f.mul(f.reduce(a), f.reduce(b)));
  }
}
