#pragma once

#include <cstddef>
#include <cstdint>
#include <span>

#include "charpos/cyclotomic.hpp"

namespace charpos {

/// Prime field F_p together with a fixed primitive e-th root of unity z.
struct ModularField {
  std::uint64_t p = 0;
  std::uint64_t z = 0;
  std::size_t e = 1;

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const { return (a + b) % p; }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return (a + p - b) % p; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return (a * b) % p; }
  std::uint64_t pow(std::uint64_t a, std::uint64_t k) const;
  std::uint64_t inv(std::uint64_t a) const;
  /// Residue of an integer (possibly negative).
  std::uint64_t from_integer(long long v) const;
  /// Residue of a rational whose denominator is prime to p.
  std::uint64_t from_rational(const Rational& r) const;
  /// Image of a cyclotomic under zeta_e -> z; the conductor must divide e.
  std::uint64_t reduce(const Cyclotomic& c) const;
  /// Image of zeta_n^k for n dividing e.
  std::uint64_t root(std::size_t n, long long k) const;
  /// Signed representative in (-p/2, p/2].
  long long centered(std::uint64_t a) const;
};

bool is_prime(std::uint64_t n);

/// Smallest prime p = 1 mod e with p > 2 sqrt(group_order), and the smallest
/// residue of multiplicative order exactly e.
ModularField choose_dixon_prime(std::size_t group_order, std::size_t e);

/// Recovers sum_j m_j zeta_o^j from residues[k] = value(g^k) mod p, k < o,
/// where o = residues.size() divides field.e. Every multiplicity must land in
/// [0, max_multiplicity]; otherwise InternalError.
Cyclotomic lift_value(std::span<const std::uint64_t> residues, const ModularField& field,
                      std::size_t max_multiplicity);

} // namespace charpos
