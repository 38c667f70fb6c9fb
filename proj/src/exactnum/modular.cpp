#include "charpos/modular.hpp"

#include <vector>

#include "charpos/errors.hpp"

namespace charpos {

std::uint64_t ModularField::pow(std::uint64_t a, std::uint64_t k) const {
  std::uint64_t r = 1 % p;
  a %= p;
  while (k) {
    if (k & 1) r = mul(r, a);
    a = mul(a, a);
    k >>= 1;
  }
  return r;
}

std::uint64_t ModularField::inv(std::uint64_t a) const {
  if (a % p == 0) throw PreconditionViolation("inverse of zero mod " + std::to_string(p));
  return pow(a, p - 2);
}

std::uint64_t ModularField::from_integer(long long v) const {
  auto m = static_cast<long long>(p);
  return static_cast<std::uint64_t>(((v % m) + m) % m);
}

std::uint64_t ModularField::from_rational(const Rational& r) const {
  mpz_class P(static_cast<unsigned long>(p));
  mpz_class num = r.numerator() % P;
  mpz_class den = r.denominator() % P;
  if (num < 0) num += P;
  if (den == 0) throw PreconditionViolation("denominator divisible by " + std::to_string(p));
  return mul(num.get_ui(), inv(den.get_ui()));
}

std::uint64_t ModularField::root(std::size_t n, long long k) const {
  if (n == 0 || e % n != 0)
    throw PreconditionViolation("root order " + std::to_string(n) + " does not divide " + std::to_string(e));
  auto w = pow(z, e / n);
  auto nn = static_cast<long long>(n);
  return pow(w, static_cast<std::uint64_t>(((k % nn) + nn) % nn));
}

std::uint64_t ModularField::reduce(const Cyclotomic& c) const {
  std::uint64_t acc = 0;
  for (const auto& t : c.terms())
    acc = add(acc, mul(from_rational(t.coefficient), root(c.conductor(), t.exponent)));
  return acc;
}

long long ModularField::centered(std::uint64_t a) const {
  a %= p;
  return a > p / 2 ? static_cast<long long>(a) - static_cast<long long>(p)
                   : static_cast<long long>(a);
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

ModularField choose_dixon_prime(std::size_t group_order, std::size_t e) {
  if (e == 0 || group_order == 0 || group_order % e != 0)
    throw PreconditionViolation("exponent must divide the group order");
  ModularField f;
  f.e = e;
  const std::uint64_t bound = 4 * static_cast<std::uint64_t>(group_order); // p^2 > 4|G|
  for (std::uint64_t p = e + 1;; p += e) {
    if (p * p <= bound || !is_prime(p)) continue;
    f.p = p;
    break;
  }
  std::vector<std::size_t> prime_divisors;
  {
    std::size_t m = e;
    for (std::size_t q = 2; q * q <= m; ++q)
      if (m % q == 0) {
        prime_divisors.push_back(q);
        while (m % q == 0) m /= q;
      }
    if (m > 1) prime_divisors.push_back(m);
  }
  for (std::uint64_t z = 1; z < f.p; ++z) {
    if (f.pow(z, e) != 1) continue;
    bool primitive = true;
    for (auto q : prime_divisors)
      if (f.pow(z, e / q) == 1) primitive = false;
    if (primitive) {
      f.z = z;
      return f;
    }
  }
  throw InternalError("no primitive root of order " + std::to_string(e) + " mod " + std::to_string(f.p));
}

Cyclotomic lift_value(std::span<const std::uint64_t> residues, const ModularField& field,
                      std::size_t max_multiplicity) {
  const std::size_t o = residues.size();
  if (o == 0 || field.e % o != 0)
    throw PreconditionViolation("residue count must divide the field exponent");
  const auto w_inv = field.inv(field.root(o, 1));
  const auto o_inv = field.inv(o % field.p);
  std::vector<long long> mult(o);
  for (std::size_t j = 0; j < o; ++j) {
    const auto step = field.pow(w_inv, j);
    std::uint64_t acc = 0, w = 1;
    for (std::size_t k = 0; k < o; ++k) {
      acc = field.add(acc, field.mul(residues[k] % field.p, w));
      w = field.mul(w, step);
    }
    auto m = field.mul(acc, o_inv);
    if (m > max_multiplicity)
      throw InternalError("lifted multiplicity " + std::to_string(m) + " outside [0, " +
                          std::to_string(max_multiplicity) + "] mod " + std::to_string(field.p));
    mult[j] = static_cast<long long>(m);
  }
  return Cyclotomic::from_powers(std::span<const long long>(mult));
}

} // namespace charpos
