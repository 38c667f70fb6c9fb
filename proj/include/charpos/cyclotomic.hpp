#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "charpos/rational.hpp"

namespace charpos {

/// Exact element of a cyclotomic field. Stored in the smallest field Q(zeta_n)
/// containing it, as rational coefficients over the Zumbroich basis of that
/// field, so equal values have identical representations.
class Cyclotomic {
public:
  struct Term {
    std::uint32_t exponent;
    Rational coefficient;
    friend bool operator==(const Term&, const Term&) = default;
  };

  Cyclotomic() = default;
  Cyclotomic(const Rational& r); // NOLINT
  Cyclotomic(long long n) : Cyclotomic(Rational(n)) {} // NOLINT

  /// zeta_n^k.
  static Cyclotomic root_of_unity(std::size_t n, long long k = 1);
  /// sum_j coeffs[j] * zeta_n^j, with n = coeffs.size().
  static Cyclotomic from_powers(std::span<const Rational> coeffs);
  static Cyclotomic from_powers(std::span<const long long> coeffs);
  /// Inverse of to_string().
  static Cyclotomic parse(std::string_view text);

  /// Smallest n with the value in Q(zeta_n); 1 for rationals.
  std::size_t conductor() const noexcept { return n_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_rational() const noexcept { return n_ == 1; }
  /// The rational value; throws if not rational.
  Rational rational() const;
  /// Rational integer value if there is one.
  std::optional<long long> to_integer() const;

  Cyclotomic conj() const { return galois(-1); }
  /// Image under zeta_n -> zeta_n^k; k must be coprime to the conductor.
  Cyclotomic galois(long long k) const;

  Cyclotomic operator-() const;
  friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator*(const Cyclotomic& a, const Rational& r);
  friend Cyclotomic operator*(const Rational& r, const Cyclotomic& a) { return a * r; }
  friend Cyclotomic operator/(const Cyclotomic& a, const Rational& r);
  Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
  Cyclotomic& operator-=(const Cyclotomic& o) { return *this = *this - o; }
  Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }

  /// "E(n): c0 + c1*z^1 + ..." listing nonzero basis terms; zero is "E(1): 0".
  std::string to_string() const;
  /// Floating point value, for display only.
  std::complex<double> approximate() const;
  std::size_t hash() const noexcept;

  /// Canonical value of sum_j dense[j] * zeta_n^j with n = dense.size().
  static Cyclotomic normalize(std::vector<mpq_class> dense);

private:
  std::size_t n_ = 1;
  std::vector<Term> terms_;
};

struct CyclotomicHash {
  std::size_t operator()(const Cyclotomic& c) const noexcept { return c.hash(); }
};

/// Dense accumulator for long sums such as inner products, normalizing once
/// at the end instead of after every addition.
class CyclotomicSum {
public:
  explicit CyclotomicSum(std::size_t n = 1);
  void add(const Cyclotomic& a, const Rational& scale = Rational(1));
  /// Adds scale * a * b.
  void add_product(const Cyclotomic& a, const Cyclotomic& b, const Rational& scale = Rational(1));
  Cyclotomic value() const;

private:
  void widen(std::size_t n);
  std::size_t n_;
  std::vector<mpq_class> dense_;
};

} // namespace charpos
