#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace charpos {

/// Exact rational number backed by GMP. Always in lowest terms with a
/// positive denominator.
class Rational {
public:
  Rational() = default;
  Rational(long long n) : value_(static_cast<long>(n)) {} // NOLINT: implicit by design of arithmetic
  Rational(long long num, long long den);
  explicit Rational(mpq_class q) : value_(std::move(q)) { value_.canonicalize(); }

  /// Accepts "n" or "n/d" with an optional leading '-'.
  static Rational parse(std::string_view text);

  const mpq_class& raw() const noexcept { return value_; }
  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }

  bool is_zero() const noexcept { return sgn(value_) == 0; }
  bool is_integer() const noexcept { return value_.get_den() == 1; }
  int sign() const noexcept { return sgn(value_); }
  /// The value as a machine integer when it is an integer that fits.
  std::optional<long long> to_integer() const;

  std::string to_string() const { return value_.get_str(); }

  Rational operator-() const { return Rational(mpq_class(-value_), raw_tag{}); }
  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  std::size_t hash() const noexcept;

private:
  struct raw_tag {};
  Rational(mpq_class q, raw_tag) : value_(std::move(q)) {}

  mpq_class value_{0};
};

} // namespace charpos
