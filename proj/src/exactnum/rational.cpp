#include "charpos/rational.hpp"

#include <cctype>
#include <functional>

#include "charpos/errors.hpp"

namespace charpos {

Rational::Rational(long long num, long long den) {
  if (den == 0) throw PreconditionViolation("rational with zero denominator");
  value_ = mpq_class(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  auto valid_int = [](std::string_view s, bool allow_sign) {
    std::size_t i = 0;
    if (allow_sign && i < s.size() && s[i] == '-') ++i;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
  };
  auto slash = text.find('/');
  auto num = text.substr(0, slash);
  if (!valid_int(num, true)) throw PreconditionViolation("bad rational \"" + std::string(text) + "\"");
  mpq_class q;
  if (slash == std::string_view::npos) {
    q = mpq_class(mpz_class(std::string(num)));
  } else {
    auto den = text.substr(slash + 1);
    if (!valid_int(den, false)) throw PreconditionViolation("bad rational \"" + std::string(text) + "\"");
    mpz_class d(std::string{den});
    if (d == 0) throw PreconditionViolation("rational with zero denominator");
    q = mpq_class(mpz_class(std::string(num)), d);
  }
  return Rational(std::move(q));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw PreconditionViolation("division by zero");
  value_ /= o.value_;
  return *this;
}

std::optional<long long> Rational::to_integer() const {
  if (!is_integer() || !value_.get_num().fits_slong_p()) return std::nullopt;
  return value_.get_num().get_si();
}

std::size_t Rational::hash() const noexcept {
  auto h1 = std::hash<long>{}(mpz_get_si(value_.get_num_mpz_t()));
  auto h2 = std::hash<long>{}(mpz_get_si(value_.get_den_mpz_t()));
  return h1 ^ (h2 * 0x9e3779b97f4a7c15ULL);
}

} // namespace charpos
