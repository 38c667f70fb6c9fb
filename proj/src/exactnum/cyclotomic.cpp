#include "charpos/cyclotomic.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

#include "charpos/errors.hpp"

namespace charpos {

namespace {

struct PrimePower {
  std::size_t p, k, pk;
};

std::vector<PrimePower> factor(std::size_t n) {
  std::vector<PrimePower> out;
  for (std::size_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    PrimePower f{p, 0, 1};
    while (n % p == 0) {
      n /= p;
      ++f.k;
      f.pk *= p;
    }
    out.push_back(f);
  }
  if (n > 1) out.push_back({n, 1, n});
  return out;
}

std::size_t mod(long long a, std::size_t n) {
  auto m = static_cast<long long>(n);
  return static_cast<std::size_t>(((a % m) + m) % m);
}

// Rewrites dense coefficients of Q(zeta_n) in the basis of exponents whose
// p-digit (the leading base-p digit of i mod p^k) avoids the excluded range:
// digit 1 for p = 2, digit 0 for odd p.
void convert_to_base(std::size_t n, std::vector<mpq_class>& c) {
  for (const auto& f : factor(n)) {
    const std::size_t top = f.pk / f.p;
    const std::size_t q = n / f.p;
    if (f.p == 2) {
      if (f.k < 2) continue;
      for (std::size_t i = 0; i < n; ++i) {
        if (sgn(c[i]) == 0 || (i % f.pk) / top != 1) continue;
        c[(i + q) % n] -= c[i];
        c[i] = 0;
      }
    } else {
      for (std::size_t i = 0; i < n; ++i) {
        if (sgn(c[i]) == 0 || (i % f.pk) / top != 0) continue;
        for (std::size_t j = 1; j < f.p; ++j) c[(i + j * q) % n] -= c[i];
        c[i] = 0;
      }
    }
  }
}

// Tries to write the value in a smaller field. On success replaces (n, c)
// and returns true. Expects c in basis form.
bool reduce_once(std::size_t& n, std::vector<mpq_class>& c) {
  for (const auto& f : factor(n)) {
    const auto p = f.p;
    if (f.k >= 2) {
      bool all_divisible = true;
      for (std::size_t i = 0; i < n && all_divisible; ++i)
        if (sgn(c[i]) != 0 && i % p != 0) all_divisible = false;
      if (!all_divisible) continue;
      std::vector<mpq_class> out(n / p);
      for (std::size_t i = 0; i < n; i += p) out[i / p] = c[i];
      n /= p;
      c = std::move(out);
      return true;
    }
    if (p == 2) continue;
    // p exactly divides n: each class of exponents sharing i mod m must carry
    // one common coefficient.
    const std::size_t m = n / p;
    std::vector<mpq_class> out(m);
    bool ok = true;
    std::vector<bool> done(n, false);
    for (std::size_t i = 0; i < n && ok; ++i) {
      if (done[i] || sgn(c[i]) == 0) continue;
      std::size_t anchor = n;
      for (std::size_t t = 0; t < p; ++t) {
        std::size_t j = (i + t * m) % n;
        done[j] = true;
        if (j % p == 0) {
          anchor = j;
        } else if (c[j] != c[i]) {
          ok = false;
          break;
        }
      }
      if (ok) out[anchor / p] -= c[i];
    }
    if (!ok) continue;
    n = m;
    c = std::move(out);
    return true;
  }
  return false;
}

} // namespace

Cyclotomic Cyclotomic::normalize(std::vector<mpq_class> c) {
  std::size_t n = c.size();
  if (n == 0) throw PreconditionViolation("cyclotomic of conductor 0");
  for (;;) {
    if (n % 4 == 2) {
      // zeta_n = -zeta_m^((m+1)/2) with m = n/2 odd.
      const std::size_t m = n / 2;
      std::vector<mpq_class> out(m);
      for (std::size_t i = 0; i < n; ++i) {
        if (sgn(c[i]) == 0) continue;
        auto j = (i * ((m + 1) / 2)) % m;
        if (i % 2) out[j] -= c[i];
        else out[j] += c[i];
      }
      n = m;
      c = std::move(out);
    }
    if (n == 1) break;
    convert_to_base(n, c);
    if (!reduce_once(n, c)) break;
  }
  Cyclotomic out;
  for (std::size_t i = 0; i < n; ++i)
    if (sgn(c[i]) != 0) out.terms_.push_back({static_cast<std::uint32_t>(i), Rational(c[i])});
  out.n_ = out.terms_.empty() ? 1 : n;
  return out;
}

Cyclotomic::Cyclotomic(const Rational& r) {
  if (!r.is_zero()) terms_.push_back({0, r});
}

Cyclotomic Cyclotomic::root_of_unity(std::size_t n, long long k) {
  if (n == 0) throw PreconditionViolation("root of unity of order 0");
  std::vector<mpq_class> dense(n);
  dense[mod(k, n)] = 1;
  return normalize(std::move(dense));
}

Cyclotomic Cyclotomic::from_powers(std::span<const Rational> coeffs) {
  std::vector<mpq_class> dense;
  dense.reserve(coeffs.size());
  for (const auto& r : coeffs) dense.push_back(r.raw());
  return normalize(std::move(dense));
}

Cyclotomic Cyclotomic::from_powers(std::span<const long long> coeffs) {
  std::vector<mpq_class> dense;
  dense.reserve(coeffs.size());
  for (auto r : coeffs) dense.emplace_back(static_cast<long>(r));
  return normalize(std::move(dense));
}

Rational Cyclotomic::rational() const {
  if (!is_rational()) throw PreconditionViolation(to_string() + " is not rational");
  return terms_.empty() ? Rational(0) : terms_.front().coefficient;
}

std::optional<long long> Cyclotomic::to_integer() const {
  if (!is_rational()) return std::nullopt;
  return rational().to_integer();
}

Cyclotomic Cyclotomic::galois(long long k) const {
  if (n_ <= 2) return *this;
  if (std::gcd(mod(k, n_), n_) != 1) throw PreconditionViolation("galois exponent not coprime to conductor");
  std::vector<mpq_class> dense(n_);
  const auto kk = mod(k, n_);
  for (const auto& t : terms_) dense[(t.exponent * kk) % n_] += t.coefficient.raw();
  return normalize(std::move(dense));
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic out = *this;
  for (auto& t : out.terms_) t.coefficient = -t.coefficient;
  return out;
}

namespace {

Cyclotomic add_scaled(const Cyclotomic& a, const Cyclotomic& b, int sign) {
  if (a.is_rational() && b.is_rational())
    return Cyclotomic(sign > 0 ? a.rational() + b.rational() : a.rational() - b.rational());
  const std::size_t L = std::lcm(a.conductor(), b.conductor());
  std::vector<mpq_class> dense(L);
  const auto sa = L / a.conductor(), sb = L / b.conductor();
  for (const auto& t : a.terms()) dense[t.exponent * sa] += t.coefficient.raw();
  for (const auto& t : b.terms()) {
    if (sign > 0) dense[t.exponent * sb] += t.coefficient.raw();
    else dense[t.exponent * sb] -= t.coefficient.raw();
  }
  return Cyclotomic::normalize(std::move(dense));
}

} // namespace

Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  return add_scaled(a, b, 1);
}

Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) {
  if (b.is_zero()) return a;
  return add_scaled(a, b, -1);
}

Cyclotomic operator*(const Cyclotomic& a, const Rational& r) {
  if (r.is_zero() || a.is_zero()) return Cyclotomic();
  Cyclotomic out = a;
  for (auto& t : out.terms_) t.coefficient *= r;
  return out;
}

Cyclotomic operator/(const Cyclotomic& a, const Rational& r) {
  if (r.is_zero()) throw PreconditionViolation("division by zero");
  return a * (Rational(1) / r);
}

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.is_zero() || b.is_zero()) return Cyclotomic();
  if (a.is_rational()) return b * a.rational();
  if (b.is_rational()) return a * b.rational();
  const std::size_t L = std::lcm(a.n_, b.n_);
  std::vector<mpq_class> dense(L);
  const auto sa = L / a.n_, sb = L / b.n_;
  mpq_class prod;
  for (const auto& x : a.terms_)
    for (const auto& y : b.terms_) {
      prod = x.coefficient.raw() * y.coefficient.raw();
      dense[(x.exponent * sa + y.exponent * sb) % L] += prod;
    }
  return Cyclotomic::normalize(std::move(dense));
}

std::string Cyclotomic::to_string() const {
  std::string s = "E(" + std::to_string(n_) + "): ";
  if (terms_.empty()) return s + "0";
  bool first = true;
  for (const auto& t : terms_) {
    if (!first) s += " + ";
    first = false;
    s += t.coefficient.to_string();
    if (t.exponent != 0) s += "*z^" + std::to_string(t.exponent);
  }
  return s;
}

Cyclotomic Cyclotomic::parse(std::string_view text) {
  auto fail = [&] { return PreconditionViolation("bad cyclotomic \"" + std::string(text) + "\""); };
  if (text.substr(0, 2) != "E(") throw fail();
  auto close = text.find("): ");
  if (close == std::string_view::npos) throw fail();
  std::size_t n = 0;
  for (char ch : text.substr(2, close - 2)) {
    if (ch < '0' || ch > '9') throw fail();
    n = n * 10 + static_cast<std::size_t>(ch - '0');
    if (n > 1'000'000) throw fail();
  }
  if (n == 0) throw fail();
  std::vector<mpq_class> dense(n);
  auto body = text.substr(close + 3);
  while (!body.empty()) {
    auto sep = body.find(" + ");
    auto term = body.substr(0, sep);
    body = sep == std::string_view::npos ? std::string_view{} : body.substr(sep + 3);
    std::size_t exponent = 0;
    auto star = term.find("*z^");
    if (star != std::string_view::npos) {
      auto digits = term.substr(star + 3);
      if (digits.empty()) throw fail();
      for (char ch : digits) {
        if (ch < '0' || ch > '9') throw fail();
        exponent = exponent * 10 + static_cast<std::size_t>(ch - '0');
        if (exponent >= n) throw fail();
      }
      term = term.substr(0, star);
    }
    dense[exponent] += Rational::parse(term).raw();
  }
  return normalize(std::move(dense));
}

std::complex<double> Cyclotomic::approximate() const {
  std::complex<double> z{0, 0};
  for (const auto& t : terms_) {
    double angle = 2 * std::numbers::pi * t.exponent / static_cast<double>(n_);
    z += t.coefficient.raw().get_d() * std::complex<double>(std::cos(angle), std::sin(angle));
  }
  return z;
}

std::size_t Cyclotomic::hash() const noexcept {
  std::size_t h = n_ * 0x9e3779b97f4a7c15ULL;
  for (const auto& t : terms_) h = (h ^ (t.exponent + t.coefficient.hash())) * 0x100000001b3ULL;
  return h;
}

// ---------------------------------------------------------------------------

CyclotomicSum::CyclotomicSum(std::size_t n) : n_(n == 0 ? 1 : n), dense_(n_) {}

void CyclotomicSum::widen(std::size_t n) {
  if (n_ % n == 0) return;
  const std::size_t L = std::lcm(n_, n);
  std::vector<mpq_class> out(L);
  const auto s = L / n_;
  for (std::size_t i = 0; i < n_; ++i) out[i * s] = std::move(dense_[i]);
  n_ = L;
  dense_ = std::move(out);
}

void CyclotomicSum::add(const Cyclotomic& a, const Rational& scale) {
  widen(a.conductor());
  const auto s = n_ / a.conductor();
  for (const auto& t : a.terms()) dense_[t.exponent * s] += t.coefficient.raw() * scale.raw();
}

void CyclotomicSum::add_product(const Cyclotomic& a, const Cyclotomic& b, const Rational& scale) {
  if (a.is_zero() || b.is_zero() || scale.is_zero()) return;
  widen(a.conductor());
  widen(b.conductor());
  const auto sa = n_ / a.conductor(), sb = n_ / b.conductor();
  mpq_class prod;
  for (const auto& x : a.terms())
    for (const auto& y : b.terms()) {
      prod = x.coefficient.raw() * y.coefficient.raw();
      prod *= scale.raw();
      dense_[(x.exponent * sa + y.exponent * sb) % n_] += prod;
    }
}

Cyclotomic CyclotomicSum::value() const { return Cyclotomic::normalize(dense_); }

} // namespace charpos
