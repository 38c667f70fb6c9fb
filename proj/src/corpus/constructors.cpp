#include "charpos/constructors.hpp"

#include <array>
#include <cctype>
#include <functional>
#include <variant>
#include <vector>

#include "charpos/errors.hpp"

namespace charpos {

namespace {

using point = Permutation::point_type;

Permutation from_map(std::size_t degree, const std::function<std::size_t(std::size_t)>& f) {
  std::vector<point> images(degree);
  for (std::size_t x = 0; x < degree; ++x) images[x] = static_cast<point>(f(x));
  return Permutation::from_images(std::move(images));
}

void require(bool ok, const std::string& msg) {
  if (!ok) throw PreconditionViolation(msg);
}

} // namespace

PermGroup cyclic(std::size_t n, std::size_t cap) {
  require(n >= 1, "cyclic(n) needs n >= 1");
  if (n == 1) return PermGroup::trivial(1);
  return PermGroup::from_generators(n, {from_map(n, [n](std::size_t x) { return (x + 1) % n; })},
                                    cap);
}

PermGroup dihedral(std::size_t order, std::size_t cap) {
  require(order >= 2 && order % 2 == 0, "dihedral(order) needs an even order >= 2");
  const auto n = order / 2;
  if (n == 1) return cyclic(2, cap);
  if (n == 2)
    return PermGroup::from_generators(
        4, {Permutation::parse("(1 2)(3 4)", 4), Permutation::parse("(1 3)(2 4)", 4)}, cap);
  auto rotation = from_map(n, [n](std::size_t x) { return (x + 1) % n; });
  auto reflection = from_map(n, [n](std::size_t x) { return (n - x) % n; });
  return PermGroup::from_generators(n, {rotation, reflection}, cap);
}

PermGroup generalized_quaternion(std::size_t order, std::size_t cap) {
  require(order >= 8 && order % 4 == 0, "generalized_quaternion(order) needs order 4n with n >= 2");
  const auto n = order / 4;
  const auto m = 2 * n; // order of a
  // Element a^i b^j has index i + m*j. Multiplication uses b a = a^-1 b and
  // b^2 = a^n.
  auto mul = [m, n](std::size_t x, std::size_t y) {
    std::size_t i = x % m, j = x / m, k = y % m, l = y / m;
    std::size_t e = j ? (i + m - k) % m : (i + k) % m;
    std::size_t t = j + l;
    if (t == 2) {
      e = (e + n) % m;
      t = 0;
    }
    return e + m * t;
  };
  auto right_mult = [&](std::size_t g) {
    return from_map(order, [&](std::size_t x) { return mul(x, g); });
  };
  return PermGroup::from_generators(order, {right_mult(1), right_mult(m)}, cap);
}

PermGroup symmetric(std::size_t n, std::size_t cap) {
  require(n >= 1, "symmetric(n) needs n >= 1");
  if (n == 1) return PermGroup::trivial(1);
  if (n == 2) return cyclic(2, cap);
  return PermGroup::from_generators(
      n,
      {Permutation::from_cycles(n, {{1, 2}}),
       from_map(n, [n](std::size_t x) { return (x + 1) % n; })},
      cap);
}

PermGroup alternating(std::size_t n, std::size_t cap) {
  require(n >= 1, "alternating(n) needs n >= 1");
  if (n < 3) return PermGroup::trivial(n);
  std::vector<Permutation> gens;
  for (std::size_t k = 3; k <= n; ++k) gens.push_back(Permutation::from_cycles(n, {{1, 2, k}}));
  return PermGroup::from_generators(n, std::move(gens), cap);
}

PermGroup elementary_abelian(std::size_t p, std::size_t k, std::size_t cap) {
  bool prime = p >= 2;
  for (std::size_t d = 2; d * d <= p; ++d)
    if (p % d == 0) prime = false;
  require(prime, "elementary_abelian(p,k) needs p prime");
  require(k >= 1, "elementary_abelian(p,k) needs k >= 1");
  const auto degree = p * k;
  std::vector<Permutation> gens;
  for (std::size_t b = 0; b < k; ++b)
    gens.push_back(from_map(degree, [p, b](std::size_t x) {
      return x / p == b ? b * p + (x % p + 1) % p : x;
    }));
  return PermGroup::from_generators(degree, std::move(gens), cap);
}

PermGroup direct_product(const PermGroup& a, const PermGroup& b, std::size_t cap) {
  const auto da = a.degree(), db = b.degree(), degree = da + db;
  std::vector<Permutation> gens;
  for (const auto& g : a.generators())
    gens.push_back(from_map(degree, [&](std::size_t x) { return x < da ? g[x] : x; }));
  for (const auto& g : b.generators())
    gens.push_back(
        from_map(degree, [&](std::size_t x) { return x < da ? x : da + g[x - da]; }));
  return PermGroup::from_generators(degree, std::move(gens), cap);
}

PermGroup sl23(std::size_t cap) {
  // Points 1..8 are the nonzero vectors (x, y) of F_3^2 in lexicographic order.
  std::vector<std::pair<int, int>> vectors;
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y)
      if (x || y) vectors.emplace_back(x, y);
  auto index = [&](int x, int y) {
    for (std::size_t i = 0; i < vectors.size(); ++i)
      if (vectors[i] == std::pair{x, y}) return i;
    throw InternalError("sl23: vector not found");
  };
  auto matrix = [&](int a, int b, int c, int d) {
    return from_map(8, [&](std::size_t i) {
      auto [x, y] = vectors[i];
      return index((a * x + b * y) % 3, (c * x + d * y) % 3);
    });
  };
  return PermGroup::from_generators(8, {matrix(1, 1, 0, 1), matrix(1, 0, 1, 1)}, cap);
}

PermGroup frobenius21(std::size_t cap) {
  auto translate = from_map(7, [](std::size_t x) { return (x + 1) % 7; });
  auto scale = from_map(7, [](std::size_t x) { return (2 * x) % 7; });
  return PermGroup::from_generators(7, {translate, scale}, cap);
}

PermGroup extraspecial27(std::size_t cap) {
  // Heisenberg group over F_3: (a,b,c)(a',b',c') = (a+a', b+b', c+c'+ab').
  auto decode = [](std::size_t x) { return std::array<std::size_t, 3>{x % 3, (x / 3) % 3, x / 9}; };
  auto encode = [](std::size_t a, std::size_t b, std::size_t c) { return a + 3 * b + 9 * c; };
  auto right_mult = [&](std::size_t g) {
    auto [a2, b2, c2] = decode(g);
    return from_map(27, [&](std::size_t x) {
      auto [a, b, c] = decode(x);
      return encode((a + a2) % 3, (b + b2) % 3, (c + c2 + a * b2) % 3);
    });
  };
  return PermGroup::from_generators(27, {right_mult(encode(1, 0, 0)), right_mult(encode(0, 1, 0))},
                                    cap);
}

// ---------------------------------------------------------------------------
// Constructor expressions.

namespace {

class ExpressionParser {
public:
  ExpressionParser(std::string_view text, std::size_t cap) : text_(text), cap_(cap) {}

  PermGroup parse() {
    auto g = group();
    skip();
    if (pos_ != text_.size()) fail("trailing characters");
    return g;
  }

private:
  using Arg = std::variant<std::size_t, PermGroup>;

  [[noreturn]] void fail(const std::string& msg) const {
    throw PreconditionViolation("group expression \"" + std::string(text_) + "\": " + msg);
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string identifier() {
    skip();
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    if (start == pos_) fail("expected a constructor name");
    return std::string(text_.substr(start, pos_ - start));
  }

  Arg argument() {
    skip();
    if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      std::size_t v = 0;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        v = v * 10 + static_cast<std::size_t>(text_[pos_++] - '0');
        if (v > 1'000'000) fail("parameter out of range");
      }
      return v;
    }
    return group();
  }

  PermGroup group() {
    auto name = identifier();
    std::vector<Arg> args;
    skip();
    if (pos_ < text_.size() && text_[pos_] == '(') {
      ++pos_;
      skip();
      if (pos_ < text_.size() && text_[pos_] == ')') {
        ++pos_;
      } else {
        for (;;) {
          args.push_back(argument());
          skip();
          if (pos_ < text_.size() && text_[pos_] == ',') {
            ++pos_;
            continue;
          }
          if (pos_ < text_.size() && text_[pos_] == ')') {
            ++pos_;
            break;
          }
          fail("expected ',' or ')'");
        }
      }
    }
    return build(name, args);
  }

  std::size_t integer(const std::vector<Arg>& args, std::size_t i, const std::string& name) const {
    if (i >= args.size() || !std::holds_alternative<std::size_t>(args[i]))
      fail(name + ": expected an integer parameter");
    return std::get<std::size_t>(args[i]);
  }
  const PermGroup& grp(const std::vector<Arg>& args, std::size_t i, const std::string& name) const {
    if (i >= args.size() || !std::holds_alternative<PermGroup>(args[i]))
      fail(name + ": expected a group parameter");
    return std::get<PermGroup>(args[i]);
  }
  void arity(const std::vector<Arg>& args, std::size_t n, const std::string& name) const {
    if (args.size() != n) fail(name + " takes " + std::to_string(n) + " parameter(s)");
  }

  PermGroup build(const std::string& name, const std::vector<Arg>& args) const {
    if (name == "cyclic") return arity(args, 1, name), cyclic(integer(args, 0, name), cap_);
    if (name == "dihedral") return arity(args, 1, name), dihedral(integer(args, 0, name), cap_);
    if (name == "generalized_quaternion")
      return arity(args, 1, name), generalized_quaternion(integer(args, 0, name), cap_);
    if (name == "symmetric") return arity(args, 1, name), symmetric(integer(args, 0, name), cap_);
    if (name == "alternating") return arity(args, 1, name), alternating(integer(args, 0, name), cap_);
    if (name == "elementary_abelian")
      return arity(args, 2, name),
             elementary_abelian(integer(args, 0, name), integer(args, 1, name), cap_);
    if (name == "direct_product")
      return arity(args, 2, name), direct_product(grp(args, 0, name), grp(args, 1, name), cap_);
    if (name == "sl23") return arity(args, 0, name), sl23(cap_);
    if (name == "frobenius21") return arity(args, 0, name), frobenius21(cap_);
    if (name == "extraspecial27") return arity(args, 0, name), extraspecial27(cap_);
    fail("unknown constructor '" + name + "'");
  }

  std::string_view text_;
  std::size_t cap_;
  std::size_t pos_ = 0;
};

} // namespace

PermGroup construct(std::string_view expression, std::size_t cap) {
  return ExpressionParser(expression, cap).parse();
}

} // namespace charpos
