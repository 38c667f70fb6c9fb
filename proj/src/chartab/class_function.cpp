#include "charpos/class_function.hpp"

#include "charpos/character_table.hpp"
#include "charpos/class_table.hpp"
#include "charpos/errors.hpp"

namespace charpos {

ClassFunction::ClassFunction(PermGroup G, std::vector<Cyclotomic> values)
    : group_(std::move(G)), values_(std::move(values)) {
  if (values_.size() != group_.classes().size())
    throw PreconditionViolation("class function has " + std::to_string(values_.size()) +
                                " values for " + std::to_string(group_.classes().size()) +
                                " classes");
}

ClassFunction ClassFunction::trivial(const PermGroup& G) {
  return ClassFunction(G, std::vector<Cyclotomic>(G.classes().size(), Cyclotomic(1)));
}

ClassFunction ClassFunction::regular(const PermGroup& G) {
  std::vector<Cyclotomic> v(G.classes().size(), Cyclotomic(0));
  v[0] = Cyclotomic(static_cast<long long>(G.order()));
  return ClassFunction(G, std::move(v));
}

ClassFunction ClassFunction::permutation_character(const PermGroup& G) {
  const auto& C = G.classes();
  std::vector<Cyclotomic> v;
  v.reserve(C.size());
  for (std::size_t c = 0; c < C.size(); ++c) {
    const auto& g = G.element(C[c].representative);
    long long fixed = 0;
    for (std::size_t x = 0; x < g.degree(); ++x)
      if (g[x] == x) ++fixed;
    v.emplace_back(fixed);
  }
  return ClassFunction(G, std::move(v));
}

std::size_t ClassFunction::degree() const {
  auto d = degree_value().to_integer();
  if (!d || *d <= 0) throw NotACharacter("degree " + degree_value().to_string() + " is not a positive integer");
  return static_cast<std::size_t>(*d);
}

ClassFunction ClassFunction::conj() const {
  std::vector<Cyclotomic> v;
  v.reserve(values_.size());
  for (const auto& x : values_) v.push_back(x.conj());
  return ClassFunction(group_, std::move(v));
}

ClassFunction ClassFunction::operator-() const {
  std::vector<Cyclotomic> v;
  v.reserve(values_.size());
  for (const auto& x : values_) v.push_back(-x);
  return ClassFunction(group_, std::move(v));
}

void require_same_group(const PermGroup& a, const PermGroup& b) {
  if (!a.same_object(b) && !a.equals(b)) throw GroupMismatch("class functions live on different groups");
}

namespace {

template <class Op>
ClassFunction pointwise(const ClassFunction& a, const ClassFunction& b, Op op) {
  require_same_group(a.group(), b.group());
  std::vector<Cyclotomic> v;
  v.reserve(a.size());
  for (std::size_t c = 0; c < a.size(); ++c) v.push_back(op(a[c], b[c]));
  return ClassFunction(a.group(), std::move(v));
}

} // namespace

ClassFunction operator+(const ClassFunction& a, const ClassFunction& b) {
  return pointwise(a, b, [](const Cyclotomic& x, const Cyclotomic& y) { return x + y; });
}

ClassFunction operator-(const ClassFunction& a, const ClassFunction& b) {
  return pointwise(a, b, [](const Cyclotomic& x, const Cyclotomic& y) { return x - y; });
}

ClassFunction operator*(const ClassFunction& a, const ClassFunction& b) {
  return pointwise(a, b, [](const Cyclotomic& x, const Cyclotomic& y) { return x * y; });
}

ClassFunction operator*(const Rational& r, const ClassFunction& a) {
  std::vector<Cyclotomic> v;
  v.reserve(a.size());
  for (const auto& x : a.values()) v.push_back(x * r);
  return ClassFunction(a.group(), std::move(v));
}

bool operator==(const ClassFunction& a, const ClassFunction& b) {
  if (!a.group().same_object(b.group()) && !a.group().equals(b.group())) return false;
  return a.values() == b.values();
}

std::string ClassFunction::to_string() const {
  std::string s;
  for (std::size_t c = 0; c < values_.size(); ++c) {
    if (c) s += '\t';
    s += values_[c].to_string();
  }
  return s;
}

Rational inner_product(const ClassFunction& a, const ClassFunction& b) {
  require_same_group(a.group(), b.group());
  const auto& C = a.group().classes();
  CyclotomicSum acc(C.exponent());
  for (std::size_t c = 0; c < a.size(); ++c)
    acc.add_product(a[c], b[c].conj(), Rational(static_cast<long long>(C[c].size)));
  auto v = acc.value();
  if (!v.is_rational()) throw NotACharacter("inner product " + v.to_string() + " is not rational");
  return v.rational() / Rational(static_cast<long long>(C.group_order()));
}

ClassFunction restrict(const ClassFunction& chi, const SubgroupRecord& H) {
  require_same_group(chi.group(), H.parent);
  if (H.fusion.size() != H.subgroup.classes().size())
    throw PreconditionViolation("subgroup record has no class fusion");
  std::vector<Cyclotomic> v;
  v.reserve(H.fusion.size());
  for (auto c : H.fusion) v.push_back(chi[c]);
  return ClassFunction(H.subgroup, std::move(v));
}

ClassFunction induce(const ClassFunction& phi, const SubgroupRecord& H) {
  require_same_group(phi.group(), H.subgroup);
  const auto& HC = H.subgroup.classes();
  const auto& GC = H.parent.classes();
  if (H.fusion.size() != HC.size()) throw PreconditionViolation("subgroup record has no class fusion");
  std::vector<Cyclotomic> v(GC.size());
  for (std::size_t d = 0; d < HC.size(); ++d) {
    const auto c = H.fusion[d];
    Rational scale(static_cast<long long>(GC.centralizer_order(c)),
                   static_cast<long long>(HC.centralizer_order(d)));
    v[c] += phi[d] * scale;
  }
  return ClassFunction(H.parent, std::move(v));
}

std::vector<std::pair<std::size_t, std::size_t>> constituents(const ClassFunction& theta,
                                                              const CharacterTable& T) {
  require_same_group(theta.group(), T.group());
  std::vector<std::pair<std::size_t, std::size_t>> out;
  std::vector<Cyclotomic> rebuilt(theta.size());
  for (std::size_t i = 0; i < T.size(); ++i) {
    auto m = inner_product(theta, T[i]);
    auto mi = m.to_integer();
    if (!mi || *mi < 0)
      throw NotACharacter("multiplicity " + m.to_string() + " of irreducible " + std::to_string(i));
    if (*mi == 0) continue;
    out.emplace_back(i, static_cast<std::size_t>(*mi));
    for (std::size_t c = 0; c < theta.size(); ++c) rebuilt[c] += T[i][c] * m;
  }
  if (rebuilt != theta.values()) throw NotACharacter("class function is not a combination of irreducibles");
  return out;
}

ElementSet kernel_set(const ClassFunction& chi) {
  const auto& G = chi.group();
  const auto& C = G.classes();
  std::vector<std::size_t> cls;
  for (std::size_t c = 0; c < chi.size(); ++c)
    if (chi[c] == chi.degree_value()) cls.push_back(c);
  auto set = C.union_of(cls);
  if (generate(G, generating_set(G, set)) != set)
    throw InternalError("kernel of " + chi.to_string() + " is not a subgroup");
  return set;
}

PermGroup kernel(const ClassFunction& chi) { return chi.group().subgroup(kernel_set(chi)); }

} // namespace charpos
