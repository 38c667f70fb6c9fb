#include "charpos/character_table.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>

#include "charpos/errors.hpp"
#include "charpos/modular.hpp"
#include "charpos/subgroups.hpp"

namespace charpos {

struct CharacterTable::Data {
  PermGroup group;
  std::vector<ClassFunction> rows;
  std::vector<std::size_t> degrees;
  std::size_t linear = 0;
};

const PermGroup& CharacterTable::group() const noexcept { return d_->group; }
const ClassTable& CharacterTable::classes() const { return d_->group.classes(); }
std::size_t CharacterTable::size() const noexcept { return d_->rows.size(); }
const ClassFunction& CharacterTable::operator[](std::size_t i) const noexcept { return d_->rows[i]; }
const std::vector<ClassFunction>& CharacterTable::irreducibles() const noexcept { return d_->rows; }
std::size_t CharacterTable::degree(std::size_t i) const noexcept { return d_->degrees[i]; }
const std::vector<std::size_t>& CharacterTable::degrees() const noexcept { return d_->degrees; }
std::size_t CharacterTable::linear_count() const noexcept { return d_->linear; }

std::vector<std::size_t> CharacterTable::cd() const {
  std::vector<std::size_t> out = d_->degrees;
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

// Degree sum and row orthogonality; returns a description of the first
// failure or an empty string.
std::string check_rows(const PermGroup& G, const std::vector<ClassFunction>& rows) {
  const auto& C = G.classes();
  if (rows.size() != C.size())
    return std::to_string(rows.size()) + " rows for " + std::to_string(C.size()) + " classes";
  Rational sum(0);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    require_same_group(G, rows[i].group());
    auto d = rows[i].degree_value().to_integer();
    if (!d || *d <= 0) return "row " + std::to_string(i) + " has degree " + rows[i].degree_value().to_string();
    sum += Rational(*d) * Rational(*d);
  }
  if (sum != Rational(static_cast<long long>(G.order())))
    return "sum of squared degrees is " + sum.to_string() + ", not " + std::to_string(G.order());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = i; j < rows.size(); ++j) {
      CyclotomicSum acc(C.exponent());
      for (std::size_t c = 0; c < C.size(); ++c)
        acc.add_product(rows[i][c], rows[j][c].conj(), Rational(static_cast<long long>(C[c].size)));
      auto v = acc.value();
      Cyclotomic expected(i == j ? static_cast<long long>(G.order()) : 0LL);
      if (v != expected)
        return "rows " + std::to_string(i) + " and " + std::to_string(j) + " have inner product " +
               (v / Rational(static_cast<long long>(G.order()))).to_string();
    }
  return {};
}

// --- linear algebra over F_p ------------------------------------------------

using Vec = std::vector<std::uint64_t>;
using Mat = std::vector<Vec>;

// Row-reduces in place; drops zero rows. Returns pivot columns.
std::vector<std::size_t> rref(Mat& rows, const ModularField& F) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t pr = r;
    while (pr < rows.size() && rows[pr][c] == 0) ++pr;
    if (pr == rows.size()) continue;
    std::swap(rows[r], rows[pr]);
    const auto inv = F.inv(rows[r][c]);
    for (auto& x : rows[r]) x = F.mul(x, inv);
    for (std::size_t o = 0; o < rows.size(); ++o) {
      if (o == r || rows[o][c] == 0) continue;
      const auto f = rows[o][c];
      for (std::size_t t = 0; t < cols; ++t) rows[o][t] = F.sub(rows[o][t], F.mul(f, rows[r][t]));
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

// Basis of {u : M u = 0} for square M.
Mat nullspace(Mat M, const ModularField& F) {
  const std::size_t n = M.size();
  auto pivots = rref(M, F);
  std::vector<bool> is_pivot(n, false);
  for (auto c : pivots) is_pivot[c] = true;
  Mat out;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Vec u(n, 0);
    u[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) u[pivots[r]] = F.sub(0, M[r][free]);
    out.push_back(std::move(u));
  }
  return out;
}

// Characteristic polynomial (coefficients, constant term first) via reduction
// to Hessenberg form.
Vec charpoly(Mat H, const ModularField& F) {
  const std::size_t n = H.size();
  for (std::size_t j = 0; j + 2 < n; ++j) {
    std::size_t i = j + 1;
    while (i < n && H[i][j] == 0) ++i;
    if (i == n) continue;
    if (i != j + 1) {
      std::swap(H[i], H[j + 1]);
      for (auto& row : H) std::swap(row[i], row[j + 1]);
    }
    const auto inv = F.inv(H[j + 1][j]);
    for (std::size_t k = j + 2; k < n; ++k) {
      const auto u = F.mul(H[k][j], inv);
      if (u == 0) continue;
      for (std::size_t t = 0; t < n; ++t) H[k][t] = F.sub(H[k][t], F.mul(u, H[j + 1][t]));
      for (std::size_t t = 0; t < n; ++t) H[t][j + 1] = F.add(H[t][j + 1], F.mul(u, H[t][k]));
    }
  }
  // p_m = (x - h_mm) p_{m-1} - sum_{i<m} h_im (prod_{t=i+1..m} h_{t,t-1}) p_{i-1}  (1-based)
  std::vector<Vec> P(n + 1);
  P[0] = {1};
  for (std::size_t m = 1; m <= n; ++m) {
    Vec next(m + 1, 0);
    const auto& prev = P[m - 1];
    for (std::size_t t = 0; t < prev.size(); ++t) {
      next[t + 1] = F.add(next[t + 1], prev[t]);
      next[t] = F.sub(next[t], F.mul(H[m - 1][m - 1], prev[t]));
    }
    std::uint64_t prod = 1;
    for (std::size_t i = m - 1; i >= 1; --i) {
      prod = F.mul(prod, H[i][i - 1]);
      if (prod == 0) break;
      const auto coef = F.mul(H[i - 1][m - 1], prod);
      for (std::size_t t = 0; t < P[i - 1].size(); ++t)
        next[t] = F.sub(next[t], F.mul(coef, P[i - 1][t]));
    }
    P[m] = std::move(next);
  }
  return P[n];
}

std::uint64_t evaluate(const Vec& poly, std::uint64_t x, const ModularField& F) {
  std::uint64_t acc = 0;
  for (std::size_t t = poly.size(); t-- > 0;) acc = F.add(F.mul(acc, x), poly[t]);
  return acc;
}

struct Space {
  Mat basis; // RREF rows
  std::vector<std::size_t> pivots;
};

std::vector<ClassFunction> dixon_schneider(const PermGroup& G) {
  const auto& C = G.classes();
  const std::size_t k = C.size();
  const auto F = choose_dixon_prime(G.order(), C.exponent());

  // Class matrices on demand: (A_j)[a][l] = #{x in C_j : x^-1 z in C_a}, z = rep of C_l.
  auto class_matrix = [&](std::size_t j) {
    Mat A(k, Vec(k, 0));
    for (std::size_t l = 0; l < k; ++l) {
      const auto z = C[l].representative;
      for (auto x : C[j].members) {
        auto a = C.class_of(G.product(G.inverse(x), z));
        A[a][l] = F.add(A[a][l], 1);
      }
    }
    return A;
  };

  std::vector<Space> spaces;
  {
    Space all;
    for (std::size_t i = 0; i < k; ++i) {
      Vec v(k, 0);
      v[i] = 1;
      all.basis.push_back(std::move(v));
      all.pivots.push_back(i);
    }
    spaces.push_back(std::move(all));
  }

  auto done = [&] {
    return std::all_of(spaces.begin(), spaces.end(), [](const Space& s) { return s.basis.size() == 1; });
  };

  for (std::size_t j = 1; j < k && !done(); ++j) {
    const Mat A = class_matrix(j);
    std::vector<Space> next;
    for (auto& V : spaces) {
      const std::size_t d = V.basis.size();
      if (d == 1) {
        next.push_back(std::move(V));
        continue;
      }
      // Restriction to V in the RREF basis: coordinates are read at pivots.
      Mat R(d, Vec(d, 0));
      for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t t = 0; t < d; ++t) {
          const auto row = V.pivots[t];
          std::uint64_t acc = 0;
          for (std::size_t l = 0; l < k; ++l)
            if (A[row][l] && V.basis[i][l]) acc = F.add(acc, F.mul(A[row][l], V.basis[i][l]));
          R[t][i] = acc;
        }
      }
      auto poly = charpoly(R, F);
      std::vector<std::uint64_t> roots;
      for (std::uint64_t x = 0; x < F.p; ++x)
        if (evaluate(poly, x, F) == 0) roots.push_back(x);
      if (roots.size() == 1) {
        next.push_back(std::move(V));
        continue;
      }
      std::size_t total = 0;
      for (auto lambda : roots) {
        Mat M = R;
        for (std::size_t t = 0; t < d; ++t) M[t][t] = F.sub(M[t][t], lambda);
        Mat W;
        for (const auto& u : nullspace(std::move(M), F)) {
          Vec w(k, 0);
          for (std::size_t i = 0; i < d; ++i)
            if (u[i])
              for (std::size_t l = 0; l < k; ++l) w[l] = F.add(w[l], F.mul(u[i], V.basis[i][l]));
          W.push_back(std::move(w));
        }
        Space S;
        S.pivots = rref(W, F);
        S.basis = std::move(W);
        total += S.basis.size();
        next.push_back(std::move(S));
      }
      if (total != d)
        throw InternalError("class matrix " + std::to_string(j) + " is not diagonalizable mod " +
                            std::to_string(F.p));
    }
    spaces = std::move(next);
  }
  if (!done()) throw InternalError("common eigenspaces did not split to dimension 1");

  const auto order = static_cast<std::uint64_t>(G.order());
  std::vector<ClassFunction> rows;
  for (auto& V : spaces) {
    Vec w = V.basis[0];
    if (w[0] == 0) throw InternalError("eigenvector vanishes at the identity class");
    const auto inv0 = F.inv(w[0]);
    for (auto& x : w) x = F.mul(x, inv0);
    std::uint64_t s = 0;
    for (std::size_t l = 0; l < k; ++l)
      s = F.add(s, F.mul(F.mul(w[l], w[C.inverse_class(l)]), F.inv(C[l].size % F.p)));
    const auto d2 = F.mul(order % F.p, F.inv(s));
    std::size_t degree = 0;
    for (std::size_t d = 1; d * d <= G.order(); ++d)
      if (F.mul(d, d) == d2) {
        degree = d;
        break;
      }
    if (degree == 0) throw InternalError("no degree matches an eigenvector mod " + std::to_string(F.p));
    Vec residue(k);
    for (std::size_t l = 0; l < k; ++l) residue[l] = F.mul(F.mul(w[l], degree), F.inv(C[l].size % F.p));
    std::vector<Cyclotomic> values;
    values.reserve(k);
    for (std::size_t c = 0; c < k; ++c) {
      const std::size_t o = C[c].element_order;
      Vec r(o);
      for (std::size_t t = 0; t < o; ++t) r[t] = residue[C.power(c, static_cast<long long>(t))];
      values.push_back(lift_value(r, F, degree));
    }
    rows.emplace_back(G, std::move(values));
  }
  return rows;
}

bool is_trivial_row(const ClassFunction& f) {
  return std::all_of(f.values().begin(), f.values().end(), [](const Cyclotomic& x) { return x == Cyclotomic(1); });
}

} // namespace

CharacterTable CharacterTable::from_rows(const PermGroup& G, std::vector<ClassFunction> rows, bool verify) {
  if (verify) {
    auto err = check_rows(G, rows);
    if (!err.empty()) throw InternalError("character table check failed: " + err);
  }
  auto d = std::make_shared<Data>(Data{G, std::move(rows), {}, 0});
  for (const auto& r : d->rows) {
    auto deg = r.degree_value().to_integer();
    d->degrees.push_back(deg && *deg > 0 ? static_cast<std::size_t>(*deg) : 0);
    if (deg == 1) ++d->linear;
  }
  return CharacterTable(std::move(d));
}

CharacterTable character_table(const PermGroup& G) {
  auto rows = dixon_schneider(G);
  std::vector<std::pair<std::vector<std::string>, std::size_t>> keys;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    std::vector<std::string> key;
    for (const auto& v : rows[i].values()) key.push_back(v.to_string());
    keys.emplace_back(std::move(key), i);
  }
  std::vector<std::size_t> degrees;
  for (const auto& r : rows) degrees.push_back(r.degree());
  std::sort(keys.begin(), keys.end(), [&](const auto& a, const auto& b) {
    const bool ta = is_trivial_row(rows[a.second]), tb = is_trivial_row(rows[b.second]);
    if (ta != tb) return ta;
    if (degrees[a.second] != degrees[b.second]) return degrees[a.second] < degrees[b.second];
    return a.first < b.first;
  });
  std::vector<ClassFunction> sorted;
  sorted.reserve(rows.size());
  for (const auto& [key, i] : keys) sorted.push_back(std::move(rows[i]));
  return CharacterTable::from_rows(G, std::move(sorted), true);
}

// --- text form ----------------------------------------------------------------

std::string CharacterTable::to_text() const {
  const auto& G = group();
  const auto& C = classes();
  std::string s = "order " + std::to_string(G.order()) + " classes " + std::to_string(C.size()) +
                  " exponent " + std::to_string(C.exponent()) + "\n";
  for (std::size_t c = 0; c < C.size(); ++c)
    s += G.element(C[c].representative).to_string() + "\t" + std::to_string(C[c].size) + "\t" +
         std::to_string(C[c].element_order) + "\n";
  for (const auto& r : irreducibles()) s += r.to_string() + "\n";
  return s;
}

namespace {

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::size_t to_size(std::string_view s, std::size_t line) {
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) throw ParseError(line, "expected a number, got \"" + std::string(s) + "\"");
  return v;
}

} // namespace

CharacterTable CharacterTable::from_text(const PermGroup& G, std::string_view text) {
  auto lines = split(text, '\n');
  if (!lines.empty() && lines.back().empty()) lines.pop_back();
  if (lines.empty()) throw ParseError(1, "empty table");
  const auto& C = G.classes();

  auto header = split(lines[0], ' ');
  if (header.size() != 6 || header[0] != "order" || header[2] != "classes" || header[4] != "exponent")
    throw ParseError(1, "expected \"order N classes k exponent e\"");
  const auto order = to_size(header[1], 1), k = to_size(header[3], 1), e = to_size(header[5], 1);
  if (order != G.order() || k != C.size() || e != C.exponent())
    throw GroupMismatch("table header does not match the group");
  if (lines.size() != 1 + 2 * k)
    throw ParseError(lines.size(), "expected " + std::to_string(1 + 2 * k) + " lines");

  for (std::size_t c = 0; c < k; ++c) {
    const auto ln = c + 2;
    auto f = split(lines[1 + c], '\t');
    if (f.size() != 3) throw ParseError(ln, "class line needs representative, size and order");
    Permutation rep;
    try {
      rep = Permutation::parse(f[0], G.degree());
    } catch (const MalformedPermutation& ex) {
      throw ParseError(ln, ex.what());
    }
    auto idx = G.index_of(rep);
    if (!idx || C.class_of(*idx) != c || to_size(f[1], ln) != C[c].size || to_size(f[2], ln) != C[c].element_order)
      throw GroupMismatch("class line " + std::to_string(ln) + " does not match class " + std::to_string(c));
  }
  std::vector<ClassFunction> rows;
  for (std::size_t r = 0; r < k; ++r) {
    const auto ln = k + r + 2;
    auto f = split(lines[1 + k + r], '\t');
    if (f.size() != k) throw ParseError(ln, "expected " + std::to_string(k) + " values");
    std::vector<Cyclotomic> values;
    for (auto v : f) {
      try {
        values.push_back(Cyclotomic::parse(v));
      } catch (const PreconditionViolation& ex) {
        throw ParseError(ln, ex.what());
      }
    }
    rows.emplace_back(G, std::move(values));
  }
  return from_rows(G, std::move(rows), true);
}

// --- verification ------------------------------------------------------------

TableReport verify_table(const CharacterTable& T, const VerifyOptions& opts) {
  TableReport rep;
  const auto& G = T.group();
  const auto& C = T.classes();
  auto fail = [&](std::string s) { rep.violations.push_back(std::move(s)); };

  if (auto err = check_rows(G, T.irreducibles()); !err.empty()) fail(err);
  if (T.size() == C.size()) {
    for (std::size_t a = 0; a < C.size(); ++a)
      for (std::size_t b = a; b < C.size(); ++b) {
        CyclotomicSum acc(C.exponent());
        for (const auto& chi : T.irreducibles()) acc.add_product(chi[a], chi[b].conj());
        Cyclotomic expected(a == b ? static_cast<long long>(C.centralizer_order(a)) : 0LL);
        if (acc.value() != expected)
          fail("column orthogonality fails for classes " + std::to_string(a) + " and " + std::to_string(b));
      }
  }
  const auto derived = derived_subgroup(G, G.all_elements()).count();
  if (T.linear_count() * derived != G.order())
    fail(std::to_string(T.linear_count()) + " linear characters but [G:G'] = " +
         std::to_string(G.order() / derived));
  if (!rep.ok()) return rep;

  if (G.order() > opts.subgroup_cap || opts.subgroup_samples == 0) return rep;
  SubgroupLattice L(G, opts.subgroup_cap);
  std::vector<std::size_t> normals;
  for (std::size_t i = 0; i < L.size(); ++i)
    if (L.is_normal(i)) normals.push_back(i);
  std::size_t taken = 0;
  for (std::size_t cls = 0; cls < L.class_count() && taken < opts.subgroup_samples; ++cls) {
    const auto h = L.representative(cls);
    if (h == L.trivial_index() || h == L.whole_index()) continue;
    ++taken;
    const auto rec = L.record(h);
    const auto TH = character_table(rec.subgroup);
    for (std::size_t r = 0; r < TH.size(); ++r) {
      const auto& phi = TH[r];
      const auto induced = induce(phi, rec);
      const auto K = kernel_set(induced);
      const auto ker_phi = G.embed(rec.subgroup.subgroup(kernel_set(phi)));
      ElementSet meet = G.all_elements();
      for (std::size_t g = 0; g < G.order(); ++g) meet &= conjugate_set(G, ker_phi, g);
      ++rep.kernel_samples;
      if (meet != K)
        fail("kernel of induced character " + std::to_string(r) + " from subgroup " + std::to_string(h) +
             " differs from the intersection of conjugated kernels");
      for (auto n : normals) {
        if (!L.set(n).is_subset_of(ker_phi)) continue;
        ++rep.normal_samples;
        if (!L.set(n).is_subset_of(K))
          fail("normal subgroup " + std::to_string(n) + " lies in ker(phi) but not in the kernel of its induced character");
      }
    }
  }
  return rep;
}

} // namespace charpos
