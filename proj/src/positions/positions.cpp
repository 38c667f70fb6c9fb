#include "charpos/positions.hpp"

#include <algorithm>
#include <mutex>

#include "charpos/errors.hpp"
#include "charpos/structure.hpp"

namespace charpos {

PositionContext::PositionContext(CharacterTable T) : table_(std::move(T)) {
  cd_ = table_.cd();
  pos_.reserve(table_.size());
  for (std::size_t i = 0; i < table_.size(); ++i) pos_.push_back(pos_of_degree(table_.degree(i)));
  kernels_.reserve(table_.size());
  for (const auto& chi : table_.irreducibles()) kernels_.push_back(kernel_set(chi));
  derived_ = derived_series_sets(group(), group().all_elements());
}

std::size_t PositionContext::pos_of_degree(std::size_t degree) const {
  auto it = std::lower_bound(cd_.begin(), cd_.end(), degree);
  if (it == cd_.end() || *it != degree)
    throw PreconditionViolation(std::to_string(degree) + " is not an irreducible degree");
  return static_cast<std::size_t>(it - cd_.begin()) + 1;
}

const ElementSet& PositionContext::derived_term(std::size_t i) const noexcept {
  return derived_[std::min(i, derived_.size() - 1)];
}

PosExtrema pos_extrema(const PositionContext& ctx, const ClassFunction& theta) {
  auto cons = constituents(theta, ctx.table());
  if (cons.empty()) throw NotACharacter("the zero function has no constituents");
  PosExtrema e{ctx.n() + 1, 0};
  for (const auto& [i, m] : cons) {
    e.min = std::min(e.min, ctx.pos(i));
    e.max = std::max(e.max, ctx.pos(i));
  }
  return e;
}

SubgroupPositions analyze_subgroup(const PositionContext& G, SubgroupRecord H) {
  auto TH = character_table(H.subgroup);
  return analyze_subgroup(G, std::move(H), PositionContext(std::move(TH)));
}

SubgroupPositions analyze_subgroup(const PositionContext& G, SubgroupRecord H, PositionContext Hctx) {
  require_same_group(Hctx.group(), H.subgroup);
  SubgroupPositions S{std::move(H), std::move(Hctx), {}, {}, {}, true};
  const auto& T = G.table();
  const auto& TH_ = S.context.table();
  S.proper = S.record.subgroup.order() < G.group().order();
  S.restriction.assign(T.size(), std::vector<std::size_t>(TH_.size(), 0));
  for (std::size_t chi = 0; chi < T.size(); ++chi) {
    for (const auto& [psi, m] : constituents(restrict(T[chi], S.record), TH_)) S.restriction[chi][psi] = m;
  }
  S.posind.value = G.n() + 1;
  for (std::size_t psi = 0; psi < TH_.size(); ++psi) {
    std::size_t top = 0;
    for (std::size_t chi = 0; chi < T.size(); ++chi)
      if (S.restriction[chi][psi]) top = std::max(top, G.pos(chi));
    if (top < S.posind.value) {
      S.posind.value = top;
      S.posind.minimizers.clear();
    }
    if (top == S.posind.value) S.posind.minimizers.push_back(psi);
  }
  S.pos_min.assign(T.size(), 0);
  for (std::size_t chi = 0; chi < T.size(); ++chi) {
    std::size_t low = S.context.n() + 1;
    for (std::size_t psi = 0; psi < TH_.size(); ++psi)
      if (S.restriction[chi][psi]) low = std::min(low, S.context.pos(psi));
    S.pos_min[chi] = low;
  }
  return S;
}

PosindResult posind(const PositionContext& G, const SubgroupRecord& H) {
  return analyze_subgroup(G, H).posind;
}

namespace {

void require_proper(const SubgroupPositions& H) {
  if (!H.proper) throw PreconditionViolation("a position reducing tuple needs a proper subgroup");
}

} // namespace

std::optional<PrtWitness> is_prt(const PositionContext& G, const SubgroupPositions& H, std::size_t chi) {
  require_proper(H);
  const auto p = G.pos(chi);
  if (H.pos_min[chi] + H.posind.value > p) return std::nullopt;
  for (std::size_t psi = 0; psi < H.context.table().size(); ++psi) {
    if (H.restriction[chi][psi] && H.context.pos(psi) == H.pos_min[chi])
      return PrtWitness{H.record, kNoIndex, chi, psi, H.pos_min[chi], H.posind.value, p};
  }
  throw InternalError("no constituent attains the minimal position");
}

std::optional<PrtWitness> is_prt(const PositionContext& G, const SubgroupRecord& H, std::size_t chi) {
  if (H.subgroup.order() == G.group().order())
    throw PreconditionViolation("a position reducing tuple needs a proper subgroup");
  return is_prt(G, analyze_subgroup(G, H), chi);
}

bool is_prt_with(const PositionContext& G, const SubgroupPositions& H, std::size_t chi, std::size_t phi) {
  require_proper(H);
  if (phi >= H.context.table().size()) throw PreconditionViolation("phi is not an irreducible of H");
  return H.restriction[chi][phi] > 0 && H.context.pos(phi) + H.posind.value <= G.pos(chi);
}

bool is_prt_with(const PositionContext& G, const SubgroupRecord& H, std::size_t chi, std::size_t phi) {
  if (H.subgroup.order() == G.group().order())
    throw PreconditionViolation("a position reducing tuple needs a proper subgroup");
  return is_prt_with(G, analyze_subgroup(G, H), chi, phi);
}

bool is_taketa_character(const PositionContext& ctx, std::size_t chi) {
  return ctx.derived_term(ctx.pos(chi)).is_subset_of(ctx.kernel(chi));
}

std::vector<ElementSet> d_series(const PositionContext& ctx) {
  std::vector<ElementSet> out{ctx.group().all_elements()};
  for (std::size_t i = 1; i <= ctx.n(); ++i) {
    ElementSet D = ctx.group().all_elements();
    for (std::size_t chi = 0; chi < ctx.table().size(); ++chi)
      if (ctx.pos(chi) <= i) D &= ctx.kernel(chi);
    out.push_back(std::move(D));
  }
  return out;
}

// ---------------------------------------------------------------------------

struct PositionEngine::Cache {
  explicit Cache(std::size_t n) : once(new std::once_flag[n]), data(n) {}
  std::unique_ptr<std::once_flag[]> once;
  std::vector<std::optional<SubgroupPositions>> data;
};

PositionEngine::PositionEngine(const PermGroup& G, std::size_t subgroup_cap)
    : PositionEngine(PositionContext(character_table(G)), SubgroupLattice(G, subgroup_cap)) {}

PositionEngine::PositionEngine(PositionContext ctx, SubgroupLattice lattice)
    : ctx_(std::make_shared<const PositionContext>(std::move(ctx))),
      lattice_(std::make_shared<const SubgroupLattice>(std::move(lattice))),
      cache_(std::make_shared<Cache>(lattice_->size())) {
  const auto& G = ctx_->group();
  const auto& L = *lattice_;
  auto found = L.find(ctx_->derived_term(1));
  if (!found) throw InternalError("derived subgroup missing from the subgroup lattice");
  derived_index_ = *found;
  for (std::size_t cls = 0; cls < L.class_count(); ++cls) {
    auto r = L.representative(cls);
    if (L.order(r) < G.order() && r != derived_index_) order_.push_back(r);
  }
  std::sort(order_.begin(), order_.end(), [&](std::size_t a, std::size_t b) {
    if (L.order(a) != L.order(b)) return L.order(a) > L.order(b);
    return a < b;
  });
  if (L.order(derived_index_) < G.order()) order_.insert(order_.begin(), derived_index_);
}

const SubgroupPositions& PositionEngine::subgroup(std::size_t i) const {
  std::call_once(cache_->once[i], [&] { cache_->data[i].emplace(analyze_subgroup(*ctx_, lattice_->record(i))); });
  return *cache_->data[i];
}

std::optional<PrtWitness> PositionEngine::pr_witness(std::size_t chi) const {
  if (ctx_->pos(chi) == 1) return std::nullopt;
  for (auto i : order_) {
    if (auto w = is_prt(*ctx_, subgroup(i), chi)) {
      w->lattice_index = i;
      return w;
    }
  }
  return std::nullopt;
}

std::optional<PrtWitness> PositionEngine::taketa_pr_witness(std::size_t chi) const {
  const auto p = ctx_->pos(chi);
  if (p == 1) return std::nullopt;
  for (auto i : order_) {
    const auto& S = subgroup(i);
    if (S.pos_min[chi] + S.posind.value > p) continue;
    for (std::size_t psi = 0; psi < S.context.table().size(); ++psi) {
      if (!S.restriction[chi][psi] || S.context.pos(psi) + S.posind.value > p) continue;
      if (!is_taketa_character(S.context, psi)) continue;
      return PrtWitness{S.record, i, chi, psi, S.context.pos(psi), S.posind.value, p};
    }
  }
  return std::nullopt;
}

CliffordObstruction PositionEngine::clifford_obstruction(std::size_t chi) const {
  if (ctx_->pos(chi) == 1) throw PreconditionViolation("clifford obstruction needs a nonlinear character");
  const auto& S = subgroup(derived_index_);
  if (S.proper && is_prt(*ctx_, S, chi))
    throw PreconditionViolation("(G, G', chi) is a position reducing tuple");
  const auto& TH = S.context.table();
  std::size_t phi = TH.size();
  for (std::size_t psi = 0; psi < TH.size(); ++psi)
    if (S.restriction[chi][psi]) {
      phi = psi;
      break;
    }
  if (phi == TH.size()) throw InternalError("restriction to G' has no constituent");

  // Action of G's generators on the classes of G'.
  const auto& G = ctx_->group();
  const auto& H = S.record.subgroup;
  const auto& HC = H.classes();
  std::vector<std::vector<std::size_t>> sigma;
  for (auto g : G.generator_indices()) {
    std::vector<std::size_t> s(HC.size());
    for (std::size_t d = 0; d < HC.size(); ++d) {
      auto x = *G.index_of(H.element(HC[d].representative));
      auto y = G.conjugate(x, g);
      s[d] = HC.class_of(*H.index_of(G.element(y)));
    }
    sigma.push_back(std::move(s));
  }
  std::vector<std::size_t> orbit{phi};
  std::vector<bool> seen(TH.size(), false);
  seen[phi] = true;
  for (std::size_t head = 0; head < orbit.size(); ++head) {
    for (const auto& s : sigma) {
      std::vector<Cyclotomic> v(HC.size());
      for (std::size_t d = 0; d < HC.size(); ++d) v[d] = TH[orbit[head]][s[d]];
      std::size_t img = TH.size();
      for (std::size_t r = 0; r < TH.size(); ++r)
        if (TH[r].values() == v) img = r;
      if (img == TH.size()) throw InternalError("conjugate of an irreducible of G' is not irreducible");
      if (!seen[img]) {
        seen[img] = true;
        orbit.push_back(img);
      }
    }
  }
  CliffordObstruction out;
  out.phi = phi;
  out.phi_degree = TH.degree(phi);
  out.pos_phi = S.context.pos(phi);
  out.t = orbit.size();
  out.divides = ctx_->table().degree(chi) % (out.phi_degree * out.t) == 0;
  return out;
}

} // namespace charpos
