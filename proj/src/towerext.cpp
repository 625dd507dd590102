#include "extwb/towerext.hpp"

#include <set>

namespace extwb::towerext {

using indmod::cell1;
using indmod::cell1_x;
using indmod::kCell0;
using indmod::Label;

namespace {

using Acc = std::map<Label, Scalar>;

void bump(Acc& acc, Label l, const Scalar& c) {
  auto [it, inserted] = acc.try_emplace(l, c);
  if (!inserted) it->second += c;
}

void require_levels(const Group& G, unsigned i) {
  if (i < 1 || i + 1 > G.tower().imax())
    throw std::out_of_range("level " + std::to_string(i) + "+1 is above the tower top");
}

void require_center(const TorusChar& theta) {
  if (!theta.is_trivial_on_center()) throw CenterMismatch("center mismatch: theta is not trivial on C");
}

Elem default_b(const Group& G, unsigned i, std::optional<Elem> b) {
  return b ? *b : G.tower().pick_b(i);
}

}  // namespace

std::string to_string(System s) {
  switch (s) {
    case System::F:
      return "F";
    case System::H:
      return "H";
    case System::L:
      return "L";
  }
  return "?";
}

System system_from_string(const std::string& s) {
  if (s == "F") return System::F;
  if (s == "H") return System::H;
  if (s == "L") return System::L;
  throw std::invalid_argument("unknown system " + s);
}

// ---------------------------------------------------------------------------
// η_i

ModuleVec build_eta_with(const Group& G, const TorusChar& lambda, const TorusChar& mu, unsigned i, Elem a) {
  require_levels(G, i);
  if (lambda.is_trivial_on_center() != mu.is_trivial_on_center())
    throw CenterMismatch("center mismatch: lambda and mu differ on C");
  const auto& tw = G.tower();
  const TorusChar nu = charmod::nu(lambda, mu);
  const auto& U = tw.enumerate_level(i);
  Acc acc;
  for (Elem t : G.center_quotient_reps(i)) {
    const Scalar& c = nu.eval_inv(t);
    const Elem x0 = tw.mul(a, tw.mul(t, t));
    for (Elem u : U) bump(acc, cell1(tw.add(x0, u)), c);
  }
  return linalg::from_map(std::move(acc));
}

ModuleVec build_eta(const Group& G, const TorusChar& lambda, const TorusChar& mu, unsigned i) {
  require_levels(G, i);
  return build_eta_with(G, lambda, mu, i, G.tower().pick_a(i));
}

bool check_eta_weight(const Group& G, const TorusChar& lambda, const TorusChar& mu, unsigned i,
                      const TorusChar& weight) {
  const ModuleVec eta = build_eta(G, lambda, mu, i);
  const InducedModule M(G, mu, i + 1);
  const auto& tw = G.tower();
  for (Elem u : tw.enumerate_level(i))
    if (M.act(G.eps(u, i), eta) != eta) return false;
  for (Elem t : tw.units(i))
    if (M.act(G.h(t, i), eta) != linalg::scale(eta, weight.eval(t))) return false;
  return true;
}

// ---------------------------------------------------------------------------
// ξ_i

ModuleVec build_xi(const Group& G, const TorusChar& theta, unsigned i, std::optional<Elem> b_opt) {
  require_levels(G, i);
  require_center(theta);
  const Elem b = default_b(G, i, b_opt);
  const auto& tw = G.tower();
  const InducedModule M(G, theta, i + 1);
  Acc first, second;
  for (Elem t : G.center_quotient_reps(i)) {
    const Scalar& ti = theta.eval_inv(t);
    const Elem bt2 = tw.mul(b, tw.mul(t, t));
    bump(first, cell1(bt2), ti);
    for (Elem a : tw.enumerate_level(i)) {
      const Elem y = tw.add(bt2, a);
      if (y == 0) throw std::invalid_argument("b t^2 + a vanishes; b must lie outside the level");
      bump(second, cell1(tw.neg(tw.inv(y))), ti * theta.eval(y));
    }
  }
  ModuleVec v = M.sum_over_U(i, linalg::from_map(std::move(first)));
  return linalg::add(v, M.sum_over_U(i, linalg::from_map(std::move(second))));
}

ModuleVec build_xi_naive(const Group& G, const TorusChar& theta, unsigned i, std::optional<Elem> b_opt) {
  require_levels(G, i);
  require_center(theta);
  const Elem b = default_b(G, i, b_opt);
  const InducedModule M(G, theta, i + 1);
  Acc acc;
  for (const auto& g : G.enumerate(grp::Subgroup::G, i, grp::Mode::PGL2)) {
    const indmod::Term t = M.act(g, cell1(b));
    bump(acc, t.label, t.coeff);
  }
  return linalg::from_map(std::move(acc));
}

// ---------------------------------------------------------------------------
// ζ_i

std::vector<Label> zeta_term_labels(const Group& G, unsigned i, Elem b) {
  require_levels(G, i);
  const auto& tw = G.tower();
  std::vector<Label> first, second;
  for (Elem t : G.center_quotient_reps(i)) {
    const Elem bt2 = tw.mul(b, tw.mul(t, t));
    for (Elem a : tw.enumerate_level(i)) {
      const Elem y = tw.add(bt2, a);
      first.push_back(cell1(y));
      if (y != 0) second.push_back(cell1(tw.neg(tw.inv(y))));
    }
  }
  first.insert(first.end(), second.begin(), second.end());
  return first;
}

std::optional<Label> zeta_collision(const Group& G, unsigned i, Elem b) {
  std::set<Label> seen;
  for (Label l : zeta_term_labels(G, i, b))
    if (!seen.insert(l).second) return l;
  return std::nullopt;
}

ModuleVec build_zeta(const Group& G, const TorusChar& theta, unsigned i, std::optional<Elem> b_opt) {
  require_levels(G, i);
  require_center(theta);
  const Elem b = default_b(G, i, b_opt);
  const auto& tw = G.tower();
  Acc acc;
  for (Elem t : G.center_quotient_reps(i)) {
    const Elem bt2 = tw.mul(b, tw.mul(t, t));
    const Elem ti = tw.inv(t);
    for (Elem a : tw.enumerate_level(i)) {
      const Elem y = tw.add(bt2, a);
      if (y == 0) throw std::invalid_argument("b t^2 + a vanishes; b must lie outside the level");
      bump(acc, cell1(y), theta.eval_inv(t));
      // θ(b t + a t^{-1}) Cell1(-(b t² + a)^{-1}), subtracted
      const Elem arg = tw.add(tw.mul(b, t), tw.mul(a, ti));
      bump(acc, cell1(tw.neg(tw.inv(y))), -theta.eval(arg));
    }
  }
  return linalg::from_map(std::move(acc));
}

ZetaRelations check_zeta_relations(const Group& G, const TorusChar& theta, unsigned i) {
  const ModuleVec zeta = build_zeta(G, theta, i);
  const InducedModule M(G, theta, i + 1);
  const auto& tw = G.tower();
  const Scalar minus_one = -theta.field()->one();
  ZetaRelations r;
  r.s_negates = M.act(G.s(i), zeta) == linalg::scale(zeta, minus_one);
  r.torus_fixes = true;
  for (Elem t : tw.units(i)) {
    ++r.torus_checked;
    if (M.act(G.h(t, i), zeta) != zeta) r.torus_fixes = false;
  }
  r.s_eps = true;
  for (Elem x : tw.units(i)) {
    ++r.eps_checked;
    const ModuleVec lhs = M.act(G.mul(G.s(i), G.eps(x, i)), zeta);
    const ModuleVec rhs = linalg::axpy(M.act(G.eps(tw.neg(tw.inv(x)), i), zeta), minus_one, zeta);
    if (lhs != rhs) r.s_eps = false;
  }
  return r;
}

// ---------------------------------------------------------------------------
// ExtSystem

ExtSystem::ExtSystem(const Group& G, System sys, TorusChar lambda, TorusChar mu)
    : G_(&G), sys_(sys), lambda_(std::move(lambda)), mu_(std::move(mu)) {}

void ExtSystem::check_level(unsigned i) const {
  if (i < first_level()) throw std::out_of_range("system " + to_string(sys_) + " starts at level " +
                                                 std::to_string(first_level()));
  require_levels(*G_, i);
}

const InducedModule& ExtSystem::bottom_module(unsigned level) const {
  auto& slot = bottom_[level];
  if (!slot) slot = std::make_unique<InducedModule>(*G_, sys_ == System::F ? mu_ : lambda_, level);
  return *slot;
}

const InducedModule& ExtSystem::steinberg_module(unsigned level) const {
  auto& slot = st_[level];
  if (!slot) slot = std::make_unique<InducedModule>(*G_, lambda_.with_exponent(0), level);
  return *slot;
}

const ModuleVec& ExtSystem::special(unsigned i) const {
  check_level(i);
  auto it = special_.find(i);
  if (it != special_.end()) return it->second;
  ModuleVec v;
  switch (sys_) {
    case System::F:
      v = build_eta(*G_, lambda_, mu_, i);
      break;
    case System::H:
      v = build_xi(*G_, lambda_, i);
      break;
    case System::L:
      v = build_zeta(*G_, lambda_, i);
      break;
  }
  return special_.emplace(i, std::move(v)).first->second;
}

ExtVec ExtSystem::act(const GroupElem& g, const ExtVec& v) const {
  ExtVec out;
  out.level = v.level;
  out.a = v.a;
  if (sys_ == System::F) {
    if (g.c != 0) throw std::invalid_argument("F is only a B-module");
    out.a = v.a * lambda_.eval(g.a);
  }
  if (sys_ == System::L) out.top = steinberg_module(v.level).act(g, v.top);
  out.bottom = bottom_module(v.level).act(g, v.bottom);
  return out;
}

ExtVec ExtSystem::connect(const ExtVec& v) const {
  return connect_composed(v, v.level + 1);
}

ExtVec ExtSystem::connect_composed(const ExtVec& v, unsigned j) const {
  if (j <= v.level) throw std::invalid_argument("connect_composed needs j > level");
  ExtVec out = v;
  out.level = j;
  for (unsigned k = v.level; k < j; ++k) {
    const ModuleVec& sp = special(k);
    if (sys_ != System::L) {
      out.bottom = linalg::axpy(out.bottom, v.a, sp);
      continue;
    }
    const InducedModule& M = bottom_module(k + 1);
    for (const auto& [l, c] : v.top) {
      if (!indmod::is_cell1(l)) continue;
      // St vectors are Σ a_x (Cell0 - Cell1(x)), so a_x = -coeff(Cell1(x)).
      out.bottom = linalg::axpy(out.bottom, -c, M.act(G_->eps(cell1_x(l), k), sp));
    }
  }
  return out;
}

std::vector<ExtVec> ExtSystem::spanning_set(unsigned i) const {
  const auto& field = lambda_.field();
  std::vector<ExtVec> out;
  if (sys_ == System::L) {
    for (const auto& st : steinberg_module(i).steinberg_basis()) out.push_back({i, field->zero(), st, {}});
  } else {
    out.push_back({i, field->one(), {}, {}});
  }
  for (Label l : bottom_module(i).labels()) out.push_back({i, field->zero(), {}, {{l, field->one()}}});
  return out;
}

linalg::SparseVec ExtSystem::flatten(const ExtVec& v) const {
  const auto shift = static_cast<std::uint32_t>(G_->tower().size() + 2);
  linalg::SparseVec out;
  if (!v.a.is_zero()) out.emplace_back(0, v.a);
  for (const auto& [l, c] : v.top) out.emplace_back(1 + l, c);
  for (const auto& [l, c] : v.bottom) out.emplace_back(shift + l, c);
  return out;
}

bool ExtSystem::check_injective(unsigned i) const {
  check_level(i);
  linalg::Echelon ech(lambda_.field());
  const auto span = spanning_set(i);
  for (const auto& v : span) ech.insert(flatten(connect(v)));
  return ech.rank() == span.size();
}

bool ExtSystem::check_equivariance(unsigned i, const std::vector<GroupElem>& sample) const {
  check_level(i);
  const auto span = spanning_set(i);
  for (const auto& g : sample)
    for (const auto& v : span)
      if (!(connect(act(g, v)) == act(g, connect(v)))) return false;
  return true;
}

bool ExtSystem::check_composition(unsigned i) const {
  check_level(i);
  check_level(i + 1);
  for (const auto& v : spanning_set(i))
    if (!(connect(connect(v)) == connect_composed(v, i + 2))) return false;
  return true;
}

nlohmann::json ExtSystem::nonsplit_certificate(unsigned i) const {
  check_level(i);
  const InducedModule& big = bottom_module(i + 1);
  const InducedModule& small = bottom_module(i);
  const auto inv = big.invariants(sys_ == System::L ? grp::Subgroup::T : grp::Subgroup::U);
  linalg::Echelon ech(lambda_.field());
  for (Label l : small.labels()) ech.insert(small.basis_vector(l));
  for (const auto& v : inv) ech.insert(v);
  const bool member = ech.contains(special(i));

  nlohmann::json chars;
  if (sys_ == System::F) {
    chars = {{"lambda", lambda_.exponent()}, {"mu", mu_.exponent()}};
  } else {
    chars = {{"theta", lambda_.exponent()}};
  }
  const auto ineq = backing_inequality(sys_, G_->tower().q(), i);
  return {{"system", to_string(sys_)},
          {"q", G_->tower().q()},
          {"i", i},
          {"characters", chars},
          {"dims",
           {{"ambient", big.dim()}, {"bottom", small.dim()}, {"subspace", inv.size()}, {"sum", ech.rank()}}},
          {"support", special(i).size()},
          {"member", member},
          {"inequality", ineq.to_json()},
          {"verdict", member ? "FAIL" : "PASS"}};
}

counting::Inequality backing_inequality(System sys, std::uint64_t q, unsigned i) {
  switch (sys) {
    case System::F:
      return counting::clm(q, i);
    case System::H:
      return counting::eq36(q, i);
    case System::L:
      return counting::no_lg(q, i);
  }
  return {};
}

}  // namespace extwb::towerext
