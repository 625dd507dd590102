#include "extwb/indmod.hpp"

#include <deque>
#include <map>
#include <stdexcept>

namespace extwb::indmod {

using grp::CellB;
using grp::CellBsB;

InducedModule::InducedModule(const Group& G, TorusChar theta, unsigned level)
    : G_(&G), theta_(std::move(theta)), level_(level) {
  const auto& tw = G.tower();
  const auto& F = tw.enumerate_level(level);
  if (F.size() + 1 > G.budget()) throw grp::BudgetExceeded("module dimension exceeds budget");
  labels_.reserve(F.size() + 1);
  labels_.push_back(kCell0);
  for (Elem x : F) labels_.push_back(cell1(x));
  pos_.assign(tw.size() + 1, -1);
  for (std::size_t k = 0; k < labels_.size(); ++k) pos_[labels_[k]] = static_cast<std::int64_t>(k);
}

bool InducedModule::has_label(Label l) const { return l < pos_.size() && pos_[l] >= 0; }

std::uint32_t InducedModule::position(Label l) const {
  if (!has_label(l)) throw std::out_of_range("label " + label_string(l) + " not in the module");
  return static_cast<std::uint32_t>(pos_[l]);
}

ModuleVec InducedModule::basis_vector(Label l) const {
  position(l);
  return {{l, field()->one()}};
}

Term InducedModule::act_h(Elem t, Label l) const {
  const auto& tw = tower();
  if (l == kCell0) return {kCell0, theta_.eval(t)};
  return {cell1(tw.mul(tw.mul(t, t), cell1_x(l))), theta_.eval_inv(t)};
}

Term InducedModule::act_eps(Elem a, Label l) const {
  if (l == kCell0) return {kCell0, field()->one()};
  return {cell1(tower().add(a, cell1_x(l))), field()->one()};
}

Term InducedModule::act_s(Label l) const {
  const auto& tw = tower();
  if (l == kCell0) return {cell1(0), field()->one()};
  const Elem x = cell1_x(l);
  if (x == 0) return {kCell0, theta_.eval(tw.neg(1))};
  return {cell1(tw.neg(tw.inv(x))), theta_.eval(x)};
}

Term InducedModule::act(const GroupElem& g, Label l) const {
  const auto& tw = tower();
  for (Elem e : {g.a, g.b, g.c, g.d})
    if (!tw.in_level(e, level_)) throw std::invalid_argument("level mismatch: group element outside the module level");
  const grp::BruhatForm f = G_->bruhat(g);
  if (const auto* b = std::get_if<CellB>(&f)) {
    Term r = act_h(b->t, l);
    r.label = act_eps(b->x, r.label).label;
    return r;
  }
  const auto& w = std::get<CellBsB>(f);
  Term r = act_eps(w.y, l);
  Term r2 = act_s(r.label);
  Term r3 = act_h(w.t, r2.label);
  return {act_eps(w.x, r3.label).label, r2.coeff * r3.coeff};
}

ModuleVec InducedModule::act(const GroupElem& g, const ModuleVec& v) const {
  std::map<Label, Scalar> out;
  for (const auto& [l, c] : v) {
    Term t = act(g, l);
    Scalar val = t.coeff.is_one() ? c : c * t.coeff;
    auto [it, inserted] = out.try_emplace(t.label, val);
    if (!inserted) it->second += val;
  }
  return linalg::from_map(std::move(out));
}

Term InducedModule::act_oracle(const GroupElem& g, Label l) const {
  const Group& G = *G_;
  const GroupElem rep = l == kCell0 ? G.identity(level_) : G.mul(G.eps(cell1_x(l), level_), G.s(level_));
  const GroupElem m = G.mul(g, rep);
  const grp::BruhatForm f = G.bruhat(m);
  if (const auto* b = std::get_if<CellB>(&f)) return {kCell0, theta_.eval(b->t)};
  const auto& w = std::get<CellBsB>(f);
  return {cell1(w.x), theta_.eval_inv(w.t)};
}

ModuleVec InducedModule::sum_over_U(unsigned j, const ModuleVec& v) const {
  const auto& tw = tower();
  const auto& U = tw.enumerate_level(j);
  const Scalar size = field()->from_int(static_cast<long long>(U.size()));
  std::map<Label, Scalar> out;
  auto bump = [&](Label l, const Scalar& c) {
    auto [it, inserted] = out.try_emplace(l, c);
    if (!inserted) it->second += c;
  };
  for (const auto& [l, c] : v) {
    if (l == kCell0) {
      bump(kCell0, c * size);
      continue;
    }
    for (Elem u : U) bump(cell1(tw.add(cell1_x(l), u)), c);
  }
  return linalg::from_map(std::move(out));
}

ModuleVec InducedModule::eta_J(bool J_full) const {
  if (!J_full) return basis_vector(kCell0);
  if (theta_.i_theta().empty()) throw std::invalid_argument("J is not contained in I(theta)");
  return {{kCell0, field()->one()}, {cell1(0), -field()->one()}};
}

std::vector<ModuleVec> InducedModule::steinberg_basis() const {
  const ModuleVec eta = eta_J(true);
  std::vector<ModuleVec> out;
  for (Elem x : tower().enumerate_level(level_)) out.push_back(act(G_->eps(x, level_), eta));
  return out;
}

std::vector<ModuleVec> InducedModule::submodule_span(const std::vector<ModuleVec>& vs) const {
  linalg::Echelon ech(field());
  std::deque<ModuleVec> queue;
  for (const auto& v : vs)
    if (ech.insert(v)) queue.push_back(v);
  const auto gens = G_->generators(level_);
  while (!queue.empty()) {
    ModuleVec v = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : gens) {
      ModuleVec w = act(g, v);
      if (ech.insert(w)) queue.push_back(std::move(w));
    }
  }
  return ech.basis();
}

std::vector<ModuleVec> InducedModule::invariants(grp::Subgroup sub) const { return invariants(sub, level_); }

std::vector<ModuleVec> InducedModule::invariants(grp::Subgroup sub, unsigned j) const {
  if (j > level_) throw std::invalid_argument("level mismatch: subgroup above the module level");
  std::vector<SparseVec> rows;
  const Scalar minus_one = -field()->one();
  for (const auto& g : G_->generators(sub, j)) {
    for (std::uint32_t k = 0; k < labels_.size(); ++k) {
      // (g v)_{l'} = c v_l with g·l = c l'; require c v_l - v_{l'} = 0
      const Term t = act(g, labels_[k]);
      const std::uint32_t k2 = position(t.label);
      if (k == k2) {
        Scalar d = t.coeff - field()->one();
        if (!d.is_zero()) rows.push_back({{k, d}});
        continue;
      }
      SparseVec row;
      if (k < k2)
        row = {{k, t.coeff}, {k2, minus_one}};
      else
        row = {{k2, minus_one}, {k, t.coeff}};
      rows.push_back(std::move(row));
    }
  }
  const auto ker = linalg::kernel(field(), rows, static_cast<std::uint32_t>(labels_.size()));
  std::vector<ModuleVec> out;
  for (const auto& v : ker) {
    ModuleVec w;
    for (const auto& [k, c] : v) w.emplace_back(labels_[k], c);
    out.push_back(std::move(w));
  }
  return out;
}

bool InducedModule::check_prop_suw(Elem x) const {
  if (x == 0) throw std::domain_error("check_prop_suw needs x != 0");
  const Group& G = *G_;
  const auto& tw = tower();
  const unsigned L = level_;
  const GroupElem s = G.s(L);
  const GroupElem ex = G.eps(x, L);
  // s ε(x) s^{-1} = f s h g, read off the Bruhat form ε(x')h(t')sε(y') = ε(x') s h(t'^{-1}) ε(y').
  const GroupElem conj = G.mul(G.mul(s, ex), G.inv(s));
  const auto form = G.bruhat(conj);
  const auto* w = std::get_if<CellBsB>(&form);
  if (!w) return false;
  const GroupElem f = G.eps(w->x, L);
  const GroupElem hx = G.h(tw.inv(w->t), L);
  const GroupElem gx = G.eps(w->y, L);
  if (!(G.mul(G.mul(f, s), G.mul(hx, gx)) == conj)) return false;
  if (!(w->x == w->y && w->x == tw.neg(tw.inv(x)))) return false;

  // (i) with w = s and J = {}: θ^s(s h s) = θ(s^{-1} (s h s) s).
  const GroupElem shs = G.mul(G.mul(s, hx), s);
  const GroupElem back = G.mul(G.mul(G.inv(s), shs), s);
  if (back.b != 0 || back.c != 0) return false;
  const ModuleVec one = basis_vector(kCell0);
  const ModuleVec lhs1 = act(G.mul(G.mul(s, ex), s), one);
  const ModuleVec rhs1 = linalg::scale(act(G.mul(f, s), one), theta_.eval(back.a));
  if (lhs1 != rhs1) return false;

  // (ii) with w = e and J = {1}.
  if (!theta_.is_trivial()) return true;
  const ModuleVec eta = eta_J(true);
  const ModuleVec lhs2 = act(G.mul(s, ex), eta);
  const ModuleVec rhs2 = linalg::axpy(act(f, eta), -field()->one(), eta);
  return lhs2 == rhs2;
}

std::string InducedModule::label_string(Label l) const {
  if (l == kCell0) return "Cell0";
  return "Cell1(" + tower().to_string(cell1_x(l)) + ")";
}

nlohmann::json InducedModule::to_json(const ModuleVec& v) const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [l, c] : v) arr.push_back({label_string(l), c.to_json()});
  return arr;
}

bool supported_in_level(const tower::Tower& tw, const ModuleVec& v, unsigned j) {
  for (const auto& [l, c] : v)
    if (is_cell1(l) && !tw.in_level(cell1_x(l), j)) return false;
  return true;
}

}  // namespace extwb::indmod
