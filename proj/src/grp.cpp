#include "extwb/grp.hpp"

#include <algorithm>

namespace extwb::grp {

void Group::charge(std::uint64_t n) const {
  if (n > budget_)
    throw BudgetExceeded("enumeration of " + std::to_string(n) + " elements exceeds budget " + std::to_string(budget_));
}

GroupElem Group::h(Elem t, unsigned level) const {
  if (t == 0) throw std::domain_error("h(t) needs t != 0");
  return {t, 0, 0, tw_.inv(t), level, Mode::SL2};
}

GroupElem Group::eps(Elem x, unsigned level) const { return {1, x, 0, 1, level, Mode::SL2}; }

GroupElem Group::s(unsigned level) const { return {0, tw_.neg(1), 1, 0, level, Mode::SL2}; }

GroupElem Group::make(Elem a, Elem b, Elem c, Elem d, unsigned level) const {
  GroupElem g{a, b, c, d, level, Mode::SL2};
  if (!is_valid(g)) throw std::invalid_argument("matrix is not in SL2 at level " + std::to_string(level));
  return g;
}

bool Group::is_valid(const GroupElem& g) const {
  for (Elem e : {g.a, g.b, g.c, g.d})
    if (e >= tw_.size() || !tw_.in_level(e, g.level)) return false;
  return tw_.sub(tw_.mul(g.a, g.d), tw_.mul(g.b, g.c)) == 1;
}

GroupElem Group::mul(const GroupElem& g, const GroupElem& k) const {
  const Tower& t = tw_;
  GroupElem r{t.add(t.mul(g.a, k.a), t.mul(g.b, k.c)), t.add(t.mul(g.a, k.b), t.mul(g.b, k.d)),
              t.add(t.mul(g.c, k.a), t.mul(g.d, k.c)), t.add(t.mul(g.c, k.b), t.mul(g.d, k.d)),
              std::max(g.level, k.level), g.mode == Mode::PGL2 || k.mode == Mode::PGL2 ? Mode::PGL2 : Mode::SL2};
  return r.mode == Mode::PGL2 ? canon(r) : r;
}

GroupElem Group::inv(const GroupElem& g) const {
  GroupElem r{g.d, tw_.neg(g.b), tw_.neg(g.c), g.a, g.level, g.mode};
  return g.mode == Mode::PGL2 ? canon(r) : r;
}

GroupElem Group::neg(const GroupElem& g) const {
  return {tw_.neg(g.a), tw_.neg(g.b), tw_.neg(g.c), tw_.neg(g.d), g.level, g.mode};
}

GroupElem Group::canon(const GroupElem& g) const {
  GroupElem m = neg(g);
  GroupElem r = m.key() < g.key() ? m : g;
  r.mode = Mode::PGL2;
  return r;
}

std::vector<GroupElem> Group::generators(unsigned level) const { return generators(Subgroup::G, level); }

std::vector<GroupElem> Group::generators(Subgroup sub, unsigned level) const {
  std::vector<GroupElem> gens;
  if (sub == Subgroup::G) gens.push_back(s(level));
  if (sub != Subgroup::U) {
    const Elem g = tw_.chain_generator(level);
    if (g != 1) gens.push_back(h(g, level));
  }
  if (sub != Subgroup::T)
    for (Elem x : tw_.additive_basis(level)) gens.push_back(eps(x, level));
  return gens;
}

BruhatForm Group::bruhat(const GroupElem& g) const {
  if (g.c == 0) return CellB{tw_.mul(g.a, g.b), g.a};
  return CellBsB{tw_.div(g.a, g.c), tw_.inv(g.c), tw_.div(g.d, g.c)};
}

GroupElem Group::reassemble(const BruhatForm& f, unsigned level) const {
  if (const auto* b = std::get_if<CellB>(&f)) return mul(eps(b->x, level), h(b->t, level));
  const auto& w = std::get<CellBsB>(f);
  return mul(mul(eps(w.x, level), h(w.t, level)), mul(s(level), eps(w.y, level)));
}

bool Group::check_sus(Elem a) const {
  if (a == 0) throw std::domain_error("check_sus needs a != 0");
  const GroupElem lhs = mul(mul(s(), eps(a)), s());
  const GroupElem e = eps(tw_.neg(tw_.inv(a)));
  const GroupElem rhs = mul(mul(e, s()), mul(h(a), e));
  return lhs == rhs;
}

std::uint64_t Group::order(Subgroup sub, unsigned level) const {
  const std::uint64_t Q = tw_.level_size(level);
  switch (sub) {
    case Subgroup::U:
      return Q;
    case Subgroup::T:
      return Q - 1;
    case Subgroup::B:
      return Q * (Q - 1);
    case Subgroup::G:
      return Q * (Q * Q - 1);
  }
  return 0;
}

std::vector<GroupElem> Group::enumerate(Subgroup sub, unsigned level, Mode mode) const {
  charge(order(sub, level));
  const auto& F = tw_.enumerate_level(level);
  std::vector<GroupElem> out;
  auto push = [&](GroupElem g) {
    g.level = level;
    if (mode == Mode::PGL2) {
      if (!(canon(g) == g)) return;
      g.mode = Mode::PGL2;
    }
    out.push_back(g);
  };
  switch (sub) {
    case Subgroup::U:
      for (Elem x : F) push(eps(x, level));
      break;
    case Subgroup::T:
      for (Elem t : F)
        if (t) push(h(t, level));
      break;
    case Subgroup::B:
      for (Elem t : F) {
        if (!t) continue;
        for (Elem x : F) push(mul(eps(x, level), h(t, level)));
      }
      break;
    case Subgroup::G: {
      if (F.size() > 1 && static_cast<double>(F.size()) * F.size() * F.size() > 4.0 * budget_)
        throw BudgetExceeded("matrix scan for G exceeds budget");
      for (Elem a : F)
        for (Elem b : F)
          for (Elem c : F) {
            if (a != 0) {
              push({a, b, c, tw_.div(tw_.add(1, tw_.mul(b, c)), a), level, Mode::SL2});
            } else if (b != 0 && c == tw_.neg(tw_.inv(b))) {
              for (Elem d : F) push({a, b, c, d, level, Mode::SL2});
            }
          }
      break;
    }
  }
  return out;
}

std::vector<Elem> Group::coset_reps(unsigned i) const {
  const auto& sub = tw_.enumerate_level(i);
  const auto& big = tw_.enumerate_level(i + 1);
  charge(big.size());
  std::vector<Elem> reps;
  for (Elem x : big) {
    bool minimal = true;
    for (Elem u : sub) {
      if (tw_.add(x, u) < x) {
        minimal = false;
        break;
      }
    }
    if (minimal) reps.push_back(x);
  }
  return reps;
}

std::vector<GroupElem> Group::enumerate_cosets(unsigned i) const {
  std::vector<GroupElem> out;
  for (Elem x : coset_reps(i)) out.push_back(eps(x, i + 1));
  return out;
}

std::vector<Elem> Group::center_quotient_reps(unsigned level) const {
  std::vector<Elem> out;
  for (Elem t : tw_.units(level))
    if (tw_.p() == 2 || t < tw_.neg(t)) out.push_back(t);
  return out;
}

std::string Group::to_string(const GroupElem& g) const {
  return "[[" + tw_.to_string(g.a) + "," + tw_.to_string(g.b) + "],[" + tw_.to_string(g.c) + "," +
         tw_.to_string(g.d) + "]]";
}

}  // namespace extwb::grp
