// G_i = SL_2(F_{q^{i!}}) with entries in the tower, the PGL_2 quotient view,
// Bruhat canonical forms and enumeration of the standard subgroups.
#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "extwb/tower.hpp"

namespace extwb::grp {

using tower::Elem;
using tower::Tower;

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Mode { SL2, PGL2 };

struct GroupElem {
  Elem a = 1, b = 0, c = 0, d = 1;
  unsigned level = 1;
  Mode mode = Mode::SL2;

  /// Entries only; level and mode do not take part in equality.
  friend bool operator==(const GroupElem& x, const GroupElem& y) {
    return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
  }
  std::array<Elem, 4> key() const { return {a, b, c, d}; }
  friend bool operator<(const GroupElem& x, const GroupElem& y) { return x.key() < y.key(); }
};

/// ε(x)h(t).
struct CellB {
  Elem x, t;
};
/// ε(x)h(t)sε(y).
struct CellBsB {
  Elem x, t, y;
};
using BruhatForm = std::variant<CellB, CellBsB>;

enum class Subgroup { U, T, B, G };

class Group {
 public:
  explicit Group(const Tower& tw, std::uint64_t budget = 2'000'000) : tw_(tw), budget_(budget) {}

  const Tower& tower() const { return tw_; }
  std::uint64_t budget() const { return budget_; }

  GroupElem identity(unsigned level = 1) const { return {1, 0, 0, 1, level, Mode::SL2}; }
  GroupElem h(Elem t, unsigned level = 1) const;
  GroupElem eps(Elem x, unsigned level = 1) const;
  GroupElem s(unsigned level = 1) const;
  /// Validates det = 1 and entries in the level.
  GroupElem make(Elem a, Elem b, Elem c, Elem d, unsigned level) const;

  GroupElem mul(const GroupElem& g, const GroupElem& k) const;
  GroupElem inv(const GroupElem& g) const;
  GroupElem neg(const GroupElem& g) const;
  /// Canonical representative of {g, -g}: the smaller entry tuple.
  GroupElem canon(const GroupElem& g) const;
  bool is_valid(const GroupElem& g) const;

  /// s, h(g_i) and ε(x) for an additive basis of the level.
  std::vector<GroupElem> generators(unsigned level) const;
  std::vector<GroupElem> generators(Subgroup sub, unsigned level) const;

  BruhatForm bruhat(const GroupElem& g) const;
  GroupElem reassemble(const BruhatForm& f, unsigned level) const;

  /// s ε(a) s == ε(-a^{-1}) s h(a) ε(-a^{-1}).
  bool check_sus(Elem a) const;

  /// Deterministic enumeration; throws BudgetExceeded past the budget.
  std::vector<GroupElem> enumerate(Subgroup sub, unsigned level, Mode mode = Mode::SL2) const;
  /// Coset representatives ε(x) of U_i \ U_{i+1}: x minimal in x + F_{q^{i!}}.
  std::vector<GroupElem> enumerate_cosets(unsigned i) const;
  /// The x of the representatives above.
  std::vector<Elem> coset_reps(unsigned i) const;
  /// Predicted |subgroup| at the level.
  std::uint64_t order(Subgroup sub, unsigned level) const;

  /// One t per class {t, -t} (q odd), or all units (q even).
  std::vector<Elem> center_quotient_reps(unsigned level) const;

  std::string to_string(const GroupElem& g) const;

 private:
  void charge(std::uint64_t n) const;

  const Tower& tw_;
  std::uint64_t budget_;
};

}  // namespace extwb::grp
