// The induced module M_i(θ) with basis 1_θ (Cell0) and ε(x)s·1_θ (Cell1(x)).
// Vectors are sparse maps label -> scalar with label 0 = Cell0 and
// label x+1 = Cell1(x).
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "extwb/charmod.hpp"
#include "extwb/grp.hpp"
#include "extwb/linalg.hpp"

namespace extwb::indmod {

using charmod::TorusChar;
using coeff::FieldPtr;
using coeff::Scalar;
using grp::Group;
using grp::GroupElem;
using linalg::SparseVec;
using tower::Elem;

using Label = std::uint32_t;
inline constexpr Label kCell0 = 0;
inline Label cell1(Elem x) { return x + 1; }
inline bool is_cell1(Label l) { return l != kCell0; }
inline Elem cell1_x(Label l) { return l - 1; }

using ModuleVec = SparseVec;

struct Term {
  Label label;
  Scalar coeff;
};

class InducedModule {
 public:
  InducedModule(const Group& G, TorusChar theta, unsigned level);

  const Group& group() const { return *G_; }
  const tower::Tower& tower() const { return G_->tower(); }
  const TorusChar& theta() const { return theta_; }
  const FieldPtr& field() const { return theta_.field(); }
  unsigned level() const { return level_; }
  std::size_t dim() const { return labels_.size(); }
  /// Cell0, then Cell1(x) in element order.
  const std::vector<Label>& labels() const { return labels_; }
  bool has_label(Label l) const;
  /// Position of a label in labels().
  std::uint32_t position(Label l) const;

  ModuleVec basis_vector(Label l) const;

  // Generator rules.
  Term act_h(Elem t, Label l) const;
  Term act_eps(Elem a, Label l) const;
  Term act_s(Label l) const;
  /// g acts monomially; computed from its Bruhat factorization.
  Term act(const GroupElem& g, Label l) const;
  ModuleVec act(const GroupElem& g, const ModuleVec& v) const;
  /// Independent check: multiply the coset matrix of l by g and re-decompose.
  Term act_oracle(const GroupElem& g, Label l) const;

  /// Σ_{u ∈ U_j} u·v by bucketing labels along U_j-orbits.
  ModuleVec sum_over_U(unsigned j, const ModuleVec& v) const;

  /// η(θ)_J for J = {} or {1}; J = {1} needs θ trivial.
  ModuleVec eta_J(bool J_full) const;
  /// {ε(x)η : x in the level}, θ trivial.
  std::vector<ModuleVec> steinberg_basis() const;
  /// Closure of the vectors under the level's generators; echelon basis.
  std::vector<ModuleVec> submodule_span(const std::vector<ModuleVec>& vs) const;
  /// Kernel of the stacked (g - 1) over the subgroup's generators at the module level.
  std::vector<ModuleVec> invariants(grp::Subgroup sub) const;
  /// Same, for the level-j subgroup acting on this module.
  std::vector<ModuleVec> invariants(grp::Subgroup sub, unsigned j) const;

  /// s ε(x) η = (ε(-x^{-1}) - 1) η (θ trivial) and the rank-1 reading of
  /// s ε(x) s 1_θ = θ^s(s h(x) s) f(x) s 1_θ.
  bool check_prop_suw(Elem x) const;

  std::string label_string(Label l) const;
  nlohmann::json to_json(const ModuleVec& v) const;

 private:
  const Group* G_;
  TorusChar theta_;
  unsigned level_;
  std::vector<Label> labels_;
  std::vector<std::int64_t> pos_;  // label -> position, -1 when absent
};

/// True iff all labels of v live in M_j, i.e. Cell0 or Cell1(x) with x at level j.
bool supported_in_level(const tower::Tower& tw, const ModuleVec& v, unsigned j);

}  // namespace extwb::indmod
