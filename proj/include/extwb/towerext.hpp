// The direct systems F (k_λ by M(μ) over B), H (tr by M(θ)) and L (St by
// M(θ)) at finite levels: special vectors, connecting maps and
// non-splitness membership certificates.
#pragma once

#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "extwb/counting.hpp"
#include "extwb/indmod.hpp"

namespace extwb::towerext {

using charmod::TorusChar;
using coeff::Scalar;
using grp::Group;
using grp::GroupElem;
using indmod::InducedModule;
using indmod::ModuleVec;
using tower::Elem;

class CenterMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class System { F, H, L };
std::string to_string(System s);
System system_from_string(const std::string& s);

/// η_i = Σ_{t ∈ T_i/C} ν(t)^{-1} Σ_{u ∈ U_i} Cell1(a_i t² + u) in M_{i+1}(μ).
ModuleVec build_eta(const Group& G, const TorusChar& lambda, const TorusChar& mu, unsigned i);
/// Same with an explicit a in place of a_i.
ModuleVec build_eta_with(const Group& G, const TorusChar& lambda, const TorusChar& mu, unsigned i, Elem a);
/// U_i-invariance and h(t)η = weight(t)η for all t in T_i, η built from (λ, μ).
bool check_eta_weight(const Group& G, const TorusChar& lambda, const TorusChar& mu, unsigned i,
                      const TorusChar& weight);

/// ξ_i via B_i and U_i s B_i; b defaults to pick_b(i).
ModuleVec build_xi(const Group& G, const TorusChar& theta, unsigned i, std::optional<Elem> b = std::nullopt);
/// Σ over PGL_2 representatives g of G_i of g·Cell1(b).
ModuleVec build_xi_naive(const Group& G, const TorusChar& theta, unsigned i, std::optional<Elem> b = std::nullopt);

/// Labels of the two sums defining ζ_i, in term order (with repetitions).
/// Terms with b t² + a = 0 are skipped; they only arise for b in F_{q^{i!}}.
std::vector<indmod::Label> zeta_term_labels(const Group& G, unsigned i, Elem b);
/// First repeated label among zeta_term_labels, if any.
std::optional<indmod::Label> zeta_collision(const Group& G, unsigned i, Elem b);
ModuleVec build_zeta(const Group& G, const TorusChar& theta, unsigned i, std::optional<Elem> b = std::nullopt);

struct ZetaRelations {
  bool s_negates = false;
  bool torus_fixes = false;
  bool s_eps = false;
  std::size_t torus_checked = 0;
  std::size_t eps_checked = 0;
  bool all() const { return s_negates && torus_fixes && s_eps; }
};
ZetaRelations check_zeta_relations(const Group& G, const TorusChar& theta, unsigned i);

/// Element of F_i, H_i or L_i. F and H carry a scalar on top; L carries a
/// St_i vector written in M_i(tr) coordinates.
struct ExtVec {
  unsigned level = 1;
  Scalar a;
  ModuleVec top;
  ModuleVec bottom;
  friend bool operator==(const ExtVec& x, const ExtVec& y) {
    return x.a == y.a && x.top == y.top && x.bottom == y.bottom;
  }
};

/// One of the three systems with its characters; special vectors are cached per level.
class ExtSystem {
 public:
  /// F uses (lambda, mu); H and L use theta = lambda and ignore mu.
  ExtSystem(const Group& G, System sys, TorusChar lambda, TorusChar mu);

  System system() const { return sys_; }
  const Group& group() const { return *G_; }
  /// Lowest level i with a connecting map i -> i+1.
  unsigned first_level() const { return sys_ == System::F ? 1 : 2; }
  const InducedModule& bottom_module(unsigned level) const;
  const InducedModule& steinberg_module(unsigned level) const;
  /// η_i, ξ_i or ζ_i in M_{i+1}.
  const ModuleVec& special(unsigned i) const;

  ExtVec act(const GroupElem& g, const ExtVec& v) const;
  ExtVec connect(const ExtVec& v) const;
  /// f_{i,j}, h_{i,j} or l_{i,j} in closed form.
  ExtVec connect_composed(const ExtVec& v, unsigned j) const;

  /// Spanning set of the level-i term.
  std::vector<ExtVec> spanning_set(unsigned i) const;
  /// Kernel of connect at level i is zero.
  bool check_injective(unsigned i) const;
  bool check_equivariance(unsigned i, const std::vector<GroupElem>& sample) const;
  /// Composite of two connects from level i equals the closed form.
  bool check_composition(unsigned i) const;

  /// Membership certificate for the connecting vector at level i.
  nlohmann::json nonsplit_certificate(unsigned i) const;

 private:
  void check_level(unsigned i) const;
  linalg::SparseVec flatten(const ExtVec& v) const;

  const Group* G_;
  System sys_;
  TorusChar lambda_;
  TorusChar mu_;
  mutable std::map<unsigned, std::unique_ptr<InducedModule>> bottom_;
  mutable std::map<unsigned, std::unique_ptr<InducedModule>> st_;
  mutable std::map<unsigned, ModuleVec> special_;
};

/// Counting inequality quoted alongside the system's certificate: clm for F,
/// eq36 for H, noLG for L.
counting::Inequality backing_inequality(System sys, std::uint64_t q, unsigned i);

}  // namespace extwb::towerext
