// Hom and Ext^1 over a small finite group G_i via 1-cocycles, splitting
// finder, the torus-cochain normalization and a Coxeter order checker.
#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "extwb/charmod.hpp"
#include "extwb/grp.hpp"
#include "extwb/indmod.hpp"
#include "extwb/linalg.hpp"

namespace extwb::cohom {

using coeff::FieldPtr;
using coeff::Scalar;
using grp::Group;
using grp::GroupElem;

class NotACochain : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Dense matrix over a coefficient field.
struct Mat {
  std::size_t rows = 0, cols = 0;
  std::vector<Scalar> a;

  static Mat zero(const FieldPtr& f, std::size_t r, std::size_t c);
  static Mat identity(const FieldPtr& f, std::size_t n);
  Scalar& operator()(std::size_t r, std::size_t c) { return a[r * cols + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return a[r * cols + c]; }
  Mat operator*(const Mat& o) const;
  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  Mat operator-() const;
  bool is_zero() const;
  friend bool operator==(const Mat& x, const Mat& y) { return x.rows == y.rows && x.cols == y.cols && x.a == y.a; }
};

/// A finite group G_i with its elements, generators, multiplication table
/// and a BFS spanning tree of the right Cayley graph.
class FiniteGroup {
 public:
  FiniteGroup(const Group& G, unsigned level);

  const Group& group() const { return *G_; }
  unsigned level() const { return level_; }
  std::size_t size() const { return elems_.size(); }
  const std::vector<GroupElem>& elements() const { return elems_; }
  const std::vector<GroupElem>& generators() const { return gens_; }
  std::size_t index(const GroupElem& g) const;
  std::size_t mul(std::size_t x, std::size_t y) const { return table_[x * elems_.size() + y]; }
  std::size_t identity() const { return id_; }

  struct Edge {
    std::size_t from, gen, to;
    bool tree;
  };
  /// Every (g, gen) edge, in BFS order from the identity.
  const std::vector<Edge>& edges() const { return edges_; }

 private:
  const Group* G_;
  unsigned level_;
  std::vector<GroupElem> elems_;
  std::vector<GroupElem> gens_;
  std::map<std::array<tower::Elem, 4>, std::size_t> index_;
  std::vector<std::size_t> table_;
  std::size_t id_ = 0;
  std::vector<Edge> edges_;
};

/// Matrices for every group element, assembled along the BFS tree and
/// certified on every cross edge.
class FiniteRep {
 public:
  FiniteRep(std::shared_ptr<const FiniteGroup> grp, FieldPtr field, std::vector<Mat> gen_mats, std::string name);

  const FiniteGroup& group() const { return *grp_; }
  const std::shared_ptr<const FiniteGroup>& group_ptr() const { return grp_; }
  const FieldPtr& field() const { return field_; }
  std::size_t dim() const { return dim_; }
  const Mat& gen(std::size_t k) const { return gen_mats_[k]; }
  const Mat& of(std::size_t g) const { return mats_[g]; }
  const std::string& name() const { return name_; }
  /// Number of cross edges checked when certifying.
  std::size_t cross_edges() const { return cross_edges_; }

 private:
  std::shared_ptr<const FiniteGroup> grp_;
  FieldPtr field_;
  std::size_t dim_ = 0;
  std::vector<Mat> gen_mats_;
  std::vector<Mat> mats_;
  std::string name_;
  std::size_t cross_edges_ = 0;
};

FiniteRep trivial_rep(std::shared_ptr<const FiniteGroup> grp, FieldPtr field);
/// M_i(θ) in the Cell0, Cell1(x) basis.
FiniteRep induced_rep(std::shared_ptr<const FiniteGroup> grp, const charmod::TorusChar& theta);
/// St_i in the basis ε(x)η.
FiniteRep steinberg_rep(std::shared_ptr<const FiniteGroup> grp, const charmod::TorusChar& any_char);

/// Basis of {X : ρ_N(g) X = X ρ_M(g) for generators g}.
std::vector<Mat> hom_space(const FiniteRep& M, const FiniteRep& N);

struct Ext1Result {
  std::size_t dim_z1 = 0;
  std::size_t dim_b1 = 0;
  std::size_t ext1() const { return dim_z1 - dim_b1; }
  /// Cocycles on generators spanning a complement of B^1 in Z^1 (reduced solver only).
  std::vector<std::vector<Mat>> transversal;
  std::size_t unknowns = 0;
  std::size_t equations = 0;
};

/// Cocycles given by their generator values, propagated along the BFS tree.
Ext1Result ext1_reduced(const FiniteRep& M, const FiniteRep& N);
/// All C(g) unknown, all |G|^2 cocycle equations.
Ext1Result ext1_unreduced(const FiniteRep& M, const FiniteRep& N);

/// ρ_N(g) φ - φ ρ_M(g) on each generator.
std::vector<Mat> coboundary(const FiniteRep& M, const FiniteRep& N, const Mat& phi);
/// Extends generator values of a cocycle to all elements; nullopt if the
/// cocycle law fails on some edge.
std::optional<std::vector<Mat>> propagate_cocycle(const FiniteRep& M, const FiniteRep& N,
                                                  const std::vector<Mat>& on_gens);

struct Splitting {
  bool split = false;
  Mat phi;
  /// The complement {(-φ m, m)} of N in the extension is stable under every generator.
  bool complement_certified = false;
};
/// Extension N -> E -> M with E(g) = [[ρ_N(g), C(g)], [0, ρ_M(g)]].
Splitting find_splitting(const FiniteRep& M, const FiniteRep& N, const std::vector<Mat>& cocycle_on_gens);

struct Normalization {
  enum class Status { AlreadyNormal, Corrected, Obstruction };
  Status status = Status::AlreadyNormal;
  std::optional<Scalar> a;
  std::string note;
};
std::string to_string(Normalization::Status s);

/// φ on T_i given as values at tower().units(i), in that order.
Normalization normalize_extension(const charmod::TorusChar& theta, unsigned level, const std::vector<Scalar>& phi);
/// φ(x) - a(θ(x) - 1).
std::vector<Scalar> apply_correction(const charmod::TorusChar& theta, unsigned level, const std::vector<Scalar>& phi,
                                     const Scalar& a);

struct CoxeterCheck {
  unsigned m = 0;
  std::uint64_t characteristic = 0;
  bool forces_zero = false;
  /// φ((rs)^m) = m(φ(s) - φ(r)) along the alternating word.
  bool recurrence_holds = false;
};
/// Decides whether m·x = 0 forces x = 0 in characteristic ch (0 allowed).
CoxeterCheck coxeter_check(unsigned m, std::uint64_t ch);

/// dim Hom(M(λ), M(μ)) over G_i by walking the B-double cosets (char 0).
std::size_t hom_dim_double_coset(const FiniteGroup& grp, const charmod::TorusChar& lambda,
                                 const charmod::TorusChar& mu);

}  // namespace extwb::cohom
