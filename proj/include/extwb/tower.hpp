// The tower F_q ⊂ F_{q^{2!}} ⊂ ... ⊂ F_{q^{imax!}}, realized inside one
// ambient field with log/antilog tables. Elements are ambient indices: the
// integer Σ c_j p^j of the coefficient vector over F_p.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace extwb::tower {

using Elem = std::uint32_t;

class EmptySelection : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

struct TowerConfig {
  std::uint64_t p = 2;
  unsigned r = 1;  // q = p^r
  unsigned imax = 2;
  /// Monic defining polynomial over F_p, low degree first. Empty: first
  /// irreducible polynomial in lexicographic order.
  std::vector<std::uint64_t> poly;

  /// Parses q as a prime power; throws std::invalid_argument otherwise.
  static TowerConfig from_q(std::uint64_t q, unsigned imax);
  std::uint64_t q() const;
};

/// Largest ambient size the tables accept.
inline constexpr std::uint64_t kMaxAmbient = std::uint64_t{1} << 22;

std::uint64_t factorial(unsigned n);
/// q = p^r with p prime, or throws "q must be a prime power".
std::pair<std::uint64_t, unsigned> split_prime_power(std::uint64_t q);

class Tower {
 public:
  explicit Tower(TowerConfig cfg);

  const TowerConfig& config() const { return cfg_; }
  std::uint64_t p() const { return cfg_.p; }
  std::uint64_t q() const { return q_; }
  unsigned imax() const { return cfg_.imax; }
  /// Ambient degree over F_p.
  unsigned degree() const { return n_; }
  std::uint64_t size() const { return size_; }
  /// q^{imax!} - 1.
  std::uint64_t order() const { return size_ - 1; }
  const std::vector<std::uint64_t>& poly() const { return poly_; }

  /// Degree over F_p of the level-i field: r·i!.
  unsigned level_degree(unsigned i) const;
  /// q^{i!}.
  std::uint64_t level_size(unsigned i) const;

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem from_int(long long v) const;
  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const;
  Elem div(Elem a, Elem b) const;
  Elem inv(Elem a) const;
  Elem pow(Elem a, long long e) const;
  /// Generator of the ambient multiplicative group (first primitive element).
  Elem generator() const { return exp_[1]; }
  /// Discrete log against generator(); throws for 0.
  std::uint64_t log(Elem a) const;
  Elem exp(std::uint64_t k) const { return exp_[k % order()]; }

  /// x^(p^d) = x. d must divide the ambient degree.
  bool is_in_subfield(Elem x, unsigned d) const;
  bool in_level(Elem x, unsigned i) const { return is_in_subfield(x, level_degree(i)); }
  /// Frobenius test x^(q^k) = x without a divisibility precondition.
  bool fixed_by_frobenius(Elem x, std::uint64_t k) const;

  /// All q^{i!} elements of the level-i field in ambient index order.
  const std::vector<Elem>& enumerate_level(unsigned i) const;
  /// Nonzero elements of level i in index order.
  std::vector<Elem> units(unsigned i) const;
  /// An F_p-basis of the level-i field, chosen greedily in index order.
  std::vector<Elem> additive_basis(unsigned i) const;

  /// g_i = g^{(Q-1)/(q^{i!}-1)}; order q^{i!}-1 exactly.
  Elem chain_generator(unsigned i) const;
  /// e with g_i^e = x, 0 <= e < q^{i!}-1.
  std::uint64_t dlog(Elem x, unsigned i) const;

  /// First element of level i+1 outside level i.
  Elem pick_a(unsigned i) const;
  /// First element of level i+1 with x^{q^{2 i!}} != x.
  Elem pick_b(unsigned i) const;

  std::string to_string(Elem x) const;
  std::vector<std::uint64_t> coefficients(Elem x) const;

 private:
  TowerConfig cfg_;
  std::uint64_t q_ = 0;
  unsigned n_ = 0;
  std::uint64_t size_ = 0;
  std::vector<std::uint64_t> poly_;
  std::vector<Elem> exp_;           // exp_[k] = g^k, k < order
  std::vector<std::uint32_t> log_;  // log_[x], x != 0
  std::vector<std::int64_t> zech_;  // zech_[k] = log(1 + g^k), -1 when zero
  std::vector<std::vector<Elem>> levels_;
};

}  // namespace extwb::tower
