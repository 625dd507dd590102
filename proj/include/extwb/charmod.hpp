// Torus characters θ(h(t)) = ζ_N^{e·log t}, N = q^{imax!} - 1, evaluated
// exactly in a coefficient field.
#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "extwb/coeff.hpp"
#include "extwb/tower.hpp"

namespace extwb::charmod {

using coeff::FieldPtr;
using coeff::Scalar;
using tower::Elem;
using tower::Tower;

class TorusChar {
 public:
  TorusChar(const Tower& tw, FieldPtr field, long long e);

  const Tower& tower() const { return *tw_; }
  const FieldPtr& field() const { return field_; }
  /// Exponent reduced into [0, N).
  std::uint64_t exponent() const { return e_; }
  std::uint64_t modulus() const { return tw_->order(); }

  /// θ(t); throws for t = 0.
  const Scalar& eval(Elem t) const;
  /// θ(t)^{-1}.
  const Scalar& eval_inv(Elem t) const;

  TorusChar weyl_twist() const { return with_exponent(-static_cast<long long>(e_)); }
  TorusChar with_exponent(long long e) const { return TorusChar(*tw_, field_, e); }

  bool is_trivial() const { return e_ == 0; }
  /// Trivial on the level-i torus.
  bool is_trivial_on_level(unsigned i) const;
  bool is_trivial_on_center() const;
  /// {1} if trivial, else empty.
  std::vector<int> i_theta() const;

  friend bool operator==(const TorusChar& a, const TorusChar& b) { return a.e_ == b.e_; }

 private:
  struct Cache {
    std::mutex mu;
    std::vector<std::optional<Scalar>> values;  // indexed by e·log t mod N
  };
  const Scalar& value_at(std::uint64_t k) const;

  const Tower* tw_;
  FieldPtr field_;
  std::uint64_t e_;
  std::shared_ptr<Cache> cache_;
};

/// ν = (μ^{w0})^{-1} λ, exponent e_λ + e_μ.
TorusChar nu(const TorusChar& lambda, const TorusChar& mu);

/// Default coefficient mode for a tower: Cyclotomic(q^{imax!} - 1).
coeff::CoeffMode default_mode(const Tower& tw);

}  // namespace extwb::charmod
