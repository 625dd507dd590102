// Exact coefficient fields: rationals, cyclotomic fields Q(ζ_n) and finite
// fields F_{ℓ^m}. Scalars are immutable values bound to a shared field.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

namespace extwb::coeff {

class ModeMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DivisionByZero : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class UnsupportedOrder : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

enum class Kind { Rationals, Cyclotomic, PrimeField };

struct CoeffMode {
  Kind kind = Kind::Rationals;
  std::uint64_t n = 1;    // Cyclotomic order
  std::uint64_t ell = 0;  // PrimeField characteristic
  unsigned m = 1;         // PrimeField extension degree

  static CoeffMode rationals() { return {}; }
  static CoeffMode cyclotomic(std::uint64_t n);
  static CoeffMode prime_field(std::uint64_t ell, unsigned m = 1);

  /// 0 for characteristic zero.
  std::uint64_t characteristic() const { return kind == Kind::PrimeField ? ell : 0; }
  std::string to_string() const;

  friend bool operator==(const CoeffMode&, const CoeffMode&) = default;
};

struct CycloTerm {
  std::uint32_t exp;
  mpq_class c;
};
/// Sparse polynomial in ζ, reduced modulo Φ_n: sorted exponents < φ(n), no zero terms.
using CycloPoly = std::vector<CycloTerm>;

class Field;
using FieldPtr = std::shared_ptr<const Field>;

class Scalar {
 public:
  /// Unbound zero. Only useful as a placeholder; arithmetic needs a field.
  Scalar() = default;

  const FieldPtr& field() const { return field_; }
  const CoeffMode& mode() const;

  bool is_zero() const;
  bool is_one() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar inverse() const;

  /// Exact canonical-form equality. Scalars of different modes never compare equal.
  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  std::string to_string() const;
  nlohmann::json to_json() const;

  // Representation access for tests and serializers.
  const mpq_class* as_rational() const { return std::get_if<mpq_class>(&rep_); }
  const CycloPoly* as_cyclotomic() const;
  const std::uint64_t* as_residue() const { return std::get_if<std::uint64_t>(&rep_); }

 private:
  friend class Field;
  using CycloRep = std::shared_ptr<const CycloPoly>;  // null means zero
  using Rep = std::variant<mpq_class, CycloRep, std::uint64_t>;

  Scalar(FieldPtr f, Rep r) : field_(std::move(f)), rep_(std::move(r)) {}
  const Field& checked_field(const Scalar& o) const;

  FieldPtr field_;
  Rep rep_;
};

/// Context for one coefficient mode. Immutable apart from an internal,
/// mutex-guarded cache of reduced powers of ζ.
class Field : public std::enable_shared_from_this<Field> {
 public:
  static FieldPtr make(const CoeffMode& mode);

  const CoeffMode& mode() const { return mode_; }

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(long long v) const;
  Scalar from_rational(const mpq_class& v) const;
  /// Cyclotomic only: Σ coeffs[k] ζ^k (any length; reduced on construction).
  Scalar from_cyclotomic_coeffs(const std::vector<mpq_class>& coeffs) const;
  /// PrimeField only: element with the given residues (low degree first).
  Scalar from_residues(const std::vector<std::uint64_t>& digits) const;

  /// ζ_n^e where ζ_n is the field's fixed primitive n-th root. Throws
  /// UnsupportedOrder when the exact order of the value is not available.
  Scalar root_of_unity(std::uint64_t n, long long e) const;
  /// True iff the field contains a primitive root of unity of order o.
  bool supports_root_order(std::uint64_t o) const;

  // Cyclotomic data.
  std::uint64_t phi() const { return phi_; }
  const std::vector<long long>& cyclotomic_poly() const { return cyclo_; }

  // PrimeField data.
  std::uint64_t size() const { return fp_size_; }
  const std::vector<std::uint64_t>& fp_modulus() const { return fp_modulus_; }

 private:
  friend class Scalar;
  explicit Field(const CoeffMode& mode);

  Scalar make(Scalar::Rep r) const { return Scalar(shared_from_this(), std::move(r)); }

  // Cyclotomic arithmetic.
  Scalar::CycloRep cyc_add(const Scalar::CycloRep& a, const Scalar::CycloRep& b, bool negate_b) const;
  Scalar::CycloRep cyc_mul(const CycloPoly& a, const CycloPoly& b) const;
  Scalar::CycloRep cyc_scale(const CycloPoly& a, const mpq_class& c) const;
  Scalar::CycloRep cyc_inverse(const CycloPoly& a) const;
  Scalar::CycloRep cyc_power(std::uint64_t k) const;  // ζ^k, cached
  Scalar::CycloRep reduce_dense(std::vector<mpq_class>& buf) const;

  // F_{ℓ^m} arithmetic on packed base-ℓ integers.
  std::uint64_t fp_add(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t fp_neg(std::uint64_t a) const;
  std::uint64_t fp_mul(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t fp_pow(std::uint64_t a, std::uint64_t e) const;
  std::uint64_t fp_inv(std::uint64_t a) const;

  CoeffMode mode_;

  std::uint64_t phi_ = 1;
  std::vector<long long> cyclo_;  // Φ_n, dense, low degree first
  std::vector<std::pair<std::uint32_t, long long>> cyclo_low_;  // nonzero terms below the leading one
  mutable std::mutex cache_mu_;
  mutable std::map<std::uint64_t, Scalar::CycloRep> power_cache_;

  std::uint64_t fp_size_ = 0;
  std::vector<std::uint64_t> fp_modulus_;  // monic, degree m
  std::uint64_t fp_generator_ = 0;         // generator of F_{ℓ^m}^×
};

/// Smallest prime ℓ >= floor with ℓ ≡ 1 (mod n) and ℓ != avoid.
std::uint64_t find_prime_one_mod(std::uint64_t n, std::uint64_t floor, std::uint64_t avoid = 0);

bool is_prime(std::uint64_t v);
std::vector<std::uint64_t> prime_factors(std::uint64_t v);
std::uint64_t euler_phi(std::uint64_t n);
/// Φ_n with integer coefficients, low degree first.
std::vector<long long> cyclotomic_polynomial(std::uint64_t n);

}  // namespace extwb::coeff
