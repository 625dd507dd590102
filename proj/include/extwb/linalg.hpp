// Sparse exact linear algebra over a coefficient field: echelon bases with
// first-nonzero pivoting, kernels and inhomogeneous solves.
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "extwb/coeff.hpp"

namespace extwb::linalg {

using coeff::FieldPtr;
using coeff::Scalar;

/// Sorted by index, no zero entries.
using SparseVec = std::vector<std::pair<std::uint32_t, Scalar>>;

SparseVec add(const SparseVec& a, const SparseVec& b);
SparseVec scale(const SparseVec& a, const Scalar& c);
/// a + c·b.
SparseVec axpy(const SparseVec& a, const Scalar& c, const SparseVec& b);
SparseVec from_map(std::map<std::uint32_t, Scalar>&& m);
Scalar coeff_at(const SparseVec& v, std::uint32_t idx, const FieldPtr& field);

class Echelon {
 public:
  explicit Echelon(FieldPtr field) : field_(std::move(field)) {}

  /// Reduces v against the basis; zero iff v is in the span.
  SparseVec reduce(const SparseVec& v) const;
  /// Adds v if independent; returns whether the rank grew.
  bool insert(const SparseVec& v);
  bool contains(const SparseVec& v) const { return reduce(v).empty(); }
  std::size_t rank() const { return rows_.size(); }
  std::vector<std::uint32_t> pivots() const;
  /// Rows with pivot coefficient 1, in pivot order.
  std::vector<SparseVec> basis() const;
  /// Brings the basis to reduced row echelon form.
  void make_reduced();
  const FieldPtr& field() const { return field_; }

 private:
  FieldPtr field_;
  std::map<std::uint32_t, SparseVec> rows_;
};

/// Basis of {x : row·x = 0 for every row}, x indexed by [0, ncols). One
/// vector per free column, with that column set to 1.
std::vector<SparseVec> kernel(const FieldPtr& field, const std::vector<SparseVec>& rows, std::uint32_t ncols);

/// A solution of row_k·x = rhs_k, or nullopt when inconsistent.
std::optional<SparseVec> solve(const FieldPtr& field, const std::vector<SparseVec>& rows,
                               const std::vector<Scalar>& rhs, std::uint32_t ncols);

}  // namespace extwb::linalg
