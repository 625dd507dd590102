#include <doctest.h>

#include <random>

#include "extwb/linalg.hpp"

using namespace extwb;
using coeff::Scalar;
using linalg::SparseVec;

namespace {

// Dense rank over Q by textbook Gaussian elimination on mpq_class.
std::size_t dense_rank(std::vector<std::vector<mpq_class>> m) {
  std::size_t rank = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t piv = rank;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[rank]);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == rank || m[r][c] == 0) continue;
      const mpq_class f = m[r][c] / m[rank][c];
      for (std::size_t k = c; k < cols; ++k) m[r][k] -= f * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

SparseVec to_sparse(const coeff::FieldPtr& F, const std::vector<mpq_class>& row) {
  SparseVec v;
  for (std::uint32_t k = 0; k < row.size(); ++k)
    if (row[k] != 0) v.emplace_back(k, F->from_rational(row[k]));
  return v;
}

Scalar dot(const coeff::FieldPtr& F, const SparseVec& a, const SparseVec& b) {
  Scalar s = F->zero();
  for (const auto& [i, x] : a) s += x * linalg::coeff_at(b, i, F);
  return s;
}

}  // namespace

TEST_CASE("rank and kernel agree with dense elimination") {
  auto F = coeff::Field::make(coeff::CoeffMode::rationals());
  std::mt19937 rng(12345);
  std::uniform_int_distribution<int> val(-3, 3), zero(0, 2);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t rows = 1 + trial % 7, cols = 2 + (trial * 3) % 8;
    std::vector<std::vector<mpq_class>> m(rows, std::vector<mpq_class>(cols));
    for (auto& r : m)
      for (auto& x : r) x = zero(rng) ? 0 : val(rng);
    if (trial % 5 == 0 && rows > 1) m[rows - 1] = m[0];  // force a dependency
    std::vector<SparseVec> sp;
    linalg::Echelon ech(F);
    for (const auto& r : m) {
      sp.push_back(to_sparse(F, r));
      ech.insert(sp.back());
    }
    const std::size_t rk = dense_rank(m);
    CHECK(ech.rank() == rk);
    for (const auto& r : sp) CHECK(ech.contains(r));
    const auto ker = linalg::kernel(F, sp, static_cast<std::uint32_t>(cols));
    CHECK(ker.size() == cols - rk);
    for (const auto& k : ker)
      for (const auto& r : sp) CHECK(dot(F, r, k).is_zero());
  }
}

TEST_CASE("inhomogeneous solve") {
  auto F = coeff::Field::make(coeff::CoeffMode::prime_field(5));
  // x0 + x1 = 1, x1 + x2 = 2.
  std::vector<SparseVec> rows = {{{0, F->one()}, {1, F->one()}}, {{1, F->one()}, {2, F->one()}}};
  auto sol = linalg::solve(F, rows, {F->one(), F->from_int(2)}, 3);
  REQUIRE(sol);
  CHECK(dot(F, rows[0], *sol) == F->one());
  CHECK(dot(F, rows[1], *sol) == F->from_int(2));
  // Inconsistent: x0 = 1 and x0 = 2.
  std::vector<SparseVec> bad = {{{0, F->one()}}, {{0, F->one()}}};
  CHECK_FALSE(linalg::solve(F, bad, {F->one(), F->from_int(2)}, 1));
}

TEST_CASE("sparse vector helpers") {
  auto F = coeff::Field::make(coeff::CoeffMode::rationals());
  SparseVec a = {{1, F->from_int(2)}, {4, F->one()}};
  SparseVec b = {{1, F->from_int(-2)}, {3, F->one()}};
  const auto s = linalg::add(a, b);
  REQUIRE(s.size() == 2);
  CHECK(s[0].first == 3);
  CHECK(linalg::axpy(a, F->from_int(-1), a).empty());
  CHECK(linalg::scale(a, F->zero()).empty());
  linalg::Echelon ech(F);
  ech.insert(a);
  ech.insert(b);
  ech.make_reduced();
  for (const auto& row : ech.basis()) CHECK(row.front().second.is_one());
  CHECK(ech.pivots().size() == 2);
}
