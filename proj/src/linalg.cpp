#include "extwb/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace extwb::linalg {

SparseVec axpy(const SparseVec& a, const Scalar& c, const SparseVec& b) {
  SparseVec out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      Scalar v = c * b[j].second;
      if (!v.is_zero()) out.emplace_back(b[j].first, std::move(v));
      ++j;
    } else {
      Scalar v = a[i].second + c * b[j].second;
      if (!v.is_zero()) out.emplace_back(a[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

SparseVec add(const SparseVec& a, const SparseVec& b) {
  if (b.empty()) return a;
  return axpy(a, b.front().second.field()->one(), b);
}

SparseVec scale(const SparseVec& a, const Scalar& c) {
  SparseVec out;
  if (c.is_zero()) return out;
  out.reserve(a.size());
  for (const auto& [k, v] : a) out.emplace_back(k, v * c);
  return out;
}

SparseVec from_map(std::map<std::uint32_t, Scalar>&& m) {
  SparseVec out;
  out.reserve(m.size());
  for (auto& [k, v] : m)
    if (!v.is_zero()) out.emplace_back(k, std::move(v));
  return out;
}

Scalar coeff_at(const SparseVec& v, std::uint32_t idx, const FieldPtr& field) {
  auto it = std::lower_bound(v.begin(), v.end(), idx, [](const auto& e, std::uint32_t k) { return e.first < k; });
  if (it != v.end() && it->first == idx) return it->second;
  return field->zero();
}

SparseVec Echelon::reduce(const SparseVec& v) const {
  if (rows_.empty() || v.empty()) return v;
  std::map<std::uint32_t, Scalar> acc;
  for (const auto& [k, c] : v) acc.emplace(k, c);
  auto it = acc.begin();
  while (it != acc.end()) {
    auto row = rows_.find(it->first);
    if (row == rows_.end() || it->second.is_zero()) {
      ++it;
      continue;
    }
    const Scalar c = it->second;
    for (const auto& [k, a] : row->second) {
      auto [pos, inserted] = acc.try_emplace(k, field_->zero());
      pos->second -= c * a;
    }
    it = acc.erase(it);
  }
  return from_map(std::move(acc));
}

bool Echelon::insert(const SparseVec& v) {
  SparseVec r = reduce(v);
  if (r.empty()) return false;
  const Scalar lead_inv = r.front().second.inverse();
  if (!r.front().second.is_one()) r = scale(r, lead_inv);
  const std::uint32_t piv = r.front().first;
  rows_.emplace(piv, std::move(r));
  return true;
}

std::vector<std::uint32_t> Echelon::pivots() const {
  std::vector<std::uint32_t> out;
  for (const auto& [k, row] : rows_) out.push_back(k);
  return out;
}

std::vector<SparseVec> Echelon::basis() const {
  std::vector<SparseVec> out;
  for (const auto& [k, row] : rows_) out.push_back(row);
  return out;
}

void Echelon::make_reduced() {
  // Later pivots first, so each row only meets already reduced rows.
  for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) {
    SparseVec& row = it->second;
    bool dirty = true;
    while (dirty) {
      dirty = false;
      for (std::size_t j = 1; j < row.size(); ++j) {
        auto other = rows_.find(row[j].first);
        if (other == rows_.end()) continue;
        row = axpy(row, -row[j].second, other->second);
        dirty = true;
        break;
      }
    }
  }
}

std::vector<SparseVec> kernel(const FieldPtr& field, const std::vector<SparseVec>& rows, std::uint32_t ncols) {
  Echelon ech(field);
  for (const auto& r : rows) ech.insert(r);
  ech.make_reduced();
  const auto piv = ech.pivots();
  const auto basis = ech.basis();
  std::vector<char> is_pivot(ncols, 0);
  for (auto p : piv) {
    if (p >= ncols) throw std::out_of_range("kernel: column out of range");
    is_pivot[p] = 1;
  }
  // column -> list of (pivot, coefficient) over the reduced rows
  std::map<std::uint32_t, std::vector<std::pair<std::uint32_t, Scalar>>> by_free;
  for (const auto& row : basis)
    for (std::size_t j = 1; j < row.size(); ++j) by_free[row[j].first].emplace_back(row.front().first, row[j].second);
  std::vector<SparseVec> out;
  for (std::uint32_t f = 0; f < ncols; ++f) {
    if (is_pivot[f]) continue;
    std::map<std::uint32_t, Scalar> v;
    v.emplace(f, field->one());
    if (auto it = by_free.find(f); it != by_free.end())
      for (const auto& [p, c] : it->second) v.emplace(p, -c);
    out.push_back(from_map(std::move(v)));
  }
  return out;
}

std::optional<SparseVec> solve(const FieldPtr& field, const std::vector<SparseVec>& rows,
                               const std::vector<Scalar>& rhs, std::uint32_t ncols) {
  if (rows.size() != rhs.size()) throw std::invalid_argument("solve: row/rhs size mismatch");
  Echelon ech(field);
  for (std::size_t k = 0; k < rows.size(); ++k) {
    SparseVec r = rows[k];
    if (!rhs[k].is_zero()) r.emplace_back(ncols, rhs[k]);
    ech.insert(r);
  }
  ech.make_reduced();
  std::map<std::uint32_t, Scalar> x;
  for (const auto& row : ech.basis()) {
    const std::uint32_t p = row.front().first;
    if (p == ncols) return std::nullopt;
    if (row.back().first == ncols) x.emplace(p, row.back().second);
  }
  return from_map(std::move(x));
}

}  // namespace extwb::linalg
