#include "extwb/tower.hpp"

#include <algorithm>

#include "extwb/coeff.hpp"
#include "fp_poly.hpp"

namespace extwb::tower {

std::uint64_t factorial(unsigned n) {
  std::uint64_t r = 1;
  for (unsigned k = 2; k <= n; ++k) r *= k;
  return r;
}

std::pair<std::uint64_t, unsigned> split_prime_power(std::uint64_t q) {
  if (q < 2) throw std::invalid_argument("q must be a prime power");
  const auto factors = coeff::prime_factors(q);
  if (factors.size() != 1) throw std::invalid_argument("q must be a prime power");
  unsigned r = 0;
  for (std::uint64_t v = q; v > 1; v /= factors[0]) ++r;
  return {factors[0], r};
}

TowerConfig TowerConfig::from_q(std::uint64_t q, unsigned imax) {
  auto [p, r] = split_prime_power(q);
  TowerConfig c;
  c.p = p;
  c.r = r;
  c.imax = imax;
  return c;
}

std::uint64_t TowerConfig::q() const {
  std::uint64_t v = 1;
  for (unsigned k = 0; k < r; ++k) v *= p;
  return v;
}

Tower::Tower(TowerConfig cfg) : cfg_(std::move(cfg)) {
  if (!coeff::is_prime(cfg_.p)) throw std::invalid_argument("q must be a prime power");
  if (cfg_.r == 0) throw std::invalid_argument("q must be a prime power");
  if (cfg_.imax < 1) throw std::invalid_argument("imax must be >= 1");
  q_ = cfg_.q();
  const std::uint64_t deg = cfg_.r * factorial(cfg_.imax);
  if (deg > 64) throw std::invalid_argument("ambient field too large");
  unsigned __int128 sz = 1;
  for (std::uint64_t k = 0; k < deg; ++k) {
    sz *= cfg_.p;
    if (sz > kMaxAmbient) throw std::invalid_argument("ambient field too large");
  }
  n_ = static_cast<unsigned>(deg);
  size_ = static_cast<std::uint64_t>(sz);
  const std::uint64_t p = cfg_.p;

  if (cfg_.poly.empty()) {
    poly_ = detail::fp_first_irreducible(p, n_);
  } else {
    poly_ = cfg_.poly;
    if (poly_.size() != n_ + 1 || poly_.back() != 1)
      throw std::invalid_argument("defining polynomial must be monic of the ambient degree");
    for (auto c : poly_)
      if (c >= p) throw std::invalid_argument("defining polynomial coefficients must be reduced mod p");
    if (!detail::fp_poly_irreducible(poly_, p))
      throw std::invalid_argument("defining polynomial is not irreducible");
  }

  // First primitive element in index order.
  const std::uint64_t N = size_ - 1;
  const auto factors = coeff::prime_factors(N);
  Elem gen = 0;
  for (std::uint64_t c = 1; c < size_ && gen == 0; ++c) {
    const auto poly_c = detail::fp_unpack(c, p, n_);
    bool ok = true;
    for (std::uint64_t f : factors) {
      auto v = detail::fp_poly_powmod(poly_c, N / f, poly_, p);
      if (v.size() == 1 && v[0] == 1) {
        ok = false;
        break;
      }
    }
    if (ok) gen = static_cast<Elem>(c);
  }
  if (N == 1) gen = 1;

  exp_.assign(N, 0);
  log_.assign(size_, 0);
  const auto gpoly = detail::fp_unpack(gen, p, n_);
  detail::FpPoly cur{1};
  for (std::uint64_t k = 0; k < N; ++k) {
    const Elem v = static_cast<Elem>(detail::fp_pack(cur, p, n_));
    exp_[k] = v;
    log_[v] = static_cast<std::uint32_t>(k);
    cur = detail::fp_poly_mulmod(cur, gpoly, poly_, p);
  }
  zech_.assign(N, -1);
  for (std::uint64_t k = 0; k < N; ++k) {
    const Elem v = exp_[k];
    const Elem w = (v % p == p - 1) ? static_cast<Elem>(v - (p - 1)) : v + 1;
    zech_[k] = w == 0 ? -1 : static_cast<std::int64_t>(log_[w]);
  }

  levels_.resize(cfg_.imax + 1);
  for (unsigned i = 1; i <= cfg_.imax; ++i) {
    for (Elem x = 0; x < size_; ++x)
      if (in_level(x, i)) levels_[i].push_back(x);
  }
}

unsigned Tower::level_degree(unsigned i) const {
  if (i < 1 || i > cfg_.imax) throw std::out_of_range("level " + std::to_string(i) + " outside the tower");
  return static_cast<unsigned>(cfg_.r * factorial(i));
}

std::uint64_t Tower::level_size(unsigned i) const {
  std::uint64_t v = 1;
  for (unsigned k = 0; k < level_degree(i); ++k) v *= cfg_.p;
  return v;
}

Elem Tower::from_int(long long v) const {
  const auto sp = static_cast<long long>(cfg_.p);
  return static_cast<Elem>(((v % sp) + sp) % sp);
}

Elem Tower::add(Elem a, Elem b) const {
  if (cfg_.p == 2) return a ^ b;
  if (a == 0) return b;
  if (b == 0) return a;
  const std::uint64_t N = order();
  const std::uint64_t la = log_[a], lb = log_[b];
  const std::int64_t z = zech_[(lb + N - la) % N];
  if (z < 0) return 0;
  return exp_[(la + static_cast<std::uint64_t>(z)) % N];
}

Elem Tower::neg(Elem a) const {
  if (cfg_.p == 2 || a == 0) return a;
  const std::uint64_t N = order();
  return exp_[(log_[a] + N / 2) % N];
}

Elem Tower::mul(Elem a, Elem b) const {
  if (a == 0 || b == 0) return 0;
  return exp_[(static_cast<std::uint64_t>(log_[a]) + log_[b]) % order()];
}

Elem Tower::inv(Elem a) const {
  if (a == 0) throw std::domain_error("division by zero in the tower");
  const std::uint64_t N = order();
  return exp_[(N - log_[a]) % N];
}

Elem Tower::div(Elem a, Elem b) const { return mul(a, inv(b)); }

Elem Tower::pow(Elem a, long long e) const {
  if (a == 0) {
    if (e < 0) throw std::domain_error("division by zero in the tower");
    return e == 0 ? 1 : 0;
  }
  const auto N = static_cast<long long>(order());
  const long long k = ((e % N) + N) % N;
  return exp_[(static_cast<unsigned __int128>(log_[a]) * static_cast<std::uint64_t>(k)) % order()];
}

std::uint64_t Tower::log(Elem a) const {
  if (a == 0) throw std::domain_error("log of zero");
  return log_[a];
}

bool Tower::is_in_subfield(Elem x, unsigned d) const {
  if (d == 0 || n_ % d != 0)
    throw std::invalid_argument("subfield degree " + std::to_string(d) + " does not divide the ambient degree");
  if (x == 0) return true;
  std::uint64_t pd = 1;
  for (unsigned k = 0; k < d; ++k) pd *= cfg_.p;
  return log_[x] % (order() / (pd - 1)) == 0;
}

bool Tower::fixed_by_frobenius(Elem x, std::uint64_t k) const {
  if (x == 0) return true;
  const std::uint64_t N = order();
  const std::uint64_t qk = detail::mod_pow(q_ % N, k, N);
  const auto v = static_cast<unsigned __int128>(log_[x]) * ((qk + N - 1) % N);
  return v % N == 0;
}

const std::vector<Elem>& Tower::enumerate_level(unsigned i) const {
  level_degree(i);
  return levels_[i];
}

std::vector<Elem> Tower::units(unsigned i) const {
  const auto& all = enumerate_level(i);
  return {all.begin() + 1, all.end()};
}

std::vector<Elem> Tower::additive_basis(unsigned i) const {
  std::vector<Elem> basis;
  std::vector<Elem> span{0};
  std::vector<char> in_span(size_, 0);
  in_span[0] = 1;
  for (Elem x : enumerate_level(i)) {
    if (in_span[x]) continue;
    basis.push_back(x);
    const std::size_t old = span.size();
    for (std::uint64_t c = 1; c < cfg_.p; ++c) {
      const Elem cx = mul(from_int(static_cast<long long>(c)), x);
      for (std::size_t j = 0; j < old; ++j) {
        const Elem v = add(span[j], cx);
        span.push_back(v);
        in_span[v] = 1;
      }
    }
  }
  return basis;
}

Elem Tower::chain_generator(unsigned i) const {
  return exp_[(order() / (level_size(i) - 1)) % order()];
}

std::uint64_t Tower::dlog(Elem x, unsigned i) const {
  if (x == 0) throw std::domain_error("dlog of zero");
  const std::uint64_t step = order() / (level_size(i) - 1);
  if (log_[x] % step != 0) throw std::invalid_argument("dlog: element not in level " + std::to_string(i));
  return log_[x] / step;
}

Elem Tower::pick_a(unsigned i) const {
  if (i < 1 || i + 1 > cfg_.imax) throw std::out_of_range("pick_a needs 1 <= i < imax");
  for (Elem x : enumerate_level(i + 1))
    if (!in_level(x, i)) return x;
  throw EmptySelection("empty selection set");
}

Elem Tower::pick_b(unsigned i) const {
  if (i < 1 || i + 1 > cfg_.imax) throw std::out_of_range("pick_b needs 1 <= i < imax");
  const std::uint64_t k = 2 * factorial(i);
  for (Elem x : enumerate_level(i + 1))
    if (!fixed_by_frobenius(x, k)) return x;
  throw EmptySelection("empty selection set");
}

std::vector<std::uint64_t> Tower::coefficients(Elem x) const { return detail::fp_unpack(x, cfg_.p, n_); }

std::string Tower::to_string(Elem x) const {
  if (x == 0) return "0";
  const auto c = coefficients(x);
  std::string s;
  for (unsigned j = n_; j-- > 0;) {
    if (!c[j]) continue;
    if (!s.empty()) s += "+";
    if (j == 0) {
      s += std::to_string(c[j]);
      continue;
    }
    if (c[j] != 1) s += std::to_string(c[j]);
    s += j == 1 ? "u" : "u^" + std::to_string(j);
  }
  return s;
}

}  // namespace extwb::tower
