#include "fp_poly.hpp"

#include <stdexcept>

#include "extwb/coeff.hpp"

namespace extwb::detail {

void fp_trim(FpPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint64_t mod_pow(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  unsigned __int128 r = 1 % m, b = a % m;
  while (e) {
    if (e & 1) r = r * b % m;
    b = b * b % m;
    e >>= 1;
  }
  return static_cast<std::uint64_t>(r);
}

std::uint64_t mod_inv(std::uint64_t a, std::uint64_t p) {
  if (a % p == 0) throw std::domain_error("mod_inv: zero has no inverse");
  return mod_pow(a, p - 2, p);
}

FpPoly fp_poly_mul(const FpPoly& a, const FpPoly& b, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  FpPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  }
  fp_trim(r);
  return r;
}

FpPoly fp_poly_mod(FpPoly a, const FpPoly& f, std::uint64_t p) {
  fp_trim(a);
  const std::size_t n = f.size() - 1;
  while (a.size() > n) {
    const std::uint64_t c = a.back();
    const std::size_t shift = a.size() - 1 - n;
    if (c) {
      for (std::size_t j = 0; j <= n; ++j) a[shift + j] = (a[shift + j] + (p - c) * f[j]) % p;
    }
    a.pop_back();
    fp_trim(a);
  }
  return a;
}

FpPoly fp_poly_mulmod(const FpPoly& a, const FpPoly& b, const FpPoly& f, std::uint64_t p) {
  return fp_poly_mod(fp_poly_mul(a, b, p), f, p);
}

FpPoly fp_poly_powmod(FpPoly base, std::uint64_t e, const FpPoly& f, std::uint64_t p) {
  FpPoly r{1};
  base = fp_poly_mod(std::move(base), f, p);
  while (e) {
    if (e & 1) r = fp_poly_mulmod(r, base, f, p);
    base = fp_poly_mulmod(base, base, f, p);
    e >>= 1;
  }
  return r;
}

FpPoly fp_poly_gcd(FpPoly a, FpPoly b, std::uint64_t p) {
  fp_trim(a);
  fp_trim(b);
  while (!b.empty()) {
    // make b monic, then a mod b
    const std::uint64_t inv = mod_inv(b.back(), p);
    for (auto& c : b) c = c * inv % p;
    FpPoly r = fp_poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const std::uint64_t inv = mod_inv(a.back(), p);
    for (auto& c : a) c = c * inv % p;
  }
  return a;
}

namespace {

// x^(p^k) mod f by k successive p-th powers.
FpPoly frobenius_x(const FpPoly& f, std::uint64_t p, unsigned k) {
  FpPoly x = fp_poly_mod(FpPoly{0, 1}, f, p);
  for (unsigned i = 0; i < k; ++i) x = fp_poly_powmod(x, p, f, p);
  return x;
}

}  // namespace

bool fp_poly_irreducible(const FpPoly& f, std::uint64_t p) {
  const unsigned n = static_cast<unsigned>(f.size() - 1);
  if (n == 0) return false;
  if (n == 1) return true;
  const FpPoly x = fp_poly_mod(FpPoly{0, 1}, f, p);
  FpPoly top = frobenius_x(f, p, n);
  if (top != x) return false;
  for (std::uint64_t r : coeff::prime_factors(n)) {
    FpPoly h = frobenius_x(f, p, n / static_cast<unsigned>(r));
    // h - x
    h.resize(std::max<std::size_t>(h.size(), 2), 0);
    h[1] = (h[1] + p - 1) % p;
    fp_trim(h);
    FpPoly g = fp_poly_gcd(f, h, p);
    if (g.size() != 1) return false;
  }
  return true;
}

FpPoly fp_first_irreducible(std::uint64_t p, unsigned n) {
  std::uint64_t limit = 1;
  for (unsigned i = 0; i < n; ++i) limit *= p;
  for (std::uint64_t idx = 0; idx < limit; ++idx) {
    FpPoly f = fp_unpack(idx, p, n);
    f.resize(n + 1, 0);
    f[n] = 1;
    if (fp_poly_irreducible(f, p)) return f;
  }
  throw std::logic_error("no irreducible polynomial found");
}

std::uint64_t fp_pack(const FpPoly& a, std::uint64_t p, unsigned n) {
  std::uint64_t v = 0;
  for (unsigned j = n; j-- > 0;) v = v * p + (j < a.size() ? a[j] : 0);
  return v;
}

FpPoly fp_unpack(std::uint64_t v, std::uint64_t p, unsigned n) {
  FpPoly a(n, 0);
  for (unsigned j = 0; j < n; ++j) {
    a[j] = v % p;
    v /= p;
  }
  return a;
}

}  // namespace extwb::detail
