#include "extwb/coeff.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "fp_poly.hpp"

namespace extwb::coeff {

namespace {

constexpr std::uint64_t kMaxPrimeFieldSize = std::uint64_t{1} << 40;

using DenseQ = std::vector<mpq_class>;

void trim(DenseQ& a) {
  while (!a.empty() && sgn(a.back()) == 0) a.pop_back();
}

// Quotient and remainder of a by b (b nonzero) over Q.
std::pair<DenseQ, DenseQ> divmod(DenseQ a, const DenseQ& b) {
  trim(a);
  DenseQ quot;
  if (a.size() >= b.size()) quot.assign(a.size() - b.size() + 1, 0);
  const mpq_class lead_inv = 1 / b.back();
  while (a.size() >= b.size()) {
    const std::size_t shift = a.size() - b.size();
    const mpq_class c = a.back() * lead_inv;
    quot[shift] = c;
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= c * b[j];
    a.pop_back();
    trim(a);
  }
  return {std::move(quot), std::move(a)};
}

DenseQ mul(const DenseQ& a, const DenseQ& b) {
  if (a.empty() || b.empty()) return {};
  DenseQ r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

DenseQ sub(DenseQ a, const DenseQ& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (std::size_t j = 0; j < b.size(); ++j) a[j] -= b[j];
  trim(a);
  return a;
}

}  // namespace

// ---------------------------------------------------------------------------
// number theory helpers

bool is_prime(std::uint64_t v) {
  if (v < 2) return false;
  for (std::uint64_t d = 2; d * d <= v; ++d)
    if (v % d == 0) return false;
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t v) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= v; ++d) {
    if (v % d) continue;
    out.push_back(d);
    while (v % d == 0) v /= d;
  }
  if (v > 1) out.push_back(v);
  return out;
}

std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t r = n;
  for (std::uint64_t f : prime_factors(n)) r = r / f * (f - 1);
  return r;
}

std::vector<long long> cyclotomic_polynomial(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("cyclotomic_polynomial: n must be positive");
  // x^n - 1 divided by Φ_d for every proper divisor d.
  std::vector<long long> num(n + 1, 0);
  num[0] = -1;
  num[n] = 1;
  for (std::uint64_t d = 1; d < n; ++d) {
    if (n % d) continue;
    const std::vector<long long> den = cyclotomic_polynomial(d);
    std::vector<long long> quot(num.size() - den.size() + 1, 0);
    while (num.size() >= den.size()) {
      const std::size_t shift = num.size() - den.size();
      const long long c = num.back();
      quot[shift] = c;
      for (std::size_t j = 0; j < den.size(); ++j) num[shift + j] -= c * den[j];
      num.pop_back();
    }
    num = std::move(quot);
  }
  return num;
}

std::uint64_t find_prime_one_mod(std::uint64_t n, std::uint64_t floor, std::uint64_t avoid) {
  if (n == 0) throw std::invalid_argument("find_prime_one_mod: n must be positive");
  std::uint64_t t = floor > 1 ? (floor - 1 + n - 1) / n : 1;
  if (t == 0) t = 1;
  for (;; ++t) {
    const std::uint64_t cand = 1 + n * t;
    if (cand >= floor && cand != avoid && is_prime(cand)) return cand;
  }
}

// ---------------------------------------------------------------------------
// CoeffMode

CoeffMode CoeffMode::cyclotomic(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("cyclotomic order must be positive");
  CoeffMode m;
  m.kind = Kind::Cyclotomic;
  m.n = n;
  return m;
}

CoeffMode CoeffMode::prime_field(std::uint64_t ell, unsigned deg) {
  if (!is_prime(ell)) throw std::invalid_argument("prime field characteristic must be prime");
  if (deg == 0) throw std::invalid_argument("extension degree must be >= 1");
  CoeffMode m;
  m.kind = Kind::PrimeField;
  m.ell = ell;
  m.m = deg;
  return m;
}

std::string CoeffMode::to_string() const {
  switch (kind) {
    case Kind::Rationals:
      return "rat";
    case Kind::Cyclotomic:
      return "cyclo:" + std::to_string(n);
    case Kind::PrimeField:
      return "fp:" + std::to_string(ell) + (m > 1 ? ":" + std::to_string(m) : "");
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Field

FieldPtr Field::make(const CoeffMode& mode) { return FieldPtr(new Field(mode)); }

Field::Field(const CoeffMode& mode) : mode_(mode) {
  switch (mode.kind) {
    case Kind::Rationals:
      break;
    case Kind::Cyclotomic: {
      cyclo_ = cyclotomic_polynomial(mode.n);
      phi_ = cyclo_.size() - 1;
      for (std::size_t j = 0; j + 1 < cyclo_.size(); ++j)
        if (cyclo_[j]) cyclo_low_.emplace_back(static_cast<std::uint32_t>(j), cyclo_[j]);
      break;
    }
    case Kind::PrimeField: {
      if (!is_prime(mode.ell) || mode.ell >= (std::uint64_t{1} << 31))
        throw std::invalid_argument("prime field characteristic must be a prime below 2^31");
      unsigned __int128 size = 1;
      for (unsigned i = 0; i < mode.m; ++i) {
        size *= mode.ell;
        if (size > kMaxPrimeFieldSize) throw std::invalid_argument("prime field extension too large");
      }
      fp_size_ = static_cast<std::uint64_t>(size);
      if (mode.m == 1) {
        fp_modulus_ = {0, 1};
      } else {
        fp_modulus_ = detail::fp_first_irreducible(mode.ell, mode.m);
      }
      const auto factors = prime_factors(fp_size_ - 1);
      for (std::uint64_t g = 1; g < fp_size_; ++g) {
        bool ok = true;
        for (std::uint64_t r : factors) {
          if (fp_pow(g, (fp_size_ - 1) / r) == 1) {
            ok = false;
            break;
          }
        }
        if (ok) {
          fp_generator_ = g;
          break;
        }
      }
      if (fp_size_ == 2) fp_generator_ = 1;
      break;
    }
  }
}

Scalar Field::zero() const {
  switch (mode_.kind) {
    case Kind::Rationals:
      return make(mpq_class(0));
    case Kind::Cyclotomic:
      return make(Scalar::CycloRep{});
    case Kind::PrimeField:
      return make(std::uint64_t{0});
  }
  return {};
}

Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(long long v) const { return from_rational(mpq_class(static_cast<long>(v))); }

Scalar Field::from_rational(const mpq_class& in) const {
  // gmpxx does not reduce fractions built from a numerator and denominator.
  mpq_class v(in);
  v.canonicalize();
  switch (mode_.kind) {
    case Kind::Rationals:
      return make(v);
    case Kind::Cyclotomic: {
      if (sgn(v) == 0) return zero();
      auto poly = std::make_shared<CycloPoly>();
      poly->push_back({0, v});
      return make(Scalar::CycloRep(std::move(poly)));
    }
    case Kind::PrimeField: {
      const std::uint64_t ell = mode_.ell;
      mpz_class num = v.get_num() % mpz_class(static_cast<unsigned long>(ell));
      mpz_class den = v.get_den() % mpz_class(static_cast<unsigned long>(ell));
      if (num < 0) num += static_cast<unsigned long>(ell);
      if (den == 0) throw DivisionByZero("rational with denominator divisible by the characteristic");
      const std::uint64_t r = num.get_ui() * detail::mod_inv(den.get_ui(), ell) % ell;
      return make(r);
    }
  }
  return {};
}

Scalar Field::from_cyclotomic_coeffs(const std::vector<mpq_class>& coeffs) const {
  if (mode_.kind != Kind::Cyclotomic) throw ModeMismatch("from_cyclotomic_coeffs needs a cyclotomic field");
  DenseQ buf(std::min<std::uint64_t>(coeffs.size(), mode_.n));
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    mpq_class c(coeffs[k]);
    c.canonicalize();
    buf[k % mode_.n] += c;
  }
  return make(reduce_dense(buf));
}

Scalar Field::from_residues(const std::vector<std::uint64_t>& digits) const {
  if (mode_.kind != Kind::PrimeField) throw ModeMismatch("from_residues needs a prime field");
  detail::FpPoly d(digits.begin(), digits.end());
  for (auto& c : d) c %= mode_.ell;
  return make(detail::fp_pack(detail::fp_poly_mod(d, fp_modulus_, mode_.ell), mode_.ell, mode_.m));
}

bool Field::supports_root_order(std::uint64_t o) const {
  if (o == 0) return false;
  switch (mode_.kind) {
    case Kind::Rationals:
      return o <= 2;
    case Kind::Cyclotomic:
      return mode_.n % o == 0 || (mode_.n % 2 == 1 && (2 * mode_.n) % o == 0);
    case Kind::PrimeField:
      return (fp_size_ - 1) % o == 0;
  }
  return false;
}

Scalar Field::root_of_unity(std::uint64_t n, long long e) const {
  if (n == 0) throw std::invalid_argument("root_of_unity: order must be positive");
  const auto sn = static_cast<long long>(n);
  const std::uint64_t er = static_cast<std::uint64_t>(((e % sn) + sn) % sn);
  const std::uint64_t g = std::gcd(er, n);  // gcd(0, n) = n
  const std::uint64_t order = n / g;
  const std::uint64_t k = er / g;  // value is ζ_order^k, gcd(k, order) = 1
  if (!supports_root_order(order))
    throw UnsupportedOrder("root of unity of order " + std::to_string(order) + " not available in " +
                           mode_.to_string());
  switch (mode_.kind) {
    case Kind::Rationals:
      return from_int(order == 1 ? 1 : -1);
    case Kind::Cyclotomic: {
      const std::uint64_t big = mode_.n;
      if (big % order == 0) return make(cyc_power(k * (big / order) % big));
      // odd n: ζ_{2n} := -ζ_n^{(n+1)/2}
      const std::uint64_t j = k * (2 * big / order) % (2 * big);
      const std::uint64_t ex = j * ((big + 1) / 2) % big;
      Scalar v = make(cyc_power(ex));
      return (j % 2) ? -v : v;
    }
    case Kind::PrimeField:
      return make(fp_pow(fp_generator_, k * ((fp_size_ - 1) / order)));
  }
  return {};
}

// --- cyclotomic ------------------------------------------------------------

Scalar::CycloRep Field::reduce_dense(DenseQ& buf) const {
  const std::size_t phi = phi_;
  for (std::size_t d = buf.size(); d-- > phi;) {
    if (sgn(buf[d]) == 0) continue;
    const mpq_class c = buf[d];
    const std::size_t shift = d - phi;
    for (const auto& [j, a] : cyclo_low_) buf[shift + j] -= c * static_cast<long>(a);
    buf[d] = 0;
  }
  auto poly = std::make_shared<CycloPoly>();
  const std::size_t top = std::min(buf.size(), phi);
  for (std::size_t j = 0; j < top; ++j)
    if (sgn(buf[j]) != 0) poly->push_back({static_cast<std::uint32_t>(j), std::move(buf[j])});
  if (poly->empty()) return {};
  return poly;
}

Scalar::CycloRep Field::cyc_power(std::uint64_t k) const {
  k %= mode_.n;
  if (k < phi_) {
    auto poly = std::make_shared<CycloPoly>();
    poly->push_back({static_cast<std::uint32_t>(k), mpq_class(1)});
    return poly;
  }
  {
    std::lock_guard lock(cache_mu_);
    if (auto it = power_cache_.find(k); it != power_cache_.end()) return it->second;
  }
  DenseQ buf(k + 1);
  buf[k] = 1;
  Scalar::CycloRep rep = reduce_dense(buf);
  std::lock_guard lock(cache_mu_);
  power_cache_.emplace(k, rep);
  return rep;
}

Scalar::CycloRep Field::cyc_add(const Scalar::CycloRep& a, const Scalar::CycloRep& b, bool negate_b) const {
  if (!b) return a;
  if (!a && !negate_b) return b;
  static const CycloPoly kEmpty;
  const CycloPoly& x = a ? *a : kEmpty;
  const CycloPoly& y = *b;
  auto out = std::make_shared<CycloPoly>();
  out->reserve(x.size() + y.size());
  std::size_t i = 0, j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].exp < y[j].exp)) {
      out->push_back(x[i++]);
    } else if (i == x.size() || y[j].exp < x[i].exp) {
      out->push_back({y[j].exp, negate_b ? mpq_class(-y[j].c) : y[j].c});
      ++j;
    } else {
      mpq_class c = negate_b ? mpq_class(x[i].c - y[j].c) : mpq_class(x[i].c + y[j].c);
      if (sgn(c) != 0) out->push_back({x[i].exp, std::move(c)});
      ++i;
      ++j;
    }
  }
  if (out->empty()) return {};
  return out;
}

Scalar::CycloRep Field::cyc_scale(const CycloPoly& a, const mpq_class& c) const {
  if (sgn(c) == 0) return {};
  auto out = std::make_shared<CycloPoly>(a);
  for (auto& t : *out) t.c *= c;
  return out;
}

Scalar::CycloRep Field::cyc_mul(const CycloPoly& a, const CycloPoly& b) const {
  if (a.size() == 1 && a[0].exp == 0) return cyc_scale(b, a[0].c);
  if (b.size() == 1 && b[0].exp == 0) return cyc_scale(a, b[0].c);
  if (a.size() == 1 && b.size() == 1) {
    const std::uint64_t k = a[0].exp + b[0].exp;
    if (k < phi_) {
      auto poly = std::make_shared<CycloPoly>();
      poly->push_back({static_cast<std::uint32_t>(k), a[0].c * b[0].c});
      return poly;
    }
    return cyc_scale(*cyc_power(k), a[0].c * b[0].c);
  }
  DenseQ buf(a.back().exp + b.back().exp + 1);
  for (const auto& x : a)
    for (const auto& y : b) buf[x.exp + y.exp] += x.c * y.c;
  return reduce_dense(buf);
}

Scalar::CycloRep Field::cyc_inverse(const CycloPoly& a) const {
  if (a.size() == 1) {
    const mpq_class inv_c = 1 / a[0].c;
    return cyc_scale(*cyc_power((mode_.n - a[0].exp % mode_.n) % mode_.n), inv_c);
  }
  // Extended Euclid in Q[x] against Φ_n.
  DenseQ r0;
  for (long long c : cyclo_) r0.emplace_back(static_cast<long>(c));
  DenseQ r1(a.back().exp + 1);
  for (const auto& t : a) r1[t.exp] = t.c;
  DenseQ s0, s1{mpq_class(1)};
  while (r1.size() > 1) {
    auto [quot, rem] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(rem);
    DenseQ s2 = sub(s0, mul(quot, s1));
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r1.empty()) throw DivisionByZero("cyclotomic element is not invertible");
  const mpq_class inv_c = 1 / r1[0];
  for (auto& c : s1) c *= inv_c;
  return reduce_dense(s1);
}

// --- F_{ℓ^m} ---------------------------------------------------------------

std::uint64_t Field::fp_add(std::uint64_t a, std::uint64_t b) const {
  const std::uint64_t ell = mode_.ell;
  if (mode_.m == 1) return (a + b) % ell;
  std::uint64_t out = 0, scale = 1;
  for (unsigned j = 0; j < mode_.m; ++j) {
    out += ((a % ell + b % ell) % ell) * scale;
    a /= ell;
    b /= ell;
    scale *= ell;
  }
  return out;
}

std::uint64_t Field::fp_neg(std::uint64_t a) const {
  const std::uint64_t ell = mode_.ell;
  if (mode_.m == 1) return (ell - a % ell) % ell;
  std::uint64_t out = 0, scale = 1;
  for (unsigned j = 0; j < mode_.m; ++j) {
    out += ((ell - a % ell) % ell) * scale;
    a /= ell;
    scale *= ell;
  }
  return out;
}

std::uint64_t Field::fp_mul(std::uint64_t a, std::uint64_t b) const {
  const std::uint64_t ell = mode_.ell;
  if (mode_.m == 1) return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % ell);
  const auto pa = detail::fp_unpack(a, ell, mode_.m);
  const auto pb = detail::fp_unpack(b, ell, mode_.m);
  return detail::fp_pack(detail::fp_poly_mulmod(pa, pb, fp_modulus_, ell), ell, mode_.m);
}

std::uint64_t Field::fp_pow(std::uint64_t a, std::uint64_t e) const {
  std::uint64_t r = 1, b = a;
  while (e) {
    if (e & 1) r = fp_mul(r, b);
    b = fp_mul(b, b);
    e >>= 1;
  }
  return r;
}

std::uint64_t Field::fp_inv(std::uint64_t a) const {
  if (a == 0) throw DivisionByZero("division by zero in " + mode_.to_string());
  return fp_pow(a, fp_size_ - 2);
}

// ---------------------------------------------------------------------------
// Scalar

const CoeffMode& Scalar::mode() const {
  if (!field_) throw std::logic_error("unbound scalar");
  return field_->mode();
}

const CycloPoly* Scalar::as_cyclotomic() const {
  static const CycloPoly kEmpty;
  const auto* rep = std::get_if<CycloRep>(&rep_);
  if (!rep) return nullptr;
  return *rep ? rep->get() : &kEmpty;
}

const Field& Scalar::checked_field(const Scalar& o) const {
  if (!field_ || !o.field_) throw std::logic_error("arithmetic on an unbound scalar");
  if (field_ != o.field_ && !(field_->mode() == o.field_->mode()))
    throw ModeMismatch("scalar modes differ: " + field_->mode().to_string() + " vs " +
                       o.field_->mode().to_string());
  return *field_;
}

bool Scalar::is_zero() const {
  if (const auto* q = std::get_if<mpq_class>(&rep_)) return sgn(*q) == 0;
  if (const auto* c = std::get_if<CycloRep>(&rep_)) return !*c;
  return std::get<std::uint64_t>(rep_) == 0;
}

bool Scalar::is_one() const {
  if (const auto* q = std::get_if<mpq_class>(&rep_)) return *q == 1;
  if (const auto* c = std::get_if<CycloRep>(&rep_))
    return *c && (*c)->size() == 1 && (*c)->front().exp == 0 && (*c)->front().c == 1;
  return std::get<std::uint64_t>(rep_) == 1;
}

Scalar Scalar::operator+(const Scalar& o) const {
  const Field& f = checked_field(o);
  switch (f.mode_.kind) {
    case Kind::Rationals:
      return f.make(mpq_class(std::get<mpq_class>(rep_) + std::get<mpq_class>(o.rep_)));
    case Kind::Cyclotomic:
      return f.make(f.cyc_add(std::get<CycloRep>(rep_), std::get<CycloRep>(o.rep_), false));
    case Kind::PrimeField:
      return f.make(f.fp_add(std::get<std::uint64_t>(rep_), std::get<std::uint64_t>(o.rep_)));
  }
  return {};
}

Scalar Scalar::operator-(const Scalar& o) const {
  const Field& f = checked_field(o);
  switch (f.mode_.kind) {
    case Kind::Rationals:
      return f.make(mpq_class(std::get<mpq_class>(rep_) - std::get<mpq_class>(o.rep_)));
    case Kind::Cyclotomic:
      return f.make(f.cyc_add(std::get<CycloRep>(rep_), std::get<CycloRep>(o.rep_), true));
    case Kind::PrimeField:
      return f.make(f.fp_add(std::get<std::uint64_t>(rep_), f.fp_neg(std::get<std::uint64_t>(o.rep_))));
  }
  return {};
}

Scalar Scalar::operator-() const {
  if (!field_) throw std::logic_error("arithmetic on an unbound scalar");
  return field_->zero() - *this;
}

Scalar Scalar::operator*(const Scalar& o) const {
  const Field& f = checked_field(o);
  switch (f.mode_.kind) {
    case Kind::Rationals:
      return f.make(mpq_class(std::get<mpq_class>(rep_) * std::get<mpq_class>(o.rep_)));
    case Kind::Cyclotomic: {
      const auto& a = std::get<CycloRep>(rep_);
      const auto& b = std::get<CycloRep>(o.rep_);
      if (!a || !b) return f.zero();
      return f.make(f.cyc_mul(*a, *b));
    }
    case Kind::PrimeField:
      return f.make(f.fp_mul(std::get<std::uint64_t>(rep_), std::get<std::uint64_t>(o.rep_)));
  }
  return {};
}

Scalar Scalar::inverse() const {
  if (!field_) throw std::logic_error("arithmetic on an unbound scalar");
  if (is_zero()) throw DivisionByZero("division by zero in " + field_->mode().to_string());
  const Field& f = *field_;
  switch (f.mode_.kind) {
    case Kind::Rationals:
      return f.make(mpq_class(1 / std::get<mpq_class>(rep_)));
    case Kind::Cyclotomic:
      return f.make(f.cyc_inverse(*std::get<CycloRep>(rep_)));
    case Kind::PrimeField:
      return f.make(f.fp_inv(std::get<std::uint64_t>(rep_)));
  }
  return {};
}

Scalar Scalar::operator/(const Scalar& o) const {
  checked_field(o);
  return *this * o.inverse();
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (!a.field_ || !b.field_) return a.field_ == b.field_ && a.is_zero() == b.is_zero();
  if (a.field_ != b.field_ && !(a.field_->mode() == b.field_->mode())) return false;
  if (const auto* q = std::get_if<mpq_class>(&a.rep_)) return *q == std::get<mpq_class>(b.rep_);
  if (const auto* c = std::get_if<Scalar::CycloRep>(&a.rep_)) {
    const auto& d = std::get<Scalar::CycloRep>(b.rep_);
    if (!*c || !d) return !*c && !d;
    if ((*c)->size() != d->size()) return false;
    for (std::size_t i = 0; i < d->size(); ++i)
      if ((**c)[i].exp != (*d)[i].exp || (**c)[i].c != (*d)[i].c) return false;
    return true;
  }
  return std::get<std::uint64_t>(a.rep_) == std::get<std::uint64_t>(b.rep_);
}

std::string Scalar::to_string() const {
  if (!field_) return "0";
  if (const auto* q = std::get_if<mpq_class>(&rep_)) return q->get_str();
  if (const auto* c = std::get_if<CycloRep>(&rep_)) {
    if (!*c) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : **c) {
      if (!first) os << " + ";
      first = false;
      if (t.exp == 0) {
        os << t.c.get_str();
      } else {
        if (t.c != 1) os << "(" << t.c.get_str() << ")*";
        os << "z^" << t.exp;
      }
    }
    return os.str();
  }
  const std::uint64_t v = std::get<std::uint64_t>(rep_);
  if (field_->mode().m == 1) return std::to_string(v);
  const auto digits = detail::fp_unpack(v, field_->mode().ell, field_->mode().m);
  std::string s = "[";
  for (std::size_t j = 0; j < digits.size(); ++j) s += (j ? "," : "") + std::to_string(digits[j]);
  return s + "]";
}

nlohmann::json Scalar::to_json() const {
  if (!field_) return "0";
  if (const auto* q = std::get_if<mpq_class>(&rep_)) return q->get_str();
  if (const auto* c = std::get_if<CycloRep>(&rep_)) {
    nlohmann::json arr = nlohmann::json::array();
    if (!*c) return arr;
    std::vector<std::string> dense((*c)->back().exp + 1, "0");
    for (const auto& t : **c) dense[t.exp] = t.c.get_str();
    for (auto& s : dense) arr.push_back(std::move(s));
    return arr;
  }
  const std::uint64_t v = std::get<std::uint64_t>(rep_);
  if (field_->mode().m == 1) return v;
  return detail::fp_unpack(v, field_->mode().ell, field_->mode().m);
}

}  // namespace extwb::coeff
