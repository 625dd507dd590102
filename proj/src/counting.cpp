#include "extwb/counting.hpp"

#include "extwb/tower.hpp"

namespace extwb::counting {

nlohmann::json Inequality::to_json() const {
  return {{"name", name}, {"lhs", lhs.get_str()}, {"rhs", rhs.get_str()}, {"holds", holds()}};
}

mpz_class qpow(std::uint64_t q, std::uint64_t n) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), q, n);
  return r;
}

Inequality clm(std::uint64_t q, unsigned i) {
  const mpz_class a = qpow(q, tower::factorial(i));
  return {"clm", (a - 1) * a, qpow(q, tower::factorial(i + 1))};
}

Inequality eq36(std::uint64_t q, unsigned i) {
  const std::uint64_t f = tower::factorial(i);
  return {"eq36", qpow(q, f) * (qpow(q, 2 * f) - 1), 2 * qpow(q, tower::factorial(i + 1))};
}

Inequality no_lg(std::uint64_t q, unsigned i) {
  const std::uint64_t f = tower::factorial(i);
  return {"noLG", 2 * qpow(q, 2 * f), qpow(q, tower::factorial(i + 1)) - 1};
}

}  // namespace extwb::counting
