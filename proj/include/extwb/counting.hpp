// The three counting inequalities behind the non-splitness arguments,
// evaluated with big integers at any level.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include <json.hpp>

namespace extwb::counting {

struct Inequality {
  std::string name;
  mpz_class lhs;
  mpz_class rhs;
  bool holds() const { return lhs < rhs; }
  nlohmann::json to_json() const;
};

/// q^{n}.
mpz_class qpow(std::uint64_t q, std::uint64_t n);

/// (q^{i!} - 1)·q^{i!} < q^{(i+1)!}.
Inequality clm(std::uint64_t q, unsigned i);
/// q^{i!}(q^{2 i!} - 1) < 2 q^{(i+1)!}, the halved form with denominators cleared.
Inequality eq36(std::uint64_t q, unsigned i);
/// 2 q^{2 i!} < q^{(i+1)!} - 1, orbit count against the torus orbit size.
Inequality no_lg(std::uint64_t q, unsigned i);

}  // namespace extwb::counting
