// Dense polynomials over a small prime field F_p, low degree first.
// Internal helper shared by the coefficient fields and the field tower.
#pragma once

#include <cstdint>
#include <vector>

namespace extwb::detail {

using FpPoly = std::vector<std::uint64_t>;

void fp_trim(FpPoly& a);
FpPoly fp_poly_mul(const FpPoly& a, const FpPoly& b, std::uint64_t p);
/// a mod f for monic f.
FpPoly fp_poly_mod(FpPoly a, const FpPoly& f, std::uint64_t p);
FpPoly fp_poly_mulmod(const FpPoly& a, const FpPoly& b, const FpPoly& f, std::uint64_t p);
FpPoly fp_poly_powmod(FpPoly base, std::uint64_t e, const FpPoly& f, std::uint64_t p);
FpPoly fp_poly_gcd(FpPoly a, FpPoly b, std::uint64_t p);
/// Rabin irreducibility test for a monic f of degree >= 1.
bool fp_poly_irreducible(const FpPoly& f, std::uint64_t p);
/// First monic irreducible polynomial of degree n, ordering candidates by
/// the integer Σ c_j p^j of their non-leading coefficients.
FpPoly fp_first_irreducible(std::uint64_t p, unsigned n);

/// Packs the first n coefficients as a base-p integer and back.
std::uint64_t fp_pack(const FpPoly& a, std::uint64_t p, unsigned n);
FpPoly fp_unpack(std::uint64_t v, std::uint64_t p, unsigned n);

std::uint64_t mod_pow(std::uint64_t a, std::uint64_t e, std::uint64_t m);
std::uint64_t mod_inv(std::uint64_t a, std::uint64_t p);

}  // namespace extwb::detail
