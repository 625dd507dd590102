#include <doctest.h>

#include <random>

#include "extwb/cohom.hpp"
#include "helpers.hpp"

using namespace extwb;
using cohom::FiniteGroup;
using cohom::FiniteRep;
using cohom::Mat;
using coeff::CoeffMode;
using coeff::Scalar;
using tower::Elem;

namespace {

Scalar trace(const Mat& m) {
  Scalar s = m.a.front().field()->zero();
  for (std::size_t k = 0; k < m.rows; ++k) s += m(k, k);
  return s;
}

// Character inner product (1/|G|) Σ χ_M(g^{-1}) χ_N(g), valid in characteristic 0.
std::size_t inner_product(const FiniteRep& M, const FiniteRep& N) {
  const auto& grp = M.group();
  const auto& F = M.field();
  Scalar s = F->zero();
  for (std::size_t g = 0; g < grp.size(); ++g) {
    std::size_t ginv = 0;
    while (grp.mul(g, ginv) != grp.identity()) ++ginv;
    s += trace(M.of(ginv)) * trace(N.of(g));
  }
  s = s / F->from_int(static_cast<long long>(grp.size()));
  const auto* r = s.as_cyclotomic();
  REQUIRE(r != nullptr);
  if (r->empty()) return 0;
  REQUIRE(r->size() == 1);
  REQUIRE(r->front().exp == 0);
  return r->front().c.get_num().get_ui();
}

std::vector<FiniteRep> three_reps(const std::shared_ptr<const FiniteGroup>& grp, const testing::Setup& S, long long e) {
  std::vector<FiniteRep> reps;
  reps.push_back(cohom::trivial_rep(grp, S.field));
  reps.push_back(cohom::steinberg_rep(grp, S.chr(e)));
  reps.push_back(cohom::induced_rep(grp, S.chr(e)));
  return reps;
}

}  // namespace

TEST_CASE("Maschke controls: Ext^1 vanishes when |G_1| is invertible") {
  struct Case {
    unsigned q;
    CoeffMode mode;
    long long e;
  };
  // |G_1| = 6 for q = 2 and 24 for q = 3.
  for (const Case& c : {Case{2, CoeffMode::cyclotomic(3), 1}, Case{2, CoeffMode::prime_field(7), 1},
                        Case{3, CoeffMode::cyclotomic(80), 1}, Case{3, CoeffMode::prime_field(241), 1},
                        Case{3, CoeffMode::prime_field(7, 4), 1}}) {
    testing::Setup S(c.q, 2, c.mode);
    auto grp = std::make_shared<const FiniteGroup>(*S.G, 1);
    const auto reps = three_reps(grp, S, c.e);
    for (const auto& M : reps)
      for (const auto& N : reps) {
        CAPTURE(M.name());
        CAPTURE(N.name());
        const auto red = cohom::ext1_reduced(M, N);
        const auto full = cohom::ext1_unreduced(M, N);
        CHECK(red.ext1() == 0);
        CHECK(full.ext1() == 0);
        CHECK(red.dim_z1 == full.dim_z1);
      }
  }
}

TEST_CASE("solvers agree when the characteristic divides |G_1|") {
  struct Case {
    unsigned q;
    CoeffMode mode;
    long long e;
    std::size_t tr_tr;
  };
  // Ext^1(tr, tr) = Hom(G_1, k): the sign of S_3 in characteristic 2 and the
  // abelianization Z/3 of SL_2(F_3) in characteristic 3.
  for (const Case& c : {Case{2, CoeffMode::prime_field(2, 2), 1, 1}, Case{2, CoeffMode::prime_field(3), 0, 0},
                        Case{3, CoeffMode::prime_field(3, 4), 1, 1}, Case{3, CoeffMode::prime_field(2), 0, 0}}) {
    testing::Setup S(c.q, 2, c.mode);
    auto grp = std::make_shared<const FiniteGroup>(*S.G, 1);
    const auto reps = three_reps(grp, S, c.e);
    for (const auto& M : reps)
      for (const auto& N : reps) {
        const auto red = cohom::ext1_reduced(M, N);
        const auto full = cohom::ext1_unreduced(M, N);
        CHECK(red.ext1() == full.ext1());
        CHECK(red.dim_z1 == full.dim_z1);
        CHECK(red.dim_b1 == full.dim_b1);
        CHECK(red.transversal.size() == red.ext1());
      }
    CHECK(cohom::ext1_reduced(reps[0], reps[0]).ext1() == c.tr_tr);
  }
}

TEST_CASE("Hom dimensions match characters and double cosets") {
  for (unsigned q : {2u, 3u}) {
    testing::Setup S(q, 2);
    auto grp = std::make_shared<const FiniteGroup>(*S.G, 1);
    // θ_e restricted to T_1 depends on e mod |T_1|.
    std::vector<long long> exps;
    for (long long k = 0; k < static_cast<long long>(S.tw->level_size(1) - 1); ++k) exps.push_back(k);
    for (long long a : exps)
      for (long long b : exps) {
        const auto M = cohom::induced_rep(grp, S.chr(a)), Nr = cohom::induced_rep(grp, S.chr(b));
        const std::size_t h = cohom::hom_space(M, Nr).size();
        CHECK(h == inner_product(M, Nr));
        CHECK(h == cohom::hom_dim_double_coset(*grp, S.chr(a), S.chr(b)));
      }
    const auto reps = three_reps(grp, S, 0);
    CHECK(cohom::hom_space(reps[0], reps[2]).size() == 1);
    CHECK(cohom::hom_space(reps[1], reps[1]).size() == 1);
    CHECK(cohom::hom_space(reps[2], reps[2]).size() == 2);
  }
}

TEST_CASE("splitting of extensions") {
  testing::Setup S(2, 2, CoeffMode::prime_field(2, 2));
  auto grp = std::make_shared<const FiniteGroup>(*S.G, 1);
  const auto tr = cohom::trivial_rep(grp, S.field);
  const auto M = cohom::induced_rep(grp, S.chr(0));
  // Nonsplit: the sign cocycle of S_3 in characteristic 2.
  const auto red = cohom::ext1_reduced(tr, tr);
  REQUIRE(red.transversal.size() == 1);
  CHECK_FALSE(cohom::find_splitting(tr, tr, red.transversal[0]).split);
  // A coboundary splits and φ solves ρ_N φ - φ ρ_M = C on generators.
  Mat phi = Mat::zero(S.field, M.dim(), tr.dim());
  phi(0, 0) = S.field->one();
  phi(2, 0) = S.field->one();
  const auto C = cohom::coboundary(tr, M, phi);
  const auto sp = cohom::find_splitting(tr, M, C);
  REQUIRE(sp.split);
  CHECK(sp.complement_certified);
  for (std::size_t k = 0; k < grp->generators().size(); ++k)
    CHECK(M.gen(k) * sp.phi - sp.phi * tr.gen(k) == C[k]);
  CHECK(cohom::propagate_cocycle(tr, M, C).has_value());
  // Garbage on generators is not a cocycle.
  // All transpositions are conjugate, so a cocycle into the trivial module
  // cannot take different values on s and e(1).
  std::vector<Mat> junk(grp->generators().size(), Mat::zero(S.field, 1, 1));
  junk[0] = Mat::identity(S.field, 1);
  CHECK_FALSE(cohom::propagate_cocycle(tr, tr, junk).has_value());
  CHECK_THROWS(cohom::find_splitting(tr, tr, junk));
}

TEST_CASE("representations are certified on relations") {
  testing::Setup S(3, 2);
  auto grp = std::make_shared<const FiniteGroup>(*S.G, 1);
  CHECK(grp->size() == 24);
  std::vector<Mat> bad(grp->generators().size(), Mat::identity(S.field, 1));
  bad[0] = Mat::identity(S.field, 1) + Mat::identity(S.field, 1);
  CHECK_THROWS(FiniteRep(grp, S.field, bad, "bad"));
  const auto M = cohom::induced_rep(grp, S.chr(40));
  CHECK(M.dim() == 4);
  for (std::size_t g = 0; g < grp->size(); ++g)
    for (std::size_t h = 0; h < grp->size(); h += 5) CHECK(M.of(grp->mul(g, h)) == M.of(g) * M.of(h));
}

TEST_CASE("normalization recovers a from 20 random pairs") {
  testing::Setup S(3, 2);
  const auto units = S.tw->units(2);
  std::mt19937 rng(2024);
  std::uniform_int_distribution<long long> exp(1, 79), num(-20, 20), den(1, 9);
  int done = 0;
  while (done < 20) {
    const auto th = S.chr(exp(rng));
    if (th.is_trivial_on_level(2)) continue;
    Scalar a = S.field->from_rational(mpq_class(static_cast<long>(num(rng)), static_cast<long>(den(rng))));
    if (a.is_zero()) a = S.field->one();
    std::vector<Scalar> phi;
    for (Elem x : units) phi.push_back(a * (th.eval(x) - S.field->one()));
    const auto res = cohom::normalize_extension(th, 2, phi);
    CHECK(res.status == cohom::Normalization::Status::Corrected);
    REQUIRE(res.a);
    CHECK(*res.a == a);
    const auto fixed = cohom::apply_correction(th, 2, phi, *res.a);
    for (const auto& v : fixed) CHECK(v.is_zero());
    CHECK(cohom::normalize_extension(th, 2, fixed).status == cohom::Normalization::Status::AlreadyNormal);
    ++done;
  }
  CHECK(cohom::to_string(cohom::Normalization::Status::Obstruction) == "obstruction");
}

TEST_CASE("normalization rejects non-cochains and bad characteristics") {
  testing::Setup S(3, 2);
  const auto units = S.tw->units(2);
  const auto th = S.chr(10);  // order 8 on T_2
  std::vector<Scalar> phi;
  for (Elem x : units) phi.push_back(th.eval(x) * th.eval(x) - S.field->one());
  CHECK_THROWS_AS(cohom::normalize_extension(th, 2, phi), cohom::NotACochain);
  std::vector<Scalar> constant(units.size(), S.field->one());
  CHECK_THROWS_AS(cohom::normalize_extension(th, 2, constant), cohom::NotACochain);

  testing::Setup C(3, 2, CoeffMode::prime_field(3, 4));
  std::vector<Scalar> z(units.size(), C.field->zero());
  CHECK_THROWS_AS(cohom::normalize_extension(C.chr(10), 2, z), std::invalid_argument);
}

TEST_CASE("Coxeter characteristic condition") {
  for (unsigned m : {2u, 3u, 4u, 6u})
    for (std::uint64_t ch : {0u, 2u, 3u, 5u, 7u}) {
      const auto c = cohom::coxeter_check(m, ch);
      CHECK(c.forces_zero == (ch == 0 || m % ch != 0));
      CHECK(c.recurrence_holds);
    }
}
