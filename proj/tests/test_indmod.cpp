#include <doctest.h>

#include <random>

#include "extwb/indmod.hpp"
#include "helpers.hpp"

using namespace extwb;
using grp::Subgroup;
using indmod::InducedModule;
using tower::Elem;

namespace {

std::size_t span_rank(const InducedModule& M, const std::vector<indmod::ModuleVec>& vs) {
  linalg::Echelon e(M.field());
  for (const auto& v : vs) e.insert(v);
  return e.rank();
}

}  // namespace

TEST_CASE("generator rules agree with the coset oracle") {
  for (auto q : {2u, 3u}) {
    testing::Setup S(q, 2);
    for (long long e : {0, 1, 2, 5}) {
      const auto th = S.chr(e);
      for (unsigned i = 1; i <= 2; ++i) {
        InducedModule M(*S.G, th, i);
        for (const auto& g : S.G->generators(i))
          for (auto l : M.labels()) {
            const auto r = M.act(g, l), o = M.act_oracle(g, l);
            CHECK(r.label == o.label);
            CHECK(r.coeff == o.coeff);
          }
      }
    }
  }
}

TEST_CASE("action is associative on random pairs") {
  testing::Setup S(3, 2);
  InducedModule M(*S.G, S.chr(3), 2);
  const auto all = S.G->enumerate(Subgroup::G, 2);
  std::mt19937 rng(7);
  std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1), lab(0, M.dim() - 1);
  for (int k = 0; k < 200; ++k) {
    const auto &g = all[pick(rng)], &h = all[pick(rng)];
    const auto v = M.basis_vector(M.labels()[lab(rng)]);
    CHECK(M.act(g, M.act(h, v)) == M.act(S.G->mul(g, h), v));
  }
}

TEST_CASE("dimensions of M_i and St_i") {
  for (auto q : {2u, 3u}) {
    testing::Setup S(q, 2);
    for (unsigned i = 1; i <= 2; ++i) {
      const std::uint64_t Q = S.tw->level_size(i);
      InducedModule M(*S.G, S.chr(0), i);
      CHECK(M.dim() == Q + 1);
      const auto st = M.steinberg_basis();
      CHECK(st.size() == Q);
      CHECK(span_rank(M, st) == Q);
      CHECK(M.submodule_span({M.eta_J(true)}).size() == Q);
      CHECK(M.submodule_span({M.basis_vector(indmod::kCell0)}).size() == Q + 1);
    }
  }
}

TEST_CASE("invariant subspaces") {
  testing::Setup S(3, 2);
  for (unsigned i = 1; i <= 2; ++i) {
    InducedModule tr(*S.G, S.chr(0), i);
    CHECK(tr.invariants(Subgroup::G).size() == 1);
    CHECK(tr.invariants(Subgroup::U).size() == 2);
    CHECK(tr.invariants(Subgroup::B).size() == 2);
    // The all-ones vector is G-fixed.
    indmod::ModuleVec ones;
    for (auto l : tr.labels()) ones.emplace_back(l, S.field->one());
    for (const auto& g : S.G->generators(i)) CHECK(tr.act(g, ones) == ones);
    InducedModule odd(*S.G, S.chr(1), i);
    CHECK(odd.invariants(Subgroup::G).empty());
  }
  InducedModule big(*S.G, S.chr(0), 2);
  CHECK(big.invariants(Subgroup::U, 1).size() == 1 + 9 / 3);
}

TEST_CASE("sum over U_j matches explicit enumeration") {
  testing::Setup S(2, 2);
  InducedModule M(*S.G, S.chr(5), 2);
  for (unsigned j = 1; j <= 2; ++j) {
    const auto v = linalg::add(M.basis_vector(indmod::cell1(3)), M.basis_vector(indmod::kCell0));
    indmod::ModuleVec slow;
    for (const auto& u : S.G->enumerate(Subgroup::U, j)) slow = linalg::add(slow, M.act(u, v));
    CHECK(M.sum_over_U(j, v) == slow);
  }
}

TEST_CASE("s e(x) relations") {
  for (auto q : {2u, 3u}) {
    testing::Setup S(q, 2);
    InducedModule M(*S.G, S.chr(0), 2);
    for (Elem x : S.tw->units(2)) CHECK(M.check_prop_suw(x));
  }
  testing::Setup S(3, 2);
  InducedModule M(*S.G, S.chr(1), 2);
  CHECK_THROWS(M.eta_J(true));
  CHECK(indmod::supported_in_level(*S.tw, M.basis_vector(indmod::cell1(1)), 1));
  CHECK(M.label_string(indmod::kCell0).size() > 0);
}
