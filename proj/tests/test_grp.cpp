#include <doctest.h>

#include <set>

#include "helpers.hpp"

using namespace extwb;
using grp::GroupElem;
using grp::Subgroup;
using tower::Elem;

namespace {

// Plain 2x2 product over the tower, independent of Group::mul.
GroupElem matmul(const tower::Tower& tw, const GroupElem& x, const GroupElem& y) {
  GroupElem r;
  r.a = tw.add(tw.mul(x.a, y.a), tw.mul(x.b, y.c));
  r.b = tw.add(tw.mul(x.a, y.b), tw.mul(x.b, y.d));
  r.c = tw.add(tw.mul(x.c, y.a), tw.mul(x.d, y.c));
  r.d = tw.add(tw.mul(x.c, y.b), tw.mul(x.d, y.d));
  return r;
}

std::set<GroupElem> brute_sl2(const tower::Tower& tw, unsigned i) {
  const auto& F = tw.enumerate_level(i);
  std::set<GroupElem> out;
  for (Elem a : F)
    for (Elem b : F)
      for (Elem c : F)
        for (Elem d : F)
          if (tw.sub(tw.mul(a, d), tw.mul(b, c)) == 1) out.insert(GroupElem{a, b, c, d});
  return out;
}

}  // namespace

TEST_CASE("s e(a) s factorization for every unit") {
  for (auto q : {2u, 3u, 5u}) {
    testing::Setup S(q, 2);
    for (unsigned i = 1; i <= 2; ++i)
      for (Elem a : S.tw->units(i)) {
        CHECK(S.G->check_sus(a));
        const auto lhs = matmul(*S.tw, matmul(*S.tw, S.G->s(), S.G->eps(a)), S.G->s());
        const Elem m = S.tw->neg(S.tw->inv(a));
        const auto e = S.G->eps(m);
        const auto rhs = matmul(*S.tw, matmul(*S.tw, e, S.G->s()), matmul(*S.tw, S.G->h(a), e));
        CHECK(lhs == rhs);
      }
    CHECK_THROWS(S.G->check_sus(0));
  }
}

TEST_CASE("enumeration matches brute force over all matrices") {
  for (auto [q, i] : std::vector<std::pair<unsigned, unsigned>>{{2, 1}, {2, 2}, {3, 1}, {3, 2}, {4, 1}}) {
    testing::Setup S(q, 2);
    const auto all = S.G->enumerate(Subgroup::G, i);
    const std::set<GroupElem> got(all.begin(), all.end());
    CHECK(got.size() == all.size());
    CHECK(got == brute_sl2(*S.tw, i));
    const std::uint64_t Q = S.tw->level_size(i);
    CHECK(all.size() == Q * (Q * Q - 1));
    CHECK(S.G->order(Subgroup::G, i) == all.size());
    CHECK(S.G->enumerate(Subgroup::B, i).size() == Q * (Q - 1));
    CHECK(S.G->enumerate(Subgroup::U, i).size() == Q);
    CHECK(S.G->enumerate(Subgroup::T, i).size() == Q - 1);
    const std::uint64_t center = q % 2 ? 2 : 1;
    CHECK(S.G->enumerate(Subgroup::G, i, grp::Mode::PGL2).size() == all.size() / center);
  }
}

TEST_CASE("Bruhat factorization round trip and cell sizes") {
  for (auto [q, i] : std::vector<std::pair<unsigned, unsigned>>{{2, 2}, {3, 2}, {5, 1}}) {
    testing::Setup S(q, 2);
    const std::uint64_t Q = S.tw->level_size(i);
    std::uint64_t nb = 0, nbsb = 0;
    for (const auto& g : S.G->enumerate(Subgroup::G, i)) {
      const auto f = S.G->bruhat(g);
      CHECK(S.G->reassemble(f, i) == g);
      if (std::holds_alternative<grp::CellB>(f)) {
        ++nb;
        const auto& c = std::get<grp::CellB>(f);
        CHECK(matmul(*S.tw, S.G->eps(c.x), S.G->h(c.t)) == g);
      } else {
        ++nbsb;
        const auto& c = std::get<grp::CellBsB>(f);
        auto w = matmul(*S.tw, matmul(*S.tw, S.G->eps(c.x), S.G->h(c.t)), matmul(*S.tw, S.G->s(), S.G->eps(c.y)));
        CHECK(w == g);
      }
    }
    CHECK(nb == Q * (Q - 1));
    CHECK(nbsb == Q * Q * (Q - 1));
  }
}

TEST_CASE("group operations") {
  testing::Setup S(3, 2);
  const auto all = S.G->enumerate(Subgroup::G, 2);
  for (std::size_t k = 0; k < all.size(); k += 37) {
    const auto& g = all[k];
    CHECK(S.G->mul(g, S.G->inv(g)) == S.G->identity());
    CHECK(S.G->mul(g, all[(k * 7) % all.size()]) == matmul(*S.tw, g, all[(k * 7) % all.size()]));
    CHECK(S.G->canon(g) == S.G->canon(S.G->neg(g)));
    CHECK(S.G->is_valid(g));
  }
  CHECK_THROWS(S.G->make(1, 1, 1, 1, 1));
  // Generators of G_2 generate everything.
  std::set<GroupElem> seen{S.G->identity(2)};
  std::vector<GroupElem> frontier{S.G->identity(2)};
  const auto gens = S.G->generators(2);
  while (!frontier.empty()) {
    std::vector<GroupElem> next;
    for (const auto& g : frontier)
      for (const auto& x : gens) {
        auto y = S.G->mul(g, x);
        if (seen.insert(y).second) next.push_back(y);
      }
    frontier.swap(next);
  }
  CHECK(seen.size() == all.size());
}

TEST_CASE("coset representatives of U_i in U_{i+1}") {
  for (auto q : {2u, 3u}) {
    testing::Setup S(q, 2);
    const auto reps = S.G->coset_reps(1);
    CHECK(reps.size() == S.tw->level_size(2) / S.tw->level_size(1));
    // Representatives lie in distinct classes x + F_q.
    for (std::size_t a = 0; a < reps.size(); ++a)
      for (std::size_t b = a + 1; b < reps.size(); ++b) CHECK_FALSE(S.tw->in_level(S.tw->sub(reps[a], reps[b]), 1));
    CHECK(S.G->center_quotient_reps(2).size() == (q % 2 ? 4u : 3u));
  }
}

TEST_CASE("budget is enforced") {
  testing::Setup S(3, 2);
  grp::Group small(*S.tw, 50);
  CHECK_THROWS_AS(small.enumerate(Subgroup::G, 2), grp::BudgetExceeded);
}
