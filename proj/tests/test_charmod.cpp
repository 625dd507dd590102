#include <doctest.h>

#include "helpers.hpp"

using namespace extwb;
using tower::Elem;

TEST_CASE("characters are multiplicative with values of the right order") {
  testing::Setup S(3, 2);
  for (long long e : {0, 1, 2, 5, 7}) {
    const auto th = S.chr(e);
    for (Elem x : S.tw->units(2))
      for (Elem y : {Elem{2}, Elem{4}, S.tw->chain_generator(2)}) {
        CHECK(th.eval(S.tw->mul(x, y)) == th.eval(x) * th.eval(y));
        CHECK(th.eval(x) * th.eval_inv(x) == S.field->one());
      }
    CHECK(th.eval(1).is_one());
  }
  CHECK_THROWS(S.chr(1).eval(0));
}

TEST_CASE("exponent reduction, twist and nu") {
  testing::Setup S(2, 3);
  const auto N = static_cast<long long>(S.tw->order());
  CHECK(S.chr(-1).exponent() == static_cast<std::uint64_t>(N - 1));
  CHECK(S.chr(N + 3) == S.chr(3));
  const auto th = S.chr(5);
  for (Elem x : S.tw->units(3)) {
    if (x % 5) continue;
    CHECK(th.weyl_twist().eval(x) == th.eval_inv(x));
  }
  CHECK(charmod::nu(S.chr(4), S.chr(9)).exponent() == 13);
  CHECK(charmod::default_mode(*S.tw) == coeff::CoeffMode::cyclotomic(63));
}

TEST_CASE("triviality on levels and on the center") {
  testing::Setup S(3, 2);  // N = 80, level-1 torus has order 2
  CHECK(S.chr(0).is_trivial());
  CHECK(S.chr(0).i_theta() == std::vector<int>{1});
  CHECK(S.chr(3).i_theta().empty());
  for (long long e = 0; e < 80; ++e) {
    const auto th = S.chr(e);
    // -1 = g^{N/2}, so θ(-1) = (-1)^e.
    CHECK(th.is_trivial_on_center() == (e % 2 == 0));
    CHECK(th.eval(S.tw->neg(1)) == S.field->from_int(e % 2 ? -1 : 1));
    bool triv1 = true;
    for (Elem x : S.tw->units(1)) triv1 = triv1 && th.eval(x).is_one();
    CHECK(th.is_trivial_on_level(1) == triv1);
  }
  testing::Setup E(2, 2);
  for (long long e = 0; e < 15; ++e) CHECK(E.chr(e).is_trivial_on_center());
}

TEST_CASE("finite coefficient fields") {
  testing::Setup S(2, 2, coeff::CoeffMode::prime_field(31));
  const auto th = S.chr(1);
  for (Elem x : S.tw->units(2)) CHECK(th.eval(S.tw->mul(x, x)) == th.eval(x) * th.eval(x));
  CHECK(th.eval(S.tw->chain_generator(2)) != S.field->one());
  testing::Setup R(3, 2, coeff::CoeffMode::rationals());
  CHECK(R.chr(1).eval(R.tw->neg(1)) == R.field->from_int(-1));
  CHECK_THROWS_AS(R.chr(1).eval(R.tw->generator()), coeff::UnsupportedOrder);
}
