#include <doctest.h>

#include "qtcat/link.hpp"

using namespace qtcat;

namespace {
const auto rc = SignConvention::recursion_consistent;
const auto printed = SignConvention::as_printed;
}  // namespace

TEST_CASE("alpha base case") {
  // alpha_0 closes up to t/(1-q); the printed base is the same, only the
  // closed form's tail sign differs from the first step on.
  RExpr want = RExpr::one();
  want.times_mono(0, 1).div_binomial(1, 0);
  CHECK(rexpr_eq(alpha_series(0, rc), want));
  CHECK(rexpr_eq(alpha_series(0, printed), want));
  // The printed bracket at d1 = 0 carries the flipped tail 1/(q-1).
  CHECK(rexpr_eq(hhh_bracket(0, printed), -hhh_bracket(0, rc)));
}

TEST_CASE("alpha one step") {
  // recursion consistent: t + q t^{-1} / (1-q)
  RExpr tail = RExpr::one();
  tail.times_mono(1, -1).div_binomial(1, 0);
  RExpr want = rexpr_sum({RExpr::from_poly(Poly::var(VT)), tail});
  CHECK(rexpr_eq(alpha_series(1, rc), want));
  // as printed: t + q t^{-1} / (q-1)
  RExpr want_p = rexpr_sum({RExpr::from_poly(Poly::var(VT)), -tail});
  CHECK(rexpr_eq(alpha_series(1, printed), want_p));
}

TEST_CASE("alpha satisfies its recursion under the consistent convention") {
  for (int d1 = 1; d1 <= 6; ++d1) {
    RExpr prev = alpha_series(d1 - 1, rc);
    prev.times_mono(1, -2);
    RExpr rhs = rexpr_sum({RExpr::from_poly(Poly::var(VT)), prev});
    CHECK(rexpr_eq(alpha_series(d1, rc), rhs));
  }
}

TEST_CASE("printed closed form breaks the recursion at d1 = 1") {
  RExpr prev = alpha_series(0, printed);
  prev.times_mono(1, -2);
  RExpr rhs = rexpr_sum({RExpr::from_poly(Poly::var(VT)), prev});
  CHECK(!rexpr_eq(alpha_series(1, printed), rhs));
}

TEST_CASE("bracket is t^{-1} alpha") {
  for (int d1 = 0; d1 <= 4; ++d1) {
    RExpr a = alpha_series(d1, rc);
    a.times_mono(0, -1);
    CHECK(rexpr_eq(hhh_bracket(d1, rc), a));
  }
  // Under the printed convention this holds from d1 = 1 on; at d1 = 0 the
  // printed closed form and the printed base disagree.
  for (int d1 = 1; d1 <= 4; ++d1) {
    RExpr a = alpha_series(d1, printed);
    a.times_mono(0, -1);
    CHECK(rexpr_eq(hhh_bracket(d1, printed), a));
  }
  CHECK(!rexpr_eq(hhh_bracket(0, printed),
                  []{ RExpr a = alpha_series(0, printed);
                      a.times_mono(0, -1);
                      return a; }()));
}

TEST_CASE("step at the base cases") {
  // A(0) = 1/(q-1) as printed (the geometric part is empty)
  RExpr want = -RExpr::one();
  want.div_binomial(1, 0);
  CHECK(rexpr_eq(hhh_step(0, RExpr::zero(), printed), want));
  // recursion consistent at d1 = 1: 1 + (q t^{-2})/(1-q)
  RExpr tail = RExpr::one();
  tail.times_mono(1, -2).div_binomial(1, 0);
  CHECK(rexpr_eq(hhh_step(1, RExpr::zero(), rc),
                 rexpr_sum({RExpr::one(), tail})));
}

TEST_CASE("closed form equals iterated steps") {
  std::vector<RExpr> bases;
  bases.push_back(RExpr::one());
  bases.push_back(RExpr::from_poly(Poly::var(VT, 3)));
  {
    RExpr b = RExpr::one();
    b.times_mono(0, 1).div_binomial(1, 0);
    bases.push_back(b);
  }
  for (int d1 = 0; d1 <= 4; ++d1)
    for (const RExpr& base : bases)
      for (int k = 0; k <= 6; ++k) {
        RExpr closed = hhh_closed(d1, k, base, rc);
        RExpr iter = base;
        for (int s = 0; s < k; ++s) iter = hhh_step(d1, iter, rc);
        CHECK(rexpr_eq(closed, iter));
        if (k == 0) CHECK(rexpr_eq(closed, base));
        if (k == 1)
          CHECK(rexpr_eq(closed, hhh_step(d1, base, rc)));
      }
}

TEST_CASE("recursion state unwinds one twist at a time") {
  RExpr base = RExpr::one();
  base.times_mono(0, 1).div_binomial(1, 0);
  for (int d1 = 0; d1 <= 3; ++d1) {
    RecursionState s = make_state(d1, 4, base, rc);
    for (int k = 4; k >= 1; --k) {
      CHECK(s.extra_twists == k);
      RecursionState down = step_down(s, rc);
      CHECK(down.extra_twists == k - 1);
      CHECK(rexpr_eq(down.series, make_state(d1, k - 1, base, rc).series));
      // step_down inverts hhh_step exactly
      CHECK(rexpr_eq(hhh_step(d1, down.series, rc), s.series));
      s = down;
    }
    CHECK(rexpr_eq(s.series, base));
    CHECK_THROWS_AS(step_down(s, rc), std::invalid_argument);
  }
}

TEST_CASE("compare_with_ideal emits residual reports") {
  auto rep = compare_with_ideal(0, {1, 2});
  CHECK(rep.entries.size() == 2);
  for (const auto& e : rep.entries) CHECK(!e.residual.empty());

  auto rep1 = compare_with_ideal(1, {2, 3, 4});
  CHECK(rep1.entries.size() == 3);

  // The identity substitution is part of the grid (match lists may or may
  // not contain it; the search space contract is that it was tried).
  CHECK_THROWS_AS(compare_with_ideal(1, {3, 5}), std::invalid_argument);
  CHECK_THROWS_AS(compare_with_ideal(1, {1}), std::invalid_argument);
}
