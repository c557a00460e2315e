#include <doctest.h>

#include <random>

#include "qtcat/series.hpp"

using namespace qtcat;

TEST_CASE("geometric expansion in q") {
  RExpr x = RExpr::one();
  x.div_binomial(1, 0);  // 1/(1-q)
  TruncSeries s = expand_series(x, Window::box(3, 0));
  for (long k = 0; k <= 3; ++k) CHECK(s.coeff(k, 0) == 1);
}

TEST_CASE("t/(1-q) on a small window") {
  RExpr x = RExpr::one();
  x.times_mono(0, 1).div_binomial(1, 0);
  TruncSeries s = expand_series(x, Window{2, 0, 1});
  CHECK(s.coeff(0, 1) == 1);
  CHECK(s.coeff(1, 1) == 1);
  CHECK(s.coeff(2, 1) == 1);
  CHECK(s.coeff(0, 0) == 0);
  CHECK(s.coeff(1, 0) == 0);
}

TEST_CASE("expansion into negative t exponents") {
  // q/(1-q/t) = q + q^2 t^-1 + q^3 t^-2 + ...
  RExpr x = RExpr::one();
  x.times_mono(1, 0).div_binomial(1, -1);
  TruncSeries s = expand_series(x, Window{3, -3, 0});
  CHECK(s.coeff(1, 0) == 1);
  CHECK(s.coeff(2, -1) == 1);
  CHECK(s.coeff(3, -2) == 1);
  CHECK(s.coeff(0, 0) == 0);
  CHECK(s.coeff(3, 0) == 0);
}

TEST_CASE("expansion is linear over rexpr_sum") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> expd(0, 2);
  std::uniform_int_distribution<int> coeff(-2, 2);
  const std::pair<int, int> pool[3] = {{1, 0}, {0, 1}, {1, -1}};
  std::uniform_int_distribution<int> pick(0, 2);
  Window w{6, -4, 6};
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<RExpr> xs;
    for (int i = 0; i < 3; ++i) {
      Poly num;
      for (int j = 0; j < 3; ++j)
        num.add_term(Mono::of(VQ, expd(rng)) * Mono::of(VT, expd(rng)),
                     coeff(rng));
      RExpr r = RExpr::from_poly(num);
      auto [a, b] = pool[pick(rng)];
      r.div_binomial(a, b);
      xs.push_back(r);
    }
    TruncSeries lhs = expand_series(rexpr_sum(xs), w);
    TruncSeries rhs = expand_series(xs[0], w) + expand_series(xs[1], w) +
                      expand_series(xs[2], w);
    CHECK(lhs.agrees_with(rhs));
  }
}

TEST_CASE("half-plane lattice sum identity for s <= 6") {
  // q^s/((1-q)(1-t/q)) + t^s/((1-t)(1-q/t)) = sum_{al+be >= s} q^al t^be
  Window w = Window::box(8, 8);
  for (int s = 0; s <= 6; ++s) {
    RExpr lhs1 = RExpr::one();
    lhs1.times_mono(s, 0).div_binomial(1, 0).div_binomial(-1, 1);
    RExpr lhs2 = RExpr::one();
    lhs2.times_mono(0, s).div_binomial(0, 1).div_binomial(1, -1);
    TruncSeries lhs = expand_series(rexpr_sum({lhs1, lhs2}), w);

    TruncSeries direct(w);
    for (long al = 0; al <= 8; ++al)
      for (long be = 0; be <= 8; ++be)
        if (al + be >= s) direct.add_coeff(al, be, 1);
    CHECK(lhs.agrees_with(direct));
  }
}

TEST_CASE("expansion matches an oversized brute-force product") {
  // Differential check of the enumeration bounds: multiply out every
  // denominator factor as a long truncated geometric series and compare on
  // the window. K = 40 safely dominates every certified per-factor bound
  // for the pools below.
  std::mt19937 rng(20240818);
  const std::pair<int, int> pool[6] = {{1, 0},  {0, 1}, {1, -1},
                                       {1, -2}, {2, 1}, {1, 2}};
  std::uniform_int_distribution<int> pick(0, 5);
  std::uniform_int_distribution<int> nden(1, 3);
  std::uniform_int_distribution<int> expd(-2, 2);
  std::uniform_int_distribution<int> coeff(-2, 2);
  Window w{8, -8, 8};
  const long K = 40;

  for (int trial = 0; trial < 25; ++trial) {
    Poly num;
    for (int j = 0; j < 3; ++j)
      num.add_term(Mono::of(VQ, expd(rng)) * Mono::of(VT, expd(rng)),
                   coeff(rng));
    RExpr r = RExpr::from_poly(num);
    int nd = nden(rng);
    std::vector<std::pair<int, int>> factors;
    for (int j = 0; j < nd; ++j) {
      auto [a, b] = pool[pick(rng)];
      factors.push_back({a, b});
      r.div_binomial(a, b);
    }

    Poly brute = r.numerator_full();
    // r's denominator is already normalized; expand each stored factor.
    for (const auto& [f, mult] : r.denominator())
      for (int m = 0; m < mult; ++m) {
        Poly geo;
        for (long k = 0; k <= K; ++k)
          geo.add_term(Mono::of(VQ, static_cast<int>(f.a * k)) *
                           Mono::of(VT, static_cast<int>(f.b * k)),
                       1);
        Poly next;
        for (const auto& [m1, c1] : brute.terms()) {
          if (m1.e[VQ] > w.qmax) continue;  // q never decreases
          for (const auto& [m2, c2] : geo.terms()) {
            Mono prod = m1 * m2;
            if (prod.e[VQ] > w.qmax) continue;
            next.add_term(prod, c1 * c2);
          }
        }
        brute = std::move(next);
      }

    TruncSeries direct(w);
    for (const auto& [m, c] : brute.terms())
      if (w.contains(m.e[VQ], m.e[VT])) direct.add_coeff(m.e[VQ], m.e[VT], c);
    TruncSeries fast = expand_series(r, w);
    CHECK(fast.agrees_with(direct));
  }
}

TEST_CASE("window bookkeeping for monomial shifts") {
  RExpr x = RExpr::one();
  x.div_binomial(1, 0);
  TruncSeries s = expand_series(x, Window::box(4, 0));
  TruncSeries down = s.shifted(-2, 1);
  CHECK(down.window().qmax == 2);
  CHECK(down.window().tmin == 1);
  CHECK(down.window().tmax == 1);
  CHECK(down.coeff(0, 1) == 1);
  CHECK(!down.shrink_log().empty());
  CHECK_THROWS_AS(s.shifted(1, 0), std::invalid_argument);
}

TEST_CASE("invalid window is rejected") {
  CHECK_THROWS_AS(expand_series(RExpr::one(), Window{-1, 0, 0}),
                  std::invalid_argument);
  CHECK_THROWS_AS(expand_series(RExpr::one(), Window{2, 3, 1}),
                  std::invalid_argument);
}
