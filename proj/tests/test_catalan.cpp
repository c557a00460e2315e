#include <doctest.h>

#include "qtcat/catalan.hpp"
#include "qtcat/ideal.hpp"
#include "qtcat/series.hpp"

using namespace qtcat;

TEST_CASE("standard tableaux counts") {
  CHECK(standard_tableaux(1).size() == 1);
  CHECK(standard_tableaux(2).size() == 2);
  CHECK(standard_tableaux(3).size() == 4);
  CHECK(standard_tableaux(4).size() == 10);
  CHECK(standard_tableaux(5).size() == 26);
  CHECK_THROWS_AS(standard_tableaux(9), std::invalid_argument);
}

TEST_CASE("tableaux are standard") {
  for (const SYT& t : standard_tableaux(4)) {
    // Positions strictly increase along rows and columns by construction;
    // check that contents are consistent with the recorded shape.
    REQUIRE(t.boxes() == 4);
    long total = 0;
    for (int p : t.shape.parts) total += p;
    CHECK(total == 4);
    for (int label = 2; label <= 4; ++label) {
      auto [q1, t1] = t.content(label);
      CHECK(q1 >= 0);
      CHECK(t1 >= 0);
    }
  }
}

TEST_CASE("omega factor bookkeeping") {
  // x = q: numerator (1-q), (1-q^2 t); denominator (1-q^2), (1-q t)
  auto fs = omega(1, 0);
  REQUIRE(fs.size() == 4);
  CHECK(!fs[0].dropped);
  CHECK(fs[0].in_numerator);
  CHECK(fs[0].raw_q == 1);
  CHECK(fs[1].raw_q == 2);
  CHECK(fs[1].raw_t == 1);
  CHECK(!fs[2].in_numerator);
  CHECK(fs[2].raw_q == 2);
  CHECK(fs[3].raw_q == 1);
  CHECK(fs[3].raw_t == 1);

  // x = 1/(qt): the numerator factor (1 - qt x) = (1-1) is dropped.
  fs = omega(-1, -1);
  CHECK(fs[1].dropped);
  CHECK(!fs[0].dropped);

  // x = 1: (1-x) dropped, both denominator factors stay.
  fs = omega(0, 0);
  CHECK(fs[0].dropped);
  CHECK(!fs[1].dropped);
  CHECK(!fs[2].dropped);
  CHECK(!fs[3].dropped);
}

TEST_CASE("catalan_F base cases") {
  CHECK(catalan_F({0, 0, 0}) == Poly::one());
  CHECK(catalan_F({0, 0}) == Poly::one());

  // n = 2: F = [d1+1]_{q,t}
  for (int d1 = 0; d1 <= 4; ++d1)
    for (int d2 = d1; d2 <= 5; ++d2)
      CHECK(catalan_F({d1, d2}) == qt_bracket(d1 + 1));
}

TEST_CASE("catalan_F(1,1,1) is the five-generator polynomial") {
  Poly f = catalan_F({1, 1, 1});
  CHECK(f == catalan_F3_explicit(1, 1));
  Poly want = qt_bracket(4) +
              qt_bracket(1).times(Mono::of(VQ, 1) * Mono::of(VT, 1));
  CHECK(f == want);
}

TEST_CASE("catalan_F3_explicit") {
  CHECK(catalan_F3_explicit(0, 3) == qt_bracket(4));
  // total coefficient sum at q = t = 1 equals the generator count
  Poly f33 = catalan_F3_explicit(3, 3);
  Rat sum = 0;
  for (const auto& [m, c] : f33.terms()) sum += c;
  CHECK(sum == 22);
}

TEST_CASE("tableaux F agrees with the bracket formula through (5,5)") {
  for (int d1 = 0; d1 <= 5; ++d1)
    for (int d2 = d1; d2 <= 5; ++d2)
      CHECK(catalan_F({d1, d2, d2}) == catalan_F3_explicit(d1, d2));
}

TEST_CASE("q-t symmetry") {
  for (auto d : {std::vector<int>{1, 1, 1}, {1, 2, 2}, {0, 2, 3}, {2, 2, 2}}) {
    Poly f = catalan_F(d);
    CHECK(f == f.swap_vars(VQ, VT));
  }
  // Swap q and t across the whole expression.
  RExpr h = hilbert_H({1, 2, 2});
  RExpr hs = RExpr::from_poly(h.numerator_full().swap_vars(VQ, VT));
  for (const auto& [f, k] : h.denominator())
    for (int i = 0; i < k; ++i) hs.div_binomial(f.b, f.a);
  CHECK(rexpr_eq(h, hs));
}

TEST_CASE("F coefficients are nonnegative integers") {
  for (auto d : {std::vector<int>{1, 1, 1}, {1, 2, 3}, {2, 3, 3}, {0, 1, 4}}) {
    Poly f = catalan_F(d);
    for (const auto& [m, c] : f.terms()) {
      CHECK(c > 0);
      CHECK(c.get_den() == 1);
    }
  }
}

TEST_CASE("F(1,1) evaluated at q = t = 1 counts generators") {
  for (auto [d1, d2] : {std::pair{1, 1}, {1, 2}, {2, 2}, {2, 4}}) {
    Poly f = catalan_F({d1, d2, d2});
    Rat sum = 0;
    for (const auto& [m, c] : f.terms()) sum += c;
    CHECK(sum == expected_generator_count(IdealSpec(d1, d2)));
  }
}

TEST_CASE("hilbert_H n=2 display") {
  // H(d1,d2) = q^d1/((1-q)^2(1-t)(1-t/q)) + t^d1/((1-q)(1-t)^2(1-q/t))
  for (int d1 = 0; d1 <= 2; ++d1) {
    RExpr lhs = hilbert_H({d1, d1 + 1});
    RExpr r1 = RExpr::one();
    r1.times_mono(d1, 0)
        .div_binomial(1, 0)
        .div_binomial(1, 0)
        .div_binomial(0, 1)
        .div_binomial(-1, 1);
    RExpr r2 = RExpr::one();
    r2.times_mono(0, d1)
        .div_binomial(1, 0)
        .div_binomial(0, 1)
        .div_binomial(0, 1)
        .div_binomial(1, -1);
    CHECK(rexpr_eq(lhs, rexpr_sum({r1, r2})));
  }
}

TEST_CASE("hilbert_H at the zero vector is the free series") {
  for (auto d : {std::vector<int>{0, 0}, {0, 0, 0}}) {
    RExpr lhs = hilbert_H(d);
    RExpr rhs = RExpr::one();
    for (size_t i = 0; i < d.size(); ++i)
      rhs.div_binomial(1, 0).div_binomial(0, 1);
    CHECK(rexpr_eq(lhs, rhs));
  }
}

TEST_CASE("hilbert_H matches the closed form for n = 3") {
  for (auto [d1, d2] : {std::pair{0, 0}, {1, 1}, {1, 2}, {2, 2}}) {
    RExpr lhs = hilbert_H({d1, d2, d2});
    RExpr rhs = hilbert_closed(IdealSpec(d1, d2));
    rhs.div_binomial(1, 0).div_binomial(0, 1);
    CHECK(rexpr_eq(lhs, rhs));
  }
}

TEST_CASE("d3 independence probe") {
  CHECK(check_d3_independence(1, 1, {1, 2, 3}).constant);
  CHECK(check_d3_independence(0, 0, {0, 5}).constant);
  CHECK(check_d3_independence(1, 2, {2, 4}).constant);
  CHECK_THROWS_AS(check_d3_independence(1, 2, {1}), std::invalid_argument);
}
