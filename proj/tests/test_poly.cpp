#include <doctest.h>

#include <random>

#include "qtcat/poly.hpp"

using namespace qtcat;

namespace {

Poly q() { return Poly::var(VQ); }
Poly t() { return Poly::var(VT); }

// Small random polynomials over q, t with exponents < 4 and coefficients in
// [-3, 3]; used for the ring-law properties.
Poly random_poly(std::mt19937& rng, int max_terms = 8) {
  std::uniform_int_distribution<int> nterms(0, max_terms);
  std::uniform_int_distribution<int> expd(0, 3);
  std::uniform_int_distribution<int> coeffd(-3, 3);
  Poly p;
  int n = nterms(rng);
  for (int i = 0; i < n; ++i) {
    Mono m = Mono::of(VQ, expd(rng)) * Mono::of(VT, expd(rng));
    p.add_term(m, coeffd(rng));
  }
  return p;
}

}  // namespace

TEST_CASE("monomial order is graded lex with q before t") {
  Mono q2 = Mono::of(VQ, 2);
  Mono qt = Mono::of(VQ, 1) * Mono::of(VT, 1);
  Mono t2 = Mono::of(VT, 2);
  Mono q1 = Mono::of(VQ, 1);
  CHECK(term_order_cmp(q2, qt) > 0);
  CHECK(term_order_cmp(qt, t2) > 0);
  CHECK(term_order_cmp(q2, q1) > 0);  // higher total degree wins
  CHECK(term_order_cmp(q1, q1) == 0);
}

TEST_CASE("bidegree uses the weight table") {
  Mono m = Mono::of(VA, 2) * Mono::of(VB, 1) * Mono::of(VC, 1) *
           Mono::of(VD, 3);
  Bidegree bd = m.bidegree();
  CHECK(bd.qdeg == 3);
  CHECK(bd.tdeg == 4);
}

TEST_CASE("exact_div worked examples") {
  // (q^2 - t^2) / (q - t) = q + t
  auto r = exact_div(q() * q() - t() * t(), q() - t());
  REQUIRE(r.has_value());
  CHECK(*r == q() + t());
  // q^2 + t^2 is not divisible by q - t
  CHECK(!exact_div(q() * q() + t() * t(), q() - t()).has_value());
}

TEST_CASE("exact_div recovers the cofactor") {
  std::mt19937 rng(20240817);
  int done = 0;
  while (done < 50) {
    Poly p = random_poly(rng);
    Poly d = random_poly(rng);
    if (d.is_zero()) continue;
    ++done;
    auto quot = exact_div(p * d, d);
    REQUIRE(quot.has_value());
    CHECK(*quot == p);
  }
}

TEST_CASE("laurent division recovers the cofactor") {
  std::mt19937 rng(5150);
  std::uniform_int_distribution<int> expd(-3, 3);
  std::uniform_int_distribution<int> coeffd(-3, 3);
  auto random_laurent = [&]() {
    Poly p;
    for (int i = 0; i < 5; ++i)
      p.add_term(Mono::of(VQ, expd(rng)) * Mono::of(VT, expd(rng)),
                 coeffd(rng));
    return p;
  };
  int done = 0;
  while (done < 40) {
    Poly p = random_laurent(), d = random_laurent();
    if (d.is_zero()) continue;
    ++done;
    auto quot = laurent_exact_div(p * d, d);
    REQUIRE(quot.has_value());
    CHECK(*quot == p);
  }
}

TEST_CASE("ring laws on random polynomials") {
  std::mt19937 rng(7);
  for (int i = 0; i < 60; ++i) {
    Poly x = random_poly(rng), y = random_poly(rng), z = random_poly(rng);
    CHECK((x + y) + z == x + (y + z));
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * (y + z) == x * y + x * z);
    CHECK(x * y == y * x);
    CHECK(x - x == Poly::zero());
  }
}

TEST_CASE("laurent division shifts exponents") {
  // (t^{d+1} - q^{d+1} t^{-1} * t) / (t - q) style checks via Laurent shift
  Poly p = Poly::mono(Mono::of(VT, 2)) - Poly::mono(Mono::of(VQ, 2));
  Poly d = Poly::mono(Mono::of(VT, 1) * Mono::of(VQ, -1)) - Poly::one();
  // p / d = q(t + q)
  auto r = laurent_exact_div(p, d);
  REQUIRE(r.has_value());
  CHECK(*r == (t() + q()).times(Mono::of(VQ, 1)));
}

TEST_CASE("qt_bracket") {
  CHECK(qt_bracket(0) == Poly::zero());
  CHECK(qt_bracket(1) == Poly::one());
  Poly b4 = Poly::mono(Mono::of(VQ, 3)) +
            Poly::mono(Mono::of(VQ, 2) * Mono::of(VT, 1)) +
            Poly::mono(Mono::of(VQ, 1) * Mono::of(VT, 2)) +
            Poly::mono(Mono::of(VT, 3));
  CHECK(qt_bracket(4) == b4);
}

TEST_CASE("substitution") {
  // a -> u + c in a^2: u^2 + 2uc + c^2
  Poly a2 = Poly::var(VA, 2);
  Poly res = a2.substitute({{VA, Poly::var(VU) + Poly::var(VC)}});
  Poly want = Poly::var(VU, 2) + Poly::var(VC, 2) +
              (Poly::var(VU) * Poly::var(VC)).times(Mono::unit(), 2);
  CHECK(res == want);
}

TEST_CASE("polynomial rendering is stable") {
  Poly p = Poly::var(VA, 2) * Poly::var(VC) - Poly::var(VA) * Poly::var(VC, 2);
  CHECK(to_string(p) == "a^2*c - a*c^2");
  CHECK(to_string(Poly::zero()) == "0");
  Poly half = Poly::constant(Rat(1, 2));
  CHECK(to_string(half) == "1/2");
}
