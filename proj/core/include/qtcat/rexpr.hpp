#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qtcat/poly.hpp"

namespace qtcat {

// Denominator factor (1 - q^a t^b), stored only with lexicographically
// positive exponent pair: a > 0, or a = 0 and b > 0. The pair (0,0) is never
// stored; un-normalized factors are rewritten as -q^a t^b (1 - q^-a t^-b)
// with the sign and monomial absorbed by the owning expression.
struct BinomialFactor {
  int a = 0;
  int b = 0;
  auto operator<=>(const BinomialFactor&) const = default;
};

struct FactorNorm {
  int sign = 1;
  int qshift = 0;
  int tshift = 0;
  std::optional<BinomialFactor> factor;  // nullopt when the input was (1-1)
};
FactorNorm normalize_binomial(int a, int b);

// The factor (1 - q^a t^b) expanded as a (Laurent) polynomial in q, t.
Poly binomial_poly(int a, int b);

// Rational expression sign * prefactor * numerator / prod (1 - q^a t^b).
// The prefactor is a Laurent monomial in q and t; the numerator is kept
// monomial-content-free with positive leading coefficient.
class RExpr {
 public:
  RExpr() : sign_(1), num_(Poly::one()) {}

  static RExpr zero();
  static RExpr one() { return RExpr(); }
  static RExpr from_poly(const Poly& p);  // Laurent poly in q, t

  int sign() const { return sign_; }
  const Mono& prefactor() const { return pre_; }
  const Poly& numerator() const { return num_; }
  const std::map<BinomialFactor, int>& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RExpr& times_mono(int qe, int te);
  RExpr& times_rat(const Rat& c);
  RExpr& times_poly(const Poly& p);
  // Multiply numerator / denominator by (1 - q^a t^b), given the raw
  // exponents. Applies the normalization above and the convention that a
  // literal (1-1) factor is ignored.
  RExpr& times_binomial(int a, int b);
  RExpr& div_binomial(int a, int b);

  RExpr operator*(const RExpr& o) const;
  RExpr operator-() const;

  // Cancels denominator factors that divide the numerator exactly.
  RExpr reduced() const;

  // sign * prefactor * numerator as a Laurent polynomial.
  Poly numerator_full() const;
  // Product of the denominator factors as a Laurent polynomial.
  Poly denominator_poly() const;
  // The expression as a Laurent polynomial, if the reduced denominator is
  // trivial.
  std::optional<Poly> as_laurent_poly() const;

  // q -> q^a1 t^b1, t -> q^a2 t^b2. nullopt if a denominator factor would
  // collapse to (1-1).
  std::optional<RExpr> substitute_qt(int a1, int b1, int a2, int b2) const;

 private:
  void canonicalize();

  int sign_;
  Mono pre_;
  Poly num_;
  std::map<BinomialFactor, int> den_;
};

// Sum over a common denominator (the multiset maximum of the terms'
// denominators), reduced at the end.
RExpr rexpr_sum(std::span<const RExpr> terms);
RExpr rexpr_sum(std::initializer_list<RExpr> terms);

// Exact equality as rational functions, decided by cross multiplication.
bool rexpr_eq(const RExpr& x, const RExpr& y);

std::string to_string(const RExpr& x);

}  // namespace qtcat
