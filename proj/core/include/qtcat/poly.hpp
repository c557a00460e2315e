#pragma once

#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qtcat/mono.hpp"

namespace qtcat {

// Sparse multivariate polynomial with exact rational coefficients.
// Terms are kept in descending graded-lex order, so begin() is the leading
// term. Negative exponents (Laurent) are permitted; operations that require
// genuine polynomials check explicitly.
class Poly {
 public:
  using TermMap = std::map<Mono, Rat, TermOrderGreater>;

  Poly() = default;
  static Poly zero() { return Poly(); }
  static Poly one() { return constant(1); }
  static Poly constant(Rat c);
  static Poly var(int v, int exp = 1);
  static Poly mono(Mono m, Rat c = 1);

  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }
  bool is_polynomial() const;  // no negative exponents
  bool uses_only(std::initializer_list<int> vars) const;

  const Mono& leading_mono() const;
  const Rat& leading_coeff() const;
  Rat coeff(const Mono& m) const;

  Poly operator-() const;
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  bool operator==(const Poly& o) const { return terms_ == o.terms_; }

  Poly times(const Mono& m, const Rat& c = 1) const;
  Poly pow(long k) const;

  // Simultaneous substitution of polynomials for variables.
  Poly substitute(const std::vector<std::pair<int, Poly>>& repl) const;
  // Swap two variables in every term.
  Poly swap_vars(int v1, int v2) const;

  long total_degree() const;  // max over terms; 0 for the zero polynomial
  // Bidegree if all terms share one, nullopt otherwise (zero counts as
  // bihomogeneous of any degree and reports nullopt).
  std::optional<Bidegree> bidegree_if_homogeneous(
      const WeightTable& w = default_weights()) const;
  // Componentwise minimum of exponents over all terms (unit for zero).
  Mono exponent_min() const;

  void add_term(const Mono& m, const Rat& c);

 private:
  TermMap terms_;
};

// Exact division in the polynomial ring (fixed graded-lex order; the outcome
// is order independent because only exact quotients are returned). Inputs
// must have nonnegative exponents; nullopt signals non-divisibility.
std::optional<Poly> exact_div(const Poly& p, const Poly& d);

// Exact division of Laurent polynomials: both arguments are shifted to the
// polynomial range, divided, and the quotient shifted back.
std::optional<Poly> laurent_exact_div(const Poly& p, const Poly& d);

// [n]_{q,t} = q^{n-1} + q^{n-2} t + ... + t^{n-1}; [0] = 0.
Poly qt_bracket(long n);

std::string to_string(const Poly& p);

}  // namespace qtcat
