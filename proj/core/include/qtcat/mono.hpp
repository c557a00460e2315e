#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace qtcat {

using Rat = mpq_class;

// Fixed variable universe. The enum value doubles as the lexicographic
// precedence of the variable: q > t > a > b > c > d > u > v > t1..t4 > x1..x4.
enum Var : int {
  VQ = 0,
  VT,
  VA,
  VB,
  VC,
  VD,
  VU,
  VV,
  VT1,
  VT2,
  VT3,
  VT4,
  VX1,
  VX2,
  VX3,
  VX4,
  kVarCount
};

std::string_view var_name(int v);
int var_by_name(std::string_view name);  // -1 if unknown
int var_t(int i);                        // t_i, 1-based, i <= 4
int var_x(int i);                        // x_i, 1-based, i <= 4

struct Bidegree {
  long qdeg = 0;
  long tdeg = 0;
  auto operator<=>(const Bidegree&) const = default;
};

// Which of the two series variables each polynomial variable counts toward:
// a, c, u and the t_i are q-weighted; b, d, v and the x_i are t-weighted.
struct WeightTable {
  std::array<bool, kVarCount> q_weighted{};
};
const WeightTable& default_weights();

// Monomial with integer exponents (negative = Laurent), stored densely over
// the fixed variable universe.
struct Mono {
  std::array<int32_t, kVarCount> e{};

  static Mono unit() { return Mono{}; }
  static Mono of(int v, int exp = 1);

  bool is_unit() const;
  bool is_polynomial() const;  // all exponents nonnegative
  long total_degree() const;
  Bidegree bidegree(const WeightTable& w = default_weights()) const;
  bool uses_only(std::initializer_list<int> vars) const;

  Mono operator*(const Mono& o) const;
  Mono operator/(const Mono& o) const;  // Laurent division, always defined
  Mono pow(long k) const;
  bool divides(const Mono& o) const;  // exponentwise <=, polynomial sense

  bool operator==(const Mono& o) const { return e == o.e; }
  bool operator<(const Mono& o) const;  // term order
};

// Graded lex order (total degree first, then variable precedence).
// Returns <0, 0, >0 like strcmp; positive means m1 is the larger monomial.
int term_order_cmp(const Mono& m1, const Mono& m2);

// Comparator putting the leading monomial first in a std::map.
struct TermOrderGreater {
  bool operator()(const Mono& m1, const Mono& m2) const {
    return term_order_cmp(m1, m2) > 0;
  }
};

std::string to_string(const Mono& m);

}  // namespace qtcat
