#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "qtcat/rexpr.hpp"

namespace qtcat {

struct Partition {
  std::vector<int> parts;  // weakly decreasing, positive
  long size() const;
  Partition conjugate() const;
  bool operator==(const Partition&) const = default;
};

std::vector<Partition> partitions_of(int n);

// Standard Young tableau in French notation; the box labeled i sits at
// row_of[i-1], col_of[i-1] (1-based), with (q,t)-content q^{col-1} t^{row-1}.
struct SYT {
  Partition shape;
  std::vector<int> row_of;
  std::vector<int> col_of;
  int boxes() const { return static_cast<int>(row_of.size()); }
  // exponents (q, t) of the content monomial z_label
  std::pair<int, int> content(int label) const {
    return {col_of[label - 1] - 1, row_of[label - 1] - 1};
  }
  SYT transposed() const;
};

// All standard tableaux with n boxes, in a fixed deterministic order.
std::vector<SYT> standard_tableaux(int n);  // 1 <= n <= 8

// One factor of omega(x) = (1-x)(1-qtx) / ((1-qx)(1-tx)) evaluated at a
// Laurent monomial x, with the (1-1) convention applied.
struct OmegaFactor {
  bool in_numerator = true;
  bool dropped = false;  // the factor was (1-1)
  int raw_q = 0, raw_t = 0;  // exponents in (1 - q^raw_q t^raw_t)
  FactorNorm norm;
};
std::vector<OmegaFactor> omega(int xq, int xt);

// Raised when the tableaux sum for F fails to reduce to a polynomial.
class NonPolynomialError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Generalized q,t-Catalan polynomial: tableaux sum, certified polynomial by
// exact division. The d vector is ascending; exponents are applied reversed
// (z_1 carries d_n, ..., z_n carries d_1).
Poly catalan_F(const std::vector<int>& d);  // |d| <= 5

// The n = 3 bracket formula: sum_{j=0}^{d1} (qt)^j [2d1+d2+1-3j]_{q,t}.
Poly catalan_F3_explicit(int d1, int d2);

// The tableaux sum for the full Hilbert series.
RExpr hilbert_H(const std::vector<int>& d);  // |d| <= 5

struct D3IndependenceReport {
  int d1 = 0, d2 = 0;
  std::vector<int> d3range;
  bool constant = true;
  std::vector<std::string> values;  // rendered F per d3
};
D3IndependenceReport check_d3_independence(int d1, int d2,
                                           const std::vector<int>& d3range);

}  // namespace qtcat
