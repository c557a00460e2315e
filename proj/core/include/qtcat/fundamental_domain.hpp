#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qtcat/catalan.hpp"
#include "qtcat/poly.hpp"

namespace qtcat {

// Data of the fundamental-domain polytope P(d_1,...,d_n): vertices are
// indexed by permutations, p_sigma = sigma(b_1,...,b_n) with
// b_i = sum_{j<i} d_{sigma^{-1}(i) sigma^{-1}(j)}.
struct PolytopeSpec {
  int n = 0;
  std::vector<int> d;  // ascending
  explicit PolytopeSpec(std::vector<int> d_);
  int dij(int i, int j) const;  // 0-based
};

using LatticePoint = std::vector<long>;

struct PermVertex {
  std::vector<int> sigma;  // one-line notation, sigma[i] = sigma(i+1), 1-based values
  LatticePoint p;
};

std::vector<PermVertex> polytope_vertices(const PolytopeSpec& spec);  // n <= 6

struct ZonotopeReport {
  bool decompositions_ok = true;  // each p_sigma is a sum of segment endpoints
  bool hull_ok = true;            // every endpoint-choice sum lies in conv{p_sigma}
  size_t hull_vertex_count = 0;
  std::vector<std::string> issues;
};

// Verifies that conv{p_sigma} is the Minkowski sum of the segments
// [d_ij e_i, d_ij e_j]. The hull containment check runs for n = 3 (the
// polytope is planar there); the endpoint decomposition is checked for any n.
ZonotopeReport zonotope_check(const PolytopeSpec& spec);  // n <= 4

// Integer points (a, b) with 0 <= a <= d1, 0 <= b <= d1+d2-a, parametrizing
// half of the n = 3 fundamental domain via
// (d1,0,d1+d2) + a(1,0,-1) + b(0,1,-1).
std::vector<std::pair<int, int>> half_hexagon_points(int d1, int d2);

// Two-row subdiagram mu = (a+b, a) of lambda_{d1,d2} = (d1+d2, d1).
struct TwoRowDiagram {
  int a = 0;
  int b = 0;
};

struct LambdaLine {
  Partition lambda;        // (d1+d2, d1), zero rows dropped
  long line_x_coeff = 1;   // the line x + d2 y = d1 + 2 d2 (integer form)
  long line_y_coeff = 0;
  long line_rhs = 0;
  bool verified = false;   // lambda equals the lattice scan under the line
};
LambdaLine lambda_and_line(int d1, int d2);

int area(TwoRowDiagram mu, int d1, int d2);
int dinv(TwoRowDiagram mu, int d2);

// The case-split bijection image; throws if it ever disagrees with
// (area, dinv).
std::pair<int, int> phi(TwoRowDiagram mu, int d1, int d2);

struct TrapezoidData {
  std::vector<std::pair<int, int>> points;
  Poly generating_poly;  // sum q^x t^y
};

// Integer points of {d1+d2 <= x+y <= 2d1+d2, x+2y >= 2d1+d2, 2x+y >= 2d1+d2}.
TrapezoidData trapezoid_points(int d1, int d2);

struct BijectionReport {
  bool hexagon_to_subdiagrams = false;
  bool phi_bijective_onto_trapezoid = false;
  bool trapezoid_matches_generators = false;
  bool qtcat_sum_matches_F = false;
  size_t count = 0;
  bool ok() const {
    return hexagon_to_subdiagrams && phi_bijective_onto_trapezoid &&
           trapezoid_matches_generators && qtcat_sum_matches_F;
  }
};

// The three-step chain: half-hexagon -> subdiagrams -> trapezoid points ->
// generator bidegrees, plus sum q^area t^dinv = F(d1, d2).
BijectionReport full_bijection_check(int d1, int d2);

}  // namespace qtcat
