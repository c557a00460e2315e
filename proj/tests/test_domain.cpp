#include <doctest.h>

#include <map>
#include <set>

#include "qtcat/fundamental_domain.hpp"
#include "qtcat/ideal.hpp"

using namespace qtcat;

namespace {

std::map<std::vector<int>, LatticePoint> vertex_map(const PolytopeSpec& s) {
  std::map<std::vector<int>, LatticePoint> out;
  for (const auto& v : polytope_vertices(s)) out[v.sigma] = v.p;
  return out;
}

}  // namespace

TEST_CASE("vertices for (3,5) match the worked table") {
  auto m = vertex_map(PolytopeSpec({3, 5, 5}));
  CHECK(m[{1, 2, 3}] == LatticePoint{0, 3, 8});
  CHECK(m[{2, 1, 3}] == LatticePoint{3, 0, 8});   // (1 2)
  CHECK(m[{3, 2, 1}] == LatticePoint{6, 5, 0});   // (1 3)
  CHECK(m[{1, 3, 2}] == LatticePoint{0, 8, 3});   // (2 3)
  CHECK(m[{2, 3, 1}] == LatticePoint{3, 8, 0});   // (1 2 3)
  CHECK(m[{3, 1, 2}] == LatticePoint{6, 0, 5});   // (1 3 2)
}

TEST_CASE("equal parameters give the dilated permutahedron") {
  for (int d = 0; d <= 3; ++d) {
    for (const auto& v : polytope_vertices(PolytopeSpec({d, d, d, d}))) {
      for (size_t i = 0; i < 4; ++i)
        CHECK(v.p[i] == static_cast<long>(d) * (v.sigma[i] - 1));
    }
  }
}

TEST_CASE("zero parameters collapse to the origin") {
  for (const auto& v : polytope_vertices(PolytopeSpec({0, 0, 0})))
    CHECK(v.p == LatticePoint{0, 0, 0});
}

TEST_CASE("vertices lie on a fixed hyperplane") {
  for (auto d : {std::vector<int>{1, 2, 4}, {0, 3, 3}, {2, 2, 5, 6}}) {
    PolytopeSpec spec(d);
    long target = 0;
    for (int i = 0; i < spec.n; ++i)
      for (int j = i + 1; j < spec.n; ++j) target += spec.dij(i, j);
    for (const auto& v : polytope_vertices(spec)) {
      long s = 0;
      for (long x : v.p) s += x;
      CHECK(s == target);
    }
  }
}

TEST_CASE("zonotope check") {
  auto rep = zonotope_check(PolytopeSpec({1, 1, 1}));
  CHECK(rep.decompositions_ok);
  CHECK(rep.hull_ok);
  CHECK(rep.hull_vertex_count == 6);

  auto rep35 = zonotope_check(PolytopeSpec({3, 5, 5}));
  CHECK(rep35.decompositions_ok);
  CHECK(rep35.hull_ok);

  auto rep0 = zonotope_check(PolytopeSpec({0, 0, 0}));
  CHECK(rep0.decompositions_ok);
  CHECK(rep0.hull_ok);
}

TEST_CASE("half hexagon counts") {
  CHECK(half_hexagon_points(1, 1).size() == 5);
  CHECK(half_hexagon_points(0, 0).size() == 1);
  CHECK(half_hexagon_points(3, 5).size() == 30);
  CHECK(static_cast<long>(half_hexagon_points(3, 5).size()) ==
        expected_generator_count(IdealSpec(3, 5)));
}

TEST_CASE("lambda under the line") {
  auto l35 = lambda_and_line(3, 5);
  CHECK(l35.lambda.parts == std::vector<int>{8, 3});
  CHECK(l35.verified);
  auto l00 = lambda_and_line(0, 0);
  CHECK(l00.lambda.parts.empty());
  CHECK(l00.verified);
  auto l11 = lambda_and_line(1, 1);
  CHECK(l11.lambda.parts == std::vector<int>{2, 1});
  CHECK(l11.verified);
}

TEST_CASE("area and dinv worked values") {
  CHECK(area(TwoRowDiagram{0, 0}, 1, 1) == 3);
  CHECK(dinv(TwoRowDiagram{0, 0}, 1) == 0);
  // mu = lambda = (2,1) at d2 = 1: dinv = 3 = 2a+2b-d2
  CHECK(dinv(TwoRowDiagram{1, 1}, 1) == 3);
  // mu = (2,0): dinv = 2 = 2a+d2+1
  CHECK(dinv(TwoRowDiagram{0, 2}, 1) == 2);
}

TEST_CASE("phi worked values") {
  CHECK(phi(TwoRowDiagram{0, 0}, 1, 1) == std::pair{3, 0});
  CHECK(phi(TwoRowDiagram{1, 1}, 1, 1) == std::pair{0, 3});
  CHECK(phi(TwoRowDiagram{0, 2}, 1, 1) == std::pair{1, 2});
}

TEST_CASE("phi equals (area, dinv) on every subdiagram") {
  for (int d1 = 0; d1 <= 5; ++d1)
    for (int d2 = d1; d2 <= 8; ++d2)
      for (int a = 0; a <= d1; ++a)
        for (int b = 0; a + b <= d1 + d2; ++b) {
          TwoRowDiagram mu{a, b};
          auto [x, y] = phi(mu, d1, d2);  // throws on disagreement
          CHECK(x == area(mu, d1, d2));
          CHECK(y == dinv(mu, d2));
        }
}

TEST_CASE("trapezoid points") {
  auto t11 = trapezoid_points(1, 1);
  std::set<std::pair<int, int>> got(t11.points.begin(), t11.points.end());
  std::set<std::pair<int, int>> want = {{3, 0}, {2, 1}, {1, 1}, {1, 2}, {0, 3}};
  CHECK(got == want);

  // d1 = 0: the diagonal x + y = d2
  auto t03 = trapezoid_points(0, 3);
  CHECK(t03.points.size() == 4);
  for (auto [x, y] : t03.points) CHECK(x + y == 3);

  // (3,3): 22 points in diagonals of 10, 7, 4, 1
  auto t33 = trapezoid_points(3, 3);
  CHECK(t33.points.size() == 22);
  std::map<int, int> diag;
  for (auto [x, y] : t33.points) diag[x + y] += 1;
  CHECK(diag[9] == 10);
  CHECK(diag[8] == 7);
  CHECK(diag[7] == 4);
  CHECK(diag[6] == 1);
}

TEST_CASE("full bijection chain") {
  for (auto [d1, d2] : {std::pair{1, 1}, {0, 2}, {3, 5}}) {
    auto rep = full_bijection_check(d1, d2);
    CHECK(rep.hexagon_to_subdiagrams);
    CHECK(rep.phi_bijective_onto_trapezoid);
    CHECK(rep.trapezoid_matches_generators);
    CHECK(rep.qtcat_sum_matches_F);
  }
  CHECK(full_bijection_check(1, 1).count == 5);
  CHECK(full_bijection_check(0, 2).count == 3);
  CHECK(full_bijection_check(3, 5).count == 30);
}
