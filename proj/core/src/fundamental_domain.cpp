#include "qtcat/fundamental_domain.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "qtcat/ideal.hpp"

namespace qtcat {

PolytopeSpec::PolytopeSpec(std::vector<int> d_) : d(std::move(d_)) {
  n = static_cast<int>(d.size());
  if (n < 2 || n > 6)
    throw std::invalid_argument("polytope supports 2 <= n <= 6");
  for (int i = 0; i < n; ++i) {
    if (d[i] < 0) throw std::invalid_argument("d entries must be nonnegative");
    if (i > 0 && d[i] < d[i - 1])
      throw std::invalid_argument("d must be ascending");
  }
}

int PolytopeSpec::dij(int i, int j) const { return std::min(d[i], d[j]); }

std::vector<PermVertex> polytope_vertices(const PolytopeSpec& spec) {
  int n = spec.n;
  std::vector<int> sigma(n);
  std::iota(sigma.begin(), sigma.end(), 1);
  std::vector<PermVertex> out;
  do {
    std::vector<int> inv(n + 1, 0);
    for (int i = 1; i <= n; ++i) inv[sigma[i - 1]] = i;
    std::vector<long> b(n + 1, 0);
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j < i; ++j) b[i] += spec.dij(inv[i] - 1, inv[j] - 1);
    LatticePoint p(n);
    for (int i = 1; i <= n; ++i) p[i - 1] = b[sigma[i - 1]];
    out.push_back(PermVertex{sigma, std::move(p)});
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return out;
}

namespace {

long cross(const std::pair<long, long>& o, const std::pair<long, long>& a,
           const std::pair<long, long>& b) {
  return (a.first - o.first) * (b.second - o.second) -
         (a.second - o.second) * (b.first - o.first);
}

// Monotone-chain hull; collinear points are dropped.
std::vector<std::pair<long, long>> convex_hull(
    std::vector<std::pair<long, long>> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() <= 2) return pts;
  std::vector<std::pair<long, long>> hull(2 * pts.size());
  size_t k = 0;
  for (size_t i = 0; i < pts.size(); ++i) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  size_t lower = k + 1;
  for (size_t i = pts.size() - 1; i-- > 0;) {
    while (k >= lower && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  return hull;
}

bool on_segment(const std::pair<long, long>& a, const std::pair<long, long>& b,
                const std::pair<long, long>& p) {
  if (cross(a, b, p) != 0) return false;
  return std::min(a.first, b.first) <= p.first &&
         p.first <= std::max(a.first, b.first) &&
         std::min(a.second, b.second) <= p.second &&
         p.second <= std::max(a.second, b.second);
}

bool in_hull(const std::vector<std::pair<long, long>>& hull,
             const std::pair<long, long>& p) {
  if (hull.empty()) return false;
  if (hull.size() == 1) return hull[0] == p;
  if (hull.size() == 2) return on_segment(hull[0], hull[1], p);
  for (size_t i = 0; i < hull.size(); ++i) {
    const auto& a = hull[i];
    const auto& b = hull[(i + 1) % hull.size()];
    if (cross(a, b, p) < 0) return false;
  }
  return true;
}

}  // namespace

ZonotopeReport zonotope_check(const PolytopeSpec& spec) {
  if (spec.n > 4)
    throw std::invalid_argument("zonotope check supports n <= 4");
  ZonotopeReport rep;
  const int n = spec.n;
  auto vertices = polytope_vertices(spec);

  // Endpoint rule: choose e_i exactly when sigma(i) < sigma(j). With the
  // vertex table's b_i = sum_{j<i} convention this sum is the vertex of the
  // reversed permutation w0 sigma, so sigma -> w0 sigma matches every vertex
  // with an endpoint decomposition.
  std::map<std::vector<int>, LatticePoint> by_sigma;
  for (const auto& v : vertices) by_sigma[v.sigma] = v.p;
  for (const auto& v : vertices) {
    LatticePoint sum(n, 0);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        int pick = v.sigma[i] < v.sigma[j] ? i : j;
        sum[pick] += spec.dij(i, j);
      }
    std::vector<int> reversed(n);
    for (int i = 0; i < n; ++i) reversed[i] = n + 1 - v.sigma[i];
    if (sum != by_sigma.at(reversed)) {
      rep.decompositions_ok = false;
      std::ostringstream os;
      os << "endpoint decomposition differs for sigma = (";
      for (int s : v.sigma) os << s;
      os << ")";
      rep.issues.push_back(os.str());
    }
  }

  if (n == 3) {
    // The polytope lives in the plane sum x_i = const; project away x3.
    std::vector<std::pair<long, long>> pts;
    for (const auto& v : vertices) pts.push_back({v.p[0], v.p[1]});
    auto hull = convex_hull(pts);
    rep.hull_vertex_count = hull.size();

    // Enumerate every endpoint choice of the three segments.
    int pairs[3][2] = {{0, 1}, {0, 2}, {1, 2}};
    for (int mask = 0; mask < 8; ++mask) {
      long x[3] = {0, 0, 0};
      for (int s = 0; s < 3; ++s) {
        int i = pairs[s][0], j = pairs[s][1];
        x[(mask >> s) & 1 ? j : i] += spec.dij(i, j);
      }
      if (!in_hull(hull, {x[0], x[1]})) {
        rep.hull_ok = false;
        std::ostringstream os;
        os << "zonotope point (" << x[0] << "," << x[1] << "," << x[2]
           << ") escapes the hull";
        rep.issues.push_back(os.str());
      }
    }
  } else {
    // Vertex decompositions only; hull membership is a planar check.
    std::set<std::vector<long>> distinct;
    for (const auto& v : vertices) distinct.insert(v.p);
    rep.hull_vertex_count = distinct.size();
  }
  return rep;
}

std::vector<std::pair<int, int>> half_hexagon_points(int d1, int d2) {
  if (d1 < 0 || d1 > d2) throw std::invalid_argument("need 0 <= d1 <= d2");
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a <= d1; ++a)
    for (int b = 0; b <= d1 + d2 - a; ++b) out.push_back({a, b});
  return out;
}

LambdaLine lambda_and_line(int d1, int d2) {
  if (d1 < 0 || d1 > d2) throw std::invalid_argument("need 0 <= d1 <= d2");
  LambdaLine out;
  if (d1 + d2 > 0) out.lambda.parts.push_back(d1 + d2);
  if (d1 > 0) out.lambda.parts.push_back(d1);
  out.line_x_coeff = 1;
  out.line_y_coeff = d2;
  out.line_rhs = d1 + 2 * d2;

  // Scan rows: integer boxes (x, y), x, y >= 1, with x + d2 y <= d1 + 2 d2.
  // Rows above the lambda rows must come out empty.
  std::vector<int> scanned;
  for (int y = 1; y <= d1 + 2 * d2 + 2; ++y) {
    long xmax = out.line_rhs - static_cast<long>(out.line_y_coeff) * y;
    int len = static_cast<int>(std::max(0L, xmax));
    if (len == 0 && y > static_cast<int>(out.lambda.parts.size())) break;
    scanned.push_back(len);
  }
  while (!scanned.empty() && scanned.back() == 0) scanned.pop_back();
  out.verified = scanned == out.lambda.parts;
  return out;
}

int area(TwoRowDiagram mu, int d1, int d2) {
  if (mu.a < 0 || mu.b < 0 || mu.a > d1 || mu.a + mu.b > d1 + d2)
    throw std::invalid_argument("diagram not contained in lambda");
  return (2 * d1 + d2) - (2 * mu.a + mu.b);
}

int dinv(TwoRowDiagram mu, int d2) {
  // Boxes of mu = (a+b, a); arm and leg computed inside mu, with leg 0
  // making the right-hand inequality vacuous.
  int rows[2] = {mu.a + mu.b, mu.a};
  int count = 0;
  for (int r = 0; r < 2; ++r)
    for (int x = 1; x <= rows[r]; ++x) {
      int arm = rows[r] - x;
      int leg = (r == 0 && x <= rows[1]) ? 1 : 0;
      bool left = arm <= d2 * (leg + 1);
      bool right = leg == 0 || static_cast<long>(d2) * leg <= arm;
      if (left && right) ++count;
    }
  return count;
}

std::pair<int, int> phi(TwoRowDiagram mu, int d1, int d2) {
  int a = mu.a, b = mu.b;
  int x = 2 * d1 + d2 - 2 * a - b;
  int y;
  if (a + b <= d2)
    y = a + b;
  else if (b <= d2)
    y = 2 * a + 2 * b - d2;
  else
    y = 2 * a + d2 + 1;
  if (x != area(mu, d1, d2) || y != dinv(mu, d2))
    throw std::logic_error("phi case formula disagrees with (area, dinv)");
  return {x, y};
}

TrapezoidData trapezoid_points(int d1, int d2) {
  if (d1 < 0 || d1 > d2) throw std::invalid_argument("need 0 <= d1 <= d2");
  TrapezoidData out;
  int hi = 2 * d1 + d2;
  for (int x = 0; x <= hi; ++x)
    for (int y = 0; y <= hi; ++y) {
      if (x + y < d1 + d2 || x + y > hi) continue;
      if (x + 2 * y < hi || 2 * x + y < hi) continue;
      out.points.push_back({x, y});
      out.generating_poly.add_term(Mono::of(VQ, x) * Mono::of(VT, y), 1);
    }
  return out;
}

BijectionReport full_bijection_check(int d1, int d2) {
  BijectionReport rep;
  auto hex = half_hexagon_points(d1, d2);
  rep.count = hex.size();

  // (a, b) -> mu = (a+b, a) must hit every subdiagram of lambda exactly once.
  std::set<std::pair<int, int>> mus;
  for (auto [a, b] : hex) mus.insert({a + b, a});
  std::set<std::pair<int, int>> subdiagrams;
  for (int m2 = 0; m2 <= d1; ++m2)
    for (int m1 = m2; m1 <= d1 + d2; ++m1) subdiagrams.insert({m1, m2});
  rep.hexagon_to_subdiagrams = mus == subdiagrams && mus.size() == hex.size();

  // phi must be injective with image exactly the trapezoid.
  std::set<std::pair<int, int>> images;
  Poly qt_sum;
  for (auto [a, b] : hex) {
    TwoRowDiagram mu{a, b};
    auto im = phi(mu, d1, d2);
    images.insert(im);
    qt_sum.add_term(Mono::of(VQ, im.first) * Mono::of(VT, im.second), 1);
  }
  auto trap = trapezoid_points(d1, d2);
  std::set<std::pair<int, int>> trap_set(trap.points.begin(),
                                         trap.points.end());
  rep.phi_bijective_onto_trapezoid =
      images.size() == hex.size() && images == trap_set;

  // Each trapezoid point carries exactly one generator bidegree.
  std::set<std::pair<int, int>> gen_degrees;
  for (const auto& g : generator_list(IdealSpec(d1, d2)))
    gen_degrees.insert({static_cast<int>(g.bidegree.qdeg),
                        static_cast<int>(g.bidegree.tdeg)});
  rep.trapezoid_matches_generators =
      gen_degrees == trap_set &&
      static_cast<long>(gen_degrees.size()) ==
          expected_generator_count(IdealSpec(d1, d2));

  rep.qtcat_sum_matches_F = qt_sum == catalan_F3_explicit(d1, d2);
  return rep;
}

}  // namespace qtcat
