#pragma once

#include <map>
#include <string>
#include <vector>

#include "qtcat/rexpr.hpp"

namespace qtcat {

// Validity window of a truncated bigraded series: coefficients are exact for
// 0 <= qexp <= qmax and tmin <= texp <= tmax. An empty window (qmax < 0 or
// tmin > tmax) certifies nothing.
struct Window {
  long qmax = 0;
  long tmin = 0;
  long tmax = 0;

  bool empty() const { return qmax < 0 || tmin > tmax; }
  bool contains(long qe, long te) const {
    return qe >= 0 && qe <= qmax && te >= tmin && te <= tmax;
  }
  static Window intersect(const Window& a, const Window& b);
  static Window box(long qmax, long tmax) { return Window{qmax, 0, tmax}; }
};

// Bidegree-windowed Laurent series with exact rational coefficients.
class TruncSeries {
 public:
  explicit TruncSeries(Window w) : win_(w) {}

  const Window& window() const { return win_; }
  const std::vector<std::string>& shrink_log() const { return shrink_log_; }

  Rat coeff(long qe, long te) const;  // throws outside the window
  void add_coeff(long qe, long te, const Rat& c);
  const std::map<std::pair<long, long>, Rat>& coeffs() const {
    return coeffs_;
  }

  TruncSeries operator+(const TruncSeries& o) const;
  TruncSeries operator-(const TruncSeries& o) const;
  TruncSeries scaled(const Rat& c) const;

  // Multiplication by the Laurent monomial q^qs t^ts. A negative q-shift
  // shrinks the certified window and records the shrink; a positive q-shift
  // cannot be certified with a window anchored at qexp = 0 and is rejected.
  TruncSeries shifted(long qs, long ts) const;

  TruncSeries restricted(Window w) const;

  // Equality of coefficients on the intersection of the two windows.
  bool agrees_with(const TruncSeries& o) const;
  // First disagreement, as a printable description (empty if none).
  std::string first_disagreement(const TruncSeries& o) const;

 private:
  Window win_;
  std::map<std::pair<long, long>, Rat> coeffs_;
  std::vector<std::string> shrink_log_;
};

// Exact expansion of a rational expression on a window. Every denominator
// factor (1 - q^a t^b) is normalized, hence expands as sum_k q^{ak} t^{bk};
// the enumeration bounds below certify that no lattice point of the window
// is missed. Throws if the window is invalid.
TruncSeries expand_series(const RExpr& x, Window w);

}  // namespace qtcat
