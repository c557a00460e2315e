#include "qtcat/link.hpp"

#include <stdexcept>

#include "qtcat/ideal.hpp"

namespace qtcat {

namespace {

// (1 - (q t^{-2})^d) / (1 - q t^{-2}) as the geometric sum, plus the tail
// (q t^{-2})^d / (1-q) or / (q-1) depending on the convention.
RExpr bracket_impl(int d1, SignConvention conv) {
  Poly geo;
  for (int k = 0; k < d1; ++k)
    geo.add_term(Mono::of(VQ, k) * Mono::of(VT, -2 * k), 1);
  RExpr head = RExpr::from_poly(geo);

  RExpr tail = RExpr::one();
  tail.times_mono(d1, -2 * d1).div_binomial(1, 0);  // (qt^-2)^d1 / (1-q)
  if (conv == SignConvention::as_printed) tail = -tail;
  return rexpr_sum({head, tail});
}

}  // namespace

RExpr alpha_series(int d1, SignConvention conv) {
  if (d1 < 0) throw std::invalid_argument("d1 must be nonnegative");
  // The base case is printed as t/(1-q) regardless of the closed form's
  // tail sign; the printed closed form disagrees with it exactly at the
  // first recursion step.
  if (d1 == 0) conv = SignConvention::recursion_consistent;
  RExpr r = bracket_impl(d1, conv);
  r.times_mono(0, 1);
  return r;
}

RExpr hhh_bracket(int d1, SignConvention conv) {
  if (d1 < 0) throw std::invalid_argument("d1 must be nonnegative");
  return bracket_impl(d1, conv);
}

RExpr hhh_step(int d1, const RExpr& S, SignConvention conv) {
  RExpr shifted = S;
  shifted.times_mono(1, -1);
  return rexpr_sum({hhh_bracket(d1, conv), shifted});
}

RExpr hhh_closed(int d1, int k, const RExpr& base, SignConvention conv) {
  if (k < 0) throw std::invalid_argument("k must be nonnegative");
  RExpr a = hhh_bracket(d1, conv);
  std::vector<RExpr> terms;
  for (int j = 0; j < k; ++j) {
    RExpr t = a;
    t.times_mono(j, -j);
    terms.push_back(t);
  }
  RExpr b = base;
  b.times_mono(k, -k);
  terms.push_back(b);
  return rexpr_sum(terms);
}

RecursionState make_state(int d1, int k, const RExpr& base,
                          SignConvention conv) {
  return RecursionState{d1, k, hhh_closed(d1, k, base, conv)};
}

RecursionState step_down(const RecursionState& s, SignConvention conv) {
  if (s.extra_twists < 1)
    throw std::invalid_argument("no extra twists left to resolve");
  RExpr prev = rexpr_sum({s.series, -hhh_bracket(s.d1, conv)});
  prev.times_mono(-1, 1);  // undo the q t^{-1} shift
  return RecursionState{s.d1, s.extra_twists - 1, std::move(prev)};
}

namespace {

RExpr ideal_side_candidate(int d1, int d2) {
  RExpr c = hilbert_closed(IdealSpec(d1, d2));
  c.times_binomial(0, 1).times_binomial(0, 1).div_binomial(1, 0);
  return c;
}

}  // namespace

IdealComparisonReport compare_with_ideal(int d1,
                                         const std::vector<int>& d2range) {
  if (d2range.empty())
    throw std::invalid_argument("empty d2 range");
  for (size_t i = 0; i < d2range.size(); ++i) {
    if (d2range[i] <= d1)
      throw std::invalid_argument("d2 range must lie above d1");
    if (i > 0 && d2range[i] != d2range[i - 1] + 1)
      throw std::invalid_argument("d2 range must be consecutive");
  }

  IdealComparisonReport rep;
  rep.d1 = d1;
  RExpr a = hhh_bracket(d1, SignConvention::recursion_consistent);

  std::vector<RExpr> residuals;
  for (int d2 : d2range) {
    RExpr cur = ideal_side_candidate(d1, d2);
    RExpr prev = ideal_side_candidate(d1, d2 - 1);
    prev.times_mono(1, -1);
    RExpr res = rexpr_sum({cur, -prev});
    residuals.push_back(res);

    ResidualEntry entry;
    entry.d2 = d2;
    entry.residual = to_string(res);
    for (int a1 = -2; a1 <= 2; ++a1)
      for (int b1 = -2; b1 <= 2; ++b1)
        for (int a2 = -2; a2 <= 2; ++a2)
          for (int b2 = -2; b2 <= 2; ++b2) {
            auto sub = res.substitute_qt(a1, b1, a2, b2);
            if (!sub) continue;
            // sigma(R) = q^s t^r A(d1) iff the cross quotient is that
            // monomial with coefficient one.
            Poly lhs = sub->numerator_full() * a.denominator_poly();
            Poly rhs = a.numerator_full() * sub->denominator_poly();
            if (rhs.is_zero()) continue;
            auto quot = laurent_exact_div(lhs, rhs);
            if (!quot || quot->term_count() != 1) continue;
            if (quot->leading_coeff() != 1) continue;
            const Mono& m = quot->leading_mono();
            if (!m.uses_only({VQ, VT})) continue;
            entry.matches.push_back(
                SubstitutionMatch{a1, b1, a2, b2, m.e[VQ], m.e[VT]});
          }
    rep.entries.push_back(std::move(entry));
  }

  for (size_t i = 1; i < residuals.size(); ++i)
    if (!rexpr_eq(residuals[i - 1], residuals[i])) rep.d2_independent = false;
  return rep;
}

}  // namespace qtcat
