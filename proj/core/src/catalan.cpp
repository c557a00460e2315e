#include "qtcat/catalan.hpp"

#include <algorithm>
#include <stdexcept>

namespace qtcat {

long Partition::size() const {
  long s = 0;
  for (int p : parts) s += p;
  return s;
}

Partition Partition::conjugate() const {
  Partition c;
  if (parts.empty()) return c;
  for (int col = 1; col <= parts[0]; ++col) {
    int h = 0;
    for (int p : parts)
      if (p >= col) ++h;
    c.parts.push_back(h);
  }
  return c;
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int remaining, int maxpart) -> void {
    if (remaining == 0) {
      out.push_back(Partition{cur});
      return;
    }
    for (int p = std::min(remaining, maxpart); p >= 1; --p) {
      cur.push_back(p);
      self(self, remaining - p, p);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

SYT SYT::transposed() const {
  SYT t;
  t.shape = shape.conjugate();
  t.row_of = col_of;
  t.col_of = row_of;
  return t;
}

// Tableaux are grown label by label: every SYT is a chain of shapes with one
// box added at a time, and each step scans the addable rows in order.
std::vector<SYT> standard_tableaux(int n) {
  if (n < 1 || n > 8)
    throw std::invalid_argument("standard_tableaux supports 1 <= n <= 8");
  std::vector<SYT> out;
  std::vector<int> rows;  // current row lengths
  SYT work;
  auto rec = [&](auto&& self, int label) -> void {
    if (label > n) {
      SYT done = work;
      for (int len : rows)
        if (len > 0) done.shape.parts.push_back(len);
      std::sort(done.shape.parts.rbegin(), done.shape.parts.rend());
      out.push_back(std::move(done));
      return;
    }
    for (size_t r = 0; r <= rows.size(); ++r) {
      bool addable = r == rows.size()
                         ? (rows.empty() || rows.back() > 0)
                         : (r == 0 || rows[r - 1] > rows[r]);
      if (r == rows.size() && !rows.empty() && rows[r - 1] < 1) addable = false;
      if (!addable) continue;
      if (r == rows.size()) rows.push_back(0);
      rows[r] += 1;
      work.row_of.push_back(static_cast<int>(r) + 1);
      work.col_of.push_back(rows[r]);
      self(self, label + 1);
      work.row_of.pop_back();
      work.col_of.pop_back();
      rows[r] -= 1;
      if (!rows.empty() && rows.back() == 0) rows.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

std::vector<OmegaFactor> omega(int xq, int xt) {
  auto make = [](bool numer, int rq, int rt) {
    OmegaFactor f;
    f.in_numerator = numer;
    f.raw_q = rq;
    f.raw_t = rt;
    f.norm = normalize_binomial(rq, rt);
    f.dropped = !f.norm.factor.has_value();
    return f;
  };
  return {
      make(true, xq, xt),            // (1 - x)
      make(true, xq + 1, xt + 1),    // (1 - qtx)
      make(false, xq + 1, xt),       // (1 - qx)
      make(false, xq, xt + 1),       // (1 - tx)
  };
}

namespace {

void apply_omega(RExpr& term, int xq, int xt) {
  for (const OmegaFactor& f : omega(xq, xt)) {
    if (f.dropped) continue;
    if (f.in_numerator)
      term.times_binomial(f.raw_q, f.raw_t);
    else
      term.div_binomial(f.raw_q, f.raw_t);
  }
}

void validate_d(const std::vector<int>& d) {
  if (d.empty() || d.size() > 5)
    throw std::invalid_argument("d vector must have 1..5 entries");
  for (size_t i = 0; i < d.size(); ++i) {
    if (d[i] < 0) throw std::invalid_argument("d entries must be nonnegative");
    if (i > 0 && d[i] < d[i - 1])
      throw std::invalid_argument("d must be ascending");
  }
}

// One tableaux summand, shared by F and H. The content monomial carries the
// reversed exponents z_1^{d_n} ... z_n^{d_1}.
RExpr tableau_term(const SYT& tab, const std::vector<int>& d, bool for_F) {
  int n = tab.boxes();
  RExpr term = RExpr::one();
  for (int i = 1; i <= n; ++i) {
    auto [zq, zt] = tab.content(i);
    int exp = d[n - i];
    term.times_mono(zq * exp, zt * exp);
  }
  if (for_F) {
    for (int i = 2; i <= n; ++i) {
      auto [zq, zt] = tab.content(i);
      auto [pq, pt] = tab.content(i - 1);
      term.div_binomial(-zq, -zt);                    // (1 - z_i^{-1})
      term.div_binomial(1 + pq - zq, 1 + pt - zt);    // (1 - qt z_{i-1}/z_i)
    }
  } else {
    for (int k = 0; k < n; ++k) term.div_binomial(1, 0).div_binomial(0, 1);
    for (int i = 2; i <= n; ++i) {
      auto [zq, zt] = tab.content(i);
      term.div_binomial(-zq, -zt);
    }
  }
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      auto [iq, it] = tab.content(i);
      auto [jq, jt] = tab.content(j);
      apply_omega(term, iq - jq, it - jt);
    }
  return term;
}

}  // namespace

Poly catalan_F(const std::vector<int>& d) {
  validate_d(d);
  int n = static_cast<int>(d.size());
  std::vector<RExpr> terms;
  for (const SYT& tab : standard_tableaux(n))
    terms.push_back(tableau_term(tab, d, true));
  RExpr total = rexpr_sum(terms);
  auto poly = total.as_laurent_poly();
  if (!poly) {
    Poly num = total.numerator_full();
    auto q = laurent_exact_div(num, total.denominator_poly());
    if (!q)
      throw NonPolynomialError(
          "tableaux sum for F has a non-polynomial residue: " +
          to_string(total));
    poly = q;
  }
  if (!poly->is_polynomial())
    throw NonPolynomialError("tableaux sum for F has Laurent terms: " +
                             to_string(*poly));
  return *poly;
}

Poly catalan_F3_explicit(int d1, int d2) {
  if (d1 < 0 || d1 > d2)
    throw std::invalid_argument("need 0 <= d1 <= d2");
  Poly out;
  for (int j = 0; j <= d1; ++j) {
    Poly bracket = qt_bracket(2 * d1 + d2 + 1 - 3 * j);
    out += bracket.times(Mono::of(VQ, j) * Mono::of(VT, j));
  }
  return out;
}

RExpr hilbert_H(const std::vector<int>& d) {
  validate_d(d);
  int n = static_cast<int>(d.size());
  std::vector<RExpr> terms;
  for (const SYT& tab : standard_tableaux(n))
    terms.push_back(tableau_term(tab, d, false));
  return rexpr_sum(terms);
}

D3IndependenceReport check_d3_independence(int d1, int d2,
                                           const std::vector<int>& d3range) {
  D3IndependenceReport rep;
  rep.d1 = d1;
  rep.d2 = d2;
  rep.d3range = d3range;
  Poly first;
  bool have_first = false;
  for (int d3 : d3range) {
    if (d3 < d2)
      throw std::invalid_argument("d3 range entries must be >= d2");
    Poly f = catalan_F({d1, d2, d3});
    rep.values.push_back(to_string(f));
    if (!have_first) {
      first = f;
      have_first = true;
    } else if (!(f == first)) {
      rep.constant = false;
    }
  }
  return rep;
}

}  // namespace qtcat
