#include "qtcat/ideal.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

namespace qtcat {

namespace {

const mpz_class& binom(int n, int k) {
  static std::vector<std::vector<mpz_class>> rows = {{1}};
  static const mpz_class zero = 0;
  if (k < 0 || k > n) return zero;
  while (static_cast<int>(rows.size()) <= n) {
    const auto& prev = rows.back();
    std::vector<mpz_class> row(prev.size() + 1, 1);
    for (size_t i = 1; i < prev.size(); ++i) row[i] = prev[i - 1] + prev[i];
    rows.push_back(std::move(row));
  }
  return rows[n][k];
}

Poly pv(int v) { return Poly::var(v); }

}  // namespace

IdealSpec::IdealSpec(int d1_, int d2_) : d1(d1_), d2(d2_) {
  if (d1 < 0 || d1 > d2)
    throw std::invalid_argument("IdealSpec needs 0 <= d1 <= d2");
}

char family_letter(GenFamily f) {
  switch (f) {
    case GenFamily::A: return 'A';
    case GenFamily::B: return 'B';
    case GenFamily::C: return 'C';
    case GenFamily::D: return 'D';
  }
  return '?';
}

bool member_M(const Poly& p, int d1, int d2) {
  for (const auto& [m, c] : p.terms()) {
    if (!m.uses_only({VA, VB, VC, VD}) || !m.is_polynomial())
      throw std::invalid_argument("member_M expects a polynomial in a,b,c,d");
    if (m.e[VA] + m.e[VB] < d1) return false;
    if (m.e[VC] + m.e[VD] < d2) return false;
  }
  return true;
}

bool member_M(const Poly& p, const IdealSpec& spec) {
  return member_M(p, spec.d1, spec.d2);
}

bool member_linear_power(const Poly& p, const Poly& l1, const Poly& l2,
                         int k) {
  if (k < 0) throw std::invalid_argument("power must be nonnegative");
  std::array<Rat, kVarCount> c1{}, c2{};
  auto load = [](const Poly& l, std::array<Rat, kVarCount>& out) {
    for (const auto& [m, c] : l.terms()) {
      if (m.total_degree() != 1 || !m.is_polynomial())
        throw std::invalid_argument("expected a linear form");
      for (int v = 0; v < kVarCount; ++v)
        if (m.e[v] == 1) {
          if (v == VU || v == VV)
            throw std::invalid_argument("forms may not involve u or v");
          out[v] = c;
        }
    }
  };
  load(l1, c1);
  load(l2, c2);

  // First variable pair (in the fixed order) with an invertible 2x2 minor.
  int v1 = -1, v2 = -1;
  Rat det;
  for (int i = 0; i < kVarCount && v1 < 0; ++i)
    for (int j = i + 1; j < kVarCount; ++j) {
      det = c1[i] * c2[j] - c1[j] * c2[i];
      if (det != 0) {
        v1 = i;
        v2 = j;
        break;
      }
    }
  if (v1 < 0) throw std::invalid_argument("linear forms are dependent");

  // Solve (l1, l2) = (u, v) for (v1, v2): the residue of each form over the
  // remaining variables moves to the right-hand side.
  Poly r1 = l1 - pv(v1) * Poly::constant(c1[v1]) - pv(v2) * Poly::constant(c1[v2]);
  Poly r2 = l2 - pv(v1) * Poly::constant(c2[v1]) - pv(v2) * Poly::constant(c2[v2]);
  Poly rhs1 = pv(VU) - r1;
  Poly rhs2 = pv(VV) - r2;
  Rat inv = 1 / det;
  Poly e1 = (rhs1 * Poly::constant(c2[v2] * inv)) -
            (rhs2 * Poly::constant(c1[v2] * inv));
  Poly e2 = (rhs2 * Poly::constant(c1[v1] * inv)) -
            (rhs1 * Poly::constant(c2[v1] * inv));

  Poly q = p.substitute({{v1, e1}, {v2, e2}});
  for (const auto& [m, c] : q.terms())
    if (m.e[VU] + m.e[VV] < k) return false;
  return true;
}

bool member_J(const Poly& p, const IdealSpec& spec) {
  if (!member_M(p, spec)) return false;
  return member_linear_power(p, pv(VA) - pv(VC), pv(VB) - pv(VD), spec.d1);
}

GeneratorDescriptor generator(GenFamily fam, int i, int j,
                              const IdealSpec& spec) {
  const int d1 = spec.d1, d2 = spec.d2;
  if (j < 0 || j > d1) throw std::invalid_argument("generator j out of range");
  Poly amc = pv(VA) - pv(VC);
  Poly bmd = pv(VB) - pv(VD);
  Poly adbc = pv(VA) * pv(VD) - pv(VB) * pv(VC);

  GeneratorDescriptor g;
  g.family = fam;
  g.i = i;
  g.j = j;
  switch (fam) {
    case GenFamily::A:
      if (i < 1 || i > d1 - j)
        throw std::invalid_argument("A generator i out of range");
      g.value = Poly::var(VA, d1 - j) * Poly::var(VC, d2 - j) * amc.pow(i) *
                bmd.pow(d1 - j - i) * adbc.pow(j);
      g.bidegree = {d1 + d2 - j + i, d1 - i};
      break;
    case GenFamily::B:
      if (i < 1 || i > d1 - j)
        throw std::invalid_argument("B generator i out of range");
      g.value = Poly::var(VA, d1 - j - i) * Poly::var(VB, i) *
                Poly::var(VD, d2 - j) * bmd.pow(d1 - j) * adbc.pow(j);
      g.bidegree = {d1 - i, d1 + d2 - j + i};
      break;
    case GenFamily::C:
      if (i < 1 || i > d2 - j)
        throw std::invalid_argument("C generator i out of range");
      g.value = Poly::var(VA, d1 - j) * Poly::var(VC, i) *
                Poly::var(VD, d2 - j - i) * bmd.pow(d1 - j) * adbc.pow(j);
      g.bidegree = {d1 + i, d1 + d2 - j - i};
      break;
    case GenFamily::D:
      g.i = 0;
      g.value = Poly::var(VA, d1 - j) * Poly::var(VD, d2 - j) *
                bmd.pow(d1 - j) * adbc.pow(j);
      g.bidegree = {d1, d1 + d2 - j};
      break;
  }
  return g;
}

std::vector<GeneratorDescriptor> generator_list(const IdealSpec& spec) {
  std::vector<GeneratorDescriptor> out;
  for (int j = 0; j <= spec.d1; ++j)
    for (int i = 1; i <= spec.d1 - j; ++i)
      out.push_back(generator(GenFamily::A, i, j, spec));
  for (int j = 0; j <= spec.d1; ++j)
    for (int i = 1; i <= spec.d1 - j; ++i)
      out.push_back(generator(GenFamily::B, i, j, spec));
  for (int j = 0; j <= spec.d1; ++j)
    for (int i = 1; i <= spec.d2 - j; ++i)
      out.push_back(generator(GenFamily::C, i, j, spec));
  for (int j = 0; j <= spec.d1; ++j)
    out.push_back(generator(GenFamily::D, 0, j, spec));
  return out;
}

long expected_generator_count(const IdealSpec& spec) {
  long n = 0;
  for (int j = 0; j <= spec.d1; ++j) n += 2 * spec.d1 + spec.d2 + 1 - 3 * j;
  return n;
}

std::vector<Mono> slice_monomials_abcd(Bidegree bd) {
  std::vector<Mono> out;
  if (bd.qdeg < 0 || bd.tdeg < 0) return out;
  for (long ea = bd.qdeg; ea >= 0; --ea)
    for (long eb = bd.tdeg; eb >= 0; --eb) {
      Mono m;
      m.e[VA] = static_cast<int32_t>(ea);
      m.e[VC] = static_cast<int32_t>(bd.qdeg - ea);
      m.e[VB] = static_cast<int32_t>(eb);
      m.e[VD] = static_cast<int32_t>(bd.tdeg - eb);
      out.push_back(m);
    }
  std::sort(out.begin(), out.end(), TermOrderGreater{});
  return out;
}

std::vector<Mono> slice_monomials_general(int n, Bidegree bd) {
  std::vector<Mono> out;
  if (bd.qdeg < 0 || bd.tdeg < 0) return out;
  std::vector<std::vector<int>> tparts, xparts;
  std::vector<int> cur(n, 0);
  auto enumerate = [&](auto&& self, long remaining, int idx, long total,
                       std::vector<std::vector<int>>& sink) -> void {
    if (idx == n - 1) {
      cur[idx] = static_cast<int>(remaining);
      sink.push_back(cur);
      return;
    }
    for (long v = 0; v <= remaining; ++v) {
      cur[idx] = static_cast<int>(v);
      self(self, remaining - v, idx + 1, total, sink);
    }
  };
  enumerate(enumerate, bd.qdeg, 0, bd.qdeg, tparts);
  enumerate(enumerate, bd.tdeg, 0, bd.tdeg, xparts);
  for (const auto& tp : tparts)
    for (const auto& xp : xparts) {
      Mono m;
      for (int i = 0; i < n; ++i) {
        m.e[var_t(i + 1)] = tp[i];
        m.e[var_x(i + 1)] = xp[i];
      }
      out.push_back(m);
    }
  std::sort(out.begin(), out.end(), TermOrderGreater{});
  return out;
}

namespace {

// Columns of the oracle: slice monomials that already lie in the monomial
// ideal M (coefficients of the others are forced to zero).
std::vector<Mono> oracle_columns(const IdealSpec& spec, Bidegree bd) {
  std::vector<Mono> cols;
  for (const Mono& m : slice_monomials_abcd(bd))
    if (m.e[VA] + m.e[VB] >= spec.d1 && m.e[VC] + m.e[VD] >= spec.d2)
      cols.push_back(m);
  return cols;
}

// Constraint rows for membership in (a-c, b-d)^d1 after substituting
// a -> u + c, b -> v + d: the coefficient of u^s v^r (with the c, d exponents
// determined by the bidegree) must vanish for all s + r < d1.
RowSpace oracle_rowspace(const IdealSpec& spec, Bidegree bd,
                         const std::vector<Mono>& cols) {
  RowSpace rs(cols.size());
  for (int s = 0; s < spec.d1; ++s) {
    if (s > bd.qdeg) break;
    for (int r = 0; s + r < spec.d1; ++r) {
      if (r > bd.tdeg) break;
      std::vector<Rat> row(cols.size(), Rat(0));
      bool nonzero = false;
      for (size_t idx = 0; idx < cols.size(); ++idx) {
        int alpha = cols[idx].e[VA], beta = cols[idx].e[VB];
        if (s > alpha || r > beta) continue;
        row[idx] = Rat(binom(alpha, s) * binom(beta, r));
        nonzero = true;
      }
      if (nonzero) rs.insert(std::move(row));
    }
  }
  return rs;
}

}  // namespace

GradedPiece graded_piece_oracle(const IdealSpec& spec, Bidegree bd) {
  GradedPiece piece;
  piece.bidegree = bd;
  auto cols = oracle_columns(spec, bd);
  if (cols.empty()) return piece;
  RowSpace rs = oracle_rowspace(spec, bd, cols);
  for (const auto& vec : rs.kernel_basis()) {
    Poly p;
    for (size_t i = 0; i < cols.size(); ++i) p.add_term(cols[i], vec[i]);
    piece.basis.push_back(std::move(p));
  }
  return piece;
}

long graded_dim_oracle(const IdealSpec& spec, Bidegree bd) {
  auto cols = oracle_columns(spec, bd);
  if (cols.empty()) return 0;
  RowSpace rs = oracle_rowspace(spec, bd, cols);
  return static_cast<long>(cols.size() - rs.rank());
}

TruncSeries hilbert_from_basis(const IdealSpec& spec, Window w) {
  if (w.qmax < 0 || w.tmin > w.tmax)
    throw std::invalid_argument("invalid window");
  const int d1 = spec.d1, d2 = spec.d2;
  TruncSeries out(w);
  for (long x = 0; x <= w.qmax; ++x) {
    for (long y = std::max(w.tmin, 0L); y <= w.tmax; ++y) {
      long n = 0;
      // m(a,c) A_{i,j}: bidegree (d1+d2-j+i + |m|, d1-i).
      for (int j = 0; j <= d1 - 1; ++j) {
        long i = d1 - y;
        if (i < 1 || i > d1 - j) continue;
        long base = d1 + d2 - j + i;
        if (x >= base) n += x - base + 1;
      }
      // a^al b^be d^ga (b-d)^{d1-j} (ad-bc)^j with al+be >= d1-j, ga >= d2-j
      // (the B family together with the D generators).
      for (int j = 0; j <= d1 - 1; ++j) {
        long al = x - j;
        if (al < 0) continue;
        long s = y - (d1 + d2 - j);
        if (s < 0) continue;
        long bmin = std::max(0L, (d1 - j) - al);
        if (s >= bmin) n += s - bmin + 1;
      }
      // a^al c^be d^ga (b-d)^{d1-j} (ad-bc)^j with al >= d1-j, be+ga >= d2-j
      // (the C family together with the D generators).
      for (int j = 0; j <= d1 - 1; ++j) {
        long ga = y - d1;
        if (ga < 0) continue;
        long bmin = std::max(0L, (d2 - j) - ga);
        long bmax = x - d1;
        if (bmax >= bmin) n += bmax - bmin + 1;
      }
      // The D multiples m(a,d) D_j were counted by both parametrizations.
      for (int j = 0; j <= d1 - 1; ++j) {
        if (x >= d1 && y - d1 >= d2 - j) n -= 1;
      }
      // j = d1: a^al b^be c^ga d^de (ad-bc)^d1 with ga+de >= d2-d1.
      {
        long X = x - d1, Y = y - d1;
        if (X >= 0 && Y >= 0) {
          for (long ga = 0; ga <= X; ++ga)
            for (long de = 0; de <= Y; ++de)
              if (ga + de >= d2 - d1) n += 1;
        }
      }
      out.add_coeff(x, y, Rat(n));
    }
  }
  return out;
}

RExpr hilbert_closed(const IdealSpec& spec) {
  const int d1 = spec.d1, d2 = spec.d2;
  RExpr s1 = RExpr::one();
  s1.times_mono(2 * d1 + d2, 0)
      .div_binomial(1, 0)
      .div_binomial(1, 0)
      .div_binomial(-1, 1)
      .div_binomial(-2, 1);
  RExpr s2 = RExpr::one();
  s2.times_mono(0, 2 * d1 + d2)
      .div_binomial(0, 1)
      .div_binomial(0, 1)
      .div_binomial(1, -1)
      .div_binomial(1, -2);
  RExpr s3 = RExpr::one();
  s3.times_mono(d1, d2)
      .times_poly(Poly::one() + Poly::var(VT))
      .div_binomial(1, 0)
      .div_binomial(0, 1)
      .div_binomial(1, -1)
      .div_binomial(-1, 2);
  RExpr s4 = RExpr::one();
  s4.times_mono(d2, d1)
      .times_poly(Poly::one() + Poly::var(VQ))
      .div_binomial(0, 1)
      .div_binomial(1, 0)
      .div_binomial(-1, 1)
      .div_binomial(2, -1);
  return rexpr_sum({s1, s2, s3, s4});
}

namespace {

// Rank of the span of {m * g} in the given slice, with early exit once the
// target dimension is reached.
long product_span_rank(const std::vector<Poly>& gens, Bidegree bd, long target,
                       const std::vector<Mono>& cols) {
  if (target == 0) return 0;
  std::map<Mono, size_t> col_index;
  for (size_t i = 0; i < cols.size(); ++i) col_index[cols[i]] = i;
  RowSpace rs(cols.size());
  for (const Poly& g : gens) {
    auto gb = g.bidegree_if_homogeneous();
    if (!gb) throw std::logic_error("generator not bihomogeneous");
    long mq = bd.qdeg - gb->qdeg, mt = bd.tdeg - gb->tdeg;
    if (mq < 0 || mt < 0) continue;
    for (long ea = 0; ea <= mq; ++ea)
      for (long eb = 0; eb <= mt; ++eb) {
        Mono m;
        m.e[VA] = static_cast<int32_t>(ea);
        m.e[VC] = static_cast<int32_t>(mq - ea);
        m.e[VB] = static_cast<int32_t>(eb);
        m.e[VD] = static_cast<int32_t>(mt - eb);
        Poly prod = g.times(m);
        std::vector<Rat> row(cols.size(), Rat(0));
        for (const auto& [pm, pc] : prod.terms()) row[col_index.at(pm)] = pc;
        rs.insert(std::move(row));
        if (static_cast<long>(rs.rank()) == target) return target;
      }
  }
  return static_cast<long>(rs.rank());
}

GenerationReport span_sweep(const IdealSpec& spec,
                            const std::vector<Poly>& gens, int cutoff) {
  GenerationReport rep;
  rep.cutoff = cutoff;
  for (int x = 0; x <= cutoff; ++x)
    for (int y = 0; x + y <= cutoff; ++y) {
      Bidegree bd{x, y};
      long dim = graded_dim_oracle(spec, bd);
      long rank = product_span_rank(gens, bd, dim, slice_monomials_abcd(bd));
      ++rep.cells_checked;
      if (rank != dim) {
        rep.ok = false;
        rep.failures.push_back({bd, dim, rank});
      }
    }
  return rep;
}

}  // namespace

GenerationReport check_generation(const IdealSpec& spec, int cutoff) {
  if (cutoff < 2 * spec.d1 + spec.d2)
    throw std::invalid_argument(
        "cutoff below the maximal generator total degree");
  std::vector<Poly> gens;
  for (const auto& g : generator_list(spec)) gens.push_back(g.value);
  return span_sweep(spec, gens, cutoff);
}

namespace {

void multisets(int count, int size,
               const std::function<void(const std::vector<int>&)>& emit) {
  std::vector<int> pick(size, 0);
  auto rec = [&](auto&& self, int pos, int lo) -> void {
    if (pos == size) {
      emit(pick);
      return;
    }
    for (int v = lo; v < count; ++v) {
      pick[pos] = v;
      self(self, pos + 1, v);
    }
  };
  if (size == 0)
    emit({});
  else
    rec(rec, 0, 0);
}

}  // namespace

J111Report check_J111(const IdealSpec& spec, int cutoff) {
  const int d1 = spec.d1, d2 = spec.d2;
  J111Report rep;

  Poly amc = pv(VA) - pv(VC);
  Poly bmd = pv(VB) - pv(VD);
  Poly adbc = pv(VA) * pv(VD) - pv(VB) * pv(VC);
  Poly fA = pv(VA) * pv(VC) * amc;   // ac(a-c)
  Poly fB = pv(VB) * pv(VD) * bmd;   // bd(b-d)
  Poly fC = pv(VA) * pv(VC) * bmd;   // ac(b-d)
  Poly fD = pv(VA) * pv(VD) * bmd;   // ad(b-d)

  auto record = [&](const GeneratorDescriptor& g, const Poly& rhs) {
    if (!(g.value == rhs)) {
      rep.factorizations_ok = false;
      std::ostringstream os;
      os << family_letter(g.family) << "_{" << g.i << "," << g.j
         << "} factorization mismatch";
      rep.factorization_failures.push_back(os.str());
    }
  };

  for (const auto& g : generator_list(spec)) {
    switch (g.family) {
      case GenFamily::A:
        record(g, fA.pow(g.i) * fC.pow(d1 - g.j - g.i) * adbc.pow(g.j) *
                      Poly::var(VC, d2 - d1));
        break;
      case GenFamily::B:
        record(g, fD.pow(d1 - g.j - g.i) * fB.pow(g.i) * adbc.pow(g.j) *
                      Poly::var(VD, d2 - d1));
        break;
      case GenFamily::C: {
        int xex = std::max(0, g.i + d1 - d2);
        record(g, fC.pow(xex) * fD.pow(d1 - g.j - xex) * adbc.pow(g.j) *
                      Poly::var(VC, g.i - xex) *
                      Poly::var(VD, d2 - d1 - g.i + xex));
        break;
      }
      case GenFamily::D:
        record(g, fD.pow(d1 - g.j) * adbc.pow(g.j) * Poly::var(VD, d2 - d1));
        break;
    }
  }
  rep.ok = rep.factorizations_ok;

  // Degreewise span of J(1,1)^d1 * J(0,1)^(d2-d1) against the oracle.
  if (cutoff < 2 * d1 + d2)
    throw std::invalid_argument(
        "cutoff below the maximal product generator total degree");
  std::vector<Poly> g11;
  if (d1 > 0)
    for (const auto& g : generator_list(IdealSpec(1, 1)))
      g11.push_back(g.value);
  std::vector<Poly> g01 = {pv(VC), pv(VD)};

  std::vector<Poly> products;
  multisets(static_cast<int>(g11.size()), d1, [&](const std::vector<int>& s1) {
    Poly p1 = Poly::one();
    for (int idx : s1) p1 = p1 * g11[idx];
    multisets(2, d2 - d1, [&](const std::vector<int>& s2) {
      Poly p = p1;
      for (int idx : s2) p = p * g01[idx];
      products.push_back(p);
    });
  });

  GenerationReport span = span_sweep(spec, products, cutoff);
  rep.cells_checked = span.cells_checked;
  rep.span_failures = span.failures;
  rep.ok = rep.ok && span.ok;
  return rep;
}

GeneralIdealSpec::GeneralIdealSpec(std::vector<int> d_) : d(std::move(d_)) {
  n = static_cast<int>(d.size());
  if (n < 2 || n > 4)
    throw std::invalid_argument("general ideal supports 2 <= n <= 4");
  for (int i = 0; i < n; ++i) {
    if (d[i] < 0) throw std::invalid_argument("d entries must be nonnegative");
    if (i > 0 && d[i] < d[i - 1])
      throw std::invalid_argument("d must be ascending");
  }
}

int GeneralIdealSpec::dij(int i, int j) const {
  return std::min(d[i], d[j]);
}

bool member_J_general(const Poly& p, const GeneralIdealSpec& spec) {
  for (int i = 0; i < spec.n; ++i)
    for (int j = i + 1; j < spec.n; ++j) {
      Poly l1 = pv(var_t(i + 1)) - pv(var_t(j + 1));
      Poly l2 = pv(var_x(i + 1)) - pv(var_x(j + 1));
      if (!member_linear_power(p, l1, l2, spec.dij(i, j))) return false;
    }
  return true;
}

long graded_dim_oracle_general(const GeneralIdealSpec& spec, Bidegree bd) {
  auto cols = slice_monomials_general(spec.n, bd);
  if (cols.empty()) return 0;
  std::map<Mono, size_t> col_index;
  for (size_t i = 0; i < cols.size(); ++i) col_index[cols[i]] = i;

  RowSpace rs(cols.size());
  for (int i = 0; i < spec.n; ++i) {
    for (int j = i + 1; j < spec.n; ++j) {
      int k = spec.dij(i, j);
      if (k == 0) continue;
      int ti = var_t(i + 1), tj = var_t(j + 1);
      int xi = var_x(i + 1), xj = var_x(j + 1);
      // Substitute t_i -> u + t_j, x_i -> v + x_j; collect coefficients of
      // monomials whose combined (u,v)-degree is below k.
      std::map<Mono, std::vector<Rat>> rows;
      for (size_t idx = 0; idx < cols.size(); ++idx) {
        const Mono& m = cols[idx];
        int alpha = m.e[ti], beta = m.e[xi];
        for (int s = 0; s <= alpha; ++s)
          for (int r = 0; r <= beta && s + r < k; ++r) {
            Mono key = m;
            key.e[ti] = 0;
            key.e[xi] = 0;
            key.e[VU] = s;
            key.e[VV] = r;
            key.e[tj] += alpha - s;
            key.e[xj] += beta - r;
            auto [it, inserted] =
                rows.try_emplace(key, std::vector<Rat>(cols.size(), Rat(0)));
            it->second[idx] += Rat(binom(alpha, s) * binom(beta, r));
          }
      }
      for (auto& [key, row] : rows) rs.insert(std::move(row));
    }
  }
  return static_cast<long>(cols.size() - rs.rank());
}

}  // namespace qtcat
