#include "qtcat/rexpr.hpp"

#include <stdexcept>

namespace qtcat {

FactorNorm normalize_binomial(int a, int b) {
  FactorNorm n;
  if (a == 0 && b == 0) return n;  // the ignored (1-1) factor
  if (a > 0 || (a == 0 && b > 0)) {
    n.factor = BinomialFactor{a, b};
    return n;
  }
  // 1 - q^a t^b = -q^a t^b (1 - q^-a t^-b)
  n.sign = -1;
  n.qshift = a;
  n.tshift = b;
  n.factor = BinomialFactor{-a, -b};
  return n;
}

Poly binomial_poly(int a, int b) {
  Poly p = Poly::one();
  p.add_term(Mono::of(VQ, a) * Mono::of(VT, b), -1);
  return p;
}

RExpr RExpr::zero() {
  RExpr r;
  r.num_ = Poly::zero();
  return r;
}

RExpr RExpr::from_poly(const Poly& p) {
  if (!p.uses_only({VQ, VT}))
    throw std::invalid_argument("RExpr polynomials live in q, t");
  RExpr r;
  r.num_ = p;
  r.canonicalize();
  return r;
}

void RExpr::canonicalize() {
  if (num_.is_zero()) {
    sign_ = 1;
    pre_ = Mono::unit();
    den_.clear();
    return;
  }
  Mono shift = num_.exponent_min();
  if (!shift.is_unit()) {
    num_ = num_.times(Mono::unit() / shift);
    pre_ = pre_ * shift;
  }
  if (num_.leading_coeff() < 0) {
    num_ = -num_;
    sign_ = -sign_;
  }
}

RExpr& RExpr::times_mono(int qe, int te) {
  pre_ = pre_ * Mono::of(VQ, qe) * Mono::of(VT, te);
  return *this;
}

RExpr& RExpr::times_rat(const Rat& c) {
  if (c == 0) {
    *this = zero();
    return *this;
  }
  Poly p = Poly::constant(c);
  num_ = num_ * p;
  canonicalize();
  return *this;
}

RExpr& RExpr::times_poly(const Poly& p) {
  if (!p.uses_only({VQ, VT}))
    throw std::invalid_argument("RExpr polynomials live in q, t");
  num_ = num_ * p;
  canonicalize();
  return *this;
}

RExpr& RExpr::times_binomial(int a, int b) {
  FactorNorm n = normalize_binomial(a, b);
  if (!n.factor) return *this;  // (1-1) ignored by convention
  sign_ *= n.sign;
  pre_ = pre_ * Mono::of(VQ, n.qshift) * Mono::of(VT, n.tshift);
  num_ = num_ * binomial_poly(n.factor->a, n.factor->b);
  canonicalize();
  return *this;
}

RExpr& RExpr::div_binomial(int a, int b) {
  FactorNorm n = normalize_binomial(a, b);
  if (!n.factor) return *this;  // (1-1) ignored by convention
  sign_ *= n.sign;
  pre_ = pre_ / (Mono::of(VQ, n.qshift) * Mono::of(VT, n.tshift));
  den_[*n.factor] += 1;
  return *this;
}

RExpr RExpr::operator*(const RExpr& o) const {
  RExpr r;
  r.sign_ = sign_ * o.sign_;
  r.pre_ = pre_ * o.pre_;
  r.num_ = num_ * o.num_;
  r.den_ = den_;
  for (const auto& [f, k] : o.den_) r.den_[f] += k;
  r.canonicalize();
  return r;
}

RExpr RExpr::operator-() const {
  RExpr r = *this;
  if (!r.is_zero()) r.sign_ = -r.sign_;
  return r;
}

RExpr RExpr::reduced() const {
  RExpr r = *this;
  if (r.is_zero()) {
    r.den_.clear();
    return r;
  }
  bool progress = true;
  while (progress) {
    progress = false;
    for (auto it = r.den_.begin(); it != r.den_.end(); ++it) {
      Poly f = binomial_poly(it->first.a, it->first.b);
      auto q = laurent_exact_div(r.num_, f);
      if (q) {
        r.num_ = *q;
        if (--it->second == 0) r.den_.erase(it);
        r.canonicalize();
        progress = true;
        break;
      }
    }
  }
  return r;
}

Poly RExpr::numerator_full() const {
  Poly p = num_.times(pre_);
  if (sign_ < 0) p = -p;
  return p;
}

Poly RExpr::denominator_poly() const {
  Poly p = Poly::one();
  for (const auto& [f, k] : den_)
    for (int i = 0; i < k; ++i) p = p * binomial_poly(f.a, f.b);
  return p;
}

std::optional<Poly> RExpr::as_laurent_poly() const {
  RExpr r = reduced();
  if (!r.den_.empty()) return std::nullopt;
  return r.numerator_full();
}

std::optional<RExpr> RExpr::substitute_qt(int a1, int b1, int a2,
                                          int b2) const {
  auto map_mono = [&](const Mono& m) {
    int eq = m.e[VQ], et = m.e[VT];
    return Mono::of(VQ, eq * a1 + et * a2) * Mono::of(VT, eq * b1 + et * b2);
  };
  RExpr r;
  r.sign_ = sign_;
  r.pre_ = map_mono(pre_);
  r.num_ = Poly::zero();
  for (const auto& [m, c] : num_.terms()) r.num_.add_term(map_mono(m), c);
  for (const auto& [f, k] : den_) {
    int na = f.a * a1 + f.b * a2;
    int nb = f.a * b1 + f.b * b2;
    if (na == 0 && nb == 0) return std::nullopt;  // denominator degenerates
    FactorNorm n = normalize_binomial(na, nb);
    for (int i = 0; i < k; ++i) {
      r.sign_ *= n.sign;
      r.pre_ = r.pre_ / (Mono::of(VQ, n.qshift) * Mono::of(VT, n.tshift));
      r.den_[*n.factor] += 1;
    }
  }
  r.canonicalize();
  return r;
}

RExpr rexpr_sum(std::span<const RExpr> terms) {
  std::map<BinomialFactor, int> common;
  for (const RExpr& x : terms)
    for (const auto& [f, k] : x.denominator())
      common[f] = std::max(common[f], k);

  Poly total;
  for (const RExpr& x : terms) {
    Poly scaled = x.numerator_full();
    for (const auto& [f, k] : common) {
      auto it = x.denominator().find(f);
      int have = it == x.denominator().end() ? 0 : it->second;
      for (int i = have; i < k; ++i) scaled = scaled * binomial_poly(f.a, f.b);
    }
    total += scaled;
  }

  RExpr r = RExpr::from_poly(total);
  for (const auto& [f, k] : common)
    for (int i = 0; i < k; ++i) r.div_binomial(f.a, f.b);
  return r.reduced();
}

RExpr rexpr_sum(std::initializer_list<RExpr> terms) {
  return rexpr_sum(std::span<const RExpr>(terms.begin(), terms.size()));
}

bool rexpr_eq(const RExpr& x, const RExpr& y) {
  return x.numerator_full() * y.denominator_poly() ==
         y.numerator_full() * x.denominator_poly();
}

std::string to_string(const RExpr& x) {
  if (x.is_zero()) return "0";
  std::string s = x.sign() < 0 ? "-" : "";
  bool unit_pre = x.prefactor().is_unit();
  bool unit_num = x.numerator() == Poly::one();
  if (!unit_pre) s += to_string(x.prefactor());
  if (!unit_num) {
    if (!unit_pre) s += " * ";
    bool need_paren = x.numerator().term_count() > 1;
    s += need_paren ? "(" + to_string(x.numerator()) + ")"
                    : to_string(x.numerator());
  }
  if (unit_pre && unit_num) s += "1";
  if (!x.denominator().empty()) {
    s += " / (";
    bool first = true;
    for (const auto& [f, k] : x.denominator()) {
      if (!first) s += "*";
      first = false;
      s += "(1-" + to_string(Mono::of(VQ, f.a) * Mono::of(VT, f.b)) + ")";
      if (k > 1) s += "^" + std::to_string(k);
    }
    s += ")";
  }
  return s;
}

}  // namespace qtcat
