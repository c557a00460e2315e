#include "qtcat/series.hpp"

#include <sstream>
#include <stdexcept>

namespace qtcat {

Window Window::intersect(const Window& a, const Window& b) {
  return Window{std::min(a.qmax, b.qmax), std::max(a.tmin, b.tmin),
                std::min(a.tmax, b.tmax)};
}

Rat TruncSeries::coeff(long qe, long te) const {
  if (!win_.contains(qe, te))
    throw std::invalid_argument("coefficient outside the certified window");
  auto it = coeffs_.find({qe, te});
  return it == coeffs_.end() ? Rat(0) : it->second;
}

void TruncSeries::add_coeff(long qe, long te, const Rat& c) {
  if (!win_.contains(qe, te) || c == 0) return;
  auto [it, inserted] = coeffs_.emplace(std::make_pair(qe, te), c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) coeffs_.erase(it);
  }
}

TruncSeries TruncSeries::operator+(const TruncSeries& o) const {
  TruncSeries r(Window::intersect(win_, o.win_));
  for (const auto& [k, c] : coeffs_) r.add_coeff(k.first, k.second, c);
  for (const auto& [k, c] : o.coeffs_) r.add_coeff(k.first, k.second, c);
  return r;
}

TruncSeries TruncSeries::operator-(const TruncSeries& o) const {
  return *this + o.scaled(-1);
}

TruncSeries TruncSeries::scaled(const Rat& c) const {
  TruncSeries r(win_);
  if (c == 0) return r;
  for (const auto& [k, v] : coeffs_) r.coeffs_[k] = v * c;
  return r;
}

TruncSeries TruncSeries::shifted(long qs, long ts) const {
  if (qs > 0)
    throw std::invalid_argument(
        "positive q-shift cannot be certified on a window anchored at 0");
  TruncSeries r(Window{win_.qmax + qs, win_.tmin + ts, win_.tmax + ts});
  r.shrink_log_ = shrink_log_;
  if (qs < 0) {
    std::ostringstream os;
    os << "q-window shrunk by " << -qs << " (multiplied by q^" << qs << ")";
    r.shrink_log_.push_back(os.str());
  }
  for (const auto& [k, c] : coeffs_) r.add_coeff(k.first + qs, k.second + ts, c);
  return r;
}

TruncSeries TruncSeries::restricted(Window w) const {
  TruncSeries r(Window::intersect(win_, w));
  for (const auto& [k, c] : coeffs_) r.add_coeff(k.first, k.second, c);
  return r;
}

bool TruncSeries::agrees_with(const TruncSeries& o) const {
  return first_disagreement(o).empty();
}

std::string TruncSeries::first_disagreement(const TruncSeries& o) const {
  Window w = Window::intersect(win_, o.win_);
  if (w.empty()) return "";
  for (long qe = 0; qe <= w.qmax; ++qe)
    for (long te = w.tmin; te <= w.tmax; ++te) {
      Rat lhs = coeff(qe, te), rhs = o.coeff(qe, te);
      if (lhs != rhs) {
        std::ostringstream os;
        os << "coefficient (" << qe << "," << te << "): " << lhs
           << " != " << rhs;
        return os.str();
      }
    }
  return "";
}

TruncSeries expand_series(const RExpr& x, Window w) {
  if (w.qmax < 0 || w.tmin > w.tmax)
    throw std::invalid_argument("invalid expansion window");
  TruncSeries out(w);

  Poly base = x.numerator_full();
  if (base.is_zero()) return out;
  for (const auto& [m, c] : base.terms())
    if (!m.uses_only({VQ, VT}))
      throw std::invalid_argument("expand_series expects a series in q, t");

  std::vector<BinomialFactor> factors;
  for (const auto& [f, k] : x.denominator())
    for (int i = 0; i < k; ++i) factors.push_back(f);

  long base_minq = base.exponent_min().e[VQ];
  long base_mint = base.exponent_min().e[VT];
  if (base_minq > w.qmax) return out;  // nothing can land in the window

  // Certified per-factor bounds on the geometric index k. Factors with a > 0
  // are bounded through the q-budget; factors with a = 0 (hence b > 0) are
  // bounded through the t-budget once the largest possible t-drop of the
  // other factors is accounted for.
  std::vector<long> kmax(factors.size(), 0);
  long tdrop = 0;
  for (size_t i = 0; i < factors.size(); ++i) {
    if (factors[i].a > 0) {
      kmax[i] = (w.qmax - base_minq) / factors[i].a;
      if (factors[i].b < 0) tdrop += factors[i].b * kmax[i];
    }
  }
  for (size_t i = 0; i < factors.size(); ++i) {
    if (factors[i].a == 0) {
      long budget = w.tmax - base_mint - tdrop;
      kmax[i] = budget >= 0 ? budget / factors[i].b : 0;
    }
  }

  // Suffix bounds on the remaining t-movement, used to prune intermediates.
  size_t nf = factors.size();
  std::vector<long> suf_tmin(nf + 1, 0), suf_tmax(nf + 1, 0);
  for (size_t i = nf; i-- > 0;) {
    long lo = factors[i].b < 0 ? factors[i].b * kmax[i] : 0;
    long hi = factors[i].b > 0 ? factors[i].b * kmax[i] : 0;
    suf_tmin[i] = suf_tmin[i + 1] + lo;
    suf_tmax[i] = suf_tmax[i + 1] + hi;
  }

  std::map<std::pair<long, long>, Rat> cur;
  for (const auto& [m, c] : base.terms()) {
    if (m.e[VQ] > w.qmax) continue;
    cur[{m.e[VQ], m.e[VT]}] += c;
  }

  for (size_t i = 0; i < nf; ++i) {
    std::map<std::pair<long, long>, Rat> next;
    for (const auto& [pos, c] : cur) {
      for (long k = 0; k <= kmax[i]; ++k) {
        long qe = pos.first + k * factors[i].a;
        long te = pos.second + k * factors[i].b;
        if (qe > w.qmax) break;
        if (te + suf_tmax[i + 1] < w.tmin) continue;
        if (te + suf_tmin[i + 1] > w.tmax) continue;
        next[{qe, te}] += c;
      }
    }
    for (auto it = next.begin(); it != next.end();)
      it = it->second == 0 ? next.erase(it) : std::next(it);
    cur = std::move(next);
  }

  for (const auto& [pos, c] : cur)
    if (w.contains(pos.first, pos.second)) out.add_coeff(pos.first, pos.second, c);
  return out;
}

}  // namespace qtcat
