#include "qtcat/poly.hpp"

#include <stdexcept>

namespace qtcat {

Poly Poly::constant(Rat c) {
  Poly p;
  p.add_term(Mono::unit(), c);
  return p;
}

Poly Poly::var(int v, int exp) { return mono(Mono::of(v, exp)); }

Poly Poly::mono(Mono m, Rat c) {
  Poly p;
  p.add_term(m, c);
  return p;
}

bool Poly::is_polynomial() const {
  for (const auto& [m, c] : terms_)
    if (!m.is_polynomial()) return false;
  return true;
}

bool Poly::uses_only(std::initializer_list<int> vars) const {
  for (const auto& [m, c] : terms_)
    if (!m.uses_only(vars)) return false;
  return true;
}

const Mono& Poly::leading_mono() const {
  if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
  return terms_.begin()->first;
}

const Rat& Poly::leading_coeff() const {
  if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
  return terms_.begin()->second;
}

Rat Poly::coeff(const Mono& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rat(0) : it->second;
}

void Poly::add_term(const Mono& m, const Rat& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Poly Poly::operator+(const Poly& o) const {
  Poly r = *this;
  r += o;
  return r;
}

Poly Poly::operator-(const Poly& o) const {
  Poly r = *this;
  r -= o;
  return r;
}

Poly Poly::operator*(const Poly& o) const {
  Poly r;
  for (const auto& [m1, c1] : terms_)
    for (const auto& [m2, c2] : o.terms_) r.add_term(m1 * m2, c1 * c2);
  return r;
}

Poly Poly::times(const Mono& m, const Rat& c) const {
  Poly r;
  for (const auto& [m1, c1] : terms_) r.add_term(m1 * m, c1 * c);
  return r;
}

Poly Poly::pow(long k) const {
  if (k < 0) throw std::invalid_argument("negative polynomial power");
  Poly r = one();
  Poly base = *this;
  while (k > 0) {
    if (k & 1) r = r * base;
    base = base * base;
    k >>= 1;
  }
  return r;
}

Poly Poly::substitute(const std::vector<std::pair<int, Poly>>& repl) const {
  // Cache powers of each replacement polynomial as needed.
  std::vector<std::vector<Poly>> powers(repl.size(), {Poly::one()});
  auto power = [&](size_t idx, int k) -> const Poly& {
    auto& cache = powers[idx];
    while (static_cast<int>(cache.size()) <= k)
      cache.push_back(cache.back() * repl[idx].second);
    return cache[k];
  };

  Poly out;
  for (const auto& [m, c] : terms_) {
    Mono rest = m;
    Poly factor = Poly::constant(c);
    for (size_t i = 0; i < repl.size(); ++i) {
      int ex = m.e[repl[i].first];
      if (ex == 0) continue;
      if (ex < 0)
        throw std::invalid_argument(
            "substitution into a negative exponent is not defined");
      rest.e[repl[i].first] = 0;
      factor = factor * power(i, ex);
    }
    out += factor.times(rest);
  }
  return out;
}

Poly Poly::swap_vars(int v1, int v2) const {
  Poly out;
  for (const auto& [m, c] : terms_) {
    Mono m2 = m;
    std::swap(m2.e[v1], m2.e[v2]);
    out.add_term(m2, c);
  }
  return out;
}

long Poly::total_degree() const {
  long d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
  return d;
}

std::optional<Bidegree> Poly::bidegree_if_homogeneous(
    const WeightTable& w) const {
  if (terms_.empty()) return std::nullopt;
  Bidegree b = terms_.begin()->first.bidegree(w);
  for (const auto& [m, c] : terms_)
    if (m.bidegree(w) != b) return std::nullopt;
  return b;
}

Mono Poly::exponent_min() const {
  Mono lo = Mono::unit();
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (first) {
      lo = m;
      first = false;
      continue;
    }
    for (int v = 0; v < kVarCount; ++v) lo.e[v] = std::min(lo.e[v], m.e[v]);
  }
  return lo;
}

std::optional<Poly> exact_div(const Poly& p, const Poly& d) {
  if (d.is_zero()) throw std::invalid_argument("division by zero polynomial");
  if (!p.is_polynomial() || !d.is_polynomial())
    throw std::invalid_argument("exact_div expects polynomial inputs");
  Poly rem = p;
  Poly quot;
  const Mono& dl = d.leading_mono();
  const Rat& dc = d.leading_coeff();
  while (!rem.is_zero()) {
    const Mono& rl = rem.leading_mono();
    if (!dl.divides(rl)) return std::nullopt;
    Mono qm = rl / dl;
    Rat qc = rem.leading_coeff() / dc;
    quot.add_term(qm, qc);
    rem -= d.times(qm, qc);
  }
  return quot;
}

std::optional<Poly> laurent_exact_div(const Poly& p, const Poly& d) {
  if (d.is_zero()) throw std::invalid_argument("division by zero polynomial");
  if (p.is_zero()) return Poly::zero();
  // Extract the full monomial content of both sides. Minimal per-variable
  // degrees are additive under multiplication, so the content-free parts
  // divide in the polynomial ring iff the originals divide as Laurent
  // polynomials.
  Mono ps = p.exponent_min();
  Mono ds = d.exponent_min();
  auto q = exact_div(p.times(Mono::unit() / ps), d.times(Mono::unit() / ds));
  if (!q) return std::nullopt;
  return q->times(ps / ds);
}

Poly qt_bracket(long n) {
  if (n < 0) throw std::invalid_argument("qt_bracket needs n >= 0");
  Poly r;
  for (long i = 0; i < n; ++i)
    r.add_term(Mono::of(VQ, static_cast<int>(n - 1 - i)) *
                   Mono::of(VT, static_cast<int>(i)),
               1);
  return r;
}

std::string to_string(const Poly& p) {
  if (p.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    Rat ac = abs(c);
    if (first) {
      if (c < 0) s += "-";
      first = false;
    } else {
      s += c < 0 ? " - " : " + ";
    }
    if (m.is_unit()) {
      s += ac.get_str();
    } else {
      if (ac != 1) s += ac.get_str() + "*";
      s += to_string(m);
    }
  }
  return s;
}

}  // namespace qtcat
