#include "qtcat/mono.hpp"

#include <stdexcept>

namespace qtcat {

namespace {
constexpr std::string_view kNames[kVarCount] = {
    "q", "t", "a", "b", "c", "d", "u", "v",
    "t1", "t2", "t3", "t4", "x1", "x2", "x3", "x4"};
}

std::string_view var_name(int v) { return kNames[v]; }

int var_by_name(std::string_view name) {
  for (int i = 0; i < kVarCount; ++i)
    if (kNames[i] == name) return i;
  return -1;
}

int var_t(int i) {
  if (i < 1 || i > 4) throw std::invalid_argument("t_i index out of range");
  return VT1 + (i - 1);
}

int var_x(int i) {
  if (i < 1 || i > 4) throw std::invalid_argument("x_i index out of range");
  return VX1 + (i - 1);
}

const WeightTable& default_weights() {
  static const WeightTable w = [] {
    WeightTable t;
    for (int v : {VQ, VA, VC, VU, VT1, VT2, VT3, VT4}) t.q_weighted[v] = true;
    return t;
  }();
  return w;
}

Mono Mono::of(int v, int exp) {
  Mono m;
  m.e[v] = exp;
  return m;
}

bool Mono::is_unit() const {
  for (auto x : e)
    if (x != 0) return false;
  return true;
}

bool Mono::is_polynomial() const {
  for (auto x : e)
    if (x < 0) return false;
  return true;
}

long Mono::total_degree() const {
  long s = 0;
  for (auto x : e) s += x;
  return s;
}

Bidegree Mono::bidegree(const WeightTable& w) const {
  Bidegree b;
  for (int v = 0; v < kVarCount; ++v)
    (w.q_weighted[v] ? b.qdeg : b.tdeg) += e[v];
  return b;
}

bool Mono::uses_only(std::initializer_list<int> vars) const {
  std::array<bool, kVarCount> ok{};
  for (int v : vars) ok[v] = true;
  for (int v = 0; v < kVarCount; ++v)
    if (e[v] != 0 && !ok[v]) return false;
  return true;
}

Mono Mono::operator*(const Mono& o) const {
  Mono r;
  for (int v = 0; v < kVarCount; ++v) r.e[v] = e[v] + o.e[v];
  return r;
}

Mono Mono::operator/(const Mono& o) const {
  Mono r;
  for (int v = 0; v < kVarCount; ++v) r.e[v] = e[v] - o.e[v];
  return r;
}

Mono Mono::pow(long k) const {
  Mono r;
  for (int v = 0; v < kVarCount; ++v) r.e[v] = static_cast<int32_t>(e[v] * k);
  return r;
}

bool Mono::divides(const Mono& o) const {
  for (int v = 0; v < kVarCount; ++v)
    if (e[v] > o.e[v]) return false;
  return true;
}

bool Mono::operator<(const Mono& o) const { return term_order_cmp(*this, o) < 0; }

int term_order_cmp(const Mono& m1, const Mono& m2) {
  long d1 = m1.total_degree(), d2 = m2.total_degree();
  if (d1 != d2) return d1 < d2 ? -1 : 1;
  for (int v = 0; v < kVarCount; ++v)
    if (m1.e[v] != m2.e[v]) return m1.e[v] < m2.e[v] ? -1 : 1;
  return 0;
}

std::string to_string(const Mono& m) {
  std::string s;
  for (int v = 0; v < kVarCount; ++v) {
    if (m.e[v] == 0) continue;
    if (!s.empty()) s += "*";
    s += kNames[v];
    if (m.e[v] != 1) {
      s += "^";
      s += std::to_string(m.e[v]);
    }
  }
  return s.empty() ? "1" : s;
}

}  // namespace qtcat
