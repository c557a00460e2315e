#include "commands.hpp"

#include <chrono>
#include <iostream>
#include <sstream>

#include "manifest.hpp"
#include "qtcat/catalan.hpp"
#include "qtcat/fundamental_domain.hpp"
#include "qtcat/ideal.hpp"
#include "qtcat/link.hpp"
#include "qtcat/series.hpp"
#include "qtcat/verify.hpp"

namespace qtcat::cli {

namespace {

class Stopwatch {
 public:
  double ms(bool timed) const {
    if (!timed) return 0.0;
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ =
      std::chrono::steady_clock::now();
};

int finish(const CommonOpts& common, const std::string& command,
           const nlohmann::json& params, const Table& t, const Stopwatch& sw,
           int code = kOk) {
  std::string content =
      render(common.format, command, params, t, sw.ms(common.timed));
  if (!emit(common.out, content)) {
    std::cerr << "error: cannot write to '" << common.out << "'\n";
    return kUsage;
  }
  return code;
}

int usage_error(const std::string& msg) {
  std::cerr << "error: " << msg << "\n";
  return kUsage;
}

}  // namespace

int cmd_gens(const GensOpts& o) {
  Stopwatch sw;
  if (o.d1 < 0 || o.d1 > o.d2 || o.d2 > 12)
    return usage_error("gens needs 0 <= d1 <= d2 <= 12");
  Table t;
  t.columns = {"family", "i", "j", "qdeg", "tdeg", "poly"};
  for (const auto& g : generator_list(IdealSpec(o.d1, o.d2)))
    t.add_row({std::string(1, family_letter(g.family)), std::to_string(g.i),
               std::to_string(g.j), std::to_string(g.bidegree.qdeg),
               std::to_string(g.bidegree.tdeg), to_string(g.value)});
  nlohmann::json params{{"d1", o.d1}, {"d2", o.d2}};
  return finish(o.common, "gens", params, t, sw);
}

int cmd_hilbert(const HilbertOpts& o) {
  Stopwatch sw;
  if (o.d1 < 0 || o.d1 > o.d2) return usage_error("need 0 <= d1 <= d2");
  if (o.mode != "closed" && o.mode != "basis" && o.mode != "oracle")
    return usage_error("mode must be closed, basis or oracle");
  long def = 2L * o.d1 + o.d2 + 4;
  long qmax = o.window ? o.window->first : def;
  long tmax = o.window ? o.window->second : def;
  long cap = 2L * o.d1 + o.d2 + 8;
  if (qmax < 0 || tmax < 0 || qmax > cap || tmax > cap)
    return usage_error("window axes must lie in [0, 2*d1+d2+8]");
  Window w = Window::box(qmax, tmax);
  IdealSpec spec(o.d1, o.d2);
  nlohmann::json params{{"d1", o.d1},
                        {"d2", o.d2},
                        {"mode", o.all ? "all" : o.mode},
                        {"window", std::to_string(qmax) + "x" + std::to_string(tmax)}};

  if (o.all) {
    TruncSeries basis = hilbert_from_basis(spec, w);
    TruncSeries closed = expand_series(hilbert_closed(spec), w);
    TruncSeries oracle(w);
    for (long x = 0; x <= qmax; ++x)
      for (long y = 0; y <= tmax; ++y)
        oracle.add_coeff(x, y, Rat(graded_dim_oracle(spec, Bidegree{x, y})));
    Table t;
    t.columns = {"qdeg", "tdeg", "oracle", "basis", "closed", "equal"};
    bool all_equal = true;
    for (long x = 0; x <= qmax; ++x)
      for (long y = 0; y <= tmax; ++y) {
        Rat co = oracle.coeff(x, y), cb = basis.coeff(x, y),
            cc = closed.coeff(x, y);
        bool eq = co == cb && cb == cc;
        all_equal = all_equal && eq;
        t.add_row({std::to_string(x), std::to_string(y), co.get_str(),
                   cb.get_str(), cc.get_str(), eq ? "yes" : "NO"});
      }
    return finish(o.common, "hilbert", params, t, sw,
                  all_equal ? kOk : kVerifyFailed);
  }

  if (o.mode == "closed") {
    Table t;
    t.columns = {"series"};
    t.add_row({to_string(hilbert_closed(spec))});
    return finish(o.common, "hilbert", params, t, sw);
  }

  TruncSeries s =
      o.mode == "basis" ? hilbert_from_basis(spec, w) : TruncSeries(w);
  if (o.mode == "oracle")
    for (long x = 0; x <= qmax; ++x)
      for (long y = 0; y <= tmax; ++y)
        s.add_coeff(x, y, Rat(graded_dim_oracle(spec, Bidegree{x, y})));
  Table t;
  t.columns = {"qdeg", "tdeg", "coeff"};
  for (long x = 0; x <= qmax; ++x)
    for (long y = 0; y <= tmax; ++y)
      t.add_row({std::to_string(x), std::to_string(y), s.coeff(x, y).get_str()});
  return finish(o.common, "hilbert", params, t, sw);
}

int cmd_catalan(const CatalanOpts& o) {
  Stopwatch sw;
  Table t;
  t.columns = {"quantity", "value"};
  nlohmann::json params = nlohmann::json::object();
  int code = kOk;
  try {
    if (!o.d.empty()) {
      params["d"] = o.d;
      Poly f = catalan_F(o.d);
      t.add_row({"F", to_string(f)});
      if (o.d.size() == 3) {
        Poly f3 = catalan_F3_explicit(o.d[0], o.d[1]);
        t.add_row({"F3_explicit", to_string(f3)});
        t.add_row({"agree", f == f3 ? "yes" : "NO"});
        if (!(f == f3)) code = kVerifyFailed;
      }
      if (o.with_H) t.add_row({"H", to_string(hilbert_H(o.d))});
    } else if (o.d1 && o.d2) {
      params["d1"] = *o.d1;
      params["d2"] = *o.d2;
      t.add_row({"F3_explicit", to_string(catalan_F3_explicit(*o.d1, *o.d2))});
    } else {
      return usage_error("catalan needs --d or both --d1 and --d2");
    }
    if (o.d3_range) {
      if (!o.d1 || !o.d2)
        return usage_error("--d3-range needs --d1 and --d2");
      std::vector<int> range;
      for (int v = o.d3_range->first; v <= o.d3_range->second; ++v)
        range.push_back(v);
      params["d3_range"] = {o.d3_range->first, o.d3_range->second};
      auto rep = check_d3_independence(*o.d1, *o.d2, range);
      for (size_t i = 0; i < range.size(); ++i)
        t.add_row({"F@d3=" + std::to_string(range[i]), rep.values[i]});
      t.add_row({"d3_independent", rep.constant ? "yes" : "NO"});
    }
  } catch (const NonPolynomialError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kVerifyFailed;
  } catch (const std::invalid_argument& e) {
    return usage_error(e.what());
  }
  return finish(o.common, "catalan", params, t, sw, code);
}

int cmd_hhh(const HhhOpts& o) {
  Stopwatch sw;
  SignConvention conv;
  if (o.sign_convention == "recursion")
    conv = SignConvention::recursion_consistent;
  else if (o.sign_convention == "printed")
    conv = SignConvention::as_printed;
  else
    return usage_error("--sign-convention must be recursion or printed");
  if (o.d1 < 0 || o.k < 0) return usage_error("d1 and k must be nonnegative");

  Table t;
  t.columns = {"quantity", "value"};
  t.add_row({"alpha", to_string(alpha_series(o.d1, conv))});
  t.add_row({"bracket", to_string(hhh_bracket(o.d1, conv))});
  if (o.k > 0) {
    RExpr base = RExpr::one();
    RExpr closed = hhh_closed(o.d1, o.k, base, conv);
    RExpr iter = base;
    for (int s = 0; s < o.k; ++s) iter = hhh_step(o.d1, iter, conv);
    t.add_row({"closed_k" + std::to_string(o.k), to_string(closed)});
    t.add_row({"closed_equals_steps", rexpr_eq(closed, iter) ? "yes" : "NO"});
  }
  nlohmann::json params{{"d1", o.d1},
                        {"k", o.k},
                        {"sign_convention", o.sign_convention}};
  if (o.d2_range) {
    std::vector<int> range;
    for (int v = o.d2_range->first; v <= o.d2_range->second; ++v)
      range.push_back(v);
    params["d2_range"] = {o.d2_range->first, o.d2_range->second};
    try {
      auto rep = compare_with_ideal(o.d1, range);
      for (const auto& e : rep.entries) {
        t.add_row({"residual_d2=" + std::to_string(e.d2), e.residual});
        t.add_row({"matches_d2=" + std::to_string(e.d2),
                   std::to_string(e.matches.size())});
      }
      t.add_row({"d2_independent", rep.d2_independent ? "yes" : "no"});
    } catch (const std::invalid_argument& e) {
      return usage_error(e.what());
    }
  }
  return finish(o.common, "hhh", params, t, sw);
}

int cmd_domain(const DomainOpts& o) {
  Stopwatch sw;
  if (o.d1 < 0 || o.d1 > o.d2) return usage_error("need 0 <= d1 <= d2");
  Table t;
  t.columns = {"item", "value"};

  PolytopeSpec p3({o.d1, o.d2, o.d2});
  for (const auto& v : polytope_vertices(p3)) {
    std::ostringstream sig, pt;
    for (size_t i = 0; i < v.sigma.size(); ++i) sig << v.sigma[i];
    pt << "(";
    for (size_t i = 0; i < v.p.size(); ++i)
      pt << v.p[i] << (i + 1 < v.p.size() ? " " : ")");
    t.add_row({"vertex_" + sig.str(), pt.str()});
  }
  if (o.vertices_n4) {
    PolytopeSpec p4({o.d1, o.d2, o.d2, o.d2});
    for (const auto& v : polytope_vertices(p4)) {
      std::ostringstream sig, pt;
      for (size_t i = 0; i < v.sigma.size(); ++i) sig << v.sigma[i];
      pt << "(";
      for (size_t i = 0; i < v.p.size(); ++i)
        pt << v.p[i] << (i + 1 < v.p.size() ? " " : ")");
      t.add_row({"vertex4_" + sig.str(), pt.str()});
    }
  }
  auto zr = zonotope_check(p3);
  t.add_row({"zonotope_decompositions", zr.decompositions_ok ? "ok" : "FAIL"});
  t.add_row({"zonotope_hull", zr.hull_ok ? "ok" : "FAIL"});
  t.add_row({"hull_vertices", std::to_string(zr.hull_vertex_count)});
  t.add_row({"half_hexagon_count",
             std::to_string(half_hexagon_points(o.d1, o.d2).size())});
  auto lam = lambda_and_line(o.d1, o.d2);
  std::ostringstream lamstr;
  lamstr << "(";
  for (size_t i = 0; i < lam.lambda.parts.size(); ++i)
    lamstr << lam.lambda.parts[i]
           << (i + 1 < lam.lambda.parts.size() ? "," : "");
  lamstr << ")";
  t.add_row({"lambda", lamstr.str()});
  t.add_row({"lambda_verified", lam.verified ? "yes" : "NO"});
  auto trap = trapezoid_points(o.d1, o.d2);
  t.add_row({"trapezoid_count", std::to_string(trap.points.size())});
  t.add_row({"trapezoid_poly", to_string(trap.generating_poly)});
  auto bij = full_bijection_check(o.d1, o.d2);
  t.add_row({"bijection_ok", bij.ok() ? "yes" : "NO"});

  nlohmann::json params{{"d1", o.d1}, {"d2", o.d2}};
  return finish(o.common, "domain", params, t, sw,
                bij.ok() && zr.decompositions_ok && zr.hull_ok && lam.verified
                    ? kOk
                    : kVerifyFailed);
}

int cmd_verify(const VerifyOpts& o) {
  Stopwatch sw;
  Manifest manifest;
  nlohmann::json params{{"manifest", o.manifest_path.empty()
                                         ? std::string("<default>")
                                         : o.manifest_path},
                        {"jobs", o.jobs}};
  if (o.manifest_path.empty()) {
    manifest = default_manifest();
  } else {
    try {
      manifest = load_manifest(o.manifest_path);
    } catch (const std::invalid_argument& e) {
      return usage_error(e.what());
    }
  }
  if (manifest.checks.empty())
    std::cerr << "warning: manifest lists no checks; trivial pass\n";

  auto results = run_manifest(manifest, o.jobs);
  Table t;
  t.columns = {"check", "status", "gating", "millis", "detail"};
  bool ok = true;
  for (const auto& r : results) {
    if (r.gating && !r.passed) ok = false;
    std::string detail;
    for (const auto& line : r.details) {
      if (!detail.empty()) detail += "; ";
      detail += line;
    }
    std::ostringstream ms;
    ms << (o.common.timed ? r.millis : 0.0);
    t.add_row({r.name,
               r.passed ? "pass" : (r.gating ? "fail" : "report"),
               r.gating ? "yes" : "no", ms.str(), detail});
  }
  return finish(o.common, "verify", params, t, sw, ok ? kOk : kVerifyFailed);
}

}  // namespace qtcat::cli
