#include <CLI11.hpp>

#include <iostream>
#include <string>

#include "commands.hpp"
#include "qtcat/verify.hpp"

namespace {

using namespace qtcat::cli;

std::pair<long, long> parse_window(const std::string& s) {
  auto xpos = s.find('x');
  if (xpos == std::string::npos)
    throw CLI::ValidationError("--window", "expected QxT, e.g. 8x8");
  return {std::stol(s.substr(0, xpos)), std::stol(s.substr(xpos + 1))};
}

std::pair<int, int> parse_range(const std::string& s) {
  auto sep = s.find(':');
  if (sep == std::string::npos)
    throw CLI::ValidationError("range", "expected LO:HI, e.g. 2:4");
  return {std::stoi(s.substr(0, sep)), std::stoi(s.substr(sep + 1))};
}

void add_common(CLI::App* cmd, CommonOpts* common, std::string* fmt) {
  cmd->add_option("--format", *fmt, "Output format: table, csv or json")
      ->default_val("table")
      ->check(CLI::IsMember({"table", "csv", "json"}));
  cmd->add_option("--out", common->out, "Write output to a file");
  cmd->add_flag("--timed", common->timed,
                "Include real timings (outputs are then not reproducible)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations around the ideals J(d1,d2), generalized "
               "q,t-Catalan polynomials, the torus-link homology recursion "
               "and the fundamental-domain combinatorics"};
  app.require_subcommand(1);
  app.failure_message(CLI::FailureMessage::help);
  app.set_version_flag("--version", "qtcat 0.1.0");

  GensOpts gens;
  std::string gens_fmt;
  auto* cg = app.add_subcommand("gens", "Generators of J(d1,d2)");
  cg->add_option("--d1", gens.d1)->required();
  cg->add_option("--d2", gens.d2)->required();
  add_common(cg, &gens.common, &gens_fmt);

  HilbertOpts hil;
  std::string hil_fmt, hil_window;
  auto* ch = app.add_subcommand("hilbert", "Hilbert series of J(d1,d2)");
  ch->add_option("--d1", hil.d1)->required();
  ch->add_option("--d2", hil.d2)->required();
  ch->add_option("--mode", hil.mode, "closed, basis or oracle")
      ->default_val("closed")
      ->check(CLI::IsMember({"closed", "basis", "oracle"}));
  ch->add_flag("--all", hil.all, "Compute all three routes and compare");
  ch->add_option("--window", hil_window, "Expansion window QxT");
  add_common(ch, &hil.common, &hil_fmt);

  CatalanOpts cat;
  std::string cat_fmt, cat_d3;
  auto* cc = app.add_subcommand("catalan",
                                "Generalized q,t-Catalan polynomials");
  cc->add_option("--d", cat.d, "Ascending d vector (tableaux sum)")
      ->delimiter(',');
  int cat_d1 = -1, cat_d2 = -1;
  cc->add_option("--d1", cat_d1);
  cc->add_option("--d2", cat_d2);
  cc->add_option("--d3-range", cat_d3, "Probe F(d1,d2,d3) for d3 in LO:HI");
  cc->add_flag("--with-H", cat.with_H, "Also print the H series");
  add_common(cc, &cat.common, &cat_fmt);

  HhhOpts hhh;
  std::string hhh_fmt, hhh_range;
  auto* cl = app.add_subcommand("hhh", "Braid recursion series");
  cl->add_option("--d1", hhh.d1)->required();
  cl->add_option("--k", hhh.k, "Iterate the d2 recursion k times");
  cl->add_option("--sign-convention", hhh.sign_convention,
                 "recursion or printed")
      ->default_val("recursion")
      ->check(CLI::IsMember({"recursion", "printed"}));
  cl->add_option("--d2-range", hhh_range,
                 "Compare with the ideal-side series for d2 in LO:HI");
  add_common(cl, &hhh.common, &hhh_fmt);

  DomainOpts dom;
  std::string dom_fmt;
  auto* cd = app.add_subcommand("domain", "Fundamental-domain combinatorics");
  cd->add_option("--d1", dom.d1)->required();
  cd->add_option("--d2", dom.d2)->required();
  cd->add_flag("--n4", dom.vertices_n4, "Also list n=4 vertices");
  add_common(cd, &dom.common, &dom_fmt);

  VerifyOpts ver;
  std::string ver_fmt;
  bool ver_list = false;
  auto* cv = app.add_subcommand("verify", "Run the verification suite");
  cv->add_option("--manifest", ver.manifest_path,
                 "Manifest file (default: built-in full suite)");
  cv->add_option("--jobs", ver.jobs, "Worker threads")->default_val(1);
  cv->add_flag("--list-checks", ver_list, "List known check families and exit");
  add_common(cv, &ver.common, &ver_fmt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kUsage;
  }

  try {
    if (cg->parsed()) {
      gens.common.format = parse_format(gens_fmt);
      return cmd_gens(gens);
    }
    if (ch->parsed()) {
      hil.common.format = parse_format(hil_fmt);
      if (!hil_window.empty()) hil.window = parse_window(hil_window);
      return cmd_hilbert(hil);
    }
    if (cc->parsed()) {
      cat.common.format = parse_format(cat_fmt);
      if (cat_d1 >= 0) cat.d1 = cat_d1;
      if (cat_d2 >= 0) cat.d2 = cat_d2;
      if (!cat_d3.empty()) cat.d3_range = parse_range(cat_d3);
      return cmd_catalan(cat);
    }
    if (cl->parsed()) {
      hhh.common.format = parse_format(hhh_fmt);
      if (!hhh_range.empty()) hhh.d2_range = parse_range(hhh_range);
      return cmd_hhh(hhh);
    }
    if (cd->parsed()) {
      dom.common.format = parse_format(dom_fmt);
      return cmd_domain(dom);
    }
    if (cv->parsed()) {
      if (ver_list) {
        for (const auto& name : qtcat::known_checks())
          std::cout << name << "\n";
        return kOk;
      }
      ver.common.format = parse_format(ver_fmt);
      return cmd_verify(ver);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kVerifyFailed;
  }
  return kUsage;
}
