#pragma once

#include <optional>
#include <string>
#include <vector>

#include "render.hpp"

namespace qtcat::cli {

// Exit codes: 0 success, 1 verification failure, 2 usage / IO errors.
inline constexpr int kOk = 0;
inline constexpr int kVerifyFailed = 1;
inline constexpr int kUsage = 2;

struct CommonOpts {
  Format format = Format::table;
  std::string out;     // empty = stdout
  bool timed = false;  // real timings make outputs non-reproducible; opt in
};

struct GensOpts {
  int d1 = 0, d2 = 0;
  CommonOpts common;
};
int cmd_gens(const GensOpts& o);

struct HilbertOpts {
  int d1 = 0, d2 = 0;
  std::string mode = "closed";  // closed | basis | oracle
  bool all = false;
  std::optional<std::pair<long, long>> window;  // qmax x tmax
  CommonOpts common;
};
int cmd_hilbert(const HilbertOpts& o);

struct CatalanOpts {
  std::vector<int> d;  // ascending vector for the tableaux sum
  std::optional<int> d1, d2;
  std::optional<std::pair<int, int>> d3_range;
  bool with_H = false;
  CommonOpts common;
};
int cmd_catalan(const CatalanOpts& o);

struct HhhOpts {
  int d1 = 0;
  int k = 0;
  std::string sign_convention = "recursion";  // recursion | printed
  std::optional<std::pair<int, int>> d2_range;
  CommonOpts common;
};
int cmd_hhh(const HhhOpts& o);

struct DomainOpts {
  int d1 = 0, d2 = 0;
  bool vertices_n4 = false;
  CommonOpts common;
};
int cmd_domain(const DomainOpts& o);

struct VerifyOpts {
  std::string manifest_path;  // empty = built-in default manifest
  int jobs = 1;
  CommonOpts common;
};
int cmd_verify(const VerifyOpts& o);

}  // namespace qtcat::cli
