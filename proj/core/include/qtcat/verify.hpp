#pragma once

#include <map>
#include <string>
#include <vector>

namespace qtcat {

struct CheckSpec {
  std::string name;
  std::map<std::string, long> params;  // overrides of the registry defaults
};

struct Manifest {
  std::vector<CheckSpec> checks;
};

struct CheckResult {
  std::string name;
  std::map<std::string, long> params;  // effective parameters
  bool gating = true;   // exploratory checks report but never fail a run
  bool passed = true;
  double millis = 0;
  std::vector<std::string> details;
};

// Registered check families, in the canonical run order.
std::vector<std::string> known_checks();
bool is_known_check(const std::string& name);
// Default parameters of a check family; throws on an unknown name.
std::map<std::string, long> check_default_params(const std::string& name);

// The default manifest: every check family at its acceptance-sweep ranges.
Manifest default_manifest();

CheckResult run_check(const CheckSpec& spec);  // throws on unknown name

// Runs the manifest, optionally fanning independent checks over worker
// threads; results come back in manifest order regardless of scheduling.
std::vector<CheckResult> run_manifest(const Manifest& m, int jobs = 1);

inline const char* kVersion = "0.1.0";

}  // namespace qtcat
