#include "manifest.hpp"

#include <fstream>
#include <stdexcept>

namespace qtcat::cli {

Manifest parse_manifest(const nlohmann::json& doc) {
  if (!doc.is_object())
    throw std::invalid_argument("manifest must be a JSON object");
  Manifest m;
  if (!doc.contains("checks")) return m;
  const auto& checks = doc.at("checks");
  if (!checks.is_array())
    throw std::invalid_argument("manifest 'checks' must be an array");
  for (const auto& entry : checks) {
    CheckSpec spec;
    if (entry.is_string()) {
      spec.name = entry.get<std::string>();
    } else if (entry.is_object()) {
      if (!entry.contains("name") || !entry.at("name").is_string())
        throw std::invalid_argument("manifest check entry needs a name");
      spec.name = entry.at("name").get<std::string>();
      if (entry.contains("params")) {
        const auto& params = entry.at("params");
        if (!params.is_object())
          throw std::invalid_argument("check params must be an object");
        for (auto it = params.begin(); it != params.end(); ++it) {
          if (!it.value().is_number_integer())
            throw std::invalid_argument("check parameter '" + it.key() +
                                        "' must be an integer");
          spec.params[it.key()] = it.value().get<long>();
        }
      }
    } else {
      throw std::invalid_argument("manifest check entries must be strings or objects");
    }
    if (!is_known_check(spec.name))
      throw std::invalid_argument("unknown check '" + spec.name + "'");
    auto defaults = check_default_params(spec.name);
    for (const auto& [k, v] : spec.params)
      if (!defaults.count(k))
        throw std::invalid_argument("unknown parameter '" + k +
                                    "' for check " + spec.name);
    m.checks.push_back(std::move(spec));
  }
  return m;
}

Manifest load_manifest(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::invalid_argument("cannot open manifest '" + path + "'");
  nlohmann::json doc;
  try {
    f >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("manifest is not valid JSON: ") +
                                e.what());
  }
  return parse_manifest(doc);
}

}  // namespace qtcat::cli
