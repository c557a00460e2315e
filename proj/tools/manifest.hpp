#pragma once

#include <string>

#include <json.hpp>

#include "qtcat/verify.hpp"

namespace qtcat::cli {

// Manifest file: {"checks": [{"name": "...", "params": {...}}, ...]};
// entries may also be plain check-name strings. Throws std::invalid_argument
// on malformed input or unknown check names.
Manifest parse_manifest(const nlohmann::json& doc);
Manifest load_manifest(const std::string& path);  // also throws on IO errors

}  // namespace qtcat::cli
