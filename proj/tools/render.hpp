#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace qtcat::cli {

enum class Format { table, csv, json };
Format parse_format(const std::string& s);  // throws on unknown

// Row-oriented result data; every command renders through this so that the
// table, CSV and JSON encodings carry identical values.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  void add_row(std::vector<std::string> row);
};

std::string render_table(const Table& t);
std::string render_csv(const Table& t);

// Report schema: {command, params, results[], timings, version}.
nlohmann::json make_report(const std::string& command,
                           const nlohmann::json& params, const Table& t,
                           double total_ms);

std::string render(Format f, const std::string& command,
                   const nlohmann::json& params, const Table& t,
                   double total_ms);

// Writes to the path, or stdout when the path is empty. Returns false on IO
// failure.
bool emit(const std::string& out_path, const std::string& content);

}  // namespace qtcat::cli
