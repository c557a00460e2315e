#include "render.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

namespace qtcat::cli {

Format parse_format(const std::string& s) {
  if (s == "table") return Format::table;
  if (s == "csv") return Format::csv;
  if (s == "json") return Format::json;
  throw std::invalid_argument("unknown format '" + s + "'");
}

void Table::add_row(std::vector<std::string> row) {
  if (row.size() != columns.size())
    throw std::logic_error("row width does not match the header");
  rows.push_back(std::move(row));
}

std::string render_table(const Table& t) {
  std::vector<size_t> width(t.columns.size());
  for (size_t i = 0; i < t.columns.size(); ++i) width[i] = t.columns[i].size();
  for (const auto& row : t.rows)
    for (size_t i = 0; i < row.size(); ++i)
      width[i] = std::max(width[i], row[i].size());

  std::ostringstream os;
  auto line = [&](const std::vector<std::string>& cells) {
    for (size_t i = 0; i < cells.size(); ++i) {
      os << cells[i];
      if (i + 1 < cells.size())
        os << std::string(width[i] - cells[i].size() + 2, ' ');
    }
    os << "\n";
  };
  line(t.columns);
  size_t total = 0;
  for (size_t i = 0; i < width.size(); ++i)
    total += width[i] + (i + 1 < width.size() ? 2 : 0);
  os << std::string(total, '-') << "\n";
  for (const auto& row : t.rows) line(row);
  return os.str();
}

std::string render_csv(const Table& t) {
  std::ostringstream os;
  auto cell = [&](const std::string& v) {
    if (v.find_first_of(",\"\n") == std::string::npos) {
      os << v;
      return;
    }
    os << '"';
    for (char c : v) {
      if (c == '"') os << '"';
      os << c;
    }
    os << '"';
  };
  auto line = [&](const std::vector<std::string>& cells) {
    for (size_t i = 0; i < cells.size(); ++i) {
      cell(cells[i]);
      if (i + 1 < cells.size()) os << ",";
    }
    os << "\n";
  };
  line(t.columns);
  for (const auto& row : t.rows) line(row);
  return os.str();
}

nlohmann::json make_report(const std::string& command,
                           const nlohmann::json& params, const Table& t,
                           double total_ms) {
  nlohmann::json results = nlohmann::json::array();
  for (const auto& row : t.rows) {
    nlohmann::json obj;
    for (size_t i = 0; i < t.columns.size(); ++i) obj[t.columns[i]] = row[i];
    results.push_back(obj);
  }
  return nlohmann::json{{"command", command},
                        {"params", params},
                        {"results", results},
                        {"timings", {{"total_ms", total_ms}}},
                        {"version", "0.1.0"}};
}

std::string render(Format f, const std::string& command,
                   const nlohmann::json& params, const Table& t,
                   double total_ms) {
  switch (f) {
    case Format::table:
      return render_table(t);
    case Format::csv:
      return render_csv(t);
    case Format::json:
      return make_report(command, params, t, total_ms).dump(2) + "\n";
  }
  return "";
}

bool emit(const std::string& out_path, const std::string& content) {
  if (out_path.empty()) {
    std::cout << content;
    return true;
  }
  std::ofstream f(out_path);
  if (!f) return false;
  f << content;
  return static_cast<bool>(f);
}

}  // namespace qtcat::cli
