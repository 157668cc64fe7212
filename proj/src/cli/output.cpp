#include "output.hpp"

#include <cmath>

#include <fmt/format.h>

namespace hyper::cli {

std::string format_real(double v) { return fmt::format("{:.17g}", v); }

namespace {

std::string csv_cell(const Cell& cell) {
  if (const auto* d = std::get_if<double>(&cell)) return format_real(*d);
  if (const auto* b = std::get_if<bool>(&cell)) return *b ? "true" : "false";
  return std::get<std::string>(cell);
}

nlohmann::ordered_json json_cell(const Cell& cell) {
  if (const auto* d = std::get_if<double>(&cell)) {
    if (!std::isfinite(*d)) return nullptr;
    return *d;
  }
  if (const auto* b = std::get_if<bool>(&cell)) return *b;
  return std::get<std::string>(cell);
}

}  // namespace

std::string render_csv(const Table& table) {
  std::string out;
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    if (i != 0) out += ',';
    out += table.columns[i];
  }
  out += '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i != 0) out += ',';
      out += csv_cell(row[i]);
    }
    out += '\n';
  }
  return out;
}

std::string render_json(const std::string& command, const Table& table,
                        const nlohmann::ordered_json& meta) {
  nlohmann::ordered_json doc;
  doc["command"] = command;
  for (const auto& [key, value] : meta.items()) doc[key] = value;
  auto rows = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    nlohmann::ordered_json obj;
    for (std::size_t i = 0; i < row.size(); ++i) obj[table.columns[i]] = json_cell(row[i]);
    rows.push_back(std::move(obj));
  }
  doc["rows"] = std::move(rows);
  return doc.dump(2) + '\n';
}

std::string render(OutputFormat format, const std::string& command, const Table& table,
                   const nlohmann::ordered_json& meta) {
  return format == OutputFormat::Csv ? render_csv(table) : render_json(command, table, meta);
}

}  // namespace hyper::cli
