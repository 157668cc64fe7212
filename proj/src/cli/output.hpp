#pragma once

#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "hyper/cli.hpp"

namespace hyper::cli {

using Cell = std::variant<double, bool, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

/// 17 significant digits, '.' separator, "nan"/"inf" for non-finite values.
std::string format_real(double v);

std::string render_csv(const Table& table);
/// {"command": ..., <meta fields>, "rows": [{column: value, ...}, ...]}.
/// Non-finite numbers become null.
std::string render_json(const std::string& command, const Table& table,
                        const nlohmann::ordered_json& meta = nlohmann::ordered_json::object());

std::string render(OutputFormat format, const std::string& command, const Table& table,
                   const nlohmann::ordered_json& meta = nlohmann::ordered_json::object());

}  // namespace hyper::cli
