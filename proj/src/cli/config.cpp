#include <cmath>
#include <fstream>
#include <set>

#include <json.hpp>

#include "hyper/cli.hpp"

namespace hyper::cli {

namespace {

void require_tolerance(const char* name, double v) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    throw ParseError(std::string("config value '") + name + "' must be positive and finite");
  }
}

}  // namespace

void RunConfig::validate() const {
  require_tolerance("class_epsilon", class_epsilon);
  require_tolerance("divisor_epsilon", divisor_epsilon);
  require_tolerance("sector_epsilon", sector_epsilon);
  require_tolerance("fd_step_first", fd_step_first);
  require_tolerance("fd_step_second", fd_step_second);
  require_tolerance("cr_tolerance", cr_tolerance);
  require_tolerance("wave_tolerance", wave_tolerance);
}

OutputFormat parse_format(std::string_view text) {
  if (text == "csv") return OutputFormat::Csv;
  if (text == "json") return OutputFormat::Json;
  throw ParseError("unknown output format '" + std::string(text) + "' (expected csv or json)");
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open config file '" + path + "'");

  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("config file '" + path + "': " + e.what());
  }
  if (!doc.is_object()) throw ParseError("config file must hold a JSON object");

  static const std::set<std::string> known = {
      "class_epsilon", "divisor_epsilon", "sector_epsilon", "fd_step_first",
      "fd_step_second", "cr_tolerance",   "wave_tolerance", "grid",
      "tau",           "format",          "out"};
  for (const auto& [key, _] : doc.items()) {
    if (!known.contains(key)) throw ParseError("unknown config key '" + key + "'");
  }

  RunConfig cfg;
  try {
    const auto number = [&](const char* key, double& field) {
      if (doc.contains(key)) field = doc.at(key).get<double>();
    };
    const auto text = [&](const char* key, std::string& field) {
      if (doc.contains(key)) field = doc.at(key).get<std::string>();
    };
    number("class_epsilon", cfg.class_epsilon);
    number("divisor_epsilon", cfg.divisor_epsilon);
    number("sector_epsilon", cfg.sector_epsilon);
    number("fd_step_first", cfg.fd_step_first);
    number("fd_step_second", cfg.fd_step_second);
    number("cr_tolerance", cfg.cr_tolerance);
    number("wave_tolerance", cfg.wave_tolerance);
    text("grid", cfg.grid);
    text("tau", cfg.tau);
    text("out", cfg.out);
    if (doc.contains("format")) cfg.format = parse_format(doc.at("format").get<std::string>());
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("config file '" + path + "': " + e.what());
  }
  cfg.validate();
  return cfg;
}

}  // namespace hyper::cli
