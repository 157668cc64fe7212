#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "hyper/cli.hpp"
#include "hyper/error.hpp"

namespace hyper::cli {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

double to_double(std::string_view text, std::string_view what) {
  text = trim(text);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double value = 0.0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || end != text.data() + text.size()) {
    throw ParseError("cannot parse " + std::string(what) + " '" + std::string(text) + "'");
  }
  return value;
}

std::size_t to_count(std::string_view text) {
  text = trim(text);
  std::size_t value = 0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || end != text.data() + text.size()) {
    throw ParseError("cannot parse sample count '" + std::string(text) + "'");
  }
  return value;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      parts.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  return parts;
}

// Recursive-descent parser for the function grammar.
class FunctionParser {
 public:
  FunctionParser(std::string_view text, const SystemParams& system)
      : text_(text), system_(system) {}

  AnalyticFunction parse() {
    auto f = parse_fn();
    skip_space();
    if (pos_ != text_.size()) fail("trailing input");
    return f;
  }

 private:
  AnalyticFunction parse_fn() {
    skip_space();
    if (consume("comp(")) {
      auto outer = parse_fn();
      expect(',');
      auto inner = parse_fn();
      expect(')');
      return AnalyticFunction::compose(outer, inner);
    }
    if (consume("test-nonanalytic")) return AnalyticFunction::control(ControlMap::StretchTime);
    if (consume("test-square")) return AnalyticFunction::control(ControlMap::SquareReal);
    if (consume("test-mirror")) return AnalyticFunction::control(ControlMap::Mirror);
    if (consume("exp")) return AnalyticFunction::exp();
    if (consume("log")) return AnalyticFunction::log();
    if (consume("id")) return AnalyticFunction::identity(system_);
    if (consume("pow:")) {
      const auto token = take_number_token();
      int n = 0;
      const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), n);
      if (token.empty() || ec != std::errc() || end != token.data() + token.size()) {
        fail("expected an integer exponent");
      }
      return AnalyticFunction::power(n);
    }
    if (consume("affine:")) {
      double c[4];
      for (int i = 0; i < 4; ++i) {
        if (i != 0) expect(',');
        c[i] = number();
      }
      return AnalyticFunction::affine({c[0], c[1], system_}, {c[2], c[3], system_});
    }
    if (consume("poly:")) {
      std::vector<double> values{number()};
      while (peek() == ',' && starts_number(pos_ + 1)) {
        ++pos_;
        values.push_back(number());
      }
      if (values.size() % 2 != 0) fail("poly needs an even number of components");
      std::vector<HyperNumber> coefficients;
      for (std::size_t i = 0; i < values.size(); i += 2) {
        coefficients.push_back({values[i], values[i + 1], system_});
      }
      return AnalyticFunction::polynomial(std::move(coefficients));
    }
    fail("unknown function");
  }

  double number() {
    const auto token = take_number_token();
    if (token.empty()) fail("expected a number");
    return to_double(token, "coefficient");
  }

  std::string_view take_number_token() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && text_[pos_] != ',' && text_[pos_] != ')' &&
           !std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    return text_.substr(start, pos_ - start);
  }

  bool starts_number(std::size_t at) const {
    while (at < text_.size() && std::isspace(static_cast<unsigned char>(text_[at]))) ++at;
    if (at >= text_.size()) return false;
    const char c = text_[at];
    return std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+' || c == '.';
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool consume(std::string_view token) {
    skip_space();
    if (text_.substr(pos_, token.size()) == token) {
      pos_ += token.size();
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const {
    std::ostringstream msg;
    msg << "function spec '" << text_ << "': " << what << " at offset " << pos_;
    throw ParseError(msg.str());
  }

  std::string_view text_;
  SystemParams system_;
  std::size_t pos_ = 0;
};

}  // namespace

SampleRange parse_range(std::string_view spec) {
  const auto parts = split(trim(spec), ':');
  if (parts.size() != 3) {
    throw ParseError("range '" + std::string(spec) + "' must have the form min:max:count");
  }
  SampleRange r{to_double(parts[0], "range bound"), to_double(parts[1], "range bound"),
                to_count(parts[2])};
  if (!std::isfinite(r.min) || !std::isfinite(r.max) || !(r.min < r.max) || r.count < 2) {
    throw ParseError("range '" + std::string(spec) +
                     "' needs finite bounds with min < max and count >= 2");
  }
  return r;
}

Grid2D parse_grid(std::string_view spec) {
  const auto axes = split(trim(spec), ',');
  if (axes.size() != 2) {
    throw ParseError("grid '" + std::string(spec) + "' must have the form min:max:count,min:max:count");
  }
  const auto x = parse_range(axes[0]);
  const auto t = parse_range(axes[1]);
  return Grid2D(Axis{x.min, x.max, x.count}, Axis{t.min, t.max, t.count});
}

AnalyticFunction parse_function(std::string_view spec, const SystemParams& system) {
  return FunctionParser(spec, system).parse();
}

std::vector<Event> read_points_csv(const std::string& path, std::string_view first,
                                   std::string_view second) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open points file '" + path + "'");
  std::string line;
  if (!std::getline(in, line)) throw ParseError("points file '" + path + "' is empty");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  const auto header = split(line, ',');
  if (header.size() != 2 || trim(header[0]) != first || trim(header[1]) != second) {
    throw ParseError("points file '" + path + "' must start with header '" +
                     std::string(first) + "," + std::string(second) + "'");
  }
  std::vector<Event> points;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (trim(line).empty()) continue;
    const auto cells = split(line, ',');
    if (cells.size() != 2) {
      throw ParseError("points file '" + path + "' line " + std::to_string(line_no) +
                       ": expected 2 columns");
    }
    points.push_back({to_double(cells[0], "coordinate"), to_double(cells[1], "coordinate")});
  }
  return points;
}

}  // namespace hyper::cli
