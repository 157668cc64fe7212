#pragma once

/**
 * @file cli.hpp
 * @brief Command-line front end: config, argument grammars and dispatch.
 *
 * Exit codes: 0 success / check passed, 1 check failed, 2 usage or parse
 * error, 3 domain or physics error.
 */

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hyper/algebra.hpp"
#include "hyper/analysis.hpp"
#include "hyper/fields.hpp"

namespace hyper::cli {

enum ExitCode : int {
  kSuccess = 0,
  kCheckFailed = 1,
  kUsageError = 2,
  kDomainError = 3,
};

/// Malformed user input (flags, grammars, files). Maps to exit code 2.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class OutputFormat { Csv, Json };

struct RunConfig {
  double class_epsilon = kClassEpsilon;
  double divisor_epsilon = kDivisorEpsilon;
  double sector_epsilon = kSectorEpsilon;
  double fd_step_first = kFirstDerivativeStep;
  double fd_step_second = kSecondDerivativeStep;
  double cr_tolerance = 1e-7;
  double wave_tolerance = 1e-5;
  std::string grid = "-2:2:41,-2:2:41";
  std::string tau = "-2:2:101";
  OutputFormat format = OutputFormat::Csv;
  std::string out;  // empty: stdout

  DomainTolerances domain_tolerances() const { return {sector_epsilon, divisor_epsilon}; }
  /// Throws ParseError when a tolerance is not positive and finite.
  void validate() const;
};

/// Reads a JSON object whose keys mirror the RunConfig fields; absent keys
/// keep their defaults. Unknown keys are rejected.
RunConfig load_config(const std::string& path);

OutputFormat parse_format(std::string_view text);

/// "min:max:count".
SampleRange parse_range(std::string_view spec);
/// "min:max:count,min:max:count" (x axis, then t axis).
Grid2D parse_grid(std::string_view spec);

/**
 * Function mini-grammar over the canonical hyperbolic system:
 *
 *   fn := exp | log | id | pow:N | affine:ar,ah,br,bh | poly:c0r,c0h,c1r,c1h,...
 *       | comp(fn,fn) | test-nonanalytic | test-square | test-mirror
 *
 * comp(outer,inner) evaluates inner first.
 */
AnalyticFunction parse_function(std::string_view spec,
                                const SystemParams& system = SystemParams::hyperbolic());

/// Reads a CSV file with a two-column header (e.g. "x,t") into points.
std::vector<Event> read_points_csv(const std::string& path,
                                   std::string_view first = "x",
                                   std::string_view second = "t");

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hyper::cli
