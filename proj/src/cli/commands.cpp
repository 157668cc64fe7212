#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "hyper/cli.hpp"
#include "hyper/error.hpp"
#include "hyper/fields.hpp"
#include "hyper/lorentz.hpp"
#include "output.hpp"

namespace hyper::cli {

namespace {

struct CommonOptions {
  std::string format;
  std::string out;
  std::string config;
};

void add_common(CLI::App* sub, CommonOptions& o) {
  sub->add_option("--format", o.format, "Output format: csv or json");
  sub->add_option("--out", o.out, "Write output to PATH instead of stdout");
  sub->add_option("--config", o.config, "JSON config file; flags override it");
}

RunConfig resolve(const CommonOptions& o) {
  RunConfig cfg = o.config.empty() ? RunConfig{} : load_config(o.config);
  if (!o.format.empty()) cfg.format = parse_format(o.format);
  if (!o.out.empty()) cfg.out = o.out;
  cfg.validate();
  return cfg;
}

struct Result {
  std::string text;
  int code = kSuccess;
};

// --- classify --------------------------------------------------------------

struct ClassifyArgs {
  double alpha = 0.0;
  double beta = 0.0;
};

Result cmd_classify(const ClassifyArgs& a, const RunConfig& cfg) {
  const SystemParams p(a.alpha, a.beta);
  const auto c = classify(p, cfg.class_epsilon);
  const auto canon = canonicalize(p, cfg.class_epsilon);
  Table t;
  t.columns = {"class",  "alpha",  "beta",   "delta",  "canonical_alpha", "canonical_beta",
               "map_xx", "map_xy", "map_yx", "map_yy"};
  t.rows.push_back({std::string(to_string(c)), p.alpha(), p.beta(), p.delta(),
                    canon.canonical.alpha(), canon.canonical.beta(), canon.map.xx, canon.map.xy,
                    canon.map.yx, canon.map.yy});
  return {render(cfg.format, "classify", t)};
}

// --- boost -----------------------------------------------------------------

struct BoostArgs {
  std::optional<double> velocity;
  std::optional<double> rapidity;
  std::string events;
};

Result cmd_boost(const BoostArgs& a, const RunConfig& cfg) {
  if (a.velocity.has_value() == a.rapidity.has_value()) {
    throw ParseError("boost needs exactly one of --v or --rapidity");
  }
  const Boost b = a.velocity ? Boost::from_velocity(*a.velocity)
                             : Boost::from_rapidity(*a.rapidity);
  const auto events = read_points_csv(a.events, "x", "t");
  Table t;
  t.columns = {"x", "t", "x_prime", "t_prime", "interval_before", "interval_after"};
  for (const auto& e : events) {
    const Event p = apply(b, e);
    t.rows.push_back({e.x, e.t, p.x, p.t, interval(e), interval(p)});
  }
  nlohmann::ordered_json meta;
  meta["rapidity"] = b.rapidity();
  meta["velocity"] = b.velocity();
  return {render(cfg.format, "boost", t, meta)};
}

// --- map -------------------------------------------------------------------

struct MapArgs {
  std::string fn;
  std::string grid;
};

Result cmd_map(const MapArgs& a, const RunConfig& cfg) {
  const auto f = parse_function(a.fn);
  const auto grid_spec = a.grid.empty() ? cfg.grid : a.grid;
  const auto grid = parse_grid(grid_spec);
  Table t;
  t.columns = {"x", "t", "u", "v", "in_domain"};
  for (const auto& p : map_grid(f, grid, SystemParams::hyperbolic(), cfg.domain_tolerances())) {
    t.rows.push_back({p.x, p.t, p.u, p.v, p.in_domain});
  }
  nlohmann::ordered_json meta;
  meta["function"] = f.describe();
  meta["grid"] = grid_spec;
  return {render(cfg.format, "map", t, meta)};
}

// --- check -----------------------------------------------------------------

struct CheckArgs {
  std::string fn;
  std::string grid;
  std::string fd_step;
};

Result cmd_check(const CheckArgs& a, RunConfig cfg) {
  const auto f = parse_function(a.fn);
  if (!a.fd_step.empty()) {
    const auto comma = a.fd_step.find(',');
    const auto parse_step = [](const std::string& s) {
      try {
        std::size_t used = 0;
        const double v = std::stod(s, &used);
        if (used != s.size()) throw ParseError("cannot parse fd step '" + s + "'");
        return v;
      } catch (const std::logic_error&) {
        throw ParseError("cannot parse fd step '" + s + "'");
      }
    };
    cfg.fd_step_first = parse_step(a.fd_step.substr(0, comma));
    if (comma != std::string::npos) cfg.fd_step_second = parse_step(a.fd_step.substr(comma + 1));
  }
  cfg.validate();
  const auto grid_spec = a.grid.empty() ? cfg.grid : a.grid;
  const auto grid = parse_grid(grid_spec);
  const auto tol = cfg.domain_tolerances();
  const auto cr = cr_residual(f, grid, cfg.fd_step_first, SystemParams::hyperbolic(), tol);
  const auto wave = wave_residual(f, grid, cfg.fd_step_second, SystemParams::hyperbolic(), tol);

  // A check that evaluated no point proves nothing and is reported as failed.
  const bool cr_pass = cr.points_evaluated > 0 && cr.max_abs_cr_residual <= cfg.cr_tolerance;
  const bool wave_pass =
      wave.points_evaluated > 0 && wave.max_abs_wave_residual <= cfg.wave_tolerance;

  const auto section = [&](const ResidualReport& r, double tolerance, bool pass) {
    nlohmann::ordered_json s;
    s["fd_step"] = r.fd_step;
    s["points_evaluated"] = r.points_evaluated;
    s["points_skipped_out_of_domain"] = r.points_skipped_out_of_domain;
    s["tolerance"] = tolerance;
    s["pass"] = pass;
    return s;
  };
  nlohmann::ordered_json doc;
  doc["command"] = "check";
  doc["function"] = f.describe();
  doc["grid"] = grid_spec;
  doc["grid_points"] = grid.size();
  doc["max_abs_cr_residual"] = cr.max_abs_cr_residual;
  doc["max_abs_wave_residual"] = wave.max_abs_wave_residual;
  doc["cr"] = section(cr, cfg.cr_tolerance, cr_pass);
  doc["wave"] = section(wave, cfg.wave_tolerance, wave_pass);
  doc["pass"] = cr_pass && wave_pass;
  return {doc.dump(2) + '\n', cr_pass && wave_pass ? kSuccess : kCheckFailed};
}

// --- trajectory ------------------------------------------------------------

struct TrajectoryArgs {
  double g = 1.0;
  std::string tau;
};

Result cmd_trajectory(const TrajectoryArgs& a, const RunConfig& cfg) {
  const auto range = parse_range(a.tau.empty() ? cfg.tau : a.tau);
  const auto tr = hyperbolic_motion(a.g, range);
  const auto accel = proper_acceleration(tr, DerivativeMode::Analytic);
  Table t;
  t.columns = {"tau", "t", "x", "proper_acceleration", "hyperbola_residual"};
  for (std::size_t i = 0; i < tr.samples.size(); ++i) {
    const auto& s = tr.samples[i];
    t.rows.push_back({s.tau, s.t, s.x, accel[i], hyperbola_residual(s, tr.g)});
  }
  nlohmann::ordered_json meta;
  meta["g"] = tr.g;
  return {render(cfg.format, "trajectory", t, meta)};
}

// --- potential -------------------------------------------------------------

struct PotentialArgs {
  std::string mode = "hyperbolic";
  double coef_a = 1.0;
  double coef_b = 0.0;
  std::string grid;
  std::string points;
};

Result cmd_potential(const PotentialArgs& a, const RunConfig& cfg) {
  const bool hyperbolic = a.mode == "hyperbolic";
  if (!hyperbolic && a.mode != "euclidean") {
    throw ParseError("unknown potential mode '" + a.mode + "' (expected hyperbolic or euclidean)");
  }
  if (!a.grid.empty() && !a.points.empty()) {
    throw ParseError("potential takes either --grid or --points, not both");
  }
  if (!std::isfinite(a.coef_a) || !std::isfinite(a.coef_b)) {
    throw Error(ErrorKind::InvalidParameter, "potential coefficients must be finite");
  }
  const char* second = hyperbolic ? "t" : "y";
  const auto points = a.points.empty() ? parse_grid(a.grid.empty() ? cfg.grid : a.grid).points()
                                       : read_points_csv(a.points, "x", second);
  constexpr double nan = std::numeric_limits<double>::quiet_NaN();
  Table t;
  t.columns = {"x", second, "U", "in_domain"};
  for (const auto& p : points) {
    if (hyperbolic) {
      if (in_right_sector(p.x, p.t, cfg.sector_epsilon)) {
        t.rows.push_back(
            {p.x, p.t, radial_wave_solution(a.coef_a, a.coef_b, p, cfg.sector_epsilon), true});
      } else {
        t.rows.push_back({p.x, p.t, nan, false});
      }
    } else if (std::hypot(p.x, p.t) > 0.0) {
      t.rows.push_back({p.x, p.t, laplace_radial_solution(a.coef_a, a.coef_b, p.x, p.t), true});
    } else {
      t.rows.push_back({p.x, p.t, nan, false});
    }
  }
  nlohmann::ordered_json meta;
  meta["mode"] = a.mode;
  meta["coef_a"] = a.coef_a;
  meta["coef_b"] = a.coef_b;
  return {render(cfg.format, "potential", t, meta)};
}

int emit(const Result& r, const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.out.empty()) {
    out << r.text;
    out.flush();
    return r.code;
  }
  std::ofstream file(cfg.out, std::ios::binary | std::ios::trunc);
  if (!file || !(file << r.text) || !file.flush()) {
    err << "error: cannot write output file '" << cfg.out << "'\n";
    return kUsageError;
  }
  return r.code;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Two-dimensional hypercomplex numbers, Lorentz boosts and hyperbolic motion",
               "hyperctl"};
  app.require_subcommand(1);

  CommonOptions common;

  ClassifyArgs classify_args;
  auto* classify = app.add_subcommand("classify", "Classify a system u^2 = alpha + u beta");
  classify->add_option("--alpha", classify_args.alpha, "Structure constant alpha")->required();
  classify->add_option("--beta", classify_args.beta, "Structure constant beta")->required();
  add_common(classify, common);

  BoostArgs boost_args;
  auto* boost = app.add_subcommand("boost", "Apply a Lorentz boost to a CSV of events");
  auto* v_opt = boost->add_option("--v", boost_args.velocity, "Boost velocity, |v| < 1");
  boost->add_option("--rapidity", boost_args.rapidity, "Boost rapidity")->excludes(v_opt);
  boost->add_option("--events", boost_args.events, "CSV file with header x,t")->required();
  add_common(boost, common);

  MapArgs map_args;
  auto* map = app.add_subcommand("map", "Evaluate a function of the hyperbolic variable on a grid");
  map->add_option("--fn", map_args.fn, "Function spec")->required();
  map->add_option("--grid", map_args.grid, "min:max:count,min:max:count");
  add_common(map, common);

  CheckArgs check_args;
  auto* check = app.add_subcommand("check", "Finite-difference Cauchy-Riemann and wave checks");
  check->add_option("--fn", check_args.fn, "Function spec")->required();
  check->add_option("--grid", check_args.grid, "min:max:count,min:max:count");
  check->add_option("--fd-step", check_args.fd_step, "FIRST[,SECOND] difference steps");
  add_common(check, common);

  TrajectoryArgs trajectory_args;
  auto* trajectory = app.add_subcommand("trajectory", "Sample the hyperbolic-motion worldline");
  trajectory->add_option("--g", trajectory_args.g, "Hyperbola parameter g > 0")->required();
  trajectory->add_option("--tau", trajectory_args.tau, "Proper-time range min:max:count");
  add_common(trajectory, common);

  PotentialArgs potential_args;
  auto* potential = app.add_subcommand("potential", "Evaluate the radial potential");
  potential->add_option("--mode", potential_args.mode, "hyperbolic or euclidean");
  potential->add_option("--coef-a", potential_args.coef_a, "Coefficient of the log term");
  potential->add_option("--coef-b", potential_args.coef_b, "Constant offset");
  potential->add_option("--grid", potential_args.grid, "min:max:count,min:max:count");
  potential->add_option("--points", potential_args.points, "CSV of points (header x,t or x,y)");
  add_common(potential, common);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  try {
    const RunConfig cfg = resolve(common);
    Result r;
    if (classify->parsed()) {
      r = cmd_classify(classify_args, cfg);
    } else if (boost->parsed()) {
      r = cmd_boost(boost_args, cfg);
    } else if (map->parsed()) {
      r = cmd_map(map_args, cfg);
    } else if (check->parsed()) {
      r = cmd_check(check_args, cfg);
    } else if (trajectory->parsed()) {
      r = cmd_trajectory(trajectory_args, cfg);
    } else {
      r = cmd_potential(potential_args, cfg);
    }
    return emit(r, cfg, out, err);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const Error& e) {
    err << "error (" << to_string(e.kind()) << "): " << e.what() << '\n';
    return kDomainError;
  }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, out, err);
}

}  // namespace hyper::cli
