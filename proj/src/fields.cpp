#include "hyper/fields.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "hyper/error.hpp"
#include "hyper/finite_difference.hpp"

namespace hyper {

namespace {

void require_sector(const Event& e, double sector_epsilon) {
  if (!in_right_sector(e.x, e.t, sector_epsilon)) {
    std::ostringstream msg;
    msg << "event (" << e.x << ", " << e.t << ") lies outside the right sector";
    throw Error(ErrorKind::Sector, msg.str());
  }
}

void require_positive_g(double g) {
  if (!(g > 0.0) || !std::isfinite(g)) {
    std::ostringstream msg;
    msg << "hyperbola parameter g must be positive and finite, got " << g;
    throw Error(ErrorKind::InvalidParameter, msg.str());
  }
}

void require_step(double h) {
  if (!(h > 0.0) || !std::isfinite(h)) {
    throw Error(ErrorKind::InvalidParameter, "fd_step must be positive and finite");
  }
}

}  // namespace

LogCoordinates to_log_coordinates(const Event& e, double sector_epsilon) {
  require_sector(e, sector_epsilon);
  return {0.5 * std::log(interval(e)), std::atanh(e.t / e.x)};
}

Event from_log_coordinates(const LogCoordinates& c) {
  const double r = std::exp(c.X);
  return {r * std::cosh(c.T), r * std::sinh(c.T)};
}

double radial_wave_solution(double A, double B, const Event& e, double sector_epsilon) {
  require_sector(e, sector_epsilon);
  return A * 0.5 * std::log(interval(e)) + B;
}

double boost_invariance_check(double A, double B, const Boost& b, const Grid2D& grid,
                              double sector_epsilon) {
  double worst = 0.0;
  for (const auto& e : grid.points()) {
    const double before = radial_wave_solution(A, B, e, sector_epsilon);
    const double after = radial_wave_solution(A, B, apply(b, e), sector_epsilon);
    worst = std::max(worst, std::abs(after - before));
  }
  return worst;
}

ResidualReport radial_wave_residual(double A, double B, std::span<const Event> points,
                                    double fd_step, double sector_epsilon) {
  require_step(fd_step);
  const auto U = [&](double x, double t) {
    return radial_wave_solution(A, B, Event{x, t}, sector_epsilon);
  };
  const double h = fd_step;
  ResidualReport report;
  report.fd_step = fd_step;
  for (const auto& p : points) {
    const bool stencil_inside =
        in_right_sector(p.x, p.t, sector_epsilon) &&
        in_right_sector(p.x + h, p.t, sector_epsilon) &&
        in_right_sector(p.x - h, p.t, sector_epsilon) &&
        in_right_sector(p.x, p.t + h, sector_epsilon) &&
        in_right_sector(p.x, p.t - h, sector_epsilon);
    if (!stencil_inside) {
      ++report.points_skipped_out_of_domain;
      continue;
    }
    const double r = std::abs(fd::d2_dx2(U, p.x, p.t, h) - fd::d2_dt2(U, p.x, p.t, h));
    report.max_abs_wave_residual = std::max(report.max_abs_wave_residual, r);
    ++report.points_evaluated;
  }
  return report;
}

double SampleRange::at(std::size_t i) const {
  if (count <= 1) return min;
  if (i + 1 == count) return max;
  return std::lerp(min, max, static_cast<double>(i) / static_cast<double>(count - 1));
}

Trajectory hyperbolic_motion(double g, const SampleRange& tau) {
  require_positive_g(g);
  if (tau.count < 2 || !std::isfinite(tau.min) || !std::isfinite(tau.max) ||
      !(tau.min < tau.max)) {
    throw Error(ErrorKind::InvalidParameter,
                "tau range needs finite bounds with min < max and count >= 2");
  }
  Trajectory tr;
  tr.g = g;
  tr.samples.reserve(tau.count);
  for (std::size_t i = 0; i < tau.count; ++i) {
    const double s = tau.at(i);
    tr.samples.push_back({s, g * std::sinh(s / g), g * std::cosh(s / g)});
  }
  return tr;
}

double hyperbola_residual(const TrajectorySample& s, double g) {
  return std::abs((s.x - s.t) * (s.x + s.t) - g * g) / (g * g);
}

namespace {

void require_increasing(const Trajectory& tr) {
  for (std::size_t i = 1; i < tr.samples.size(); ++i) {
    if (!(tr.samples[i].tau > tr.samples[i - 1].tau)) {
      throw Error(ErrorKind::DegenerateSpacing, "tau samples are not strictly increasing");
    }
  }
}

double lorentz_magnitude(double ax, double at) { return std::sqrt(std::abs((ax - at) * (ax + at))); }

// Three-point second derivative on a possibly non-uniform stencil.
double second_derivative(double fm, double f0, double fp, double hm, double hp) {
  return 2.0 * (fp / (hp * (hm + hp)) - f0 / (hm * hp) + fm / (hm * (hm + hp)));
}

}  // namespace

std::vector<double> proper_acceleration(const Trajectory& tr, DerivativeMode mode) {
  require_positive_g(tr.g);
  require_increasing(tr);
  const auto& s = tr.samples;
  std::vector<double> out;
  if (mode == DerivativeMode::Analytic) {
    out.reserve(s.size());
    for (const auto& p : s) {
      const double ax = std::cosh(p.tau / tr.g) / tr.g;
      const double at = std::sinh(p.tau / tr.g) / tr.g;
      out.push_back(lorentz_magnitude(ax, at));
    }
    return out;
  }
  if (s.size() < 3) {
    throw Error(ErrorKind::InvalidParameter,
                "finite-difference acceleration needs at least 3 samples");
  }
  out.reserve(s.size() - 2);
  for (std::size_t i = 1; i + 1 < s.size(); ++i) {
    const double hm = s[i].tau - s[i - 1].tau;
    const double hp = s[i + 1].tau - s[i].tau;
    const double ax = second_derivative(s[i - 1].x, s[i].x, s[i + 1].x, hm, hp);
    const double at = second_derivative(s[i - 1].t, s[i].t, s[i + 1].t, hm, hp);
    out.push_back(lorentz_magnitude(ax, at));
  }
  return out;
}

std::vector<double> four_velocity_norm(const Trajectory& tr) {
  require_positive_g(tr.g);
  std::vector<double> out;
  out.reserve(tr.samples.size());
  for (const auto& p : tr.samples) {
    const double ut = std::cosh(p.tau / tr.g);
    const double ux = std::sinh(p.tau / tr.g);
    out.push_back((ut - ux) * (ut + ux));
  }
  return out;
}

std::vector<Polyline> equipotential_map(std::span<const double> g_values,
                                        const SampleRange& theta) {
  if (theta.count == 0 || !std::isfinite(theta.min) || !std::isfinite(theta.max)) {
    throw Error(ErrorKind::InvalidParameter, "theta range needs finite bounds and count >= 1");
  }
  std::vector<Polyline> out;
  out.reserve(g_values.size());
  for (const double g : g_values) {
    require_positive_g(g);
    Polyline line;
    line.reserve(theta.count);
    for (std::size_t i = 0; i < theta.count; ++i) {
      const auto w = hexp(HyperNumber{std::log(g), theta.at(i), SystemParams::hyperbolic()});
      line.push_back({w.x, w.y});
    }
    out.push_back(std::move(line));
  }
  return out;
}

double laplace_radial_solution(double a, double b, double x, double y) {
  const double r = std::hypot(x, y);
  if (!(r > 0.0)) {
    throw Error(ErrorKind::Singularity, "point-charge potential is singular at the origin");
  }
  return a * std::log(r) + b;
}

ResidualReport laplace_residual(double a, double b, std::span<const Event> points,
                                double fd_step) {
  require_step(fd_step);
  const auto U = [&](double x, double y) { return laplace_radial_solution(a, b, x, y); };
  const double h = fd_step;
  ResidualReport report;
  report.fd_step = fd_step;
  for (const auto& p : points) {
    if (!(std::hypot(p.x, p.t) > 3.0 * h)) {
      ++report.points_skipped_out_of_domain;
      continue;
    }
    const double r = std::abs(fd::d2_dx2_o4(U, p.x, p.t, h) + fd::d2_dt2_o4(U, p.x, p.t, h));
    report.max_abs_wave_residual = std::max(report.max_abs_wave_residual, r);
    ++report.points_evaluated;
  }
  return report;
}

ResidualReport cr_check_complex(const AnalyticFunction& f, const Grid2D& grid, double fd_step,
                                const DomainTolerances& tol) {
  return cr_residual(f, grid, fd_step, SystemParams::elliptic(), tol);
}

}  // namespace hyper
