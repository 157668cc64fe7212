#pragma once

/**
 * @file fields.hpp
 * @brief Boost-invariant wave solutions and the worldlines they generate.
 *
 * In log coordinates X = ln√(x² − t²), T = tanh⁻¹(t/x) the wave equation
 * keeps its form, and a solution independent of the hyperbolic angle T is
 * U = A·X + B. Its level sets X = ln g are the hyperbolas
 *
 *   x = g cosh(τ/g),  t = g sinh(τ/g)
 *
 * i.e. motion with constant proper acceleration 1/g. The Euclidean
 * counterpart (polar coordinates, U = a ln r + b) is the point-charge
 * potential.
 */

#include <cstddef>
#include <span>
#include <vector>

#include "hyper/analysis.hpp"
#include "hyper/event.hpp"
#include "hyper/lorentz.hpp"

namespace hyper {

struct LogCoordinates {
  double X = 0.0;
  double T = 0.0;
};

/// Throws Sector outside the right sector.
LogCoordinates to_log_coordinates(const Event& e, double sector_epsilon = kSectorEpsilon);
Event from_log_coordinates(const LogCoordinates& c);

struct RadialSolution {
  double A = 1.0;
  double B = 0.0;
};

/// A·ln√(x² − t²) + B. Throws Sector outside the right sector.
double radial_wave_solution(double A, double B, const Event& e,
                            double sector_epsilon = kSectorEpsilon);
inline double radial_wave_solution(const RadialSolution& s, const Event& e,
                                   double sector_epsilon = kSectorEpsilon) {
  return radial_wave_solution(s.A, s.B, e, sector_epsilon);
}

/// max |U(b·e) − U(e)| over the grid. Throws Sector if any grid point or its
/// boosted image leaves the right sector.
double boost_invariance_check(double A, double B, const Boost& b, const Grid2D& grid,
                              double sector_epsilon = kSectorEpsilon);

/// FD estimate of |U,xx − U,tt| for the radial solution; points whose
/// 5-point stencil leaves the sector are skipped. The maximum is reported in
/// max_abs_wave_residual.
ResidualReport radial_wave_residual(double A, double B, std::span<const Event> points,
                                    double fd_step = kSecondDerivativeStep,
                                    double sector_epsilon = kSectorEpsilon);

struct SampleRange {
  double min = 0.0;
  double max = 0.0;
  std::size_t count = 1;

  double at(std::size_t i) const;
};

struct TrajectorySample {
  double tau = 0.0;
  double t = 0.0;
  double x = 0.0;
};

struct Trajectory {
  double g = 1.0;
  std::vector<TrajectorySample> samples;
};

/// Uniform, endpoint-inclusive τ samples. Throws InvalidParameter for
/// g ≤ 0, count < 2 or an empty τ interval.
Trajectory hyperbolic_motion(double g, const SampleRange& tau);

/// |x² − t² − g²| / g².
double hyperbola_residual(const TrajectorySample& s, double g);

enum class DerivativeMode { Analytic, FiniteDifference };

/// √|(d²x/dτ²)² − (d²t/dτ²)²| per sample. Analytic mode differentiates the
/// closed form and returns one value per sample; finite-difference mode uses
/// three-point differences on the stored samples and omits both endpoints.
/// Throws DegenerateSpacing when τ is not strictly increasing.
std::vector<double> proper_acceleration(const Trajectory& tr,
                                        DerivativeMode mode = DerivativeMode::Analytic);

/// (dt/dτ)² − (dx/dτ)² per sample, from the closed-form derivatives.
std::vector<double> four_velocity_norm(const Trajectory& tr);

using Polyline = std::vector<Event>;

/// Image of each vertical line X = ln g under the exponential map, sampled
/// at T = theta.at(i). theta.count may be 1 (a single point per line).
std::vector<Polyline> equipotential_map(std::span<const double> g_values,
                                        const SampleRange& theta);

/// a·ln√(x² + y²) + b. Throws Singularity at the origin.
double laplace_radial_solution(double a, double b, double x, double y);

/// Fourth-order FD estimate of |U,xx + U,yy| for the point-charge potential;
/// points within 3h of the origin are skipped. Reported in max_abs_wave_residual.
ResidualReport laplace_residual(double a, double b, std::span<const Event> points,
                                double fd_step = kSecondDerivativeStep);

/// cr_residual over the canonical elliptic system: u,x = v,y, u,y = −v,x.
ResidualReport cr_check_complex(const AnalyticFunction& f, const Grid2D& grid,
                                double fd_step = kFirstDerivativeStep,
                                const DomainTolerances& tol = {});

}  // namespace hyper
