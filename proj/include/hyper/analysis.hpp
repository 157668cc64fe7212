#pragma once

/**
 * @file analysis.hpp
 * @brief Function theory of the canonical hyperbolic system (h² = +1).
 *
 * A map f(x + h·t) = u(x, t) + h·v(x, t) is a function of the hyperbolic
 * variable when
 *
 *   u,x = v,t      u,t = v,x
 *
 * and then u and v both solve the wave equation U,xx − U,tt = 0. The
 * checkers here estimate both conditions with central differences. They
 * also accept the canonical elliptic system, where the same stencils test
 * u,x = v,y, u,y = −v,x and Laplace's equation.
 */

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "hyper/algebra.hpp"
#include "hyper/event.hpp"

namespace hyper {

inline constexpr double kSectorEpsilon = 1e-12;
inline constexpr double kFirstDerivativeStep = 1e-5;
inline constexpr double kSecondDerivativeStep = 1e-3;

/// x > 0 and |x| > |t|, with points whose interval x² − t² is within
/// sector_epsilon·(x² + t²) of the null cone treated as outside.
bool in_right_sector(double x, double t, double sector_epsilon = kSectorEpsilon);

/// Exponential form x + h·t = e^ρ (cosh θ + h sinh θ).
struct PolarHyperbolic {
  double rho = 0.0;
  double theta = 0.0;
};

PolarHyperbolic to_polar(const HyperNumber& w,
                         double sector_epsilon = kSectorEpsilon);
HyperNumber from_polar(const PolarHyperbolic& p);

/// e^x (cosh t + h sinh t). Throws Overflow when not representable.
HyperNumber hexp(const HyperNumber& w);
/// ln√(x² − t²) + h tanh⁻¹(t/x), right sector only.
HyperNumber hlog(const HyperNumber& w, double sector_epsilon = kSectorEpsilon);

/// e^x (cos y + i sin y).
HyperNumber complex_exp(const HyperNumber& w);
/// ln√(x² + y²) + i tan⁻¹(y/x) on the right half plane x > 0.
HyperNumber complex_log(const HyperNumber& w);

struct DomainTolerances {
  double sector_epsilon = kSectorEpsilon;
  double divisor_epsilon = kDivisorEpsilon;
};

/// Non-analytic maps kept in the catalog so the checkers can be shown to
/// reject them.
enum class ControlMap {
  StretchTime,  // (x, t) -> (x, 2t)
  SquareReal,   // (x, t) -> (x², 0)
  Mirror,       // (x, t) -> (x, -t)
};

/**
 * A closed catalog of maps on a canonical elliptic or hyperbolic system.
 *
 * Exp and Log dispatch on the system of their argument; powers, polynomials
 * and affine maps work in any system. Coefficients carry their own system
 * and must match the argument's.
 */
class AnalyticFunction {
 public:
  enum class Kind { Exp, Log, IntegerPower, Polynomial, Affine, Composition, Control };

  static AnalyticFunction exp();
  static AnalyticFunction log();
  static AnalyticFunction power(int n);
  /// c0 + c1·w + c2·w² + ...; throws InvalidParameter when empty or when a
  /// coefficient is not finite.
  static AnalyticFunction polynomial(std::vector<HyperNumber> coefficients);
  static AnalyticFunction affine(const HyperNumber& a, const HyperNumber& b);
  /// outer(inner(w)).
  static AnalyticFunction compose(const AnalyticFunction& outer,
                                  const AnalyticFunction& inner);
  static AnalyticFunction control(ControlMap map);
  static AnalyticFunction identity(const SystemParams& system = SystemParams::hyperbolic());

  Kind kind() const;
  /// False only for control maps and compositions containing one.
  bool is_analytic() const;

  bool in_domain(const HyperNumber& w, const DomainTolerances& tol = {}) const;
  /// Throws the constituent's domain error (Sector, ZeroDivisor, Overflow,
  /// Domain) when w lies outside the domain.
  HyperNumber evaluate(const HyperNumber& w, const DomainTolerances& tol = {}) const;
  HyperNumber operator()(const HyperNumber& w) const { return evaluate(w); }

  /// Mini-grammar rendering, e.g. "comp(log,pow:2)".
  std::string describe() const;

  struct Repr;

 private:
  explicit AnalyticFunction(std::shared_ptr<const Repr> repr) : repr_(std::move(repr)) {}

  std::shared_ptr<const Repr> repr_;
};

/// Uniform, endpoint-inclusive sampling of one axis.
struct Axis {
  double min = 0.0;
  double max = 1.0;
  std::size_t count = 2;

  double at(std::size_t i) const;
};

/// Rectangular grid, row-major with x as the outer (row) index and t as the
/// inner index.
class Grid2D {
 public:
  /// Throws InvalidParameter unless both counts are ≥ 2, bounds are finite
  /// and min < max.
  Grid2D(const Axis& x_axis, const Axis& t_axis);

  const Axis& x_axis() const noexcept { return x_; }
  const Axis& t_axis() const noexcept { return t_; }
  std::size_t size() const noexcept { return x_.count * t_.count; }
  Event at(std::size_t row, std::size_t col) const;
  std::vector<Event> points() const;

 private:
  Axis x_;
  Axis t_;
};

struct ResidualReport {
  double max_abs_cr_residual = 0.0;
  double max_abs_wave_residual = 0.0;
  double fd_step = 0.0;
  std::size_t points_evaluated = 0;
  std::size_t points_skipped_out_of_domain = 0;
};

/// Maxima of |u,x − v,t| and |u,t − α·v,x| over grid points whose whole
/// stencil lies inside the domain. α is the system's u² (±1).
ResidualReport cr_residual(const AnalyticFunction& f, const Grid2D& grid,
                           double fd_step = kFirstDerivativeStep,
                           const SystemParams& system = SystemParams::hyperbolic(),
                           const DomainTolerances& tol = {});

/// Maxima of |u,xx − α·u,tt| and |v,xx − α·v,tt|, same skipping rule.
ResidualReport wave_residual(const AnalyticFunction& f, const Grid2D& grid,
                             double fd_step = kSecondDerivativeStep,
                             const SystemParams& system = SystemParams::hyperbolic(),
                             const DomainTolerances& tol = {});

struct MappedPoint {
  double x = 0.0;
  double t = 0.0;
  double u = 0.0;  // NaN when !in_domain
  double v = 0.0;  // NaN when !in_domain
  bool in_domain = false;
};

std::vector<MappedPoint> map_grid(const AnalyticFunction& f, const Grid2D& grid,
                                  const SystemParams& system = SystemParams::hyperbolic(),
                                  const DomainTolerances& tol = {});

/// Same as above over an arbitrary point set, preserving its order.
std::vector<MappedPoint> map_grid(const AnalyticFunction& f, std::span<const Event> points,
                                  const SystemParams& system = SystemParams::hyperbolic(),
                                  const DomainTolerances& tol = {});

}  // namespace hyper
