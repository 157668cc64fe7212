#include "hyper/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <locale>
#include <optional>
#include <sstream>
#include <variant>

#include "hyper/error.hpp"

namespace hyper {

namespace {

bool is_canonical_hyperbolic(const SystemParams& s) { return s == SystemParams::hyperbolic(); }
bool is_canonical_elliptic(const SystemParams& s) { return s == SystemParams::elliptic(); }

void require_canonical_hyperbolic(const HyperNumber& w, const char* op) {
  if (!is_canonical_hyperbolic(w.system)) {
    throw Error(ErrorKind::SystemMismatch,
                std::string(op) + " requires the canonical hyperbolic system");
  }
}

void require_canonical_elliptic(const HyperNumber& w, const char* op) {
  if (!is_canonical_elliptic(w.system)) {
    throw Error(ErrorKind::SystemMismatch,
                std::string(op) + " requires the canonical elliptic system");
  }
}

[[noreturn]] void throw_sector(double x, double t) {
  std::ostringstream msg;
  msg << "point (" << x << ", " << t
      << ") lies outside the right sector x > 0, |x| > |t|";
  throw Error(ErrorKind::Sector, msg.str());
}

}  // namespace

bool in_right_sector(double x, double t, double sector_epsilon) {
  if (!std::isfinite(x) || !std::isfinite(t) || !(x > 0.0)) return false;
  const double interval = (x - t) * (x + t);
  return interval > sector_epsilon * (x * x + t * t);
}

PolarHyperbolic to_polar(const HyperNumber& w, double sector_epsilon) {
  require_canonical_hyperbolic(w, "to_polar");
  if (!in_right_sector(w.x, w.y, sector_epsilon)) throw_sector(w.x, w.y);
  return {0.5 * std::log((w.x - w.y) * (w.x + w.y)), std::atanh(w.y / w.x)};
}

HyperNumber from_polar(const PolarHyperbolic& p) {
  const double r = std::exp(p.rho);
  return {r * std::cosh(p.theta), r * std::sinh(p.theta), SystemParams::hyperbolic()};
}

HyperNumber hexp(const HyperNumber& w) {
  require_canonical_hyperbolic(w, "hexp");
  const double r = std::exp(w.x);
  HyperNumber out{r * std::cosh(w.y), r * std::sinh(w.y), w.system};
  if (!std::isfinite(out.x) || !std::isfinite(out.y)) {
    std::ostringstream msg;
    msg << "exp(" << w.x << " + h " << w.y << ") overflows";
    throw Error(ErrorKind::Overflow, msg.str());
  }
  return out;
}

HyperNumber hlog(const HyperNumber& w, double sector_epsilon) {
  const auto p = to_polar(w, sector_epsilon);
  return {p.rho, p.theta, w.system};
}

HyperNumber complex_exp(const HyperNumber& w) {
  require_canonical_elliptic(w, "complex_exp");
  const double r = std::exp(w.x);
  HyperNumber out{r * std::cos(w.y), r * std::sin(w.y), w.system};
  if (!std::isfinite(out.x) || !std::isfinite(out.y)) {
    throw Error(ErrorKind::Overflow, "complex exp overflows");
  }
  return out;
}

HyperNumber complex_log(const HyperNumber& w) {
  require_canonical_elliptic(w, "complex_log");
  if (!(w.x > 0.0) || !std::isfinite(w.y)) {
    std::ostringstream msg;
    msg << "complex log is defined on the right half plane; got (" << w.x
        << ", " << w.y << ")";
    throw Error(ErrorKind::Domain, msg.str());
  }
  return {std::log(std::hypot(w.x, w.y)), std::atan(w.y / w.x), w.system};
}

// ---------------------------------------------------------------------------
// AnalyticFunction

namespace {

struct ExpFn {};
struct LogFn {};
struct PowerFn {
  int n;
};
struct PolynomialFn {
  std::vector<HyperNumber> coefficients;
};
struct AffineFn {
  HyperNumber a;
  HyperNumber b;
};
struct CompositionFn {
  AnalyticFunction outer;
  AnalyticFunction inner;
};
struct ControlFn {
  ControlMap map;
};

using Node = std::variant<ExpFn, LogFn, PowerFn, PolynomialFn, AffineFn,
                          CompositionFn, ControlFn>;

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

HyperNumber one_in(const SystemParams& s) { return {1.0, 0.0, s}; }

HyperNumber power_of(const HyperNumber& base, unsigned n) {
  HyperNumber result = one_in(base.system);
  HyperNumber b = base;
  while (n != 0) {
    if (n & 1u) result = mul(result, b);
    n >>= 1u;
    if (n != 0) b = mul(b, b);
  }
  return result;
}

bool invertible(const HyperNumber& w, double divisor_epsilon) {
  const double magnitude = 1.0 + std::abs(w.x) + std::abs(w.y);
  return std::abs(norm(w)) > divisor_epsilon * magnitude * magnitude;
}

bool finite(const HyperNumber& w) { return std::isfinite(w.x) && std::isfinite(w.y); }

[[noreturn]] void throw_unsupported_system(const char* fn, const SystemParams& s) {
  std::ostringstream msg;
  msg << fn << " is only defined on the canonical elliptic and hyperbolic systems; got ("
      << s.alpha() << ", " << s.beta() << ")";
  throw Error(ErrorKind::InvalidParameter, msg.str());
}

std::string format_real(double v) {
  std::ostringstream out;
  out.imbue(std::locale::classic());
  out.precision(17);
  out << v;
  return out.str();
}

}  // namespace

struct AnalyticFunction::Repr {
  Node node;
};

AnalyticFunction AnalyticFunction::exp() {
  return AnalyticFunction(std::make_shared<const Repr>(Repr{ExpFn{}}));
}

AnalyticFunction AnalyticFunction::log() {
  return AnalyticFunction(std::make_shared<const Repr>(Repr{LogFn{}}));
}

AnalyticFunction AnalyticFunction::power(int n) {
  return AnalyticFunction(std::make_shared<const Repr>(Repr{PowerFn{n}}));
}

AnalyticFunction AnalyticFunction::polynomial(std::vector<HyperNumber> coefficients) {
  if (coefficients.empty()) {
    throw Error(ErrorKind::InvalidParameter, "polynomial needs at least one coefficient");
  }
  for (const auto& c : coefficients) {
    if (!(c.system == coefficients.front().system)) {
      throw Error(ErrorKind::SystemMismatch, "polynomial coefficients mix systems");
    }
    if (!finite(c)) {
      throw Error(ErrorKind::InvalidParameter, "polynomial coefficients must be finite");
    }
  }
  return AnalyticFunction(
      std::make_shared<const Repr>(Repr{PolynomialFn{std::move(coefficients)}}));
}

AnalyticFunction AnalyticFunction::affine(const HyperNumber& a, const HyperNumber& b) {
  if (!(a.system == b.system)) {
    throw Error(ErrorKind::SystemMismatch, "affine coefficients mix systems");
  }
  if (!finite(a) || !finite(b)) {
    throw Error(ErrorKind::InvalidParameter, "affine coefficients must be finite");
  }
  return AnalyticFunction(std::make_shared<const Repr>(Repr{AffineFn{a, b}}));
}

AnalyticFunction AnalyticFunction::compose(const AnalyticFunction& outer,
                                           const AnalyticFunction& inner) {
  return AnalyticFunction(std::make_shared<const Repr>(Repr{CompositionFn{outer, inner}}));
}

AnalyticFunction AnalyticFunction::control(ControlMap map) {
  return AnalyticFunction(std::make_shared<const Repr>(Repr{ControlFn{map}}));
}

AnalyticFunction AnalyticFunction::identity(const SystemParams& system) {
  return affine(one_in(system), HyperNumber{0.0, 0.0, system});
}

AnalyticFunction::Kind AnalyticFunction::kind() const {
  return std::visit(overloaded{
                        [](const ExpFn&) { return Kind::Exp; },
                        [](const LogFn&) { return Kind::Log; },
                        [](const PowerFn&) { return Kind::IntegerPower; },
                        [](const PolynomialFn&) { return Kind::Polynomial; },
                        [](const AffineFn&) { return Kind::Affine; },
                        [](const CompositionFn&) { return Kind::Composition; },
                        [](const ControlFn&) { return Kind::Control; },
                    },
                    repr_->node);
}

bool AnalyticFunction::is_analytic() const {
  return std::visit(overloaded{
                        [](const CompositionFn& c) {
                          return c.outer.is_analytic() && c.inner.is_analytic();
                        },
                        [](const ControlFn&) { return false; },
                        [](const auto&) { return true; },
                    },
                    repr_->node);
}

bool AnalyticFunction::in_domain(const HyperNumber& w, const DomainTolerances& tol) const {
  if (!finite(w)) return false;
  return std::visit(
      overloaded{
          [&](const ExpFn&) {
            const double r = std::exp(w.x);
            if (is_canonical_hyperbolic(w.system)) {
              return std::isfinite(r * std::cosh(w.y)) && std::isfinite(r * std::sinh(w.y));
            }
            if (is_canonical_elliptic(w.system)) return std::isfinite(r);
            throw_unsupported_system("exp", w.system);
          },
          [&](const LogFn&) {
            if (is_canonical_hyperbolic(w.system)) {
              return in_right_sector(w.x, w.y, tol.sector_epsilon);
            }
            if (is_canonical_elliptic(w.system)) return w.x > 0.0;
            throw_unsupported_system("log", w.system);
          },
          [&](const PowerFn& p) {
            if (p.n >= 0) return true;
            return invertible(w, tol.divisor_epsilon);
          },
          [&](const PolynomialFn&) { return true; },
          [&](const AffineFn&) { return true; },
          [&](const CompositionFn& c) {
            if (!c.inner.in_domain(w, tol)) return false;
            const auto mid = c.inner.evaluate(w, tol);
            return finite(mid) && c.outer.in_domain(mid, tol);
          },
          [&](const ControlFn&) { return true; },
      },
      repr_->node);
}

HyperNumber AnalyticFunction::evaluate(const HyperNumber& w, const DomainTolerances& tol) const {
  return std::visit(
      overloaded{
          [&](const ExpFn&) {
            if (is_canonical_hyperbolic(w.system)) return hexp(w);
            if (is_canonical_elliptic(w.system)) return complex_exp(w);
            throw_unsupported_system("exp", w.system);
          },
          [&](const LogFn&) {
            if (is_canonical_hyperbolic(w.system)) return hlog(w, tol.sector_epsilon);
            if (is_canonical_elliptic(w.system)) return complex_log(w);
            throw_unsupported_system("log", w.system);
          },
          [&](const PowerFn& p) {
            if (p.n >= 0) return power_of(w, static_cast<unsigned>(p.n));
            const auto inverse = div(one_in(w.system), w, tol.divisor_epsilon);
            return power_of(inverse, static_cast<unsigned>(-(static_cast<long>(p.n))));
          },
          [&](const PolynomialFn& p) {
            // Horner
            HyperNumber acc = p.coefficients.back();
            for (auto it = p.coefficients.rbegin() + 1; it != p.coefficients.rend(); ++it) {
              acc = add(mul(acc, w), *it);
            }
            return acc;
          },
          [&](const AffineFn& a) { return add(mul(a.a, w), a.b); },
          [&](const CompositionFn& c) {
            return c.outer.evaluate(c.inner.evaluate(w, tol), tol);
          },
          [&](const ControlFn& c) {
            switch (c.map) {
              case ControlMap::StretchTime: return HyperNumber{w.x, 2.0 * w.y, w.system};
              case ControlMap::SquareReal: return HyperNumber{w.x * w.x, 0.0, w.system};
              case ControlMap::Mirror: return HyperNumber{w.x, -w.y, w.system};
            }
            throw Error(ErrorKind::InvalidParameter, "unknown control map");
          },
      },
      repr_->node);
}

std::string AnalyticFunction::describe() const {
  return std::visit(
      overloaded{
          [](const ExpFn&) { return std::string("exp"); },
          [](const LogFn&) { return std::string("log"); },
          [](const PowerFn& p) { return "pow:" + std::to_string(p.n); },
          [](const PolynomialFn& p) {
            std::string s = "poly:";
            for (std::size_t i = 0; i < p.coefficients.size(); ++i) {
              if (i != 0) s += ',';
              s += format_real(p.coefficients[i].x) + ',' + format_real(p.coefficients[i].y);
            }
            return s;
          },
          [](const AffineFn& a) {
            return "affine:" + format_real(a.a.x) + ',' + format_real(a.a.y) + ',' +
                   format_real(a.b.x) + ',' + format_real(a.b.y);
          },
          [](const CompositionFn& c) {
            return "comp(" + c.outer.describe() + ',' + c.inner.describe() + ')';
          },
          [](const ControlFn& c) {
            switch (c.map) {
              case ControlMap::StretchTime: return std::string("test-nonanalytic");
              case ControlMap::SquareReal: return std::string("test-square");
              case ControlMap::Mirror: return std::string("test-mirror");
            }
            return std::string("test-unknown");
          },
      },
      repr_->node);
}

// ---------------------------------------------------------------------------
// Grids and checkers

double Axis::at(std::size_t i) const {
  if (i + 1 == count) return max;
  return std::lerp(min, max, static_cast<double>(i) / static_cast<double>(count - 1));
}

Grid2D::Grid2D(const Axis& x_axis, const Axis& t_axis) : x_(x_axis), t_(t_axis) {
  for (const Axis* a : {&x_, &t_}) {
    if (a->count < 2 || !std::isfinite(a->min) || !std::isfinite(a->max) || !(a->min < a->max)) {
      throw Error(ErrorKind::InvalidParameter,
                  "grid axes need finite bounds with min < max and count >= 2");
    }
  }
}

Event Grid2D::at(std::size_t row, std::size_t col) const {
  return {x_.at(row), t_.at(col)};
}

std::vector<Event> Grid2D::points() const {
  std::vector<Event> out;
  out.reserve(size());
  for (std::size_t i = 0; i < x_.count; ++i) {
    for (std::size_t j = 0; j < t_.count; ++j) out.push_back(at(i, j));
  }
  return out;
}

namespace {

void require_checkable(const SystemParams& system, double fd_step) {
  if (!is_canonical_hyperbolic(system) && !is_canonical_elliptic(system)) {
    throw Error(ErrorKind::InvalidParameter,
                "residual checks need the canonical elliptic or hyperbolic system");
  }
  if (!(fd_step > 0.0) || !std::isfinite(fd_step)) {
    throw Error(ErrorKind::InvalidParameter, "fd_step must be positive and finite");
  }
}

std::optional<HyperNumber> try_evaluate(const AnalyticFunction& f, double x, double t,
                                        const SystemParams& system,
                                        const DomainTolerances& tol) {
  const HyperNumber w{x, t, system};
  if (!f.in_domain(w, tol)) return std::nullopt;
  auto value = f.evaluate(w, tol);
  if (!finite(value)) return std::nullopt;
  return value;
}

// Stencil values in the order centre, x+h, x-h, t+h, t-h.
struct Stencil {
  HyperNumber c, xp, xm, tp, tm;
};

std::optional<Stencil> sample_stencil(const AnalyticFunction& f, const Event& p, double h,
                                      const SystemParams& system,
                                      const DomainTolerances& tol) {
  auto c = try_evaluate(f, p.x, p.t, system, tol);
  if (!c) return std::nullopt;
  auto xp = try_evaluate(f, p.x + h, p.t, system, tol);
  if (!xp) return std::nullopt;
  auto xm = try_evaluate(f, p.x - h, p.t, system, tol);
  if (!xm) return std::nullopt;
  auto tp = try_evaluate(f, p.x, p.t + h, system, tol);
  if (!tp) return std::nullopt;
  auto tm = try_evaluate(f, p.x, p.t - h, system, tol);
  if (!tm) return std::nullopt;
  return Stencil{*c, *xp, *xm, *tp, *tm};
}

}  // namespace

ResidualReport cr_residual(const AnalyticFunction& f, const Grid2D& grid, double fd_step,
                           const SystemParams& system, const DomainTolerances& tol) {
  require_checkable(system, fd_step);
  const double sign = system.alpha();
  const double h = fd_step;
  ResidualReport report;
  report.fd_step = fd_step;
  for (const auto& p : grid.points()) {
    const auto s = sample_stencil(f, p, h, system, tol);
    if (!s) {
      ++report.points_skipped_out_of_domain;
      continue;
    }
    const double u_x = (s->xp.x - s->xm.x) / (2.0 * h);
    const double v_x = (s->xp.y - s->xm.y) / (2.0 * h);
    const double u_t = (s->tp.x - s->tm.x) / (2.0 * h);
    const double v_t = (s->tp.y - s->tm.y) / (2.0 * h);
    const double r = std::max(std::abs(u_x - v_t), std::abs(u_t - sign * v_x));
    report.max_abs_cr_residual = std::max(report.max_abs_cr_residual, r);
    ++report.points_evaluated;
  }
  return report;
}

ResidualReport wave_residual(const AnalyticFunction& f, const Grid2D& grid, double fd_step,
                             const SystemParams& system, const DomainTolerances& tol) {
  require_checkable(system, fd_step);
  const double sign = system.alpha();
  const double h2 = fd_step * fd_step;
  ResidualReport report;
  report.fd_step = fd_step;
  for (const auto& p : grid.points()) {
    const auto s = sample_stencil(f, p, fd_step, system, tol);
    if (!s) {
      ++report.points_skipped_out_of_domain;
      continue;
    }
    const double u_xx = (s->xp.x - 2.0 * s->c.x + s->xm.x) / h2;
    const double u_tt = (s->tp.x - 2.0 * s->c.x + s->tm.x) / h2;
    const double v_xx = (s->xp.y - 2.0 * s->c.y + s->xm.y) / h2;
    const double v_tt = (s->tp.y - 2.0 * s->c.y + s->tm.y) / h2;
    const double r = std::max(std::abs(u_xx - sign * u_tt), std::abs(v_xx - sign * v_tt));
    report.max_abs_wave_residual = std::max(report.max_abs_wave_residual, r);
    ++report.points_evaluated;
  }
  return report;
}

std::vector<MappedPoint> map_grid(const AnalyticFunction& f, std::span<const Event> points,
                                  const SystemParams& system, const DomainTolerances& tol) {
  constexpr double nan = std::numeric_limits<double>::quiet_NaN();
  std::vector<MappedPoint> out;
  out.reserve(points.size());
  for (const auto& p : points) {
    const auto value = try_evaluate(f, p.x, p.t, system, tol);
    if (value) {
      out.push_back({p.x, p.t, value->x, value->y, true});
    } else {
      out.push_back({p.x, p.t, nan, nan, false});
    }
  }
  return out;
}

std::vector<MappedPoint> map_grid(const AnalyticFunction& f, const Grid2D& grid,
                                  const SystemParams& system, const DomainTolerances& tol) {
  const auto points = grid.points();
  return map_grid(f, std::span<const Event>(points), system, tol);
}

}  // namespace hyper
