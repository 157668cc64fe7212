#include "hyper/algebra.hpp"

#include <cmath>
#include <sstream>

#include "hyper/error.hpp"

namespace hyper {

namespace {

void require_same_system(const HyperNumber& a, const HyperNumber& b) {
  if (!(a.system == b.system)) {
    std::ostringstream msg;
    msg << "operands belong to different systems: (" << a.system.alpha() << ", "
        << a.system.beta() << ") vs (" << b.system.alpha() << ", "
        << b.system.beta() << ")";
    throw Error(ErrorKind::SystemMismatch, msg.str());
  }
}

}  // namespace

std::string_view to_string(SystemClass c) {
  switch (c) {
    case SystemClass::Elliptic: return "elliptic";
    case SystemClass::Parabolic: return "parabolic";
    case SystemClass::Hyperbolic: return "hyperbolic";
  }
  return "unknown";
}

SystemParams::SystemParams(double alpha, double beta)
    : alpha_(alpha), beta_(beta), delta_(beta * beta + 4.0 * alpha) {
  if (!std::isfinite(alpha) || !std::isfinite(beta) || !std::isfinite(delta_)) {
    throw Error(ErrorKind::InvalidParameter,
                "structure constants must be finite");
  }
}

SystemClass classify(const SystemParams& p, double class_epsilon) {
  const double d = p.delta();
  if (std::abs(d) <= class_epsilon) return SystemClass::Parabolic;
  return d < 0.0 ? SystemClass::Elliptic : SystemClass::Hyperbolic;
}

HyperNumber add(const HyperNumber& a, const HyperNumber& b) {
  require_same_system(a, b);
  return {a.x + b.x, a.y + b.y, a.system};
}

HyperNumber sub(const HyperNumber& a, const HyperNumber& b) {
  require_same_system(a, b);
  return {a.x - b.x, a.y - b.y, a.system};
}

HyperNumber neg(const HyperNumber& a) { return {-a.x, -a.y, a.system}; }

HyperNumber scale(const HyperNumber& a, double s) {
  return {a.x * s, a.y * s, a.system};
}

HyperNumber mul(const HyperNumber& a, const HyperNumber& b) {
  require_same_system(a, b);
  const double alpha = a.system.alpha();
  const double beta = a.system.beta();
  const double yy = a.y * b.y;
  return {a.x * b.x + alpha * yy, a.x * b.y + a.y * b.x + beta * yy, a.system};
}

HyperNumber conjugate(const HyperNumber& w) {
  return {w.x + w.system.beta() * w.y, -w.y, w.system};
}

double norm(const HyperNumber& w) {
  return w.x * w.x + w.system.beta() * w.x * w.y - w.system.alpha() * w.y * w.y;
}

HyperNumber div(const HyperNumber& a, const HyperNumber& b,
                double divisor_epsilon) {
  require_same_system(a, b);
  const double n = norm(b);
  const double magnitude = 1.0 + std::abs(b.x) + std::abs(b.y);
  if (!(std::abs(n) > divisor_epsilon * magnitude * magnitude)) {
    std::ostringstream msg;
    msg << "divisor (" << b.x << ", " << b.y << ") has norm " << n
        << " and is not invertible";
    throw Error(ErrorKind::ZeroDivisor, msg.str());
  }
  return scale(mul(a, conjugate(b)), 1.0 / n);
}

HyperNumber LinearMap::apply(const HyperNumber& w) const {
  if (!(w.system == source)) {
    throw Error(ErrorKind::SystemMismatch,
                "linear map applied to a number outside its source system");
  }
  return {xx * w.x + xy * w.y, yx * w.x + yy * w.y, target};
}

LinearMap LinearMap::inverse() const {
  const double det = xx * yy - xy * yx;
  if (det == 0.0 || !std::isfinite(det)) {
    throw Error(ErrorKind::InvalidParameter, "linear map is singular");
  }
  return {yy / det, -xy / det, -yx / det, xx / det, target, source};
}

CanonicalForm canonicalize(const SystemParams& p, double class_epsilon) {
  const double beta = p.beta();
  // w = x + u·y; with u = (s·u' + β)/2 (or u' + β/2 when parabolic):
  //   x' = x + β·y/2,   y' = s·y/2   (or y' = y).
  switch (classify(p, class_epsilon)) {
    case SystemClass::Parabolic: {
      const auto target = SystemParams::parabolic();
      return {target, LinearMap{1.0, beta / 2.0, 0.0, 1.0, p, target}};
    }
    case SystemClass::Elliptic:
    case SystemClass::Hyperbolic: {
      const auto target = p.delta() < 0.0 ? SystemParams::elliptic()
                                          : SystemParams::hyperbolic();
      const double s = std::sqrt(std::abs(p.delta()));
      return {target, LinearMap{1.0, beta / 2.0, 0.0, s / 2.0, p, target}};
    }
  }
  throw Error(ErrorKind::InvalidParameter, "unreachable system class");
}

}  // namespace hyper
