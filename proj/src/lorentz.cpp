#include "hyper/lorentz.hpp"

#include <cmath>
#include <sstream>

#include "hyper/error.hpp"

namespace hyper {

namespace {

void require_subluminal(double v) {
  if (!(std::abs(v) < 1.0)) {
    std::ostringstream msg;
    msg << "velocity " << v << " is not strictly inside (-1, 1)";
    throw Error(ErrorKind::Superluminal, msg.str());
  }
}

}  // namespace

Boost Boost::from_rapidity(double rapidity) {
  if (!std::isfinite(rapidity)) {
    throw Error(ErrorKind::InvalidParameter, "rapidity must be finite");
  }
  Boost b;
  b.rapidity_ = rapidity;
  b.a_r_ = std::cosh(rapidity);
  b.a_h_ = std::sinh(rapidity);
  if (!std::isfinite(b.a_r_)) {
    throw Error(ErrorKind::Overflow, "rapidity too large to represent cosh/sinh");
  }
  return b;
}

Boost Boost::from_velocity(double v) {
  require_subluminal(v);
  return from_rapidity(std::atanh(v));
}

HyperNumber Boost::as_number() const {
  return {a_r_, a_h_, SystemParams::hyperbolic()};
}

HyperNumber to_number(const Event& e) { return {e.x, e.t, SystemParams::hyperbolic()}; }

Event to_event(const HyperNumber& w) {
  if (!(w.system == SystemParams::hyperbolic())) {
    throw Error(ErrorKind::SystemMismatch, "events live in the canonical hyperbolic system");
  }
  return {w.x, w.y};
}

Event apply(const Boost& b, const Event& e) { return to_event(mul(b.as_number(), to_number(e))); }

Boost compose(const Boost& first, const Boost& second) {
  return Boost::from_rapidity(first.rapidity() + second.rapidity());
}

double velocity_addition(double v1, double v2) {
  require_subluminal(v1);
  require_subluminal(v2);
  const double v = (v1 + v2) / (1.0 + v1 * v2);
  if (std::abs(v) >= 1.0) return std::copysign(std::nextafter(1.0, 0.0), v);
  return v;
}

double interval(const Event& e) { return (e.x - e.t) * (e.x + e.t); }

Event scale_then_boost(double rho, double rapidity, const Event& e) {
  if (!std::isfinite(rho)) throw Error(ErrorKind::InvalidParameter, "rho must be finite");
  const Event boosted = apply(Boost::from_rapidity(rapidity), e);
  const double k = std::exp(rho);
  return {k * boosted.x, k * boosted.t};
}

}  // namespace hyper
