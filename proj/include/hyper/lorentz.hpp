#pragma once

/**
 * @file lorentz.hpp
 * @brief Lorentz boosts as hyperbolic rotations, c = 1.
 *
 * An event x + h·t multiplied by the unit-modulus constant
 * cosh θ + h·sinh θ gives
 *
 *   x' = x cosh θ + t sinh θ
 *   t' = x sinh θ + t cosh θ
 *
 * so boosts compose by adding rapidities and leave x² − t² unchanged.
 */

#include "hyper/algebra.hpp"
#include "hyper/event.hpp"

namespace hyper {

/// Proper orthochronous boost: a_r = cosh θ > 0, a_h = sinh θ.
class Boost {
 public:
  Boost() = default;

  static Boost from_rapidity(double rapidity);
  /// Throws Superluminal when |v| ≥ 1 (or v is NaN).
  static Boost from_velocity(double v);
  static Boost identity() { return {}; }

  double rapidity() const noexcept { return rapidity_; }
  double a_r() const noexcept { return a_r_; }
  double a_h() const noexcept { return a_h_; }
  double velocity() const noexcept { return a_h_ / a_r_; }
  Boost inverse() const { return from_rapidity(-rapidity_); }

  /// a_r + h·a_h in the canonical hyperbolic system.
  HyperNumber as_number() const;

 private:
  double rapidity_ = 0.0;
  double a_r_ = 1.0;
  double a_h_ = 0.0;
};

HyperNumber to_number(const Event& e);
Event to_event(const HyperNumber& w);

/// Hyperbolic multiplication (a_r + h a_h)(x + h t).
Event apply(const Boost& b, const Event& e);

/// Rapidities add.
Boost compose(const Boost& first, const Boost& second);

/// (v1 + v2)/(1 + v1 v2). The result stays strictly inside (−1, 1) even when
/// rounding would land on ±1.
double velocity_addition(double v1, double v2);

/// x² − t², evaluated as (x − t)(x + t) so null events give exactly 0.
double interval(const Event& e);

/// Multiplication by e^ρ (cosh θ + h sinh θ): a boost followed by a
/// uniform dilation by e^ρ. With ρ = 0 it reduces to apply().
Event scale_then_boost(double rho, double rapidity, const Event& e);

}  // namespace hyper
