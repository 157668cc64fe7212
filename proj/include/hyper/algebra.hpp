#pragma once

/**
 * @file algebra.hpp
 * @brief Two-dimensional hypercomplex numbers x + u·y with u² = α + u·β.
 *
 * The pair (α, β) fixes the multiplication table. The sign of the
 * discriminant Δ = β² + 4α splits every such system into one of three
 * classes, each linearly equivalent to a canonical representative:
 *
 *   Δ < 0  elliptic    u² = −1   (ordinary complex numbers, u ≡ i)
 *   Δ = 0  parabolic   u² =  0
 *   Δ > 0  hyperbolic  u² = +1   (split-complex numbers,   u ≡ h)
 *
 * All values are immutable and every operation is a pure function.
 */

#include <string_view>

namespace hyper {

inline constexpr double kClassEpsilon = 1e-12;
inline constexpr double kDivisorEpsilon = 1e-12;

enum class SystemClass { Elliptic, Parabolic, Hyperbolic };

std::string_view to_string(SystemClass c);

/// Structure constants of a 2D system. Construction rejects non-finite input.
class SystemParams {
 public:
  SystemParams(double alpha, double beta);

  static SystemParams elliptic() { return {-1.0, 0.0}; }
  static SystemParams parabolic() { return {0.0, 0.0}; }
  static SystemParams hyperbolic() { return {1.0, 0.0}; }

  double alpha() const noexcept { return alpha_; }
  double beta() const noexcept { return beta_; }
  double delta() const noexcept { return delta_; }

  bool operator==(const SystemParams& other) const noexcept {
    return alpha_ == other.alpha_ && beta_ == other.beta_;
  }

 private:
  double alpha_;
  double beta_;
  double delta_;
};

SystemClass classify(const SystemParams& p, double class_epsilon = kClassEpsilon);

/// x·1 + y·u in a given system.
struct HyperNumber {
  double x = 0.0;
  double y = 0.0;
  SystemParams system = SystemParams::hyperbolic();

  bool operator==(const HyperNumber&) const = default;
};

// Binary operations throw ErrorKind::SystemMismatch when the operands
// belong to different systems.
HyperNumber add(const HyperNumber& a, const HyperNumber& b);
HyperNumber sub(const HyperNumber& a, const HyperNumber& b);
HyperNumber neg(const HyperNumber& a);
HyperNumber mul(const HyperNumber& a, const HyperNumber& b);
HyperNumber scale(const HyperNumber& a, double s);

/// x + β·y − u·y, the unique conjugate for which w·w̄ is real.
HyperNumber conjugate(const HyperNumber& w);

/// x² + β·x·y − α·y². Indefinite for hyperbolic systems.
double norm(const HyperNumber& w);

/// Rejects divisors with |norm(b)| ≤ divisor_epsilon·(1 + |b.x| + |b.y|)²
/// as zero divisors.
HyperNumber div(const HyperNumber& a, const HyperNumber& b,
                double divisor_epsilon = kDivisorEpsilon);

inline HyperNumber operator+(const HyperNumber& a, const HyperNumber& b) { return add(a, b); }
inline HyperNumber operator-(const HyperNumber& a, const HyperNumber& b) { return sub(a, b); }
inline HyperNumber operator-(const HyperNumber& a) { return neg(a); }
inline HyperNumber operator*(const HyperNumber& a, const HyperNumber& b) { return mul(a, b); }
inline HyperNumber operator/(const HyperNumber& a, const HyperNumber& b) { return div(a, b); }

/// Invertible linear change of components between two systems:
///   [x']   [xx  xy] [x]
///   [y'] = [yx  yy] [y]
struct LinearMap {
  double xx = 1.0, xy = 0.0;
  double yx = 0.0, yy = 1.0;
  SystemParams source = SystemParams::hyperbolic();
  SystemParams target = SystemParams::hyperbolic();

  /// Throws SystemMismatch if w is not in the source system.
  HyperNumber apply(const HyperNumber& w) const;
  LinearMap inverse() const;
};

struct CanonicalForm {
  SystemParams canonical;
  LinearMap map;
};

/// Maps p onto its canonical representative through the substitution
/// u' = (2u − β)/√|Δ| (Δ ≠ 0) or u' = u − β/2 (parabolic). The returned
/// map is a ring homomorphism.
CanonicalForm canonicalize(const SystemParams& p,
                           double class_epsilon = kClassEpsilon);

}  // namespace hyper
