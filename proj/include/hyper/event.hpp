#pragma once

namespace hyper {

/// A point of the (x, t) plane in c = 1 units. Grids over elliptic systems
/// reuse the same type with t holding the second spatial coordinate.
struct Event {
  double x = 0.0;
  double t = 0.0;

  bool operator==(const Event&) const = default;
};

}  // namespace hyper
