#include <doctest.h>

#include <cmath>

#include "hyper/error.hpp"
#include "hyper/lorentz.hpp"
#include "oracles.hpp"

using namespace hyper;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected hyper::Error");
  return ErrorKind::Domain;
}

}  // namespace

TEST_CASE("boost_from_velocity") {
  const auto id = Boost::from_velocity(0.0);
  CHECK(id.rapidity() == 0.0);
  CHECK(id.a_r() == 1.0);
  CHECK(id.a_h() == 0.0);

  // γ = 1/√(1 − 0.36) = 1.25, γv = 0.75.
  const auto b = Boost::from_velocity(0.6);
  CHECK(b.rapidity() == doctest::Approx(std::atanh(0.6)).epsilon(1e-15));
  CHECK(std::abs(b.a_r() - 1.25) <= 1e-15);
  CHECK(std::abs(b.a_h() - 0.75) <= 1e-15);
  CHECK(std::abs(b.velocity() - 0.6) <= 1e-15);
  CHECK(std::abs(b.a_r() * b.a_r() - b.a_h() * b.a_h() - 1.0) <= 1e-12);

  CHECK(kind_of([] { Boost::from_velocity(1.0); }) == ErrorKind::Superluminal);
  CHECK(kind_of([] { Boost::from_velocity(-1.0); }) == ErrorKind::Superluminal);
  CHECK(kind_of([] { Boost::from_velocity(1.5); }) == ErrorKind::Superluminal);
  CHECK(kind_of([] { Boost::from_velocity(NAN); }) == ErrorKind::Superluminal);
  CHECK(kind_of([] { Boost::from_rapidity(INFINITY); }) == ErrorKind::InvalidParameter);
  CHECK(kind_of([] { Boost::from_rapidity(1000.0); }) == ErrorKind::Overflow);
}

TEST_CASE("boost invariants hold over random rapidities") {
  oracle::Rng rng(41);
  for (int i = 0; i < 1000; ++i) {
    const auto b = Boost::from_rapidity(rng.uniform(-3, 3));
    CHECK(b.a_r() > 0.0);
    CHECK(std::abs((b.a_r() - b.a_h()) * (b.a_r() + b.a_h()) - 1.0) <= 1e-12 * b.a_r() * b.a_r());
  }
}

TEST_CASE("apply examples") {
  const Event e{3, -2};
  CHECK(apply(Boost::identity(), e) == e);

  const auto r = apply(Boost::from_rapidity(0.5), {1, 0});
  CHECK(r.x == doctest::Approx(std::cosh(0.5)).epsilon(1e-15));
  CHECK(r.t == doctest::Approx(std::sinh(0.5)).epsilon(1e-15));

  const auto n = apply(Boost::from_rapidity(0.5), {1, 1});
  CHECK(std::abs(n.x - std::exp(0.5)) <= 1e-15 * std::exp(0.5));
  CHECK(std::abs(n.t - std::exp(0.5)) <= 1e-15 * std::exp(0.5));
}

TEST_CASE("apply through the algebra matches the explicit boost formula") {
  oracle::Rng rng(42);
  for (int i = 0; i < 1000; ++i) {
    const double theta = rng.uniform(-3, 3);
    const Event e{rng.uniform(-10, 10), rng.uniform(-10, 10)};
    const auto via_mul = apply(Boost::from_rapidity(theta), e);
    const auto direct = oracle::boost(theta, e);
    const double scale = std::max(1.0, std::abs(direct.x) + std::abs(direct.t));
    CHECK(std::abs(via_mul.x - direct.x) <= 1e-14 * scale);
    CHECK(std::abs(via_mul.t - direct.t) <= 1e-14 * scale);
  }
}

TEST_CASE("compose examples") {
  const auto b = Boost::from_rapidity(0.8);
  const auto bi = compose(b, Boost::identity());
  CHECK(bi.rapidity() == b.rapidity());
  CHECK(bi.a_r() == b.a_r());
  CHECK(bi.a_h() == b.a_h());

  const auto c = compose(Boost::from_rapidity(0.3), Boost::from_rapidity(0.7));
  CHECK(c.rapidity() == doctest::Approx(1.0).epsilon(1e-15));
  const auto product = mul(Boost::from_rapidity(0.3).as_number(), Boost::from_rapidity(0.7).as_number());
  CHECK(std::abs(product.x - c.a_r()) <= 1e-14);
  CHECK(std::abs(product.y - c.a_h()) <= 1e-14);

  oracle::Rng rng(43);
  for (int i = 0; i < 100; ++i) {
    const Event e{rng.uniform(-10, 10), rng.uniform(-10, 10)};
    const auto seq = apply(Boost::from_rapidity(0.7), apply(Boost::from_rapidity(0.3), e));
    const auto once = apply(c, e);
    const double scale = std::abs(seq.x) + std::abs(seq.t);
    CHECK(std::abs(seq.x - once.x) <= 1e-12 * scale);
    CHECK(std::abs(seq.t - once.t) <= 1e-12 * scale);
  }

  const auto back = compose(b, b.inverse());
  CHECK(back.rapidity() == 0.0);
  CHECK(back.a_r() == 1.0);
  CHECK(back.a_h() == 0.0);
}

TEST_CASE("composition is commutative and associative on rapidities") {
  oracle::Rng rng(44);
  for (int i = 0; i < 200; ++i) {
    const auto a = Boost::from_rapidity(rng.integer(-64, 64) / 32.0);
    const auto b = Boost::from_rapidity(rng.integer(-64, 64) / 32.0);
    const auto c = Boost::from_rapidity(rng.integer(-64, 64) / 32.0);
    CHECK(compose(a, b).rapidity() == compose(b, a).rapidity());
    CHECK(compose(compose(a, b), c).rapidity() == compose(a, compose(b, c)).rapidity());
  }
}

TEST_CASE("velocity_addition") {
  CHECK(velocity_addition(0.37, 0.0) == 0.37);
  CHECK(velocity_addition(0.5, 0.5) == 0.8);
  CHECK(std::abs(velocity_addition(0.9, 0.9) - 180.0 / 181.0) <= 1e-15);
  CHECK(velocity_addition(0.9, 0.9) < 1.0);

  // Cross-check through rapidities.
  const auto via_boost = compose(Boost::from_velocity(0.5), Boost::from_velocity(0.5)).velocity();
  CHECK(std::abs(via_boost - 0.8) <= 1e-15);

  // Closure, including inputs whose exact sum rounds to 1.
  const double near_one = std::nextafter(1.0, 0.0);
  CHECK(std::abs(velocity_addition(near_one, near_one)) < 1.0);
  CHECK(std::abs(velocity_addition(-near_one, -near_one)) < 1.0);
  oracle::Rng rng(45);
  for (int i = 0; i < 1000; ++i) {
    const double v1 = std::tanh(rng.uniform(-20, 20));
    const double v2 = std::tanh(rng.uniform(-20, 20));
    if (std::abs(v1) >= 1.0 || std::abs(v2) >= 1.0) continue;
    CHECK(std::abs(velocity_addition(v1, v2)) < 1.0);
  }

  CHECK(kind_of([] { velocity_addition(1.0, 0.2); }) == ErrorKind::Superluminal);
  CHECK(kind_of([] { velocity_addition(0.2, -1.2); }) == ErrorKind::Superluminal);
}

TEST_CASE("interval") {
  CHECK(interval({1, 1}) == 0.0);
  CHECK(interval({3, 2}) == 5.0);
  CHECK(interval({2, 3}) == -5.0);
  CHECK(interval({3, 2}) == norm(to_number({3, 2})));

  oracle::Rng rng(46);
  for (int i = 0; i < 1000; ++i) {
    const auto b = Boost::from_rapidity(rng.uniform(-3, 3));
    const Event e{rng.uniform(-10, 10), rng.uniform(-10, 10)};
    const double before = interval(e);
    CHECK(std::abs(interval(apply(b, e)) - before) <= 1e-10 * (1 + std::abs(before)));
  }
}

TEST_CASE("null cone is invariant") {
  oracle::Rng rng(47);
  for (int i = 0; i < 500; ++i) {
    const auto b = Boost::from_rapidity(rng.uniform(-3, 3));
    const double c = rng.uniform(-10, 10);
    const auto plus = apply(b, {c, c});
    const auto minus = apply(b, {c, -c});
    CHECK(std::abs(plus.x - plus.t) <= 1e-12 * std::abs(plus.x));
    CHECK(std::abs(minus.x + minus.t) <= 1e-12 * std::abs(minus.x));
  }
}

TEST_CASE("scale_then_boost") {
  const Event e{2, 1};
  const auto plain = scale_then_boost(0.0, 0.4, e);
  const auto boosted = apply(Boost::from_rapidity(0.4), e);
  CHECK(plain.x == boosted.x);
  CHECK(plain.t == boosted.t);

  // Multiplication by a = a_r + h a_h with √(a_r² − a_h²) = e^ρ.
  const double rho = std::log(3.0);
  const double theta = -0.6;
  const auto via_constant =
      mul(HyperNumber{3 * std::cosh(theta), 3 * std::sinh(theta), SystemParams::hyperbolic()},
          to_number(e));
  const auto r = scale_then_boost(rho, theta, e);
  CHECK(std::abs(r.x - via_constant.x) <= 1e-14 * std::abs(via_constant.x));
  CHECK(std::abs(r.t - via_constant.y) <= 1e-14 * std::abs(via_constant.x));
  CHECK(std::abs(interval(r) - 9 * interval(e)) <= 1e-12 * 9 * std::abs(interval(e)));
}

TEST_CASE("event conversion requires the hyperbolic system") {
  CHECK(to_event(HyperNumber{1, 2, SystemParams::hyperbolic()}) == Event{1, 2});
  CHECK(kind_of([] { to_event(HyperNumber{1, 2, SystemParams::elliptic()}); }) ==
        ErrorKind::SystemMismatch);
}
