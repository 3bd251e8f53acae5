#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "scnlb/energy.hpp"

using namespace scnlb;
using namespace scnlb::energy;

namespace {

BaseStation macro_bs() {
  BaseStation bs;
  bs.kind = BsKind::Macro;
  bs.static_power_w = 750.0;
  bs.load_power_coeff_w = 500.0;
  return bs;
}

BaseStation small_bs() {
  BaseStation bs;
  bs.kind = BsKind::Small;
  bs.static_power_w = 37.0;
  bs.load_power_coeff_w = 4.0;
  return bs;
}

}  // namespace

TEST_CASE("power model closed forms") {
  CHECK(bs_power_w(0.0, macro_bs()) == 750.0);
  CHECK(bs_power_w(1.0, macro_bs()) == doctest::Approx(1250.0).epsilon(1e-12));
  CHECK(bs_power_w(0.5, small_bs()) == doctest::Approx(39.0).epsilon(1e-12));
}

TEST_CASE("power is affine in load with slope beta") {
  // The difference quotient of an affine function is exact at any step.
  BaseStation bs = macro_bs();
  for (double h : {0.25, 0.05}) {
    for (double load : {0.3, 0.45, 0.7}) {
      double slope = (bs_power_w(load + h, bs) - bs_power_w(load - h, bs)) / (2 * h);
      CHECK(std::abs(slope - 500.0) / 500.0 <= 1e-12);
    }
  }
}

TEST_CASE("brown power closed forms") {
  CHECK(brown_power_w(750.0, 1000.0) == 0.0);
  CHECK(brown_power_w(1250.0, 1000.0) == doctest::Approx(250.0).epsilon(1e-12));
  CHECK(brown_power_w(123.0, 0.0) == 123.0);
}

TEST_CASE("green traffic capacity closed forms") {
  BaseStation bs = macro_bs();
  const double eps = 1e-3;

  bs.green_supply_w = 750.0;  // exactly the static draw
  CHECK(green_capacity(bs, eps) == 0.0);

  bs.green_supply_w = 1000.0;
  CHECK(green_capacity(bs, eps) == doctest::Approx(0.5).epsilon(1e-12));

  bs.green_supply_w = 10.0 * (750.0 + 500.0);
  CHECK(green_capacity(bs, eps) == 1.0 - eps);

  bs.green_supply_w = 100.0;  // below static: clamped at zero
  CHECK(green_capacity(bs, eps) == 0.0);
}

TEST_CASE("latency weight closed forms") {
  CHECK(latency_weight(0.7, 0.2, 0.0) == 1.0);
  CHECK(latency_weight(0.35, 0.35, 5.0) == 1.0);
  CHECK(latency_weight(0.7, 0.2, 2.0) == doctest::Approx(std::exp(1.0)).epsilon(1e-12));
}

TEST_CASE("latency weight sides with the green headroom") {
  for (double kappa : {0.5, 2.0, 7.0}) {
    CHECK(latency_weight(0.6, 0.4, kappa) > 1.0);
    CHECK(latency_weight(0.3, 0.4, kappa) < 1.0);
    CHECK(latency_weight(0.4, 0.4, kappa) == 1.0);
  }
  // kappa = 0 never weights
  CHECK(latency_weight(0.9, 0.0, 0.0) == 1.0);
}

TEST_CASE("latency weight is monotone in load and kappa") {
  double prev = latency_weight(0.41, 0.4, 2.0);
  for (double load : {0.5, 0.6, 0.8, 0.95}) {
    double w = latency_weight(load, 0.4, 2.0);
    CHECK(w > prev);
    prev = w;
  }
  prev = latency_weight(0.8, 0.4, 0.5);
  for (double kappa : {1.0, 2.0, 4.0, 7.0}) {
    double w = latency_weight(0.8, 0.4, kappa);
    CHECK(w > prev);
    prev = w;
  }
}

TEST_CASE("loads within green capacity draw no brown power") {
  BaseStation bs = macro_bs();
  bs.green_supply_w = 1000.0;
  const double eps = 1e-3;
  double cap = green_capacity(bs, eps);
  REQUIRE(cap < 1.0 - eps);  // un-clamped regime
  for (double frac : {0.0, 0.25, 0.5, 0.75, 1.0}) {
    double load = frac * cap;
    CHECK(brown_power_w(bs_power_w(load, bs), bs.green_supply_w) == 0.0);
  }
  CHECK(brown_power_w(bs_power_w(cap + 0.05, bs), bs.green_supply_w) > 0.0);
}
