#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>

#include "horoflow/mane.hpp"
#include "horoflow/mechanics.hpp"
#include "support.hpp"

using namespace horoflow;

namespace {

// Disk-model radius of the circle with Euclidean center (0, y0), r = ratio*y0.
double disk_radius(double ratio) {
  return ratio / (1.0 + std::sqrt((1.0 - ratio) * (1.0 + ratio)));
}

// Closed-form time average of the Lagrangian over one traversal: the kinetic
// part contributes v^2/2, the magnetic part the signed enclosed-area rate.
double analytic_average(double ratio, double speed, int orientation) {
  return 0.5 * speed * speed + orientation * speed * disk_radius(ratio);
}

}  // namespace

TEST_CASE("circle curves pass through the circle top with the stated velocity") {
  for (const double y0 : {1.0, 4.0})
    for (const double ratio : {0.3, 0.9, 0.9999})
      for (const int orientation : {-1, 1}) {
        const ClosedCurve c = circle_curve(y0, ratio, 1.3, orientation);
        const TangentState s = c.at(0.0);
        const double top = y0 * (1.0 + ratio);
        CHECK(std::fabs(s.q.x) <= 1e-12 * y0);
        CHECK(testutil::close_rel(s.q.y, top, 1e-11));
        CHECK(testutil::close_rel(s.v.vx, -orientation * 1.3 * top, 1e-11));
        CHECK(std::fabs(s.v.vy) <= 1e-10 * top);
      }
}

TEST_CASE("circle curves close up after one period") {
  for (const double ratio : {0.3, 0.9999}) {
    const ClosedCurve c = circle_curve(2.0, ratio, 0.7, 1);
    const TangentState a = c.at(0.0);
    const TangentState b = c.at(c.period);
    CHECK(std::fabs(a.q.x - b.q.x) <= 1e-9);
    CHECK(std::fabs(a.q.y - b.q.y) <= 1e-9);
    CHECK(std::fabs(a.v.vx - b.v.vx) <= 1e-9);
    CHECK(std::fabs(a.v.vy - b.v.vy) <= 1e-9);
  }
}

TEST_CASE("circle curves move at constant hyperbolic speed") {
  for (const double ratio : {0.3, 0.9, 0.9999})
    for (const double v : {0.5, 1.0}) {
      const ClosedCurve c = circle_curve(1.0, ratio, v, -1);
      for (int i = 0; i <= 64; ++i) {
        const TangentState s = c.at(c.period * i / 64.0);
        const double speed = std::hypot(s.v.vx, s.v.vy) / s.q.y;
        CHECK(std::fabs(speed - v) <= 1e-10 * v);
      }
    }
}

TEST_CASE("circle curves stay on their Euclidean circle") {
  const double y0 = 2.0, ratio = 0.9;
  const ClosedCurve c = circle_curve(y0, ratio, 1.0, 1);
  for (int i = 0; i < 50; ++i) {
    const TangentState s = c.at(c.period * i / 50.0);
    CHECK(std::fabs(std::hypot(s.q.x, s.q.y - y0) - ratio * y0) <= 1e-10);
  }
}

TEST_CASE("quadrature reproduces the closed-form average action") {
  for (const double y0 : {1.0, 4.0})
    for (const double ratio : {0.3, 0.9})
      for (const double v : {0.5, 1.2})
        for (const int orientation : {-1, 1}) {
          const ClosedCurve c = circle_curve(y0, ratio, v, orientation);
          const double got = average_action(c, 2048);
          const double want = analytic_average(ratio, v, orientation);
          INFO("curve: ", c.label);
          CHECK(std::fabs(got - want) <= 1e-10);
        }
}

TEST_CASE("opposite orientations average to the pure kinetic term") {
  // The magnetic contribution is odd under orientation reversal.
  for (const double v : {0.5, 1.2}) {
    const double plus = average_action(circle_curve(2.0, 0.8, v, 1), 1024);
    const double minus = average_action(circle_curve(2.0, 0.8, v, -1), 1024);
    CHECK(std::fabs(plus + minus - v * v) <= 1e-12);
  }
}

TEST_CASE("tiny slow clockwise circle: pinned average action") {
  // ratio 0.01, v = 0.5, clockwise: 1/2 v^2 - v R with R ~ 0.005.
  const double got = average_action(circle_curve(1.0, 0.01, 0.5, -1), 2048);
  CHECK(got == doctest::Approx(0.1225).epsilon(1e-5));
  CHECK(std::fabs(got - analytic_average(0.01, 0.5, -1)) <= 1e-12);
}

TEST_CASE("near-tangent circles push the lower bound above 0.48") {
  CircleFamilyParams params;
  params.center_heights = {1.0};
  params.radius_ratios = {0.9999};
  params.speeds = {1.0};
  const std::vector<ClosedCurve> curves = circle_family(params);
  CHECK(curves.size() == 2);
  const double lb = lower_bound(curves, 2048, Exec::serial);
  CHECK(lb >= 0.48);
  // Aliasing at this near-boundary ratio limits 2048-interval Simpson to ~1e-8.
  CHECK(std::fabs(lb - (-analytic_average(0.9999, 1.0, -1))) <= 1e-7);
  CHECK(lb <= 0.5);
}

TEST_CASE("the lower bound improves monotonically as circles hug the boundary") {
  double prev = -1.0;
  for (const double ratio : {0.5, 0.9, 0.99, 0.999}) {
    const double lb =
        lower_bound({circle_curve(1.0, ratio, 1.0, -1)}, 2048, Exec::serial);
    CHECK(lb > prev);
    prev = lb;
  }
  CHECK(prev < 0.5);
}

TEST_CASE("growing the curve family never lowers the bound") {
  // The pool is deliberately unsorted so the running max jumps at irregular
  // prefixes while weaker curves leave it untouched.
  std::vector<ClosedCurve> pool;
  for (const double ratio : {0.9, 0.3, 0.99, 0.1, 0.7})
    for (const double v : {0.5, 1.0})
      pool.push_back(circle_curve(1.0, ratio, v, -1));
  std::vector<ClosedCurve> family;
  double prev = -std::numeric_limits<double>::infinity();
  for (const ClosedCurve& curve : pool) {
    family.push_back(curve);
    const double lb = lower_bound(family, 512, Exec::serial);
    CHECK(lb >= prev);
    CHECK(lb >= -average_action(curve, 512));
    prev = lb;
  }
  CHECK(prev == lower_bound(pool, 512, Exec::serial));
}

TEST_CASE("upper bound: exact solutions give a constant integrand at 1/2") {
  const GridSpec grid = standard_grid();

  const SupStats flat = upper_bound_stats(HJSolution::constant(), grid, Exec::serial);
  CHECK(flat.sup == 0.5);
  CHECK(flat.mean == 0.5);
  CHECK(flat.variance == 0.0);

  for (const double a : tangency_set()) {
    const SupStats s = upper_bound_stats(
        HJSolution::magnetic_arctan(TangencyPoint::at(a)), grid, Exec::serial);
    INFO("a = ", a);
    CHECK(std::fabs(s.sup - 0.5) <= 1e-9);
    CHECK(std::fabs(s.mean - 0.5) <= 1e-9);
    CHECK(s.variance <= 1e-18);
  }
  const SupStats inf = upper_bound_stats(
      HJSolution::magnetic_arctan(TangencyPoint::infinity()), grid, Exec::serial);
  CHECK(std::fabs(inf.sup - 0.5) <= 1e-9);
}

TEST_CASE("upper bound: the witness scores its predicted worst value, exactly") {
  // H(q, dx) = y^2/2 - y + 1/2 peaks at the top row y = 10: 40.5.
  CHECK(upper_bound(HJSolution::adhoc_x(), standard_grid(), Exec::serial) == 40.5);
}

TEST_CASE("the sandwich closes to within two percent around one half") {
  CircleFamilyParams params;
  const CriticalEstimate est = estimate_critical_value(
      HJSolution::magnetic_arctan(TangencyPoint::at(0.0)), standard_grid(), params,
      2048, Exec::serial);
  CHECK(est.curve_count == 1080);
  CHECK(est.simpson_intervals == 2048);
  CHECK(std::fabs(est.upper - 0.5) <= 1e-9);
  CHECK(est.lower >= 0.48);
  CHECK(est.upper - est.lower < 0.02);
  CHECK(est.upper >= est.lower);
  CHECK(est.candidate == "magnetic-arctan(a=0)");
  CHECK(est.curve_family ==
        "constant-hyperbolic-speed circles: 3 heights x 12 ratios x 15 speeds x 2 "
        "orientations");
}

TEST_CASE("input validation fails loudly") {
  CHECK_THROWS_AS(circle_curve(0.0, 0.5, 1.0, 1), std::invalid_argument);
  CHECK_THROWS_AS(circle_curve(1.0, 0.0, 1.0, 1), std::invalid_argument);
  CHECK_THROWS_AS(circle_curve(1.0, 1.0, 1.0, 1), std::invalid_argument);
  CHECK_THROWS_AS(circle_curve(1.0, 0.5, 0.0, 1), std::invalid_argument);
  CHECK_THROWS_AS(circle_curve(1.0, 0.5, 1.0, 2), std::invalid_argument);

  const ClosedCurve good = circle_curve(1.0, 0.5, 1.0, 1);
  CHECK(good.period > 0.0);
  CHECK_THROWS_AS(average_action(good, 3), std::invalid_argument);
  CHECK_THROWS_AS(average_action(good, 0), std::invalid_argument);
  CHECK_THROWS_AS(average_action(ClosedCurve{}, 2), std::invalid_argument);
  CHECK_THROWS_AS(lower_bound({}, 512, Exec::serial), std::invalid_argument);
}
