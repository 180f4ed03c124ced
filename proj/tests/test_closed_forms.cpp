#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "horoflow/closed_forms.hpp"
#include "support.hpp"

using namespace horoflow;

namespace {

double vec_dist(const TangentVector& a, const TangentVector& b) {
  return std::hypot(a.vx - b.vx, a.vy - b.vy);
}

}  // namespace

TEST_CASE("horocycle curves: pinned points") {
  const TangentState s0 = horocycle(0, 1, 0);
  CHECK(s0.q.x == 0.0);
  CHECK(s0.q.y == 1.0);
  CHECK(s0.v.vx == 1.0);
  CHECK(s0.v.vy == 0.0);

  const TangentState s1 = horocycle(0, 1, 1);
  CHECK(s1.q.x == 0.5);
  CHECK(s1.q.y == 0.5);
  CHECK(s1.v.vx == 0.0);
  CHECK(s1.v.vy == -0.5);
}

TEST_CASE("geodesic curves: pinned points") {
  const TangentState g = geodesic_circle(0, 1, 0);
  CHECK(g.q.x == -0.5);
  CHECK(g.q.y == 0.5);
  CHECK(g.v.vx == 0.5);
  CHECK(g.v.vy == 0.0);

  const TangentState v = geodesic_vertical(2, 0.5, 1);
  CHECK(v.q.x == 2.0);
  CHECK(v.q.y == doctest::Approx(std::exp(0.5)).epsilon(1e-15));
  CHECK(v.v.vx == 0.0);
  CHECK(v.v.vy == v.q.y);

  const TangentState w = geodesic_vertical(2, 0.5, -1);
  CHECK(w.q.y == doctest::Approx(std::exp(-0.5)).epsilon(1e-15));
  CHECK(w.v.vy == -w.q.y);
}

TEST_CASE("polar curves: pinned points and leaf membership") {
  const TangentState h = polar_horocycle(1, std::numbers::pi / 2);
  CHECK(h.q.x == doctest::Approx(-1.0).epsilon(1e-15));
  CHECK(h.q.y == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(std::fabs(h.v.vx) <= 1e-15);
  CHECK(h.v.vy == doctest::Approx(1.0).epsilon(1e-15));
  // Lies on the circle of radius 1 tangent to the boundary at the origin.
  CHECK(std::fabs(h.q.x * h.q.x + (h.q.y - 1) * (h.q.y - 1) - 1.0) <= 1e-14);

  const TangentState g = polar_geodesic(2, std::numbers::pi / 2);
  CHECK(std::fabs(g.q.x) <= 1e-15);
  CHECK(g.q.y == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(g.v.vx == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(std::fabs(g.v.vy) <= 1e-14);
  CHECK(std::fabs(g.q.x * g.q.x + g.q.y * g.q.y - 4.0) <= 1e-14);
}

TEST_CASE("every closed-form curve is unit speed") {
  auto gen = testutil::seeded(301);
  std::uniform_real_distribution<double> ua(-5, 5), ut(-10, 10), utheta(0.1, 6.18),
      ugt(0.05, 3.09);
  for (int rep = 0; rep < 300; ++rep) {
    const double a = ua(gen);
    const double b = std::exp(std::uniform_real_distribution<double>(
        std::log(0.1), std::log(10.0))(gen));
    const double t = ut(gen);
    CHECK(std::fabs(metric_norm(horocycle(a, b, t).q, horocycle(a, b, t).v) - 1.0) <=
          1e-12);
    const double bs = rep % 2 == 0 ? b : -b;
    CHECK(std::fabs(metric_norm(geodesic_circle(a, bs, t).q,
                                geodesic_circle(a, bs, t).v) -
                    1.0) <= 1e-12);
    const int dir = rep % 2 == 0 ? 1 : -1;
    CHECK(std::fabs(metric_norm(geodesic_vertical(a, t, dir).q,
                                geodesic_vertical(a, t, dir).v) -
                    1.0) <= 1e-12);
    const TangentState ph = polar_horocycle(b, utheta(gen));
    CHECK(std::fabs(metric_norm(ph.q, ph.v) - 1.0) <= 1e-12);
    const TangentState pg = polar_geodesic(b, ugt(gen));
    CHECK(std::fabs(metric_norm(pg.q, pg.v) - 1.0) <= 1e-12);
  }
}

TEST_CASE("every foliation field is unit speed, including at infinity") {
  auto gen = testutil::seeded(302);
  for (int rep = 0; rep < 300; ++rep) {
    const HalfPlanePoint q = testutil::random_point(gen, -20, 20, 0.02, 50);
    const double a = std::uniform_real_distribution<double>(-5, 5)(gen);
    for (const TangencyPoint& tp : {TangencyPoint::at(a), TangencyPoint::infinity()}) {
      CHECK(std::fabs(metric_norm(q, horocycle_unit_field(tp, q)) - 1.0) <= 1e-12);
      CHECK(std::fabs(metric_norm(q, geodesic_endpoint_unit_field(tp, q)) - 1.0) <=
            1e-12);
    }
    CHECK(std::fabs(metric_norm(q, geodesic_center_unit_field(a, q)) - 1.0) <= 1e-12);
    CHECK(std::fabs(metric_norm(q, vertical_unit_field(1, q)) - 1.0) <= 1e-12);
    CHECK(std::fabs(metric_norm(q, vertical_unit_field(-1, q)) - 1.0) <= 1e-12);
  }
}

TEST_CASE("horocycle_invert round-trips leaf coordinates and points") {
  auto gen = testutil::seeded(303);
  std::uniform_real_distribution<double> ua(-5, 5), ut(-10, 10);
  for (int rep = 0; rep < 1000; ++rep) {
    const double a = ua(gen);
    const double b = std::exp(std::uniform_real_distribution<double>(
        std::log(0.1), std::log(10.0))(gen));
    const double t = ut(gen);
    const HorocycleCoords c = horocycle_invert(a, horocycle(a, b, t).q);
    CHECK(std::fabs(c.t - t) <= 1e-12 * std::max(1.0, std::fabs(t)));
    CHECK(std::fabs(c.b - b) <= 1e-12 * std::max(1.0, b));

    const HalfPlanePoint q = testutil::random_point(gen, -20, 20, 0.02, 50);
    const HorocycleCoords c2 = horocycle_invert(a, q);
    const HalfPlanePoint back = horocycle(a, c2.b, c2.t).q;
    CHECK(std::fabs(back.x - q.x) <= 1e-12 * std::max(1.0, std::fabs(q.x)));
    CHECK(std::fabs(back.y - q.y) <= 1e-12 * std::max(1.0, q.y));
  }
}

TEST_CASE("leaf velocities agree with the foliation fields along every leaf") {
  auto gen = testutil::seeded(304);
  std::uniform_real_distribution<double> ua(-5, 5), ut(-8, 8);
  for (int rep = 0; rep < 500; ++rep) {
    const double a = ua(gen);
    const double b = std::exp(std::uniform_real_distribution<double>(
        std::log(0.2), std::log(5.0))(gen));
    const double t = ut(gen);

    const TangentState h = horocycle(a, b, t);
    CHECK(vec_dist(h.v, horocycle_unit_field(TangencyPoint::at(a), h.q)) <= 1e-12);

    const TangentState g = geodesic_circle(a, rep % 2 == 0 ? b : -b, t);
    CHECK(vec_dist(g.v, geodesic_endpoint_unit_field(TangencyPoint::at(a), g.q)) <=
          1e-12);

    const int dir = rep % 2 == 0 ? 1 : -1;
    const TangentState vg = geodesic_vertical(a, t, dir);
    CHECK(vec_dist(vg.v, vertical_unit_field(dir, vg.q)) <= 1e-12 * vg.q.y);
    // The foliation by geodesics ending at infinity runs upward only.
    if (dir > 0)
      CHECK(vec_dist(vg.v, geodesic_endpoint_unit_field(TangencyPoint::infinity(),
                                                        vg.q)) <= 1e-12 * vg.q.y);
  }
}

TEST_CASE("polar curves ride their foliation fields") {
  auto gen = testutil::seeded(305);
  for (int rep = 0; rep < 300; ++rep) {
    const double r = std::exp(std::uniform_real_distribution<double>(
        std::log(0.2), std::log(5.0))(gen));
    const double th =
        std::uniform_real_distribution<double>(0.05, 2 * std::numbers::pi - 0.05)(gen);
    const TangentState h = polar_horocycle(r, th);
    CHECK(vec_dist(h.v, horocycle_unit_field(TangencyPoint::at(0.0), h.q)) <= 1e-12);

    const double tg =
        std::uniform_real_distribution<double>(0.05, std::numbers::pi - 0.05)(gen);
    const TangentState g = polar_geodesic(r, tg);
    CHECK(vec_dist(g.v, geodesic_center_unit_field(0.0, g.q)) <= 1e-13 * (1.0 + g.q.y));
  }
}

TEST_CASE("geodesic semicircles connect a - 1/b to a and stay on their circle") {
  for (const double a : {-2.0, 0.0, 3.0}) {
    for (const double b : {-2.0, -1.0, 0.5, 1.0, 2.0}) {
      // t = -18 keeps the curve height e^t/b^2 above the boundary guard for
      // every b in the set while already sitting ~1e-16 from the endpoint.
      CHECK(std::fabs(geodesic_circle(a, b, 20).q.x - a) <= 1e-10);
      CHECK(std::fabs(geodesic_circle(a, b, -18).q.x - (a - 1.0 / b)) <=
            1e-10 * std::max(1.0, std::fabs(a - 1.0 / b)));
      // The full trace lies on the circle with diameter [a - 1/b, a].
      const double cx = a - 1.0 / (2.0 * b);
      const double radius = std::fabs(1.0 / (2.0 * b));
      for (const double t : {-3.0, -1.0, 0.0, 1.5, 4.0}) {
        const HalfPlanePoint q = geodesic_circle(a, b, t).q;
        const double dev = std::hypot(q.x - cx, q.y) - radius;
        CHECK(std::fabs(dev) <= 1e-12 * std::max(1.0, radius));
      }
    }
  }
}

TEST_CASE("horocycle leaves lie on circles tangent to the boundary") {
  for (const double a : {-2.0, 0.0, 3.0}) {
    for (const double b : {0.5, 1.0, 2.0}) {
      const double radius = 1.0 / (2.0 * b);
      for (const double t : {-4.0, -1.0, 0.0, 0.5, 2.0, 7.0}) {
        const HalfPlanePoint q = horocycle(a, b, t).q;
        CHECK(std::fabs(std::hypot(q.x - a, q.y - radius) - radius) <=
              1e-12 * std::max(1.0, radius));
      }
    }
  }
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(horocycle(0, 0, 0), std::invalid_argument);
  CHECK_THROWS_AS(horocycle(0, -1, 0), std::invalid_argument);
  CHECK_THROWS_WITH_AS(geodesic_circle(0, 0, 0),
                       doctest::Contains("vertical"), std::invalid_argument);
  CHECK_THROWS_AS(geodesic_vertical(0, 0, 2), std::invalid_argument);
  CHECK_THROWS_AS(geodesic_vertical(0, 0, 0), std::invalid_argument);
  CHECK_THROWS_AS(polar_horocycle(1, 0), std::invalid_argument);
  CHECK_THROWS_AS(polar_horocycle(1, 2 * std::numbers::pi), std::invalid_argument);
  CHECK_THROWS_AS(polar_horocycle(-1, 1), std::invalid_argument);
  CHECK_THROWS_AS(polar_geodesic(1, 0), std::invalid_argument);
  CHECK_THROWS_AS(polar_geodesic(1, std::numbers::pi), std::invalid_argument);
  CHECK_THROWS_AS(vertical_unit_field(0, HalfPlanePoint(0, 1)), std::invalid_argument);
  CHECK_THROWS_AS(geodesic_center_unit_field(std::nan(""), HalfPlanePoint(0, 1)),
                  std::invalid_argument);
}
