#include "horoflow/closed_forms.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace horoflow {

TangentState horocycle(double a, double b, double t) {
  if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(t))
    throw std::invalid_argument("horocycle: parameters must be finite");
  if (!(b > 0.0)) throw std::invalid_argument("horocycle: b must be positive");
  const double s = 1.0 + t * t;
  HalfPlanePoint q(a + t / (b * s), 1.0 / (b * s));
  const double f = 1.0 / (b * s * s);
  return {q, TangentVector((1.0 - t * t) * f, -2.0 * t * f)};
}

HorocycleCoords horocycle_invert(double a, const HalfPlanePoint& q) {
  if (!std::isfinite(a)) throw std::invalid_argument("horocycle_invert: a must be finite");
  const double dx = q.x - a;
  return HorocycleCoords{dx / q.y, q.y / (dx * dx + q.y * q.y)};
}

TangentVector horocycle_unit_field(const TangencyPoint& a, const HalfPlanePoint& q) {
  if (a.is_infinite()) return TangentVector(-q.y, 0.0);
  const double dx = q.x - a.value();
  const double f = q.y / (dx * dx + q.y * q.y);
  return TangentVector(f * (q.y * q.y - dx * dx), f * (-2.0 * dx * q.y));
}

TangentState geodesic_circle(double a, double b, double t) {
  if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(t))
    throw std::invalid_argument("geodesic_circle: parameters must be finite");
  if (b == 0.0)
    throw std::invalid_argument(
        "geodesic_circle: b = 0 degenerates to a vertical line; use geodesic_vertical");
  const double e = std::exp(t);
  const double d = b * b + e * e;
  HalfPlanePoint q(a - b / d, e / d);
  const double f = e / (d * d);
  return {q, TangentVector(f * 2.0 * e * b, f * (b * b - e * e))};
}

TangentState geodesic_vertical(double b, double t, int direction) {
  if (!std::isfinite(b) || !std::isfinite(t))
    throw std::invalid_argument("geodesic_vertical: parameters must be finite");
  if (direction != 1 && direction != -1)
    throw std::invalid_argument("geodesic_vertical: direction must be +1 or -1");
  const double e = std::exp(direction > 0 ? t : -t);
  return {HalfPlanePoint(b, e), TangentVector(0.0, direction * e)};
}

TangentState polar_horocycle(double r, double theta) {
  if (!(r > 0.0)) throw std::invalid_argument("polar_horocycle: r must be positive");
  if (!(theta > 0.0) || !(theta < 2.0 * std::numbers::pi))
    throw std::invalid_argument(
        "polar_horocycle: theta must lie strictly inside (0, 2*pi); the endpoints hit y = 0");
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  HalfPlanePoint q(-r * s, r * (1.0 - c));
  return {q, TangentVector(q.y * -c, q.y * s)};
}

TangentState polar_geodesic(double r, double theta) {
  if (!(r > 0.0)) throw std::invalid_argument("polar_geodesic: r must be positive");
  if (!(theta > 0.0) || !(theta < std::numbers::pi))
    throw std::invalid_argument(
        "polar_geodesic: theta must lie strictly inside (0, pi); the endpoints hit y = 0");
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  HalfPlanePoint q(-r * c, r * s);
  return {q, TangentVector(q.y * s, q.y * c)};
}

TangentVector geodesic_endpoint_unit_field(const TangencyPoint& a,
                                           const HalfPlanePoint& q) {
  if (a.is_infinite()) return TangentVector(0.0, q.y);
  const double dx = q.x - a.value();
  const double f = q.y / (dx * dx + q.y * q.y);
  return TangentVector(f * -2.0 * dx * q.y, f * (dx * dx - q.y * q.y));
}

TangentVector geodesic_center_unit_field(double a, const HalfPlanePoint& q) {
  if (!std::isfinite(a))
    throw std::invalid_argument("geodesic_center_unit_field: a must be finite");
  const double dx = q.x - a;
  const double rad = std::sqrt(dx * dx + q.y * q.y);
  return TangentVector(q.y * (q.y / rad), q.y * (-dx / rad));
}

TangentVector vertical_unit_field(int direction, const HalfPlanePoint& q) {
  if (direction != 1 && direction != -1)
    throw std::invalid_argument("vertical_unit_field: direction must be +1 or -1");
  return TangentVector(0.0, direction * q.y);
}

}  // namespace horoflow
