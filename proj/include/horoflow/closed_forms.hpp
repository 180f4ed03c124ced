#pragma once

#include "horoflow/geom.hpp"
#include "horoflow/mechanics.hpp"

namespace horoflow {

/// Leaf coordinates of a point on the horocycle foliation tangent at a finite
/// boundary point: the leaf parameter b and the curve parameter t.
struct HorocycleCoords {
  double t = 0.0;
  double b = 0.0;
};

/// Unit-speed horocycle tangent to the boundary at a, with leaf parameter
/// b > 0:  gamma(t) = (a + t/(b(1+t^2)), 1/(b(1+t^2))).
TangentState horocycle(double a, double b, double t);

/// Inverts horocycle(a, ., .) at a point: t = (x-a)/y, b = y/((x-a)^2+y^2).
HorocycleCoords horocycle_invert(double a, const HalfPlanePoint& q);

/// Velocity at q of the unit-speed horocycle foliation tangent at a.  For
/// a = infinity the leaves are horizontal lines traversed leftwards: (-y, 0).
TangentVector horocycle_unit_field(const TangencyPoint& a, const HalfPlanePoint& q);

/// Unit-speed geodesic semicircle ending at the boundary point a (the other
/// endpoint is a - 1/b):  gamma(t) = (a - b/(b^2+e^{2t}), e^t/(b^2+e^{2t})).
/// b = 0 is rejected: that limit degenerates to a vertical line.
TangentState geodesic_circle(double a, double b, double t);

/// Unit-speed vertical geodesic x = b: (b, e^t) upwards (direction +1) or
/// (b, e^{-t}) downwards (direction -1).
TangentState geodesic_vertical(double b, double t, int direction);

/// Horocycle of Euclidean radius r tangent to the boundary at the origin, in
/// polar form: q = (-r sin(theta), r (1 - cos(theta))), theta in (0, 2*pi),
/// with the hyperbolically unit tangent v = y * (-cos(theta), sin(theta)).
TangentState polar_horocycle(double r, double theta);

/// Geodesic semicircle of Euclidean radius r centered at the origin, in polar
/// form: q = (-r cos(theta), r sin(theta)), theta in (0, pi), with the
/// hyperbolically unit tangent v = y * (sin(theta), cos(theta)).
TangentState polar_geodesic(double r, double theta);

/// Velocity at q of the unit-speed foliation by geodesics ending at a.  For
/// a = infinity the leaves are vertical lines traversed upwards: (0, y).
TangentVector geodesic_endpoint_unit_field(const TangencyPoint& a,
                                           const HalfPlanePoint& q);

/// Velocity at q of the unit-speed foliation by geodesic semicircles centered
/// at the finite boundary point a.
TangentVector geodesic_center_unit_field(double a, const HalfPlanePoint& q);

/// Velocity at q of the vertical-line foliation: (0, y) or (0, -y).
TangentVector vertical_unit_field(int direction, const HalfPlanePoint& q);

}  // namespace horoflow
