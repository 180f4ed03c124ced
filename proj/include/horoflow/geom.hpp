#pragma once

#include <cmath>
#include <cstdio>
#include <functional>
#include <stdexcept>
#include <string>

namespace horoflow {

// Points with y at or below this height are rejected everywhere: the metric
// factor 1/y^2 degenerates at the boundary y = 0, and flows that reach it must
// fail loudly instead of producing garbage.
inline constexpr double kMinHeight = 1e-9;

/// A point of the upper half-plane {(x, y) : y > 0}.
struct HalfPlanePoint {
  double x = 0.0;
  double y = 1.0;

  HalfPlanePoint() = default;
  HalfPlanePoint(double x_, double y_) : x(x_), y(y_) {
    if (!std::isfinite(x_) || !std::isfinite(y_))
      throw std::invalid_argument("HalfPlanePoint: coordinates must be finite");
    if (!(y_ > kMinHeight))
      throw std::invalid_argument(
          "HalfPlanePoint: y must exceed the boundary guard 1e-9");
  }
};

/// Components of a tangent vector; the basepoint travels separately.
struct TangentVector {
  double vx = 0.0;
  double vy = 0.0;

  TangentVector() = default;
  TangentVector(double vx_, double vy_) : vx(vx_), vy(vy_) {
    if (!std::isfinite(vx_) || !std::isfinite(vy_))
      throw std::invalid_argument("TangentVector: components must be finite");
  }
};

/// Components of a covector (momentum); the basepoint travels separately.
struct Covector {
  double px = 0.0;
  double py = 0.0;

  Covector() = default;
  Covector(double px_, double py_) : px(px_), py(py_) {
    if (!std::isfinite(px_) || !std::isfinite(py_))
      throw std::invalid_argument("Covector: components must be finite");
  }
};

/// A boundary point of the half-plane: either a real number or the point at
/// infinity.  Infinity is a tagged state, never a large float stand-in.
class TangencyPoint {
 public:
  static TangencyPoint at(double a) {
    if (!std::isfinite(a))
      throw std::invalid_argument(
          "TangencyPoint: use TangencyPoint::infinity() for the point at infinity");
    return TangencyPoint(a, false);
  }
  static TangencyPoint infinity() { return TangencyPoint(0.0, true); }

  bool is_infinite() const { return infinite_; }
  double value() const {
    if (infinite_)
      throw std::logic_error("TangencyPoint: the point at infinity has no coordinate");
    return value_;
  }
  std::string str() const {
    if (infinite_) return "inf";
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.12g", value_);
    return buf;
  }
  friend bool operator==(const TangencyPoint& l, const TangencyPoint& r) {
    return l.infinite_ == r.infinite_ && (l.infinite_ || l.value_ == r.value_);
  }

 private:
  TangencyPoint(double v, bool inf) : value_(v), infinite_(inf) {}
  double value_;
  bool infinite_;
};

inline double metric_inner(const HalfPlanePoint& q, const TangentVector& u,
                           const TangentVector& v) {
  return (u.vx * v.vx + u.vy * v.vy) / (q.y * q.y);
}

/// Hyperbolic length sqrt(vx^2 + vy^2) / y.
inline double metric_norm(const HalfPlanePoint& q, const TangentVector& v) {
  return std::sqrt(v.vx * v.vx + v.vy * v.vy) / q.y;
}

/// Dual (cometric) length y * sqrt(px^2 + py^2).
inline double dual_norm(const HalfPlanePoint& q, const Covector& p) {
  return q.y * std::sqrt(p.px * p.px + p.py * p.py);
}

/// The magnetic one-form dx/y evaluated at q; its differential is the area form.
inline Covector eta(const HalfPlanePoint& q) { return Covector(1.0 / q.y, 0.0); }

/// The bundle map Y defined by d(eta)(u, v) = g(Y u, v): rotation by +90 degrees.
inline TangentVector lorentz_force(const TangentVector& u) {
  return TangentVector(-u.vy, u.vx);
}

/// d(eta) at q on the pair (u, v); equals the hyperbolic area form.
inline double area_form(const HalfPlanePoint& q, const TangentVector& u,
                        const TangentVector& v) {
  return (u.vx * v.vy - u.vy * v.vx) / (q.y * q.y);
}

/// An analytic covector field, evaluable anywhere in the half-plane.  The
/// label names the field in reports and error messages.
struct OneForm {
  std::function<Covector(const HalfPlanePoint&)> evaluator;
  std::string label;

  Covector operator()(const HalfPlanePoint& q) const { return evaluator(q); }
};

}  // namespace horoflow
