#include "horoflow/mane.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <numbers>
#include <stdexcept>

#include "horoflow/mechanics.hpp"

namespace horoflow {

double average_action(const ClosedCurve& curve, int simpson_intervals) {
  if (!curve.at) throw std::invalid_argument("average_action: empty curve");
  if (!(std::isfinite(curve.period) && curve.period > 0.0))
    throw std::invalid_argument("average_action: period must be positive");
  if (simpson_intervals < 2 || simpson_intervals % 2 != 0)
    throw std::invalid_argument(
        "average_action: Simpson needs an even interval count >= 2");

  const double h = curve.period / simpson_intervals;
  double sum = lagrangian(SystemKind::magnetic, curve.at(0.0)) +
               lagrangian(SystemKind::magnetic, curve.at(curve.period));
  for (int i = 1; i < simpson_intervals; ++i) {
    const double w = (i % 2 == 1) ? 4.0 : 2.0;
    sum += w * lagrangian(SystemKind::magnetic, curve.at(i * h));
  }
  return (h / 3.0) * sum / curve.period;
}

double lower_bound(const std::vector<ClosedCurve>& curves, int simpson_intervals,
                   Exec exec) {
  if (curves.empty())
    throw std::invalid_argument("lower_bound: need at least one closed curve");
  std::vector<double> vals(curves.size());
  parallel_for(curves.size(), exec, [&](std::size_t i) {
    vals[i] = -average_action(curves[i], simpson_intervals);
  });
  double best = vals[0];
  for (const double v : vals) best = std::max(best, v);
  return best;
}

SupStats upper_bound_stats(const HJSolution& u, const GridSpec& grid, Exec exec) {
  grid.validate();
  std::vector<double> vals(grid.size());
  parallel_for(grid.size(), exec, [&](std::size_t i) {
    const HalfPlanePoint q = grid.point(i);
    vals[i] = hamiltonian(SystemKind::magnetic, CotangentState{q, u.gradient(q)});
  });
  SupStats stats;
  stats.sup = vals[0];
  double sum = 0.0;
  for (const double v : vals) {
    stats.sup = std::max(stats.sup, v);
    sum += v;
  }
  stats.mean = sum / static_cast<double>(vals.size());
  double sq = 0.0;
  for (const double v : vals) sq += (v - stats.mean) * (v - stats.mean);
  stats.variance = sq / static_cast<double>(vals.size());
  return stats;
}

double upper_bound(const HJSolution& u, const GridSpec& grid, Exec exec) {
  return upper_bound_stats(u, grid, exec).sup;
}

ClosedCurve circle_curve(double center_height, double ratio, double speed,
                         int orientation) {
  if (!(std::isfinite(center_height) && center_height > 0.0))
    throw std::invalid_argument("circle_curve: center height must be positive");
  if (!(std::isfinite(ratio) && ratio > 0.0 && ratio < 1.0))
    throw std::invalid_argument(
        "circle_curve: radius ratio must lie strictly between 0 and 1");
  if (!(std::isfinite(speed) && speed > 0.0))
    throw std::invalid_argument("circle_curve: speed must be positive");
  if (orientation != 1 && orientation != -1)
    throw std::invalid_argument("circle_curve: orientation must be +1 or -1");

  // A Euclidean circle of center (0, y0) and radius r = ratio*y0 is a
  // hyperbolic circle around (0, y_h), y_h = sqrt(y0^2 - r^2).  In the unit
  // disk centered there it is |z| = R with R = r/(y0 + y_h) = tanh(rho/2),
  // and constant hyperbolic speed means the disk angle advances uniformly.
  const double r = ratio * center_height;
  const double y_h = center_height * std::sqrt((1.0 - ratio) * (1.0 + ratio));
  const double R = r / (center_height + y_h);
  const double sinh_rho = 2.0 * R / ((1.0 - R) * (1.0 + R));
  const double period = 2.0 * std::numbers::pi * sinh_rho / speed;
  const double phase_rate = orientation * speed / sinh_rho;

  ClosedCurve curve;
  curve.period = period;
  char buf[128];
  std::snprintf(buf, sizeof(buf), "circle(y0=%g,r/y0=%g,v=%g,%s)", center_height,
                ratio, speed, orientation > 0 ? "ccw" : "cw");
  curve.label = buf;
  curve.at = [y_h, R, phase_rate](double t) {
    const std::complex<double> z = std::polar(R, phase_rate * t);
    const std::complex<double> one(1.0, 0.0);
    const std::complex<double> i(0.0, 1.0);
    const std::complex<double> w = i * y_h * (one + z) / (one - z);
    const std::complex<double> dw_dt =
        2.0 * i * y_h * (i * phase_rate * z) / ((one - z) * (one - z));
    return TangentState{HalfPlanePoint(w.real(), w.imag()),
                        TangentVector(dw_dt.real(), dw_dt.imag())};
  };
  return curve;
}

std::string CircleFamilyParams::label() const {
  char buf[160];
  std::snprintf(buf, sizeof(buf),
                "constant-hyperbolic-speed circles: %zu heights x %zu ratios x "
                "%zu speeds x %d orientations",
                center_heights.size(), radius_ratios.size(), speeds.size(),
                both_orientations ? 2 : 1);
  return buf;
}

std::vector<ClosedCurve> circle_family(const CircleFamilyParams& params) {
  std::vector<ClosedCurve> out;
  const std::vector<int> orientations =
      params.both_orientations ? std::vector<int>{-1, 1} : std::vector<int>{-1};
  out.reserve(params.center_heights.size() * params.radius_ratios.size() *
              params.speeds.size() * orientations.size());
  for (const double y0 : params.center_heights)
    for (const double ratio : params.radius_ratios)
      for (const double v : params.speeds)
        for (const int orientation : orientations)
          out.push_back(circle_curve(y0, ratio, v, orientation));
  return out;
}

CriticalEstimate estimate_critical_value(const HJSolution& candidate,
                                         const GridSpec& grid,
                                         const CircleFamilyParams& params,
                                         int simpson_intervals, Exec exec) {
  CriticalEstimate est;
  est.upper = upper_bound(candidate, grid, exec);
  const std::vector<ClosedCurve> curves = circle_family(params);
  est.lower = lower_bound(curves, simpson_intervals, exec);
  est.candidate = candidate.label();
  est.curve_family = params.label();
  est.curve_count = curves.size();
  est.simpson_intervals = simpson_intervals;
  return est;
}

}  // namespace horoflow
