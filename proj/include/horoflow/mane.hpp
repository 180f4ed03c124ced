#pragma once

#include <functional>
#include <string>
#include <vector>

#include "horoflow/grid.hpp"
#include "horoflow/hj.hpp"
#include "horoflow/parallel.hpp"

namespace horoflow {

/// A smooth closed curve in the half-plane, given by its parametrization
/// together with the period of that parametrization.
struct ClosedCurve {
  std::function<TangentState(double)> at;
  double period = 0.0;
  std::string label;
};

/// (1/period) * integral of the magnetic Lagrangian along the curve, by
/// composite Simpson quadrature with the given (even) number of intervals.
double average_action(const ClosedCurve& curve, int simpson_intervals);

/// max over the curves of -average_action: every member is a lower bound for
/// the critical value, and the max over a family converging to the critical
/// orbits converges to it from below.
double lower_bound(const std::vector<ClosedCurve>& curves, int simpson_intervals,
                   Exec exec);

struct SupStats {
  double sup = 0.0;
  double mean = 0.0;
  double variance = 0.0;
};

/// Statistics over the grid of the integrand H(q, du(q)) = 0.5*|du - eta|_q^2
/// whose sup bounds the critical value from above.  For an exact solution the
/// integrand is constant 1/2, so the variance doubles as a diagnostic.
SupStats upper_bound_stats(const HJSolution& u, const GridSpec& grid, Exec exec);
double upper_bound(const HJSolution& u, const GridSpec& grid, Exec exec);

/// Closed circle traversed at constant hyperbolic speed.  The circle has
/// Euclidean center (0, center_height) and radius ratio*center_height;
/// orientation +1 runs counterclockwise, -1 clockwise (the productive
/// direction for the lower bound).  Subcritical orbits of the magnetic flow
/// are exactly such curves, so families of them contain near-optimizers.
ClosedCurve circle_curve(double center_height, double ratio, double speed,
                         int orientation);

/// The default sweep: near-tangent circles (ratio close to 1) traversed near
/// unit speed approach the critical value 1/2 from below.
struct CircleFamilyParams {
  std::vector<double> center_heights{1.0, 2.0, 4.0};
  std::vector<double> radius_ratios{0.1, 0.2,  0.3,   0.4,   0.5,    0.6, 0.7,
                                    0.8, 0.9,  0.99,  0.999, 0.9999};
  std::vector<double> speeds{0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8,
                             0.9, 1.0, 1.1, 1.2, 1.3, 1.4, 1.5};
  bool both_orientations = true;

  std::string label() const;
};

std::vector<ClosedCurve> circle_family(const CircleFamilyParams& params);

/// The sandwich lower <= c <= upper produced by one candidate solution and
/// one curve family.
struct CriticalEstimate {
  double upper = 0.0;
  double lower = 0.0;
  std::string candidate;
  std::string curve_family;
  std::size_t curve_count = 0;
  int simpson_intervals = 0;
};

CriticalEstimate estimate_critical_value(const HJSolution& candidate,
                                         const GridSpec& grid,
                                         const CircleFamilyParams& params,
                                         int simpson_intervals, Exec exec);

}  // namespace horoflow
