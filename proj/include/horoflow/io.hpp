#pragma once

#include <string>
#include <vector>

#include "horoflow/flows.hpp"
#include "horoflow/grid.hpp"
#include "horoflow/hj.hpp"
#include "horoflow/mane.hpp"

namespace horoflow {

/// Writes content to path via a temporary file in the same directory followed
/// by an atomic rename, so readers never observe a half-written file.
void atomic_write_file(const std::string& path, const std::string& content);

/// %.17g — enough digits to round-trip any double, stable across runs.
std::string format_double(double v);

/// CSV with a schema_version comment line and the header
/// t,x,y,vx,vy,E,px (tangent) or t,x,y,px,py,H (cotangent).
std::string trajectory_csv(const Trajectory& traj);
std::string trajectory_json(const Trajectory& traj);

std::string verify_report_json(const VerifyReport& report, const Tolerances& tol);

struct PeriodSample {
  TangentState s0;
  double period = 0.0;
};

std::string period_report_json(double k, double dt,
                               const std::vector<PeriodSample>& samples,
                               double max_relative_spread, double tol, bool pass);

std::string mane_report_json(const CriticalEstimate& estimate, const GridSpec& grid);

/// CSV of (x, y, vx, vy) rows sampling a unit vector field over a grid.
std::string foliation_csv(const GridSpec& grid,
                          const std::function<TangentVector(const HalfPlanePoint&)>& field);

}  // namespace horoflow
