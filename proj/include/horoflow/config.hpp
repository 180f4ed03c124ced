#pragma once

#include <string>
#include <utility>
#include <vector>

#include "horoflow/grid.hpp"
#include "horoflow/mechanics.hpp"

namespace horoflow {

/// Version stamp written into every CSV/JSON artifact.
inline constexpr int kSchemaVersion = 1;

/// Version of the pinned parameter sets below.  Regression numbers in the
/// tests are tied to this; bump it when any set changes.
inline constexpr int kTestSetVersion = 1;

/// Acceptance thresholds.  Values are part of the contract of the
/// verification commands; overriding them via a config file only affects
/// pass/fail reporting, never the computed numbers.
struct Tolerances {
  double residual_analytic = 1e-12;
  double residual_fd = 1e-5;
  double grad_mismatch = 1e-5;
  double level = 1e-12;
  double curl = 1e-6;
  double loop = 1e-8;
  double invariance = 1e-6;
  double zero_section = 1e-12;
  double period_spread = 1e-4;  // relative
};

struct RunDefaults {
  double dt = 1e-3;
  double T = 5.0;
  GridSpec grid;          // standard verification grid
  Tolerances tol;
  int quad_nodes = 2048;  // composite-Simpson intervals for curve actions
  double fd_step = 1e-6;  // scaled pointwise by max(1, |x|, y)
};

/// Parses a key=value config file ('#' starts a comment).  Unknown keys are an
/// error.  Recognized keys: dt, T, quad_nodes, fd_step, grid.{x0,x1,nx,y0,y1,ny},
/// tol.{residual,residual_fd,grad,level,curl,loop,invariance,zero_section,period_spread}.
RunDefaults load_config(const std::string& path);

/// Applies a single key=value pair to defaults; shared by the file loader.
void apply_config_entry(RunDefaults& defaults, const std::string& key,
                        const std::string& value);

// ---- pinned parameter sets (version kTestSetVersion) ----------------------

/// Finite tangency points used throughout verification sweeps.
std::vector<double> tangency_set();

/// (a, b) pairs for matching integrated flows against closed-form curves.
std::vector<std::pair<double, double>> curve_oracle_set();

/// Ten start points for the Lagrangian-graph invariance checks.
std::vector<HalfPlanePoint> invariance_start_points();

/// Magnetic initial states for long-horizon conservation checks.
std::vector<TangentState> conservation_states();

/// Corners of the counterclockwise square loop used for exactness checks.
std::vector<HalfPlanePoint> exactness_loop();

}  // namespace horoflow
