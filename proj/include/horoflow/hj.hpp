#pragma once

#include <string>
#include <vector>

#include "horoflow/closed_forms.hpp"
#include "horoflow/config.hpp"
#include "horoflow/flows.hpp"
#include "horoflow/grid.hpp"
#include "horoflow/parallel.hpp"

namespace horoflow {

/// The solution families of the stationary Hamilton-Jacobi equation at the
/// critical level 1/2.  adhoc_x (u = x) is not a solution: it is the built-in
/// negative-control witness for the verification pipeline.
enum class HJFamily {
  magnetic_arctan,  // u = 2 arctan((x-a)/y) + c; a = inf degenerates to u = c
  constant,         // u = c
  log_vertical,     // u = +/- log y + c
  log_endpoint,     // u = +/- (log y - log((x-a)^2+y^2)) + c; a = inf gives +/- log y + c
  arcsinh_center,   // u = +/- arcsinh((x-a)/y) + c; no point-at-infinity member
  adhoc_x,          // u = x (negative control)
};

class HJSolution {
 public:
  static HJSolution magnetic_arctan(const TangencyPoint& a, double c = 0.0);
  static HJSolution constant(double c = 0.0);
  static HJSolution log_vertical(int sign, double c = 0.0);
  static HJSolution log_endpoint(const TangencyPoint& a, int sign, double c = 0.0);
  static HJSolution arcsinh_center(double a, int sign, double c = 0.0);
  static HJSolution adhoc_x();

  HJFamily family() const { return family_; }
  /// Which system the family solves (adhoc_x is grouped with magnetic).
  SystemKind kind() const;
  const TangencyPoint& tangency() const { return a_; }
  int sign() const { return sign_; }
  double offset() const { return c_; }
  bool is_catalog() const { return family_ != HJFamily::adhoc_x; }

  double evaluate(const HalfPlanePoint& q) const;
  /// Hand-derived gradient; cross-checked against central differences in the
  /// tests and sweeps.
  Covector gradient(const HalfPlanePoint& q) const;
  /// The differential du as a labeled covector field.
  OneForm differential() const;
  std::string label() const;

 private:
  HJSolution(HJFamily f, TangencyPoint a, int sign, double c);
  HJFamily family_;
  TangencyPoint a_;
  int sign_;
  double c_;
};

/// Stationary Hamilton-Jacobi defect of a candidate gradient at q.
/// Magnetic:  y^2/2 * |grad|^2 - y * grad_x - (k - 1/2).
/// Kinetic:   |grad|^2 - 1/y^2  (defined at the level k = 1/2 only).
double hj_residual(SystemKind kind, const HalfPlanePoint& q, const Covector& grad,
                   double k);
double residual(SystemKind kind, const HJSolution& u, const HalfPlanePoint& q,
                double k);

/// Central-difference gradient with pointwise step fd_step * max(1, |x|, y).
Covector fd_gradient(const HJSolution& u, const HalfPlanePoint& q,
                     double fd_step = 1e-6);

struct ResidualStats {
  double max_abs = 0.0;
  double mean_abs = 0.0;
};

/// |residual| statistics over a grid, with analytic or finite-difference
/// gradients.  Aggregation runs in index order, so serial and parallel modes
/// agree bitwise.
ResidualStats residual_sweep(SystemKind kind, const HJSolution& u,
                             const GridSpec& grid, double k, bool use_fd_gradient,
                             Exec exec, double fd_step = 1e-6);

/// max over the grid of |analytic gradient - central differences| (Euclidean).
double gradient_mismatch_sweep(const HJSolution& u, const GridSpec& grid,
                               Exec exec, double fd_step = 1e-6);

/// max over the grid of the finite-difference curl |d_y alpha_x - d_x alpha_y|;
/// ~0 certifies closedness, eta scores max(1/y^2) by design.
double check_closed(const OneForm& alpha, const GridSpec& grid, double fd_step,
                    Exec exec);

/// Line integral of alpha around a closed polyline (composite Gauss-Legendre
/// per segment); ~0 certifies exactness on the enclosed region.
double check_exact(const OneForm& alpha, const std::vector<HalfPlanePoint>& loop,
                   int panels_per_segment = 32);

/// max over the grid of |H(q, du(q)) - 1/2|.
double check_level(SystemKind kind, const HJSolution& u, const GridSpec& grid,
                   Exec exec);

/// max over t in [0, T] of dual_norm(q(t), p(t) - du(q(t))) along the
/// Hamiltonian orbit from an arbitrary start (no level precondition; used for
/// negative controls).
double graph_deviation(SystemKind kind, const HJSolution& u,
                       const CotangentState& start, double T, double dt);

/// Same, starting on the graph at (q0, du(q0)); requires H(q0, du(q0)) = 1/2
/// to 1e-10.  Small values certify that the graph of du is flow-invariant.
double check_graph_invariance(SystemKind kind, const HJSolution& u,
                              const HalfPlanePoint& q0, double T, double dt);

/// The horocycle unit field pushed through the magnetic fiber derivative:
/// the momentum graph carried by the foliation tangent at a.
OneForm foliation_to_graph(const TangencyPoint& a);

/// The verified solution catalogs over the pinned tangency set.
std::vector<HJSolution> magnetic_catalog();
std::vector<HJSolution> kinetic_catalog();
std::vector<HJSolution> full_catalog();

struct VerifyOptions {
  GridSpec grid;
  double k = 0.5;
  double T = 5.0;
  double dt = 1e-3;
  double fd_step = 1e-6;
  HalfPlanePoint q0 = HalfPlanePoint(0.0, 1.0);
  std::vector<HalfPlanePoint> loop = exactness_loop();
  Tolerances tol;
  Exec exec = Exec::parallel;
};

struct VerifyReport {
  std::string solution;
  SystemKind kind = SystemKind::magnetic;
  GridSpec grid;
  double k = 0.5;
  double max_residual = 0.0;
  double mean_residual = 0.0;
  double max_residual_fd = 0.0;
  double max_grad_mismatch = 0.0;
  double max_curl = 0.0;
  double loop_integral = 0.0;
  double max_level_deviation = 0.0;
  double invariance_deviation = 0.0;  // NaN when the level precondition fails
  bool pass = false;
};

/// Runs the full battery of checks for one candidate solution.
VerifyReport verify_solution(const HJSolution& u, const VerifyOptions& options);

}  // namespace horoflow
