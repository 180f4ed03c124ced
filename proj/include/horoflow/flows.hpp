#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "horoflow/mechanics.hpp"

namespace horoflow {

enum class Bundle { tangent, cotangent };

inline const char* to_string(Bundle b) {
  return b == Bundle::tangent ? "tangent" : "cotangent";
}

/// One recorded integration step.  state is (x, y, vx, vy) on the tangent
/// bundle and (x, y, px, py) on the cotangent bundle.  energy holds E on the
/// tangent side and H on the cotangent side; momentum_x holds the conjugate
/// momentum of x (a prime integral of both systems).
struct TrajectorySample {
  double t = 0.0;
  std::array<double, 4> state{};
  double energy = 0.0;
  double momentum_x = 0.0;
};

struct Trajectory {
  SystemKind kind = SystemKind::magnetic;
  Bundle bundle = Bundle::tangent;
  double dt = 0.0;
  std::vector<TrajectorySample> samples;

  double max_energy_drift() const;
  double max_momentum_drift() const;
  TangentState tangent_state(std::size_t i) const;
  CotangentState cotangent_state(std::size_t i) const;
};

/// Thrown when a flow reaches the boundary guard y <= kMinHeight (or blows
/// up); carries everything integrated up to the failing step.
class BoundaryEscape : public std::runtime_error {
 public:
  BoundaryEscape(Trajectory partial, double t_escape);
  const Trajectory& partial() const { return partial_; }
  double t_escape() const { return t_escape_; }

 private:
  Trajectory partial_;
  double t_escape_;
};

/// Thrown by detect_period when no return happens inside the time budget.
class NoReturn : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Right-hand side of the second-order equations of motion, as a first-order
/// field on (x, y, vx, vy).
std::array<double, 4> el_vector_field(SystemKind kind, const TangentState& s);

/// Hamiltonian vector field on (x, y, px, py).  The px component vanishes
/// identically: x is cyclic.
std::array<double, 4> ham_vector_field(SystemKind kind, const CotangentState& s);

/// Classical fixed-step RK4.  Samples every step (plus a short final step
/// when T is not a multiple of dt).  Throws BoundaryEscape if any stage
/// reaches y <= kMinHeight, std::invalid_argument on dt <= 0 or dt > T.
Trajectory integrate(SystemKind kind, const TangentState& s0, double T, double dt);
Trajectory integrate(SystemKind kind, const CotangentState& s0, double T, double dt);

/// First time the magnetic orbit through s0 returns to s0 (within return_tol
/// in the Euclidean phase-space distance), refined by bisection on the return
/// event.  Requires the subcritical regime k < 1/2, where every orbit is
/// periodic; energy(s0) must equal k to 1e-12.
double detect_period(double k, const TangentState& s0, double dt,
                     double t_budget = 50.0, double return_tol = 1e-6);

}  // namespace horoflow
