#pragma once

#include "horoflow/geom.hpp"

namespace horoflow {

/// The two systems under study: the magnetic system carries the drift term
/// eta(v) = vx/y in its Lagrangian, the kinetic one is pure geodesic motion.
enum class SystemKind { magnetic, kinetic };

inline const char* to_string(SystemKind kind) {
  return kind == SystemKind::magnetic ? "magnetic" : "kinetic";
}

struct TangentState {
  HalfPlanePoint q;
  TangentVector v;
};

struct CotangentState {
  HalfPlanePoint q;
  Covector p;
};

/// L = |v|_q^2 / 2 + vx/y (magnetic) or |v|_q^2 / 2 (kinetic).
inline double lagrangian(SystemKind kind, const TangentState& s) {
  const double y = s.q.y;
  const double kin = 0.5 * (s.v.vx * s.v.vx + s.v.vy * s.v.vy) / (y * y);
  return kind == SystemKind::magnetic ? kin + s.v.vx / y : kin;
}

/// Kinetic energy |v|_q^2 / 2; a prime integral of both flows.
inline double energy(const TangentState& s) {
  const double y = s.q.y;
  return 0.5 * (s.v.vx * s.v.vx + s.v.vy * s.v.vy) / (y * y);
}

/// Conjugate momentum of x for the magnetic system, vx/y^2 + 1/y; conserved
/// because the Lagrangian does not depend on x.
inline double momentum_x(const TangentState& s) {
  const double y = s.q.y;
  return s.v.vx / (y * y) + 1.0 / y;
}

/// Hamiltonian in coordinate form.  The norm form 0.5 * |p - eta|_q^2 (+0 for
/// the kinetic system, where eta drops out) is kept as a cross-check oracle in
/// the tests; this expression is the canonical implementation.
inline double hamiltonian(SystemKind kind, const CotangentState& s) {
  const double y = s.q.y;
  const double quad = 0.5 * y * y * (s.p.px * s.p.px + s.p.py * s.p.py);
  return kind == SystemKind::magnetic ? quad - y * s.p.px + 0.5 : quad;
}

/// Fiber derivative of L.  Written so the magnetic px matches momentum_x()
/// bit for bit.
inline CotangentState legendre(SystemKind kind, const TangentState& s) {
  const double y = s.q.y;
  Covector p(s.v.vx / (y * y), s.v.vy / (y * y));
  if (kind == SystemKind::magnetic) p.px = s.v.vx / (y * y) + 1.0 / y;
  return CotangentState{s.q, p};
}

inline TangentState legendre_inverse(SystemKind kind, const CotangentState& s) {
  const double y = s.q.y;
  double vx = y * y * s.p.px;
  if (kind == SystemKind::magnetic) vx -= y;
  return TangentState{s.q, TangentVector(vx, y * y * s.p.py)};
}

}  // namespace horoflow
