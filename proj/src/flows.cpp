#include "horoflow/flows.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>

namespace horoflow {

namespace {

using Vec4 = std::array<double, 4>;

// Raw right-hand sides on (x, y, v_or_p...).  Callers guarantee y > kMinHeight
// and finite components.
Vec4 el_rhs(SystemKind kind, const Vec4& z) {
  const double y = z[1], vx = z[2], vy = z[3];
  double ax = 2.0 * vx * vy / y;
  double ay = (vy * vy - vx * vx) / y;
  if (kind == SystemKind::magnetic) {
    ax += vy;
    ay -= vx;
  }
  return {vx, vy, ax, ay};
}

Vec4 ham_rhs(SystemKind kind, const Vec4& z) {
  const double y = z[1], px = z[2], py = z[3];
  double dx = y * y * px;
  double dpy = -y * (px * px + py * py);
  if (kind == SystemKind::magnetic) {
    dx -= y;
    dpy += px;
  }
  return {dx, y * y * py, 0.0, dpy};
}

bool state_ok(const Vec4& z) {
  return std::isfinite(z[0]) && std::isfinite(z[2]) && std::isfinite(z[3]) &&
         std::isfinite(z[1]) && z[1] > kMinHeight;
}

Vec4 rhs(SystemKind kind, Bundle bundle, const Vec4& z) {
  return bundle == Bundle::tangent ? el_rhs(kind, z) : ham_rhs(kind, z);
}

// One RK4 step; false when any stage leaves the domain.
bool rk4_step(SystemKind kind, Bundle bundle, const Vec4& z, double h, Vec4& out) {
  Vec4 k1, k2, k3, k4, tmp;
  if (!state_ok(z)) return false;
  k1 = rhs(kind, bundle, z);
  for (int i = 0; i < 4; ++i) tmp[i] = z[i] + 0.5 * h * k1[i];
  if (!state_ok(tmp)) return false;
  k2 = rhs(kind, bundle, tmp);
  for (int i = 0; i < 4; ++i) tmp[i] = z[i] + 0.5 * h * k2[i];
  if (!state_ok(tmp)) return false;
  k3 = rhs(kind, bundle, tmp);
  for (int i = 0; i < 4; ++i) tmp[i] = z[i] + h * k3[i];
  if (!state_ok(tmp)) return false;
  k4 = rhs(kind, bundle, tmp);
  for (int i = 0; i < 4; ++i)
    out[i] = z[i] + h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
  return state_ok(out);
}

TrajectorySample make_sample(SystemKind kind, Bundle bundle, double t, const Vec4& z) {
  TrajectorySample s;
  s.t = t;
  s.state = z;
  const double y = z[1];
  if (bundle == Bundle::tangent) {
    s.energy = 0.5 * (z[2] * z[2] + z[3] * z[3]) / (y * y);
    s.momentum_x = z[2] / (y * y);
    if (kind == SystemKind::magnetic) s.momentum_x = z[2] / (y * y) + 1.0 / y;
  } else {
    const double quad = 0.5 * y * y * (z[2] * z[2] + z[3] * z[3]);
    s.energy = kind == SystemKind::magnetic ? quad - y * z[2] + 0.5 : quad;
    s.momentum_x = z[2];
  }
  return s;
}

Trajectory run_rk4(SystemKind kind, Bundle bundle, const Vec4& z0, double T, double dt) {
  if (!(dt > 0.0) || !std::isfinite(dt))
    throw std::invalid_argument("integrate: dt must be positive and finite");
  if (!(T > 0.0) || !std::isfinite(T))
    throw std::invalid_argument("integrate: T must be positive and finite");
  if (dt > T) throw std::invalid_argument("integrate: dt exceeds the duration T");

  const auto n_full = static_cast<std::size_t>(std::floor(T / dt + 1e-12));
  double remainder = T - static_cast<double>(n_full) * dt;
  if (remainder < 1e-12 * T) remainder = 0.0;

  Trajectory traj;
  traj.kind = kind;
  traj.bundle = bundle;
  traj.dt = dt;
  traj.samples.reserve(n_full + 2);
  traj.samples.push_back(make_sample(kind, bundle, 0.0, z0));

  Vec4 z = z0;
  double t = 0.0;
  for (std::size_t i = 1; i <= n_full; ++i) {
    Vec4 next;
    if (!rk4_step(kind, bundle, z, dt, next))
      throw BoundaryEscape(std::move(traj), t + dt);
    z = next;
    t = static_cast<double>(i) * dt;
    traj.samples.push_back(make_sample(kind, bundle, t, z));
  }
  if (remainder > 0.0) {
    Vec4 next;
    if (!rk4_step(kind, bundle, z, remainder, next))
      throw BoundaryEscape(std::move(traj), T);
    traj.samples.push_back(make_sample(kind, bundle, T, next));
  }
  return traj;
}

double dist4(const Vec4& a, const Vec4& b) {
  double s = 0.0;
  for (int i = 0; i < 4; ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
  return std::sqrt(s);
}

}  // namespace

double Trajectory::max_energy_drift() const {
  if (samples.empty()) return 0.0;
  const double e0 = samples.front().energy;
  double m = 0.0;
  for (const auto& s : samples) m = std::max(m, std::fabs(s.energy - e0));
  return m;
}

double Trajectory::max_momentum_drift() const {
  if (samples.empty()) return 0.0;
  const double p0 = samples.front().momentum_x;
  double m = 0.0;
  for (const auto& s : samples) m = std::max(m, std::fabs(s.momentum_x - p0));
  return m;
}

TangentState Trajectory::tangent_state(std::size_t i) const {
  if (bundle != Bundle::tangent)
    throw std::logic_error("Trajectory: not a tangent-bundle trajectory");
  const auto& z = samples.at(i).state;
  return TangentState{HalfPlanePoint(z[0], z[1]), TangentVector(z[2], z[3])};
}

CotangentState Trajectory::cotangent_state(std::size_t i) const {
  if (bundle != Bundle::cotangent)
    throw std::logic_error("Trajectory: not a cotangent-bundle trajectory");
  const auto& z = samples.at(i).state;
  return CotangentState{HalfPlanePoint(z[0], z[1]), Covector(z[2], z[3])};
}

namespace {
std::string escape_message(double t) {
  char buf[96];
  std::snprintf(buf, sizeof(buf),
                "flow reached the boundary guard y <= 1e-9 near t = %.6g", t);
  return buf;
}
}  // namespace

BoundaryEscape::BoundaryEscape(Trajectory partial, double t_escape)
    : std::runtime_error(escape_message(t_escape)),
      partial_(std::move(partial)),
      t_escape_(t_escape) {}

std::array<double, 4> el_vector_field(SystemKind kind, const TangentState& s) {
  return el_rhs(kind, {s.q.x, s.q.y, s.v.vx, s.v.vy});
}

std::array<double, 4> ham_vector_field(SystemKind kind, const CotangentState& s) {
  return ham_rhs(kind, {s.q.x, s.q.y, s.p.px, s.p.py});
}

Trajectory integrate(SystemKind kind, const TangentState& s0, double T, double dt) {
  return run_rk4(kind, Bundle::tangent, {s0.q.x, s0.q.y, s0.v.vx, s0.v.vy}, T, dt);
}

Trajectory integrate(SystemKind kind, const CotangentState& s0, double T, double dt) {
  return run_rk4(kind, Bundle::cotangent, {s0.q.x, s0.q.y, s0.p.px, s0.p.py}, T, dt);
}

namespace {

// State at an arbitrary time, via one partial RK4 step from the nearest
// recorded sample at or before t.
Vec4 state_at(const Trajectory& traj, double t) {
  const auto& samples = traj.samples;
  std::size_t i = std::min(static_cast<std::size_t>(t / traj.dt), samples.size() - 1);
  while (i > 0 && samples[i].t > t) --i;
  while (i + 1 < samples.size() && samples[i + 1].t <= t) ++i;
  const double h = t - samples[i].t;
  if (h <= 0.0) return samples[i].state;
  Vec4 out;
  if (!rk4_step(traj.kind, traj.bundle, samples[i].state, h, out))
    throw BoundaryEscape(Trajectory{traj.kind, traj.bundle, traj.dt, {}}, t);
  return out;
}

}  // namespace

double detect_period(double k, const TangentState& s0, double dt, double t_budget,
                     double return_tol) {
  if (!(k > 0.0) || !(k < 0.5))
    throw std::invalid_argument(
        "detect_period: requires the subcritical regime 0 < k < 1/2; orbits at or "
        "above the critical energy never close up");
  if (std::fabs(energy(s0) - k) > 1e-12)
    throw std::invalid_argument("detect_period: energy(s0) does not match k");
  if (!(return_tol > 0.0))
    throw std::invalid_argument("detect_period: return tolerance must be positive");

  const Trajectory traj = integrate(SystemKind::magnetic, s0, t_budget, dt);
  const Vec4 z0 = traj.samples.front().state;
  const double escape_radius = std::max(100.0 * return_tol, 1e-2);

  // Half the derivative of the squared distance to the start; its zero
  // crossing brackets the closest approach.
  const auto radial_rate = [&](const Vec4& z) {
    const Vec4 f = el_rhs(SystemKind::magnetic, z);
    double g = 0.0;
    for (int i = 0; i < 4; ++i) g += (z[i] - z0[i]) * f[i];
    return g;
  };

  bool escaped = false;
  const auto n = traj.samples.size();
  for (std::size_t i = 1; i + 1 < n; ++i) {
    const double d = dist4(traj.samples[i].state, z0);
    if (!escaped) {
      if (d > escape_radius) escaped = true;
      continue;
    }
    if (d > escape_radius) continue;  // not back in the neighborhood yet
    const double d_prev = dist4(traj.samples[i - 1].state, z0);
    const double d_next = dist4(traj.samples[i + 1].state, z0);
    if (d > d_prev || d > d_next) continue;  // inside the dip but not at its floor

    double lo = traj.samples[i - 1].t;
    double hi = traj.samples[i + 1].t;
    double g_lo = radial_rate(traj.samples[i - 1].state);
    if (g_lo > 0.0) continue;  // not a descending-to-ascending crossing
    for (int iter = 0; iter < 200 && hi - lo > 1e-13 * std::max(1.0, hi); ++iter) {
      const double mid = 0.5 * (lo + hi);
      const double g_mid = radial_rate(state_at(traj, mid));
      if (g_mid <= 0.0) {
        lo = mid;
        g_lo = g_mid;
      } else {
        hi = mid;
      }
    }
    const double tau = 0.5 * (lo + hi);
    if (dist4(state_at(traj, tau), z0) < return_tol) return tau;
  }
  throw NoReturn(
      "detect_period: no return to the initial state within the time budget "
      "(budget too short, or the orbit is not periodic)");
}

}  // namespace horoflow
