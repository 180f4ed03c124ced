#include "horoflow/hj.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

namespace horoflow {

namespace {

int check_sign(int sign) {
  if (sign != 1 && sign != -1)
    throw std::invalid_argument("HJSolution: sign must be +1 or -1");
  return sign;
}

std::string fmt_g(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

}  // namespace

HJSolution::HJSolution(HJFamily f, TangencyPoint a, int sign, double c)
    : family_(f), a_(a), sign_(sign), c_(c) {
  if (!std::isfinite(c))
    throw std::invalid_argument("HJSolution: additive constant must be finite");
}

HJSolution HJSolution::magnetic_arctan(const TangencyPoint& a, double c) {
  return HJSolution(HJFamily::magnetic_arctan, a, 1, c);
}

HJSolution HJSolution::constant(double c) {
  return HJSolution(HJFamily::constant, TangencyPoint::infinity(), 1, c);
}

HJSolution HJSolution::log_vertical(int sign, double c) {
  return HJSolution(HJFamily::log_vertical, TangencyPoint::infinity(),
                    check_sign(sign), c);
}

HJSolution HJSolution::log_endpoint(const TangencyPoint& a, int sign, double c) {
  return HJSolution(HJFamily::log_endpoint, a, check_sign(sign), c);
}

HJSolution HJSolution::arcsinh_center(double a, int sign, double c) {
  return HJSolution(HJFamily::arcsinh_center, TangencyPoint::at(a),
                    check_sign(sign), c);
}

HJSolution HJSolution::adhoc_x() {
  return HJSolution(HJFamily::adhoc_x, TangencyPoint::infinity(), 1, 0.0);
}

SystemKind HJSolution::kind() const {
  switch (family_) {
    case HJFamily::magnetic_arctan:
    case HJFamily::constant:
    case HJFamily::adhoc_x:
      return SystemKind::magnetic;
    default:
      return SystemKind::kinetic;
  }
}

double HJSolution::evaluate(const HalfPlanePoint& q) const {
  switch (family_) {
    case HJFamily::magnetic_arctan: {
      if (a_.is_infinite()) return c_;
      // atan2 with y > 0 is the principal branch of arctan((x-a)/y).
      return 2.0 * std::atan2(q.x - a_.value(), q.y) + c_;
    }
    case HJFamily::constant:
      return c_;
    case HJFamily::log_vertical:
      return sign_ * std::log(q.y) + c_;
    case HJFamily::log_endpoint: {
      if (a_.is_infinite()) return sign_ * std::log(q.y) + c_;
      const double dx = q.x - a_.value();
      return sign_ * (std::log(q.y) - std::log(dx * dx + q.y * q.y)) + c_;
    }
    case HJFamily::arcsinh_center:
      return sign_ * std::asinh((q.x - a_.value()) / q.y) + c_;
    case HJFamily::adhoc_x:
      return q.x;
  }
  throw std::logic_error("HJSolution: unknown family");
}

Covector HJSolution::gradient(const HalfPlanePoint& q) const {
  switch (family_) {
    case HJFamily::magnetic_arctan: {
      if (a_.is_infinite()) return Covector(0.0, 0.0);
      const double dx = q.x - a_.value();
      const double d = dx * dx + q.y * q.y;
      return Covector(2.0 * q.y / d, -2.0 * dx / d);
    }
    case HJFamily::constant:
      return Covector(0.0, 0.0);
    case HJFamily::log_vertical:
      return Covector(0.0, sign_ / q.y);
    case HJFamily::log_endpoint: {
      if (a_.is_infinite()) return Covector(0.0, sign_ / q.y);
      const double dx = q.x - a_.value();
      const double d = dx * dx + q.y * q.y;
      return Covector(sign_ * -2.0 * dx / d, sign_ * (dx * dx - q.y * q.y) / (q.y * d));
    }
    case HJFamily::arcsinh_center: {
      const double dx = q.x - a_.value();
      const double rad = std::sqrt(dx * dx + q.y * q.y);
      return Covector(sign_ / rad, sign_ * -dx / (q.y * rad));
    }
    case HJFamily::adhoc_x:
      return Covector(1.0, 0.0);
  }
  throw std::logic_error("HJSolution: unknown family");
}

OneForm HJSolution::differential() const {
  HJSolution u = *this;
  return OneForm{[u](const HalfPlanePoint& q) { return u.gradient(q); },
                 "d(" + label() + ")"};
}

std::string HJSolution::label() const {
  std::string base;
  const char sign_char = sign_ > 0 ? '+' : '-';
  switch (family_) {
    case HJFamily::magnetic_arctan:
      base = "magnetic-arctan(a=" + a_.str() + ")";
      break;
    case HJFamily::constant:
      base = "constant";
      break;
    case HJFamily::log_vertical:
      base = std::string("log-vertical(") + sign_char + ")";
      break;
    case HJFamily::log_endpoint:
      base = "log-endpoint(a=" + a_.str() + "," + sign_char + ")";
      break;
    case HJFamily::arcsinh_center:
      base = "arcsinh(a=" + a_.str() + "," + sign_char + ")";
      break;
    case HJFamily::adhoc_x:
      base = "adhoc-x";
      break;
  }
  if (c_ != 0.0) base += ",c=" + fmt_g(c_);
  return base;
}

double hj_residual(SystemKind kind, const HalfPlanePoint& q, const Covector& grad,
                   double k) {
  const double y = q.y;
  const double grad2 = grad.px * grad.px + grad.py * grad.py;
  if (kind == SystemKind::magnetic)
    return 0.5 * y * y * grad2 - y * grad.px - (k - 0.5);
  if (k != 0.5)
    throw std::invalid_argument(
        "hj_residual: the kinetic residual is pinned to the level k = 1/2");
  return grad2 - 1.0 / (y * y);
}

double residual(SystemKind kind, const HJSolution& u, const HalfPlanePoint& q,
                double k) {
  return hj_residual(kind, q, u.gradient(q), k);
}

namespace {

double fd_step_at(const HalfPlanePoint& q, double fd_step) {
  return fd_step * std::max({1.0, std::fabs(q.x), q.y});
}

// The largest step any grid point will use; callers reject grids whose lowest
// row would be pushed across the boundary.
void require_fd_room(const GridSpec& grid, double fd_step) {
  const double max_abs_x = std::max(std::fabs(grid.x0), std::fabs(grid.x1));
  const double h_max = fd_step * std::max({1.0, max_abs_x, grid.y1});
  if (!(grid.y0 - h_max > kMinHeight))
    throw std::invalid_argument(
        "finite differences: grid sits too close to the boundary for the step");
}

}  // namespace

Covector fd_gradient(const HJSolution& u, const HalfPlanePoint& q, double fd_step) {
  const double h = fd_step_at(q, fd_step);
  if (!(q.y - h > kMinHeight))
    throw std::invalid_argument(
        "fd_gradient: point sits too close to the boundary for the step");
  const double ux = (u.evaluate(HalfPlanePoint(q.x + h, q.y)) -
                     u.evaluate(HalfPlanePoint(q.x - h, q.y))) /
                    (2.0 * h);
  const double uy = (u.evaluate(HalfPlanePoint(q.x, q.y + h)) -
                     u.evaluate(HalfPlanePoint(q.x, q.y - h))) /
                    (2.0 * h);
  return Covector(ux, uy);
}

ResidualStats residual_sweep(SystemKind kind, const HJSolution& u,
                             const GridSpec& grid, double k, bool use_fd_gradient,
                             Exec exec, double fd_step) {
  grid.validate();
  if (kind == SystemKind::kinetic && k != 0.5)
    throw std::invalid_argument(
        "residual_sweep: the kinetic residual is pinned to the level k = 1/2");
  if (use_fd_gradient) require_fd_room(grid, fd_step);

  std::vector<double> vals(grid.size());
  parallel_for(grid.size(), exec, [&](std::size_t i) {
    const HalfPlanePoint q = grid.point(i);
    const Covector g = use_fd_gradient ? fd_gradient(u, q, fd_step) : u.gradient(q);
    vals[i] = std::fabs(hj_residual(kind, q, g, k));
  });

  ResidualStats stats;
  double sum = 0.0;
  for (const double v : vals) {
    stats.max_abs = std::max(stats.max_abs, v);
    sum += v;
  }
  stats.mean_abs = sum / static_cast<double>(vals.size());
  return stats;
}

double gradient_mismatch_sweep(const HJSolution& u, const GridSpec& grid, Exec exec,
                               double fd_step) {
  grid.validate();
  require_fd_room(grid, fd_step);
  std::vector<double> vals(grid.size());
  parallel_for(grid.size(), exec, [&](std::size_t i) {
    const HalfPlanePoint q = grid.point(i);
    const Covector a = u.gradient(q);
    const Covector b = fd_gradient(u, q, fd_step);
    vals[i] = std::hypot(a.px - b.px, a.py - b.py);
  });
  double m = 0.0;
  for (const double v : vals) m = std::max(m, v);
  return m;
}

double check_closed(const OneForm& alpha, const GridSpec& grid, double fd_step,
                    Exec exec) {
  grid.validate();
  require_fd_room(grid, fd_step);
  std::vector<double> vals(grid.size());
  parallel_for(grid.size(), exec, [&](std::size_t i) {
    const HalfPlanePoint q = grid.point(i);
    const double h = fd_step_at(q, fd_step);
    const double dax_dy = (alpha(HalfPlanePoint(q.x, q.y + h)).px -
                           alpha(HalfPlanePoint(q.x, q.y - h)).px) /
                          (2.0 * h);
    const double day_dx = (alpha(HalfPlanePoint(q.x + h, q.y)).py -
                           alpha(HalfPlanePoint(q.x - h, q.y)).py) /
                          (2.0 * h);
    vals[i] = std::fabs(dax_dy - day_dx);
  });
  double m = 0.0;
  for (const double v : vals) m = std::max(m, v);
  return m;
}

namespace {

// 16-point Gauss-Legendre rule on [-1, 1] (positive abscissas; mirrored below).
constexpr double kGlNode[8] = {
    0.09501250983763744, 0.28160355077925891, 0.45801677765722739,
    0.61787624440264375, 0.75540440835500303, 0.86563120238783174,
    0.94457502307323258, 0.98940093499164993};
constexpr double kGlWeight[8] = {
    0.18945061045506850, 0.18260341504492359, 0.16915651939500254,
    0.14959598881657673, 0.12462897125553387, 0.09515851168249278,
    0.06225352393864789, 0.02715245941175409};

}  // namespace

double check_exact(const OneForm& alpha, const std::vector<HalfPlanePoint>& loop,
                   int panels_per_segment) {
  if (loop.size() < 3)
    throw std::invalid_argument("check_exact: a closed loop needs at least 3 vertices");
  if (panels_per_segment < 1)
    throw std::invalid_argument("check_exact: need at least one panel per segment");

  double total = 0.0;
  const std::size_t n = loop.size();
  for (std::size_t s = 0; s < n; ++s) {
    const HalfPlanePoint& p0 = loop[s];
    const HalfPlanePoint& p1 = loop[(s + 1) % n];
    const double ex = p1.x - p0.x;
    const double ey = p1.y - p0.y;
    const double panel = 1.0 / panels_per_segment;
    double seg = 0.0;
    for (int c = 0; c < panels_per_segment; ++c) {
      const double mid = (c + 0.5) * panel;
      double acc = 0.0;
      for (int g = 0; g < 8; ++g) {
        for (const double node : {-kGlNode[g], kGlNode[g]}) {
          const double u = mid + 0.5 * panel * node;
          const Covector a =
              alpha(HalfPlanePoint(p0.x + u * ex, p0.y + u * ey));
          acc += kGlWeight[g] * (a.px * ex + a.py * ey);
        }
      }
      seg += 0.5 * panel * acc;
    }
    total += seg;
  }
  return total;
}

double check_level(SystemKind kind, const HJSolution& u, const GridSpec& grid,
                   Exec exec) {
  grid.validate();
  std::vector<double> vals(grid.size());
  parallel_for(grid.size(), exec, [&](std::size_t i) {
    const HalfPlanePoint q = grid.point(i);
    vals[i] = std::fabs(hamiltonian(kind, CotangentState{q, u.gradient(q)}) - 0.5);
  });
  double m = 0.0;
  for (const double v : vals) m = std::max(m, v);
  return m;
}

double graph_deviation(SystemKind kind, const HJSolution& u,
                       const CotangentState& start, double T, double dt) {
  const Trajectory traj = integrate(kind, start, T, dt);
  double m = 0.0;
  for (std::size_t i = 0; i < traj.samples.size(); ++i) {
    const CotangentState s = traj.cotangent_state(i);
    const Covector g = u.gradient(s.q);
    m = std::max(m, dual_norm(s.q, Covector(s.p.px - g.px, s.p.py - g.py)));
  }
  return m;
}

double check_graph_invariance(SystemKind kind, const HJSolution& u,
                              const HalfPlanePoint& q0, double T, double dt) {
  const CotangentState start{q0, u.gradient(q0)};
  const double level = hamiltonian(kind, start);
  if (std::fabs(level - 0.5) > 1e-10)
    throw std::invalid_argument(
        "check_graph_invariance: start is not on the critical-level graph "
        "(H(q0, du(q0)) != 1/2); " + u.label() + " is not a solution there");
  return graph_deviation(kind, u, start, T, dt);
}

OneForm foliation_to_graph(const TangencyPoint& a) {
  return OneForm{
      [a](const HalfPlanePoint& q) {
        return legendre(SystemKind::magnetic,
                        TangentState{q, horocycle_unit_field(a, q)})
            .p;
      },
      "legendre(horocycle-field(a=" + a.str() + "))"};
}

std::vector<HJSolution> magnetic_catalog() {
  std::vector<HJSolution> out;
  for (const double a : tangency_set())
    out.push_back(HJSolution::magnetic_arctan(TangencyPoint::at(a)));
  out.push_back(HJSolution::magnetic_arctan(TangencyPoint::infinity()));
  out.push_back(HJSolution::constant());
  return out;
}

std::vector<HJSolution> kinetic_catalog() {
  std::vector<HJSolution> out;
  for (const int sign : {1, -1}) out.push_back(HJSolution::log_vertical(sign));
  for (const int sign : {1, -1}) {
    for (const double a : tangency_set())
      out.push_back(HJSolution::log_endpoint(TangencyPoint::at(a), sign));
    out.push_back(HJSolution::log_endpoint(TangencyPoint::infinity(), sign));
  }
  for (const int sign : {1, -1})
    for (const double a : tangency_set())
      out.push_back(HJSolution::arcsinh_center(a, sign));
  return out;
}

std::vector<HJSolution> full_catalog() {
  std::vector<HJSolution> out = magnetic_catalog();
  for (auto& u : kinetic_catalog()) out.push_back(std::move(u));
  return out;
}

VerifyReport verify_solution(const HJSolution& u, const VerifyOptions& options) {
  options.grid.validate();
  const SystemKind kind = u.kind();
  VerifyReport r;
  r.solution = u.label();
  r.kind = kind;
  r.grid = options.grid;
  r.k = options.k;

  const ResidualStats analytic =
      residual_sweep(kind, u, options.grid, options.k, false, options.exec);
  r.max_residual = analytic.max_abs;
  r.mean_residual = analytic.mean_abs;
  r.max_residual_fd =
      residual_sweep(kind, u, options.grid, options.k, true, options.exec,
                     options.fd_step)
          .max_abs;
  r.max_grad_mismatch =
      gradient_mismatch_sweep(u, options.grid, options.exec, options.fd_step);
  r.max_curl =
      check_closed(u.differential(), options.grid, options.fd_step, options.exec);
  r.loop_integral = check_exact(u.differential(), options.loop);
  r.max_level_deviation = check_level(kind, u, options.grid, options.exec);
  try {
    r.invariance_deviation =
        check_graph_invariance(kind, u, options.q0, options.T, options.dt);
  } catch (const std::invalid_argument&) {
    // The start violates the level precondition: not a solution there.
    r.invariance_deviation = std::numeric_limits<double>::quiet_NaN();
  }

  const Tolerances& tol = options.tol;
  const bool invariance_ok = std::isfinite(r.invariance_deviation) &&
                             r.invariance_deviation <= tol.invariance;
  r.pass = r.max_residual <= tol.residual_analytic &&
           r.max_residual_fd <= tol.residual_fd &&
           r.max_grad_mismatch <= tol.grad_mismatch && r.max_curl <= tol.curl &&
           std::fabs(r.loop_integral) <= tol.loop &&
           r.max_level_deviation <= tol.level && invariance_ok;
  return r;
}

}  // namespace horoflow
