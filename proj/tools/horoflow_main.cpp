#include <CLI11.hpp>

#include <cmath>
#include <iostream>
#include <numbers>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "horoflow/closed_forms.hpp"
#include "horoflow/config.hpp"
#include "horoflow/flows.hpp"
#include "horoflow/hj.hpp"
#include "horoflow/io.hpp"
#include "horoflow/mane.hpp"

namespace {

using namespace horoflow;

std::vector<double> parse_list(const std::string& flag, const std::string& s) {
  std::vector<double> out;
  std::size_t begin = 0;
  while (begin <= s.size()) {
    const std::size_t comma = s.find(',', begin);
    const std::string tok =
        s.substr(begin, comma == std::string::npos ? comma : comma - begin);
    std::size_t pos = 0;
    double v = 0.0;
    try {
      v = std::stod(tok, &pos);
    } catch (const std::exception&) {
      pos = std::string::npos;
    }
    if (pos != tok.size())
      throw std::invalid_argument(flag + ": bad number '" + tok + "'");
    out.push_back(v);
    if (comma == std::string::npos) break;
    begin = comma + 1;
  }
  if (out.empty()) throw std::invalid_argument(flag + ": empty list");
  return out;
}

std::pair<double, double> parse_pair(const std::string& flag, const std::string& s) {
  const std::vector<double> v = parse_list(flag, s);
  if (v.size() != 2)
    throw std::invalid_argument(flag + ": expected two comma-separated numbers");
  return {v[0], v[1]};
}

GridSpec parse_grid(const std::string& s) {
  const std::vector<double> v = parse_list("--grid", s);
  if (v.size() != 6)
    throw std::invalid_argument("--grid: expected x0,x1,nx,y0,y1,ny");
  GridSpec grid;
  grid.x0 = v[0];
  grid.x1 = v[1];
  grid.nx = static_cast<int>(v[2]);
  grid.y0 = v[3];
  grid.y1 = v[4];
  grid.ny = static_cast<int>(v[5]);
  grid.validate();
  return grid;
}

TangencyPoint parse_tangency(const std::string& flag, const std::string& s) {
  if (s == "inf" || s == "+inf" || s == "infinity") return TangencyPoint::infinity();
  std::size_t pos = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &pos);
  } catch (const std::exception&) {
    pos = std::string::npos;
  }
  if (pos != s.size())
    throw std::invalid_argument(flag + ": expected a real number or 'inf', got '" +
                                s + "'");
  return TangencyPoint::at(v);
}

int parse_sign(const std::string& s) {
  if (s == "+" || s == "+1" || s == "1") return 1;
  if (s == "-" || s == "-1") return -1;
  throw std::invalid_argument("--sign: expected + or -, got '" + s + "'");
}

SystemKind parse_system(const std::string& s) {
  if (s == "magnetic") return SystemKind::magnetic;
  if (s == "kinetic") return SystemKind::kinetic;
  throw std::invalid_argument("--system: expected magnetic or kinetic, got '" + s +
                              "'");
}

HalfPlanePoint parse_point(const std::string& flag, const std::string& s) {
  const auto [x, y] = parse_pair(flag, s);
  try {
    return HalfPlanePoint(x, y);
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(flag + ": " + e.what());
  }
}

void emit(const std::string& out_path, const std::string& content) {
  if (out_path.empty())
    std::cout << content;
  else
    atomic_write_file(out_path, content);
}

HJSolution build_solution(SystemKind system, const std::string& family,
                          const std::string& a_str, const std::string& sign_str,
                          double c) {
  const auto need_a = [&]() -> TangencyPoint {
    if (a_str.empty())
      throw std::invalid_argument("--family " + family + " requires --a");
    return parse_tangency("--a", a_str);
  };
  const auto expect = [&](SystemKind wanted) {
    if (system != wanted)
      throw std::invalid_argument("--family " + family + " solves the " +
                                  to_string(wanted) + " system; got --system " +
                                  to_string(system));
  };
  if (family == "arctan") {
    expect(SystemKind::magnetic);
    return HJSolution::magnetic_arctan(need_a(), c);
  }
  if (family == "constant") {
    expect(SystemKind::magnetic);
    return HJSolution::constant(c);
  }
  if (family == "adhoc-x") {
    expect(SystemKind::magnetic);
    return HJSolution::adhoc_x();
  }
  if (family == "log-vertical") {
    expect(SystemKind::kinetic);
    return HJSolution::log_vertical(parse_sign(sign_str), c);
  }
  if (family == "log-endpoint") {
    expect(SystemKind::kinetic);
    return HJSolution::log_endpoint(need_a(), parse_sign(sign_str), c);
  }
  if (family == "arcsinh") {
    expect(SystemKind::kinetic);
    const TangencyPoint a = need_a();
    if (a.is_infinite())
      throw std::invalid_argument("--family arcsinh has no member at a = inf");
    return HJSolution::arcsinh_center(a.value(), parse_sign(sign_str), c);
  }
  throw std::invalid_argument("--family: unknown family '" + family + "'");
}

/// Deterministic subcritical starts: unit directions at two alternating base
/// points, scaled to the requested energy level.
std::vector<TangentState> period_starts(double k, int samples) {
  const std::vector<HalfPlanePoint> bases{HalfPlanePoint(0.0, 1.0),
                                          HalfPlanePoint(3.0, 0.4)};
  std::mt19937 gen(20260816u);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  const double speed = std::sqrt(2.0 * k);
  std::vector<TangentState> out;
  out.reserve(static_cast<std::size_t>(samples));
  for (int i = 0; i < samples; ++i) {
    const HalfPlanePoint& q = bases[static_cast<std::size_t>(i) % bases.size()];
    const double theta = angle(gen);
    out.push_back(TangentState{
        q, TangentVector(speed * q.y * std::cos(theta),
                         speed * q.y * std::sin(theta))});
  }
  return out;
}

struct Flags {
  std::string config;
  std::string out;
  std::string system;
  std::string family;
  std::string a;
  std::string sign = "+";
  std::string q0;
  std::string v0;
  std::string p0;
  std::string grid;
  std::string format = "csv";
  std::string kind;
  std::string candidate = "arctan";
  std::string heights;
  std::string ratios;
  std::string speeds;
  double T = 0.0;
  double dt = 0.0;
  double k = 0.5;
  double c = 0.0;
  int samples = 5;
  int nodes = 0;
  bool serial = false;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Magnetic (horocycle) and geodesic flows on the hyperbolic half-plane: "
      "simulation, Hamilton-Jacobi verification, and critical-value reports"};
  app.require_subcommand(1);
  Flags f;

  const auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--config", f.config, "key=value config file");
    cmd->add_option("--out", f.out, "output file (default: stdout)");
  };

  CLI::App* sim = app.add_subcommand("simulate", "Integrate one orbit to CSV/JSON");
  sim->add_option("--system", f.system, "magnetic | kinetic")->required();
  sim->add_option("--q0", f.q0, "start point x,y")->required();
  sim->add_option("--v0", f.v0, "start velocity vx,vy (tangent flow)");
  sim->add_option("--p0", f.p0, "start momentum px,py (cotangent flow)");
  sim->add_option("--T", f.T, "integration horizon");
  sim->add_option("--dt", f.dt, "RK4 step");
  sim->add_option("--format", f.format, "csv | json");
  add_common(sim);

  CLI::App* ver = app.add_subcommand(
      "verify", "Run the full check battery for one Hamilton-Jacobi candidate");
  ver->add_option("--system", f.system, "magnetic | kinetic")->required();
  ver->add_option("--family", f.family,
                  "arctan | constant | log-vertical | log-endpoint | arcsinh | "
                  "adhoc-x")
      ->required();
  ver->add_option("--a", f.a, "tangency point (real or 'inf')");
  ver->add_option("--sign", f.sign, "+ | - (kinetic families)");
  ver->add_option("--c", f.c, "additive constant");
  ver->add_option("--k", f.k, "energy level (kinetic families require 0.5)");
  ver->add_option("--q0", f.q0, "invariance start point x,y");
  ver->add_option("--grid", f.grid, "x0,x1,nx,y0,y1,ny");
  ver->add_option("--T", f.T, "invariance horizon");
  ver->add_option("--dt", f.dt, "RK4 step");
  ver->add_flag("--serial", f.serial, "disable parallel sweeps");
  add_common(ver);

  CLI::App* per = app.add_subcommand(
      "period", "Measure periods of subcritical magnetic orbits at one level");
  per->add_option("--k", f.k, "energy level in (0, 1/2)")->required();
  per->add_option("--samples", f.samples, "number of start states")
      ->check(CLI::PositiveNumber);
  per->add_option("--dt", f.dt, "RK4 step");
  add_common(per);

  CLI::App* man = app.add_subcommand(
      "mane", "Sandwich the critical value between curve and graph bounds");
  man->add_option("--candidate", f.candidate, "arctan | constant | adhoc-x");
  man->add_option("--a", f.a, "tangency point for the arctan candidate");
  man->add_option("--grid", f.grid, "x0,x1,nx,y0,y1,ny");
  man->add_option("--nodes", f.nodes, "Simpson intervals per curve (even)");
  man->add_option("--heights", f.heights, "comma list of circle center heights");
  man->add_option("--ratios", f.ratios, "comma list of radius ratios in (0,1)");
  man->add_option("--speeds", f.speeds, "comma list of hyperbolic speeds");
  man->add_flag("--serial", f.serial, "disable parallel sweeps");
  add_common(man);

  CLI::App* fol = app.add_subcommand(
      "foliation", "Sample an invariant unit field over a grid to CSV");
  fol->add_option("--kind", f.kind,
                  "horocycle | geodesic-endpoint | geodesic-center | "
                  "geodesic-vertical")
      ->required();
  fol->add_option("--a", f.a, "tangency/center point (real; 'inf' where defined)");
  fol->add_option("--sign", f.sign, "+ | - (geodesic-vertical direction)");
  fol->add_option("--grid", f.grid, "x0,x1,nx,y0,y1,ny");
  add_common(fol);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    const RunDefaults defaults = f.config.empty() ? RunDefaults{} : load_config(f.config);
    const Exec exec = f.serial ? Exec::serial : Exec::parallel;

    if (sim->parsed()) {
      const SystemKind kind = parse_system(f.system);
      const HalfPlanePoint q0 = parse_point("--q0", f.q0);
      const double T = sim->count("--T") ? f.T : defaults.T;
      const double dt = sim->count("--dt") ? f.dt : defaults.dt;
      if (f.format != "csv" && f.format != "json")
        throw std::invalid_argument("--format: expected csv or json");
      if (f.v0.empty() == f.p0.empty())
        throw std::invalid_argument("simulate: pass exactly one of --v0 / --p0");
      const auto render = [&](const Trajectory& traj) {
        return f.format == "json" ? trajectory_json(traj) : trajectory_csv(traj);
      };
      try {
        Trajectory traj;
        if (!f.v0.empty()) {
          const auto [vx, vy] = parse_pair("--v0", f.v0);
          traj = integrate(kind, TangentState{q0, TangentVector(vx, vy)}, T, dt);
        } else {
          const auto [px, py] = parse_pair("--p0", f.p0);
          traj = integrate(kind, CotangentState{q0, Covector(px, py)}, T, dt);
        }
        emit(f.out, render(traj));
        return 0;
      } catch (const BoundaryEscape& e) {
        emit(f.out, render(e.partial()));
        std::cerr << "warning: " << e.what() << "; partial trajectory written\n";
        return 3;
      }
    }

    if (ver->parsed()) {
      const SystemKind system = parse_system(f.system);
      const HJSolution u = build_solution(system, f.family, f.a, f.sign, f.c);
      VerifyOptions opts;
      opts.grid = f.grid.empty() ? defaults.grid : parse_grid(f.grid);
      opts.k = f.k;
      opts.T = ver->count("--T") ? f.T : defaults.T;
      opts.dt = ver->count("--dt") ? f.dt : defaults.dt;
      opts.fd_step = defaults.fd_step;
      if (ver->count("--q0")) opts.q0 = parse_point("--q0", f.q0);
      opts.tol = defaults.tol;
      opts.exec = exec;
      const VerifyReport report = verify_solution(u, opts);
      emit(f.out, verify_report_json(report, opts.tol));
      return report.pass ? 0 : 4;
    }

    if (per->parsed()) {
      if (!(f.k > 0.0 && f.k < 0.5))
        throw std::invalid_argument(
            "period: orbits are periodic only in the subcritical regime "
            "0 < k < 1/2; at and above the critical level 1/2 no orbit closes "
            "up");
      const double dt = per->count("--dt") ? f.dt : defaults.dt;
      std::vector<PeriodSample> out;
      double lo = 0.0;
      double hi = 0.0;
      double sum = 0.0;
      for (const TangentState& s0 : period_starts(f.k, f.samples)) {
        const double period = detect_period(f.k, s0, dt);
        if (out.empty()) {
          lo = hi = period;
        } else {
          lo = std::min(lo, period);
          hi = std::max(hi, period);
        }
        sum += period;
        out.push_back(PeriodSample{s0, period});
      }
      const double mean = sum / static_cast<double>(out.size());
      const double spread = (hi - lo) / mean;
      const bool pass = spread < defaults.tol.period_spread;
      emit(f.out, period_report_json(f.k, dt, out, spread,
                                     defaults.tol.period_spread, pass));
      return pass ? 0 : 4;
    }

    if (man->parsed()) {
      if (f.a.empty()) f.a = "0";
      const HJSolution candidate =
          build_solution(SystemKind::magnetic, f.candidate, f.a, "+", 0.0);
      const GridSpec grid = f.grid.empty() ? defaults.grid : parse_grid(f.grid);
      CircleFamilyParams params;
      if (!f.heights.empty()) params.center_heights = parse_list("--heights", f.heights);
      if (!f.ratios.empty()) params.radius_ratios = parse_list("--ratios", f.ratios);
      if (!f.speeds.empty()) params.speeds = parse_list("--speeds", f.speeds);
      const int nodes = man->count("--nodes") ? f.nodes : defaults.quad_nodes;
      const CriticalEstimate est =
          estimate_critical_value(candidate, grid, params, nodes, exec);
      emit(f.out, mane_report_json(est, grid));
      return 0;
    }

    if (fol->parsed()) {
      const GridSpec grid = f.grid.empty() ? defaults.grid : parse_grid(f.grid);
      std::function<TangentVector(const HalfPlanePoint&)> field;
      if (f.kind == "horocycle") {
        const TangencyPoint a = parse_tangency("--a", f.a.empty() ? "inf" : f.a);
        field = [a](const HalfPlanePoint& q) { return horocycle_unit_field(a, q); };
      } else if (f.kind == "geodesic-endpoint") {
        const TangencyPoint a = parse_tangency("--a", f.a.empty() ? "inf" : f.a);
        field = [a](const HalfPlanePoint& q) {
          return geodesic_endpoint_unit_field(a, q);
        };
      } else if (f.kind == "geodesic-center") {
        const TangencyPoint a = parse_tangency("--a", f.a);
        if (a.is_infinite())
          throw std::invalid_argument(
              "--kind geodesic-center needs a finite --a");
        const double av = a.value();
        field = [av](const HalfPlanePoint& q) {
          return geodesic_center_unit_field(av, q);
        };
      } else if (f.kind == "geodesic-vertical") {
        const int direction = parse_sign(f.sign);
        field = [direction](const HalfPlanePoint& q) {
          return vertical_unit_field(direction, q);
        };
      } else {
        throw std::invalid_argument("--kind: unknown foliation '" + f.kind + "'");
      }
      emit(f.out, foliation_csv(grid, field));
      return 0;
    }
  } catch (const NoReturn& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 5;
  } catch (const BoundaryEscape& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
