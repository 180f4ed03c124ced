#include "horoflow/config.hpp"

#include <cctype>
#include <fstream>
#include <stdexcept>

namespace horoflow {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

double parse_double(const std::string& key, const std::string& value) {
  std::size_t pos = 0;
  double v = 0.0;
  try {
    v = std::stod(value, &pos);
  } catch (const std::exception&) {
    throw std::invalid_argument("config: bad number for " + key + ": '" + value + "'");
  }
  if (pos != value.size())
    throw std::invalid_argument("config: bad number for " + key + ": '" + value + "'");
  return v;
}

long long parse_integer(const std::string& key, const std::string& value) {
  std::size_t pos = 0;
  long long v = 0;
  try {
    v = std::stoll(value, &pos);
  } catch (const std::exception&) {
    throw std::invalid_argument("config: bad integer for " + key + ": '" + value + "'");
  }
  if (pos != value.size())
    throw std::invalid_argument("config: bad integer for " + key + ": '" + value + "'");
  return v;
}

}  // namespace

void apply_config_entry(RunDefaults& defaults, const std::string& key,
                        const std::string& value) {
  if (key == "dt")
    defaults.dt = parse_double(key, value);
  else if (key == "T")
    defaults.T = parse_double(key, value);
  else if (key == "quad_nodes")
    defaults.quad_nodes = static_cast<int>(parse_integer(key, value));
  else if (key == "fd_step")
    defaults.fd_step = parse_double(key, value);
  else if (key == "grid.x0")
    defaults.grid.x0 = parse_double(key, value);
  else if (key == "grid.x1")
    defaults.grid.x1 = parse_double(key, value);
  else if (key == "grid.nx")
    defaults.grid.nx = static_cast<int>(parse_integer(key, value));
  else if (key == "grid.y0")
    defaults.grid.y0 = parse_double(key, value);
  else if (key == "grid.y1")
    defaults.grid.y1 = parse_double(key, value);
  else if (key == "grid.ny")
    defaults.grid.ny = static_cast<int>(parse_integer(key, value));
  else if (key == "tol.residual")
    defaults.tol.residual_analytic = parse_double(key, value);
  else if (key == "tol.residual_fd")
    defaults.tol.residual_fd = parse_double(key, value);
  else if (key == "tol.grad")
    defaults.tol.grad_mismatch = parse_double(key, value);
  else if (key == "tol.level")
    defaults.tol.level = parse_double(key, value);
  else if (key == "tol.curl")
    defaults.tol.curl = parse_double(key, value);
  else if (key == "tol.loop")
    defaults.tol.loop = parse_double(key, value);
  else if (key == "tol.invariance")
    defaults.tol.invariance = parse_double(key, value);
  else if (key == "tol.zero_section")
    defaults.tol.zero_section = parse_double(key, value);
  else if (key == "tol.period_spread")
    defaults.tol.period_spread = parse_double(key, value);
  else
    throw std::invalid_argument("config: unknown key '" + key + "'");
}

RunDefaults load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("config: cannot open '" + path + "'");

  RunDefaults defaults;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const std::size_t eq = line.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("config: line " + std::to_string(lineno) +
                                  " of '" + path + "' is not key=value");
    apply_config_entry(defaults, trim(line.substr(0, eq)),
                       trim(line.substr(eq + 1)));
  }

  if (!(defaults.dt > 0.0))
    throw std::invalid_argument("config: dt must be positive");
  if (!(defaults.T > 0.0))
    throw std::invalid_argument("config: T must be positive");
  if (defaults.quad_nodes < 2 || defaults.quad_nodes % 2 != 0)
    throw std::invalid_argument("config: quad_nodes must be even and >= 2");
  if (!(defaults.fd_step > 0.0))
    throw std::invalid_argument("config: fd_step must be positive");
  defaults.grid.validate();
  return defaults;
}

std::vector<double> tangency_set() { return {-2.0, 0.0, 3.0}; }

std::vector<std::pair<double, double>> curve_oracle_set() {
  std::vector<std::pair<double, double>> out;
  for (const double a : {0.0, 2.0, -2.0})
    for (const double b : {0.5, 1.0, 2.0}) out.emplace_back(a, b);
  return out;
}

std::vector<HalfPlanePoint> invariance_start_points() {
  return {HalfPlanePoint(0.0, 1.0),   HalfPlanePoint(1.0, 0.8),
          HalfPlanePoint(-1.0, 1.2),  HalfPlanePoint(2.0, 0.6),
          HalfPlanePoint(-2.0, 1.5),  HalfPlanePoint(0.5, 2.0),
          HalfPlanePoint(-0.5, 0.7),  HalfPlanePoint(1.5, 1.1),
          HalfPlanePoint(-1.5, 0.9),  HalfPlanePoint(3.0, 1.3)};
}

std::vector<TangentState> conservation_states() {
  return {TangentState{HalfPlanePoint(0.0, 1.0), TangentVector(1.0, 0.0)},
          TangentState{HalfPlanePoint(0.0, 1.0), TangentVector(0.5, 0.0)},
          TangentState{HalfPlanePoint(3.0, 0.4), TangentVector(0.2, -0.3)},
          TangentState{HalfPlanePoint(0.0, 1.0), TangentVector(1.1, 0.3)},
          TangentState{HalfPlanePoint(-2.0, 2.0), TangentVector(-1.5, 0.8)}};
}

std::vector<HalfPlanePoint> exactness_loop() {
  return {HalfPlanePoint(-1.0, 1.0), HalfPlanePoint(1.0, 1.0),
          HalfPlanePoint(1.0, 3.0), HalfPlanePoint(-1.0, 3.0)};
}

}  // namespace horoflow
