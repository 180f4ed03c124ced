#include "horoflow/io.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace horoflow {

using ordered_json = nlohmann::ordered_json;

void atomic_write_file(const std::string& path, const std::string& content) {
  const std::filesystem::path target(path);
  if (target.has_parent_path())
    std::filesystem::create_directories(target.parent_path());
  const std::filesystem::path tmp = target.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open '" + tmp.string() + "' for writing");
    out << content;
    out.flush();
    if (!out) throw std::runtime_error("short write to '" + tmp.string() + "'");
  }
  std::error_code ec;
  std::filesystem::rename(tmp, target, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw std::runtime_error("cannot rename '" + tmp.string() + "' to '" +
                             target.string() + "': " + ec.message());
  }
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

namespace {

const char* tangent_header = "t,x,y,vx,vy,E,px";
const char* cotangent_header = "t,x,y,px,py,H";

std::string schema_comment() {
  return "# schema_version=" + std::to_string(kSchemaVersion) + "\n";
}

ordered_json grid_json(const GridSpec& grid) {
  return ordered_json{{"x0", grid.x0}, {"x1", grid.x1}, {"nx", grid.nx},
                      {"y0", grid.y0}, {"y1", grid.y1}, {"ny", grid.ny}};
}

ordered_json state_json(const TangentState& s) {
  return ordered_json{{"x", s.q.x}, {"y", s.q.y}, {"vx", s.v.vx}, {"vy", s.v.vy}};
}

}  // namespace

std::string trajectory_csv(const Trajectory& traj) {
  std::string out = schema_comment();
  const bool tangent = traj.bundle == Bundle::tangent;
  out += tangent ? tangent_header : cotangent_header;
  out += '\n';
  for (const TrajectorySample& s : traj.samples) {
    out += format_double(s.t);
    for (const double v : s.state) {
      out += ',';
      out += format_double(v);
    }
    out += ',';
    out += format_double(s.energy);
    if (tangent) {
      out += ',';
      out += format_double(s.momentum_x);
    }
    out += '\n';
  }
  return out;
}

std::string trajectory_json(const Trajectory& traj) {
  const bool tangent = traj.bundle == Bundle::tangent;
  ordered_json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["kind"] = to_string(traj.kind);
  doc["bundle"] = tangent ? "tangent" : "cotangent";
  doc["dt"] = traj.dt;
  doc["columns"] = tangent
                       ? ordered_json{"t", "x", "y", "vx", "vy", "E", "px"}
                       : ordered_json{"t", "x", "y", "px", "py", "H"};
  ordered_json rows = ordered_json::array();
  for (const TrajectorySample& s : traj.samples) {
    ordered_json row = ordered_json::array();
    row.push_back(s.t);
    for (const double v : s.state) row.push_back(v);
    row.push_back(s.energy);
    if (tangent) row.push_back(s.momentum_x);
    rows.push_back(std::move(row));
  }
  doc["rows"] = std::move(rows);
  return doc.dump(2) + "\n";
}

std::string verify_report_json(const VerifyReport& report, const Tolerances& tol) {
  ordered_json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["solution"] = report.solution;
  doc["kind"] = to_string(report.kind);
  doc["k"] = report.k;
  doc["grid"] = grid_json(report.grid);
  doc["checks"] = ordered_json{{"max_residual", report.max_residual},
                               {"mean_residual", report.mean_residual},
                               {"max_residual_fd", report.max_residual_fd},
                               {"max_grad_mismatch", report.max_grad_mismatch},
                               {"max_curl", report.max_curl},
                               {"loop_integral", report.loop_integral},
                               {"max_level_deviation", report.max_level_deviation},
                               {"invariance_deviation", report.invariance_deviation}};
  doc["tolerances"] = ordered_json{{"residual", tol.residual_analytic},
                                   {"residual_fd", tol.residual_fd},
                                   {"grad_mismatch", tol.grad_mismatch},
                                   {"level", tol.level},
                                   {"curl", tol.curl},
                                   {"loop", tol.loop},
                                   {"invariance", tol.invariance}};
  doc["pass"] = report.pass;
  return doc.dump(2) + "\n";
}

std::string period_report_json(double k, double dt,
                               const std::vector<PeriodSample>& samples,
                               double max_relative_spread, double tol, bool pass) {
  ordered_json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["k"] = k;
  doc["dt"] = dt;
  ordered_json arr = ordered_json::array();
  for (const PeriodSample& s : samples) {
    ordered_json entry;
    entry["start"] = state_json(s.s0);
    entry["period"] = s.period;
    arr.push_back(std::move(entry));
  }
  doc["samples"] = std::move(arr);
  doc["max_relative_spread"] = max_relative_spread;
  doc["tolerance"] = tol;
  doc["pass"] = pass;
  return doc.dump(2) + "\n";
}

std::string mane_report_json(const CriticalEstimate& estimate, const GridSpec& grid) {
  ordered_json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["candidate"] = estimate.candidate;
  doc["curve_family"] = estimate.curve_family;
  doc["curve_count"] = estimate.curve_count;
  doc["simpson_intervals"] = estimate.simpson_intervals;
  doc["grid"] = grid_json(grid);
  doc["upper_bound"] = estimate.upper;
  doc["lower_bound"] = estimate.lower;
  doc["gap"] = estimate.upper - estimate.lower;
  return doc.dump(2) + "\n";
}

std::string foliation_csv(
    const GridSpec& grid,
    const std::function<TangentVector(const HalfPlanePoint&)>& field) {
  grid.validate();
  std::string out = schema_comment();
  out += "x,y,vx,vy\n";
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const HalfPlanePoint q = grid.point(i);
    const TangentVector v = field(q);
    out += format_double(q.x);
    out += ',';
    out += format_double(q.y);
    out += ',';
    out += format_double(v.vx);
    out += ',';
    out += format_double(v.vy);
    out += '\n';
  }
  return out;
}

}  // namespace horoflow
