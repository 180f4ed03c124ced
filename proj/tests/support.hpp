#pragma once

#include <cmath>
#include <random>

#include "horoflow/geom.hpp"
#include "horoflow/mechanics.hpp"

namespace testutil {

using horoflow::Covector;
using horoflow::HalfPlanePoint;
using horoflow::TangentState;
using horoflow::TangentVector;

/// One generator per test case, always explicitly seeded, so failures replay.
inline std::mt19937 seeded(unsigned seed) { return std::mt19937(seed); }

inline HalfPlanePoint random_point(std::mt19937& gen, double x0, double x1,
                                   double y_lo, double y_hi) {
  std::uniform_real_distribution<double> ux(x0, x1);
  std::uniform_real_distribution<double> ulog(std::log(y_lo), std::log(y_hi));
  return HalfPlanePoint(ux(gen), std::exp(ulog(gen)));
}

inline TangentVector random_vector(std::mt19937& gen, double lo, double hi) {
  std::uniform_real_distribution<double> u(lo, hi);
  return TangentVector(u(gen), u(gen));
}

inline Covector random_covector(std::mt19937& gen, double lo, double hi) {
  std::uniform_real_distribution<double> u(lo, hi);
  return Covector(u(gen), u(gen));
}

/// |a - b| <= tol * max(1, |a|, |b|).
inline bool close_rel(double a, double b, double tol) {
  return std::fabs(a - b) <= tol * std::max({1.0, std::fabs(a), std::fabs(b)});
}

}  // namespace testutil
