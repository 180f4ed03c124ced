#pragma once

#include <cstddef>
#include <stdexcept>

#include "horoflow/geom.hpp"

namespace horoflow {

/// A rectangular evaluation grid in the half-plane, endpoints included,
/// row-major over x.  The default is the standard verification grid; its
/// extents are versioned together with the pinned results computed on it.
struct GridSpec {
  double x0 = -5.0;
  double x1 = 5.0;
  int nx = 101;
  double y0 = 0.1;
  double y1 = 10.0;
  int ny = 101;

  void validate() const {
    if (nx < 2 || ny < 2)
      throw std::invalid_argument("GridSpec: need at least 2 nodes per axis");
    if (!(x1 > x0))
      throw std::invalid_argument("GridSpec: x1 must exceed x0");
    if (!(y0 > kMinHeight) || !(y1 > y0))
      throw std::invalid_argument("GridSpec: need kMinHeight < y0 < y1");
  }

  std::size_t size() const {
    return static_cast<std::size_t>(nx) * static_cast<std::size_t>(ny);
  }
  double x_at(int i) const { return x0 + (x1 - x0) * i / (nx - 1); }
  double y_at(int j) const { return y0 + (y1 - y0) * j / (ny - 1); }
  HalfPlanePoint point(std::size_t flat) const {
    const int i = static_cast<int>(flat % static_cast<std::size_t>(nx));
    const int j = static_cast<int>(flat / static_cast<std::size_t>(nx));
    return HalfPlanePoint(x_at(i), y_at(j));
  }
};

inline GridSpec standard_grid() { return GridSpec{}; }

}  // namespace horoflow
