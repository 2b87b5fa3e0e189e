#pragma once

#include <cmath>
#include <numbers>

namespace maxsurf {

/// Points closer than this to the lattice {(pi k, 0)} are treated as singular.
inline constexpr double kSingularTolerance = 1e-9;

/// Index k of the nearest lattice point (pi k, 0).
inline long nearest_lattice_index(double x) {
  return std::lround(x / std::numbers::pi);
}

/// Euclidean distance from (x, y) to the singular lattice {(pi k, 0) : k in Z}.
inline double lattice_distance(double x, double y) {
  const double dx = x - std::numbers::pi * static_cast<double>(nearest_lattice_index(x));
  return std::hypot(dx, y);
}

inline bool is_lattice_point(double x, double y) {
  return lattice_distance(x, y) < kSingularTolerance;
}

}  // namespace maxsurf
