#pragma once

// Flux of a space-like graph t = f(x, y) through a closed plane curve C:
//
//   mu = integral_C <grad f, nu> / sqrt(1 - |grad f|^2) ds,
//
// nu the outward unit normal.  For a maximal graph the flux depends only on
// the singular points enclosed by C, and is nonzero exactly at essential
// singularities.

#include <array>
#include <functional>
#include <optional>
#include <variant>
#include <vector>

#include "maxsurf/catenoid.hpp"
#include "maxsurf/surface.hpp"

namespace maxsurf {

inline constexpr int kDefaultFluxNodes = 256;
inline constexpr double kDefaultFluxRadius = 0.7;

struct Circle {
  Vec2 center;
  double radius = 0;
};

struct Rectangle {
  Vec2 center;
  double half_width = 0;
  double half_height = 0;
};

class Contour {
 public:
  using Shape = std::variant<Circle, Rectangle>;

  /// ContourError unless radius > 0 and nodes >= 16.
  static Contour circle(Vec2 center, double radius, int nodes = kDefaultFluxNodes);
  /// ContourError unless both half extents are positive and nodes >= 16.
  /// Nodes are split evenly over the four edges.
  static Contour rectangle(Vec2 center, double half_width, double half_height,
                           int nodes = kDefaultFluxNodes);

  const Shape& shape() const { return shape_; }
  int nodes() const { return nodes_; }

  bool encloses(Vec2 p) const;
  /// Distance from p to the curve itself.
  double distance_to(Vec2 p) const;
  /// Axis-aligned bounding box {x0, x1, y0, y1}.
  std::array<double, 4> bounds() const;

 private:
  Contour(Shape s, int nodes) : shape_(s), nodes_(nodes) {}
  Shape shape_;
  int nodes_;
};

/// A gradient field together with the location of its singular points.
struct GradientField {
  std::function<Vec2(double, double)> gradient;
  /// Singular points inside the box [x0, x1] x [y0, y1].
  std::function<std::vector<Vec2>(double, double, double, double)> singular_points;
};

GradientField surface_gradient_field(const SurfaceFamily& family);
/// Planar (n = 2) catenoid centred at `center`; MisuseError for n != 2.
GradientField catenoid_gradient_field(const CatenoidParams& params, Vec2 center = {});
GradientField constant_gradient_field(Vec2 slope);

/// Singular points of `field` strictly inside `contour`.
std::vector<Vec2> enclosed_singularities(const GradientField& field, const Contour& contour);

/// Signed flux with the outward normal.  Circles use the trapezoidal rule on
/// the periodic parametrisation, rectangles Gauss-Legendre per edge.
/// ContourError if the curve passes through a singular point or encloses more
/// than one; SpaceLikenessError if |grad f| >= 1 at a node.
double flux_integral(const GradientField& field, const Contour& contour);

/// 4 alpha' K(alpha'), the flux magnitude at every A_k of M(alpha).
double closed_form_flux(const SurfaceFamily& family);

/// 4 integral_0^{pi/2} alpha' dt / sqrt(1 - alpha'^2 cos^2 t) by adaptive quadrature.
double closed_form_flux_quadrature(const SurfaceFamily& family);

/// Signed outward flux expected at A_k: -(-1)^k 4 alpha' K(alpha').  Even k are
/// peaks of the surface (cone opening downward), so the gradient points inward.
double signed_flux_at(const SurfaceFamily& family, long k);

struct FluxReport {
  double value = 0;
  Contour contour = Contour::circle({}, kDefaultFluxRadius);
  std::optional<double> closed_form;
  /// ||value| - closed_form|; magnitude is the sign-convention-free invariant.
  std::optional<double> abs_deviation;
};

/// Flux of M(alpha) around a circle about A_k, compared with the closed form.
/// ContourError unless radius < pi, the lattice spacing.
FluxReport flux_at_singularity(const SurfaceFamily& family, long k,
                               double radius = kDefaultFluxRadius,
                               int nodes = kDefaultFluxNodes);

/// Max pairwise deviation of the fluxes through `contours`.  MisuseError if
/// the contours do not all enclose the same singular points.
double contour_invariance(const GradientField& field, const std::vector<Contour>& contours);

/// |flux| > tolerance.  DomainError unless tolerance > 0.
bool is_essential(double flux_value, double tolerance);

}  // namespace maxsurf
