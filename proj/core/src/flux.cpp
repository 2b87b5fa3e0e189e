#include "maxsurf/flux.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "maxsurf/errors.hpp"
#include "maxsurf/lattice.hpp"
#include "maxsurf/quadrature.hpp"

namespace maxsurf {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kMinNodes = 16;

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

double integrand(const GradientField& field, Vec2 p, Vec2 normal) {
  const Vec2 g = field.gradient(p.x, p.y);
  const double n2 = g.x * g.x + g.y * g.y;
  if (!(n2 < 1))
    throw SpaceLikenessError("flux_integral: |grad f| >= 1 at (" + std::to_string(p.x) + ", " +
                             std::to_string(p.y) + ")");
  return (g.x * normal.x + g.y * normal.y) / std::sqrt(1 - n2);
}

double circle_flux(const GradientField& field, const Circle& c, int nodes) {
  double sum = 0;
  for (int j = 0; j < nodes; ++j) {
    const double theta = 2 * kPi * j / nodes;
    const Vec2 nu{std::cos(theta), std::sin(theta)};
    sum += integrand(field, {c.center.x + c.radius * nu.x, c.center.y + c.radius * nu.y}, nu);
  }
  return sum * 2 * kPi * c.radius / nodes;
}

double rectangle_flux(const GradientField& field, const Rectangle& r, int nodes) {
  const GaussLegendreRule rule = gauss_legendre(nodes / 4);
  const double cx = r.center.x, cy = r.center.y, hw = r.half_width, hh = r.half_height;
  struct Edge {
    Vec2 mid, dir, normal;
    double half_length;
  };
  const Edge edges[4] = {
      {{cx, cy - hh}, {1, 0}, {0, -1}, hw},
      {{cx + hw, cy}, {0, 1}, {1, 0}, hh},
      {{cx, cy + hh}, {-1, 0}, {0, 1}, hw},
      {{cx - hw, cy}, {0, -1}, {-1, 0}, hh},
  };
  double total = 0;
  for (const Edge& e : edges) {
    double sum = 0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      const double s = e.half_length * rule.nodes[i];
      sum += rule.weights[i] * integrand(field, {e.mid.x + s * e.dir.x, e.mid.y + s * e.dir.y}, e.normal);
    }
    total += e.half_length * sum;
  }
  return total;
}

bool same_point(Vec2 a, Vec2 b) { return std::hypot(a.x - b.x, a.y - b.y) < kSingularTolerance; }

}  // namespace

Contour Contour::circle(Vec2 center, double radius, int nodes) {
  if (!std::isfinite(center.x) || !std::isfinite(center.y))
    throw ContourError("circle: non-finite center");
  if (!(radius > 0) || !std::isfinite(radius)) throw ContourError("circle: radius must be positive");
  if (nodes < kMinNodes) throw ContourError("circle: need at least 16 nodes");
  return Contour(Circle{center, radius}, nodes);
}

Contour Contour::rectangle(Vec2 center, double half_width, double half_height, int nodes) {
  if (!std::isfinite(center.x) || !std::isfinite(center.y))
    throw ContourError("rectangle: non-finite center");
  if (!(half_width > 0) || !std::isfinite(half_width) || !(half_height > 0) ||
      !std::isfinite(half_height))
    throw ContourError("rectangle: half extents must be positive");
  if (nodes < kMinNodes) throw ContourError("rectangle: need at least 16 nodes");
  return Contour(Rectangle{center, half_width, half_height}, nodes);
}

bool Contour::encloses(Vec2 p) const {
  return std::visit(Overloaded{
                        [p](const Circle& c) {
                          return std::hypot(p.x - c.center.x, p.y - c.center.y) < c.radius;
                        },
                        [p](const Rectangle& r) {
                          return std::fabs(p.x - r.center.x) < r.half_width &&
                                 std::fabs(p.y - r.center.y) < r.half_height;
                        },
                    },
                    shape_);
}

double Contour::distance_to(Vec2 p) const {
  return std::visit(
      Overloaded{
          [p](const Circle& c) {
            return std::fabs(std::hypot(p.x - c.center.x, p.y - c.center.y) - c.radius);
          },
          [p](const Rectangle& r) {
            const double dx = std::fabs(p.x - r.center.x) - r.half_width;
            const double dy = std::fabs(p.y - r.center.y) - r.half_height;
            if (dx <= 0 && dy <= 0) return std::min(-dx, -dy);
            return std::hypot(std::max(dx, 0.0), std::max(dy, 0.0));
          },
      },
      shape_);
}

std::array<double, 4> Contour::bounds() const {
  return std::visit(Overloaded{
                        [](const Circle& c) {
                          return std::array<double, 4>{c.center.x - c.radius, c.center.x + c.radius,
                                                       c.center.y - c.radius, c.center.y + c.radius};
                        },
                        [](const Rectangle& r) {
                          return std::array<double, 4>{
                              r.center.x - r.half_width, r.center.x + r.half_width,
                              r.center.y - r.half_height, r.center.y + r.half_height};
                        },
                    },
                    shape_);
}

GradientField surface_gradient_field(const SurfaceFamily& family) {
  return {
      [family](double x, double y) { return family.gradient(x, y); },
      [family](double x0, double x1, double y0, double y1) {
        std::vector<Vec2> out;
        if (y0 <= 0 && 0 <= y1) out = family.singular_points(x0, x1);
        return out;
      },
  };
}

GradientField catenoid_gradient_field(const CatenoidParams& params, Vec2 center) {
  if (params.n() != 2) throw MisuseError("catenoid_gradient_field: planar flux needs n = 2");
  return {
      [params, center](double x, double y) {
        const double dx = x - center.x, dy = y - center.y;
        const double r = std::hypot(dx, dy);
        if (r == 0) throw SingularPointError("catenoid gradient: singular origin");
        const double g = catenoid_gradient_norm(params, r);
        return Vec2{g * dx / r, g * dy / r};
      },
      [center](double x0, double x1, double y0, double y1) {
        std::vector<Vec2> out;
        if (x0 <= center.x && center.x <= x1 && y0 <= center.y && center.y <= y1) out.push_back(center);
        return out;
      },
  };
}

GradientField constant_gradient_field(Vec2 slope) {
  return {
      [slope](double, double) { return slope; },
      [](double, double, double, double) { return std::vector<Vec2>{}; },
  };
}

namespace {

std::vector<Vec2> nearby_singularities(const GradientField& field, const Contour& contour) {
  const auto b = contour.bounds();
  const double pad = 1e-6;
  return field.singular_points(b[0] - pad, b[1] + pad, b[2] - pad, b[3] + pad);
}

}  // namespace

std::vector<Vec2> enclosed_singularities(const GradientField& field, const Contour& contour) {
  std::vector<Vec2> inside;
  for (const Vec2& p : nearby_singularities(field, contour))
    if (contour.encloses(p)) inside.push_back(p);
  return inside;
}

double flux_integral(const GradientField& field, const Contour& contour) {
  std::size_t inside = 0;
  for (const Vec2& p : nearby_singularities(field, contour)) {
    if (contour.distance_to(p) < kSingularTolerance)
      throw ContourError("flux_integral: contour passes through a singular point");
    if (contour.encloses(p)) ++inside;
  }
  if (inside > 1) throw ContourError("flux_integral: contour encloses more than one singular point");
  return std::visit(Overloaded{
                        [&](const Circle& c) { return circle_flux(field, c, contour.nodes()); },
                        [&](const Rectangle& r) { return rectangle_flux(field, r, contour.nodes()); },
                    },
                    contour.shape());
}

double closed_form_flux(const SurfaceFamily& family) {
  return 4 * family.alpha_prime() * family.K_alpha_prime();
}

double closed_form_flux_quadrature(const SurfaceFamily& family) {
  const double ap = family.alpha_prime();
  return 4 * adaptive_simpson(
                 [ap](double t) {
                   const double c = std::cos(t);
                   return ap / std::sqrt(1 - ap * ap * c * c);
                 },
                 0.0, kPi / 2, 1e-14);
}

double signed_flux_at(const SurfaceFamily& family, long k) {
  return (k % 2 == 0 ? -1.0 : 1.0) * closed_form_flux(family);
}

FluxReport flux_at_singularity(const SurfaceFamily& family, long k, double radius, int nodes) {
  if (!(radius < kPi)) throw ContourError("flux_at_singularity: radius must be below pi");
  const Contour contour = Contour::circle({kPi * static_cast<double>(k), 0.0}, radius, nodes);
  FluxReport report;
  report.contour = contour;
  report.value = flux_integral(surface_gradient_field(family), contour);
  report.closed_form = closed_form_flux(family);
  report.abs_deviation = std::fabs(std::fabs(report.value) - *report.closed_form);
  return report;
}

double contour_invariance(const GradientField& field, const std::vector<Contour>& contours) {
  if (contours.empty()) return 0;
  const std::vector<Vec2> reference = enclosed_singularities(field, contours.front());
  double lo = 0, hi = 0;
  for (std::size_t i = 0; i < contours.size(); ++i) {
    const std::vector<Vec2> here = enclosed_singularities(field, contours[i]);
    const bool same = here.size() == reference.size() &&
                      std::is_permutation(here.begin(), here.end(), reference.begin(), same_point);
    if (!same) throw MisuseError("contour_invariance: contours enclose different singular points");
    const double value = flux_integral(field, contours[i]);
    lo = i == 0 ? value : std::min(lo, value);
    hi = i == 0 ? value : std::max(hi, value);
  }
  return hi - lo;
}

bool is_essential(double flux_value, double tolerance) {
  if (!(tolerance > 0)) throw DomainError("is_essential: tolerance must be positive");
  return std::fabs(flux_value) > tolerance;
}

}  // namespace maxsurf
