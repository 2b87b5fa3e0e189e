#include "maxsurf/surface.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "maxsurf/errors.hpp"
#include "maxsurf/lattice.hpp"

namespace maxsurf {

SurfaceFamily::SurfaceFamily(Modulus modulus)
    : modulus_(modulus),
      k_alpha_(complete_K(modulus.alpha())),
      k_alpha_prime_(complete_K(modulus.alpha_prime())) {}

Vec2 SurfaceFamily::gradient(double x, double y) const {
  if (!std::isfinite(x) || !std::isfinite(y)) throw DomainError("gradient: non-finite point");
  if (is_lattice_point(x, y)) throw SingularPointError("gradient: singular point (pi k, 0)");
  const double a = modulus_.alpha(), ap = modulus_.alpha_prime();
  const double sech = 1 / std::cosh(y), th = std::tanh(y);
  const double sx = std::sin(x), cx = std::cos(x);
  const double complement = th * th + sx * sx * sech * sech;
  const double d = std::sqrt(complement * (ap * ap + a * a * complement));
  return {-ap * sx * sech / d, -ap * cx * th * sech / d};
}

GradientNorm SurfaceFamily::gradient_norm(double x, double y) const {
  if (!std::isfinite(x) || !std::isfinite(y)) throw DomainError("gradient_norm: non-finite point");
  if (is_lattice_point(x, y)) return {1.0, true};
  const double a = modulus_.alpha(), ap = modulus_.alpha_prime();
  const double sech = 1 / std::cosh(y), th = std::tanh(y);
  const double sx = std::sin(x);
  const double complement = th * th + sx * sx * sech * sech;
  return {ap * sech / std::sqrt(ap * ap + a * a * complement), false};
}

SurfaceSample SurfaceFamily::sample(double x, double y) const {
  const GradientNorm g = gradient_norm(x, y);
  return {{x, y, height(x, y)}, g.value, g.singular};
}

double maximal_equation_residual(const std::function<long double(long double, long double)>& u,
                                 double ux, double uy, double x, double y, double h) {
  const long double lx = x, ly = y, lh = h;
  const long double c = u(lx, ly);
  const long double uxx = (u(lx + lh, ly) - 2 * c + u(lx - lh, ly)) / (lh * lh);
  const long double uyy = (u(lx, ly + lh) - 2 * c + u(lx, ly - lh)) / (lh * lh);
  const long double uxy = (u(lx + lh, ly + lh) - u(lx + lh, ly - lh) - u(lx - lh, ly + lh) +
                           u(lx - lh, ly - lh)) /
                          (4 * lh * lh);
  const long double gx = ux, gy = uy;
  return static_cast<double>((1 - gy * gy) * uxx + 2 * gx * gy * uxy + (1 - gx * gx) * uyy);
}

double SurfaceFamily::pde_residual(double x, double y, double h) const {
  if (!(h > 0) || h > 1e-2) throw DomainError("pde_residual: step must lie in (0, 1e-2]");
  if (!std::isfinite(x) || !std::isfinite(y)) throw DomainError("pde_residual: non-finite point");
  if (lattice_distance(x, y) <= 2 * h)
    throw ProximityError("pde_residual: stencil reaches the singular lattice");
  const Vec2 g = gradient(x, y);
  return maximal_equation_residual(
      [this](long double px, long double py) { return height_as<long double>(px, py); }, g.x, g.y,
      x, y, h);
}

std::vector<Vec2> SurfaceFamily::singular_points(double x0, double x1) const {
  std::vector<Vec2> out;
  if (!std::isfinite(x0) || !std::isfinite(x1) || x0 > x1) return out;
  const double pi = std::numbers::pi;
  for (auto k = static_cast<long>(std::floor(x0 / pi)); k <= static_cast<long>(std::ceil(x1 / pi)); ++k) {
    const double xk = pi * static_cast<double>(k);
    if (xk >= x0 && xk <= x1) out.push_back({xk, 0.0});
  }
  return out;
}

double SurfaceFamily::lightcone_ratio(long k, Vec2 direction, double r) const {
  if (!(r > 0) || r >= std::numbers::pi / 2)
    throw DomainError("lightcone_ratio: radius must lie in (0, pi/2)");
  const double len = std::hypot(direction.x, direction.y);
  if (!(len > 0) || !std::isfinite(len)) throw DomainError("lightcone_ratio: zero direction");
  const double xk = std::numbers::pi * static_cast<double>(k);
  const double sign = (k % 2 == 0) ? 1.0 : -1.0;
  const double apex = height(xk, 0.0);
  const double off = height(xk + r * direction.x / len, r * direction.y / len);
  return sign * (apex - off) / r;
}

double profile_F_prime(double eta, const Modulus& modulus) {
  // 2 e^{-|eta|} / sqrt(1 + 2 k t + t^2), t = e^{-2 |eta|}.
  const double t = std::exp(-2 * std::fabs(eta));
  return 2 * std::exp(-std::fabs(eta)) / std::sqrt(1 + 2 * modulus.k() * t + t * t);
}

double profile_F(double eta, const Modulus& modulus) {
  const double th = std::tanh(eta);
  const double sech = 1 / std::cosh(eta);
  return modulus.alpha_prime() * detail::arcsn_unchecked(th, sech * sech, modulus.alpha());
}

double profile_ode_residual(double eta, const Modulus& modulus, double h) {
  if (!(h > 0) || h > 1e-2) throw DomainError("profile_ode_residual: step must lie in (0, 1e-2]");
  if (!std::isfinite(eta)) throw DomainError("profile_ode_residual: non-finite eta");
  const double second =
      (profile_F_prime(eta + h, modulus) - profile_F_prime(eta - h, modulus)) / (2 * h);
  // (1/2) F'^3 sinh(2 eta) = sign(eta) F' q^2 (1 - e^{-4|eta|}) / 4 with q = F' e^{|eta|}.
  const double ae = std::fabs(eta);
  const double t = std::exp(-2 * ae);
  const double q = 2 / std::sqrt(1 + 2 * modulus.k() * t + t * t);
  const double fp = profile_F_prime(eta, modulus);
  const double cubic = std::copysign(fp * q * q * (-std::expm1(-4 * ae)) / 4, eta);
  return second + cubic;
}

void GridSpec::validate() const {
  if (!std::isfinite(x0) || !std::isfinite(x1) || !(x0 < x1))
    throw DomainError("GridSpec: need finite x0 < x1");
  if (!std::isfinite(y0) || !std::isfinite(y1) || !(y0 < y1))
    throw DomainError("GridSpec: need finite y0 < y1");
  if (nx < 2 || ny < 2) throw DomainError("GridSpec: need at least 2 samples per axis");
  if (!(exclusion_radius >= 0) || exclusion_radius >= std::numbers::pi / 2)
    throw DomainError("GridSpec: exclusion radius must lie in [0, pi/2)");
}

bool GridSpec::excluded(int i, int j) const {
  return exclusion_radius > 0 && lattice_distance(x_at(i), y_at(j)) < exclusion_radius;
}

}  // namespace maxsurf
