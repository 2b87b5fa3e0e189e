#pragma once

// The one-periodic maximal surfaces M(alpha) in Minkowski 3-space:
//
//   sn(z / alpha'; alpha) = cos x / cosh y,
//
// taken on the graph branch |z| <= alpha' K(alpha).  M(alpha) is singular
// (light-like) exactly on the lattice A_k = (pi k, 0), where it meets the slab
// boundary with height (-1)^k alpha' K(alpha).
//
// The profile construction produces sn(z / alpha') = -cos x / cosh y; the two
// conventions differ by the isometry x -> x + pi.  This module uses the
// + convention throughout.

#include <algorithm>
#include <cmath>
#include <functional>
#include <utility>
#include <vector>

#include "maxsurf/elliptic.hpp"

namespace maxsurf {

struct Vec2 {
  double x = 0;
  double y = 0;
};

struct SurfacePoint {
  double x = 0;
  double y = 0;
  double z = 0;
};

struct GradientNorm {
  double value = 0;
  bool singular = false;  // (x, y) on the lattice; value is the limit 1
};

struct SurfaceSample {
  SurfacePoint point;
  double gradient_norm = 0;
  bool singular = false;
};

class SurfaceFamily {
 public:
  explicit SurfaceFamily(Modulus modulus);
  static SurfaceFamily from_alpha(double alpha) { return SurfaceFamily(Modulus::from_alpha(alpha)); }

  const Modulus& modulus() const { return modulus_; }
  double alpha() const { return modulus_.alpha(); }
  double alpha_prime() const { return modulus_.alpha_prime(); }
  double K_alpha() const { return k_alpha_; }
  double K_alpha_prime() const { return k_alpha_prime_; }

  /// alpha' K(alpha); |height| never exceeds it.
  double slab_halfwidth() const { return modulus_.alpha_prime() * k_alpha_; }

  /// z = alpha' arcsn(cos x / cosh y, alpha).  Defined on the whole plane,
  /// including the lattice where it takes the continuous extension.
  double height(double x, double y) const { return height_as<double>(x, y); }

  /// Same branch evaluated in floating type T.
  template <std::floating_point T>
  T height_as(T x, T y) const;

  /// Closed-form (u_x, u_y).  SingularPointError on the lattice.
  Vec2 gradient(double x, double y) const;

  /// |grad u| = alpha' / (cosh y sqrt(1 - alpha^2 gamma^2)), gamma = cos x / cosh y.
  /// On the lattice returns the limit 1 with the singular flag set.
  GradientNorm gradient_norm(double x, double y) const;

  SurfaceSample sample(double x, double y) const;

  /// Left side of the two-dimensional maximal surface equation
  ///   (1 - u_y^2) u_xx + 2 u_x u_y u_xy + (1 - u_x^2) u_yy
  /// with the closed-form gradient and central second differences of height.
  /// Requires 0 < h <= 1e-2 and lattice distance > 2 h (ProximityError).
  double pde_residual(double x, double y, double h = 1e-3) const;

  /// Lattice points (pi k, 0) with pi k in [x0, x1], ascending.
  std::vector<Vec2> singular_points(double x0, double x1) const;

  /// (-1)^k (height(A_k) - height(A_k + r d)) / r for unit direction d;
  /// tends to 1 as r -> 0.  DomainError unless 0 < r < pi/2.
  double lightcone_ratio(long k, Vec2 direction, double r) const;

 private:
  Modulus modulus_;
  double k_alpha_;
  double k_alpha_prime_;
};

template <std::floating_point T>
T SurfaceFamily::height_as(T x, T y) const {
  // In terms of sech/tanh nothing overflows for large |y|; gamma -> 0 there.
  const T sech = 1 / std::cosh(y);
  const T th = std::tanh(y);
  const T sx = std::sin(x);
  const T gamma = std::cos(x) * sech;
  // 1 - gamma^2 = (sinh^2 y + sin^2 x) / cosh^2 y, without cancellation near the lattice.
  const T complement = th * th + sx * sx * sech * sech;
  const T alpha = static_cast<T>(modulus_.alpha());
  const T alpha_prime = detail::complementary(alpha);
  return alpha_prime * detail::arcsn_unchecked(std::clamp(gamma, T(-1), T(1)), complement, alpha);
}

/// Maximal-equation residual for an arbitrary height function u with known
/// gradient (ux, uy) at (x, y); second differences of u are taken in long double.
double maximal_equation_residual(const std::function<long double(long double, long double)>& u,
                                 double ux, double uy, double x, double y, double h);

/// F'(eta) = 2 e^eta / sqrt(e^{4 eta} + 2 k e^{2 eta} + 1), evaluated in a
/// scaled form that never overflows.  Even, positive, maximal at 0.
double profile_F_prime(double eta, const Modulus& modulus);

/// F(eta) = alpha' arcsn(tanh eta, alpha), the odd antiderivative of F' with F(0) = 0.
double profile_F(double eta, const Modulus& modulus);

/// F'' + (1/2) F'^3 sinh(2 eta), with F'' by central differences of F'.
/// DomainError unless 0 < h <= 1e-2.
double profile_ode_residual(double eta, const Modulus& modulus, double h = 1e-4);

/// Rectangular sampling grid with optional disks removed around the lattice.
struct GridSpec {
  double x0 = 0, x1 = 1;
  double y0 = 0, y1 = 1;
  int nx = 2, ny = 2;
  double exclusion_radius = 0;

  /// DomainError unless x0 < x1, y0 < y1, nx, ny >= 2 and 0 <= exclusion_radius < pi/2.
  void validate() const;
  double x_at(int i) const { return x0 + (x1 - x0) * i / (nx - 1); }
  double y_at(int j) const { return y0 + (y1 - y0) * j / (ny - 1); }
  bool excluded(int i, int j) const;
};

}  // namespace maxsurf
