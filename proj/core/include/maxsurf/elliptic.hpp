#pragma once

// Real elliptic functions of the first kind.
//
//   K(alpha)          complete integral, via the arithmetic-geometric mean
//   arcsn(s, alpha)   incomplete integral in Jacobi form, via Carlson's R_F
//   sn(u, alpha)      Jacobi elliptic sine, via descending Landen transformation
//
// alpha is the modulus (not the parameter m = alpha^2).  The kernels are
// templates over the floating type so that callers needing extra headroom
// (second differences of surface heights) can evaluate in long double.

#include <cmath>
#include <concepts>
#include <limits>
#include <numbers>
#include <string>

#include "maxsurf/errors.hpp"

namespace maxsurf {

/// Iteration cap for AGM, Landen and Carlson duplication loops.  All three
/// converge at least linearly with ratio 1/4, most quadratically.
inline constexpr int kMaxEllipticIterations = 32;

namespace detail {

template <std::floating_point T>
constexpr T agm_tolerance() {
  return 4 * std::numeric_limits<T>::epsilon();
}

inline void require_modulus(double alpha, const char* where) {
  if (!std::isfinite(alpha) || alpha < 0 || alpha >= 1)
    throw DomainError(std::string(where) + ": modulus must lie in [0, 1), got " +
                      std::to_string(alpha));
}

/// Carlson's symmetric integral R_F(x, y, z) for x, y, z >= 0, at most one zero.
/// Duplication with the seventh-order series of Carlson (1995).
template <std::floating_point T>
T carlson_rf(T x, T y, T z) {
  static const T tol = std::pow(3 * std::numeric_limits<T>::epsilon() * T(0.01), T(1) / 8);
  const T a0 = (x + y + z) / 3;
  T an = a0;
  T q = std::fmax(std::fmax(std::fabs(a0 - x), std::fabs(a0 - y)), std::fabs(a0 - z)) / tol;
  T x0 = x, y0 = y, z0 = z, mul = 1;
  for (int i = 0; i < kMaxEllipticIterations && q >= mul * std::fabs(an); ++i) {
    const T sx = std::sqrt(x0), sy = std::sqrt(y0), sz = std::sqrt(z0);
    const T lam = sx * sy + sy * sz + sz * sx;
    an = (an + lam) / 4;
    x0 = (x0 + lam) / 4;
    y0 = (y0 + lam) / 4;
    z0 = (z0 + lam) / 4;
    mul *= 4;
  }
  const T xd = (a0 - x) / (mul * an);
  const T yd = (a0 - y) / (mul * an);
  const T zd = -(xd + yd);
  const T e2 = xd * yd - zd * zd;
  const T e3 = xd * yd * zd;
  return (e3 * (6930 * e3 + e2 * (15015 * e2 - 16380) + 17160) +
          e2 * ((10010 - 5775 * e2) * e2 - 24024) + 240240) /
         (240240 * std::sqrt(an));
}

/// sqrt(1 - alpha^2) without cancellation for alpha near 1.
template <std::floating_point T>
T complementary(T alpha) {
  return std::sqrt((1 - alpha) * (1 + alpha));
}

template <std::floating_point T>
T complete_k_unchecked(T alpha) {
  T a = 1;
  T b = complementary(alpha);
  for (int i = 0; i < kMaxEllipticIterations && std::fabs(a - b) > agm_tolerance<T>() * a; ++i) {
    const T mean = (a + b) / 2;
    b = std::sqrt(a * b);
    a = mean;
  }
  return std::numbers::pi_v<T> / (a + b);
}

/// arcsn with the complement 1 - s^2 supplied by the caller, who can often
/// compute it more accurately than by subtraction.
template <std::floating_point T>
T arcsn_unchecked(T s, T one_minus_s2, T alpha) {
  if (s == 1) return complete_k_unchecked(alpha);
  if (s == -1) return -complete_k_unchecked(alpha);
  if (alpha == 0) return std::asin(s);
  const T m = alpha * alpha;
  // 1 - m s^2 = alpha'^2 + m (1 - s^2), free of cancellation as s -> 1.
  const T one_minus_ms2 = (1 - alpha) * (1 + alpha) + m * one_minus_s2;
  return s * carlson_rf(one_minus_s2, one_minus_ms2, T(1));
}

}  // namespace detail

/// K(alpha) = integral_0^{pi/2} dt / sqrt(1 - alpha^2 sin^2 t), alpha in [0, 1).
template <std::floating_point T>
T complete_K(T alpha) {
  detail::require_modulus(static_cast<double>(alpha), "complete_K");
  return detail::complete_k_unchecked(alpha);
}

/// Inverse of sn on its fundamental branch:
/// integral_0^s dt / (sqrt(1 - t^2) sqrt(1 - alpha^2 t^2)), |s| <= 1.
template <std::floating_point T>
T arcsn(T s, T alpha) {
  detail::require_modulus(static_cast<double>(alpha), "arcsn");
  if (!std::isfinite(s) || std::fabs(s) > 1)
    throw DomainError("arcsn: argument must lie in [-1, 1], got " +
                      std::to_string(static_cast<double>(s)));
  return detail::arcsn_unchecked(s, (1 - s) * (1 + s), alpha);
}

/// Jacobi elliptic sine sn(u; alpha).  Odd in u, period 4 K(alpha).
template <std::floating_point T>
T jacobi_sn(T u, T alpha) {
  detail::require_modulus(static_cast<double>(alpha), "jacobi_sn");
  if (!std::isfinite(u))
    throw DomainError("jacobi_sn: argument must be finite");
  if (u < 0) return -jacobi_sn(-u, alpha);
  if (alpha == 0) return std::sin(u);

  // Descending Landen sequence a_n, c_n; then back-substitute the amplitude.
  T a[kMaxEllipticIterations + 1];
  T c[kMaxEllipticIterations + 1];
  a[0] = 1;
  c[0] = alpha;
  T b = detail::complementary(alpha);
  int n = 0;
  while (n < kMaxEllipticIterations &&
         std::fabs(c[n]) > detail::agm_tolerance<T>() * a[n]) {
    a[n + 1] = (a[n] + b) / 2;
    c[n + 1] = (a[n] - b) / 2;
    b = std::sqrt(a[n] * b);
    ++n;
  }
  T phi = std::ldexp(a[n] * u, n);
  for (int i = n; i > 0; --i) phi = (phi + std::asin(c[i] * std::sin(phi) / a[i])) / 2;
  return std::sin(phi);
}

// Non-template overloads so mixed argument types convert to double.
inline double complete_K(double alpha) { return complete_K<double>(alpha); }
inline double arcsn(double s, double alpha) { return arcsn<double>(s, alpha); }
inline double jacobi_sn(double u, double alpha) { return jacobi_sn<double>(u, alpha); }

/// The modulus triple tying the elliptic modulus alpha of M(alpha) to the
/// integration constant k of the profile ODE:
///   alpha' = sqrt(1 - alpha^2),  k = (1 + alpha^2) / (1 - alpha^2) > 1.
class Modulus {
 public:
  /// Throws DomainError unless 0 < alpha < 1.
  static Modulus from_alpha(double alpha);
  /// Throws DomainError unless k > 1; alpha^2 = (k - 1) / (k + 1).
  static Modulus from_k(double k);

  double alpha() const { return alpha_; }
  double alpha_prime() const { return alpha_prime_; }
  double k() const { return k_; }

 private:
  Modulus(double alpha, double alpha_prime, double k)
      : alpha_(alpha), alpha_prime_(alpha_prime), k_(k) {}

  double alpha_;
  double alpha_prime_;
  double k_;
};

}  // namespace maxsurf
