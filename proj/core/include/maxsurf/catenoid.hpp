#pragma once

// Rotationally symmetric almost-entire maximal graphs ("maximal catenoids")
//
//   t(r) = c * integral_0^r (c^2 + lambda^{2(n-1)})^{-1/2} d lambda,  r = |x|,
//
// singular (light-like) only at the origin.

namespace maxsurf {

class CatenoidParams {
 public:
  /// DomainError unless c > 0 and n >= 2.
  CatenoidParams(double c, int n);

  double c() const { return c_; }
  int n() const { return n_; }

 private:
  double c_;
  int n_;
};

/// Height t(r).  Closed form c asinh(r / c) for n = 2, adaptive Simpson
/// (absolute tolerance 1e-12) otherwise.  DomainError for r < 0.
double catenoid_height(const CatenoidParams& params, double r);

/// The same integral by quadrature for every n; the closed form's cross-check.
double catenoid_height_quadrature(const CatenoidParams& params, double r);

/// |grad t| = c / sqrt(c^2 + r^{2(n-1)}), strictly below 1 for r > 0.
/// DomainError for r <= 0.
double catenoid_gradient_norm(const CatenoidParams& params, double r);

}  // namespace maxsurf
