#pragma once

#include <functional>
#include <vector>

namespace maxsurf {

/// Adaptive Simpson quadrature of f over [a, b] to absolute tolerance tol,
/// with Richardson correction.  Intended for smooth bounded integrands.
double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double tol, int max_depth = 48);

struct GaussLegendreRule {
  std::vector<double> nodes;    // on [-1, 1], ascending
  std::vector<double> weights;
};

/// n-point Gauss-Legendre rule by Newton iteration on P_n.  n >= 1.
GaussLegendreRule gauss_legendre(int n);

}  // namespace maxsurf
