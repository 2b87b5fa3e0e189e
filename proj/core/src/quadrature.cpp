#include "maxsurf/quadrature.hpp"

#include <cmath>
#include <numbers>

#include "maxsurf/errors.hpp"

namespace maxsurf {
namespace {

struct Panel {
  double a, fa, m, fm, b, fb, whole;
};

double simpson_step(const std::function<double(double)>& f, const Panel& p, double tol,
                    int depth) {
  const double lm = (p.a + p.m) / 2, rm = (p.m + p.b) / 2;
  const double flm = f(lm), frm = f(rm);
  const double left = (p.m - p.a) / 6 * (p.fa + 4 * flm + p.fm);
  const double right = (p.b - p.m) / 6 * (p.fm + 4 * frm + p.fb);
  const double delta = left + right - p.whole;
  if (depth <= 0 || std::fabs(delta) <= 15 * tol) return left + right + delta / 15;
  return simpson_step(f, {p.a, p.fa, lm, flm, p.m, p.fm, left}, tol / 2, depth - 1) +
         simpson_step(f, {p.m, p.fm, rm, frm, p.b, p.fb, right}, tol / 2, depth - 1);
}

}  // namespace

double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double tol, int max_depth) {
  if (!(tol > 0)) throw DomainError("adaptive_simpson: tolerance must be positive");
  if (a == b) return 0;
  const double m = (a + b) / 2;
  const double fa = f(a), fm = f(m), fb = f(b);
  const Panel p{a, fa, m, fm, b, fb, (b - a) / 6 * (fa + 4 * fm + fb)};
  return simpson_step(f, p, tol, max_depth);
}

GaussLegendreRule gauss_legendre(int n) {
  if (n < 1) throw DomainError("gauss_legendre: need at least one node");
  GaussLegendreRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    // Tricomi's initial guess, then Newton on P_n.
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1, p1 = x;
      for (int j = 2; j <= n; ++j) {
        const double p2 = ((2 * j - 1) * x * p1 - (j - 1) * p0) / j;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1);
      const double dx = p1 / dp;
      x -= dx;
      if (std::fabs(dx) <= 1e-16) break;
    }
    // Refresh the derivative at the converged node.
    double p0 = 1, p1 = x;
    for (int j = 2; j <= n; ++j) {
      const double p2 = ((2 * j - 1) * x * p1 - (j - 1) * p0) / j;
      p0 = p1;
      p1 = p2;
    }
    dp = n * (x * p1 - p0) / (x * x - 1);
    const double w = 2 / ((1 - x * x) * dp * dp);
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  return rule;
}

}  // namespace maxsurf
