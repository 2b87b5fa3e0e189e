#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "maxsurf/errors.hpp"
#include "maxsurf/quadrature.hpp"

namespace maxsurf {
namespace {

TEST(AdaptiveSimpson, Polynomials) {
  EXPECT_NEAR(adaptive_simpson([](double x) { return x * x * x; }, 0, 2, 1e-12), 4.0, 1e-12);
  EXPECT_NEAR(adaptive_simpson([](double x) { return std::exp(x); }, 0, 1, 1e-13), std::exp(1.0) - 1, 1e-12);
  EXPECT_EQ(adaptive_simpson([](double) { return 1.0; }, 3, 3, 1e-12), 0.0);
  EXPECT_THROW(adaptive_simpson([](double) { return 1.0; }, 0, 1, 0), DomainError);
}

TEST(GaussLegendre, IntegratesPolynomialsExactly) {
  for (int n : {1, 2, 5, 16, 64}) {
    const auto rule = gauss_legendre(n);
    double weight_sum = 0;
    for (double w : rule.weights) weight_sum += w;
    EXPECT_NEAR(weight_sum, 2.0, 1e-14);
    // Degree 2n - 1 monomial x^{2n-2} integrates to 2 / (2n - 1).
    double s = 0;
    for (int i = 0; i < n; ++i) s += rule.weights[i] * std::pow(rule.nodes[i], 2 * n - 2);
    EXPECT_NEAR(s, 2.0 / (2 * n - 1), 1e-13) << n;
    for (int i = 1; i < n; ++i) EXPECT_LT(rule.nodes[i - 1], rule.nodes[i]);
  }
  EXPECT_THROW(gauss_legendre(0), DomainError);
}

TEST(GaussLegendre, SmoothIntegrand) {
  const auto rule = gauss_legendre(20);
  double s = 0;
  for (int i = 0; i < 20; ++i) s += rule.weights[i] * std::cos(rule.nodes[i]);
  EXPECT_NEAR(s, 2 * std::sin(1.0), 1e-15);
}

}  // namespace
}  // namespace maxsurf
