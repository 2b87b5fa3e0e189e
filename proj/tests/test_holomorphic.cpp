#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "maxsurf/errors.hpp"
#include "maxsurf/holomorphic.hpp"

namespace maxsurf {
namespace {

constexpr double kPi = std::numbers::pi;

std::vector<GeneratorFamily> sample_families() {
  return {
      GeneratorFamily::linear(1.0, 0.0),
      GeneratorFamily::linear(2.0, {1, 1}),
      GeneratorFamily::linear(-0.7, {0.3, -2}),
      GeneratorFamily::exponential(1.0, 1.0),
      GeneratorFamily::exponential(2.0, 3.0),
      GeneratorFamily::exponential(-0.5, 0.25),
      GeneratorFamily::sine(1.0, 1.0, 0.0),
      GeneratorFamily::sine(2.0, 0.5, {0.2, 0.1}),
      GeneratorFamily::sine(0.3, -1.7, {-1, 0.4}),
  };
}

TEST(Generator, ClosedFormValues) {
  const Complex w{2, 3};
  EXPECT_EQ(eval_g(GeneratorFamily::linear(1.0, 0.0), w), w);
  EXPECT_EQ(eval_g(GeneratorFamily::exponential(1.0, 1.0), 0.0), Complex(1, 0));
  EXPECT_NEAR(std::abs(eval_g(GeneratorFamily::sine(1.0, 1.0, 0.0), kPi / 2) - 1.0), 0, 1e-16);
}

TEST(Generator, Derivatives) {
  const GeneratorJet s = eval_g_derivs(GeneratorFamily::sine(1.0, 1.0, 0.0), 0.0);
  EXPECT_EQ(s.g, Complex(0, 0));
  EXPECT_EQ(s.dg, Complex(1, 0));
  EXPECT_EQ(std::abs(s.d2g), 0.0);

  const Complex a{1.5, 0}, c{0.5, -1}, w{0.3, 0.7};
  const GeneratorJet l = eval_g_derivs(GeneratorFamily::linear(a, c), w);
  EXPECT_EQ(l.g, a * w + c);
  EXPECT_EQ(l.dg, a);
  EXPECT_EQ(l.d2g, Complex(0, 0));

  const GeneratorJet e = eval_g_derivs(GeneratorFamily::exponential(1.0, 2.0), 0.0);
  EXPECT_EQ(e.g, Complex(1, 0));
  EXPECT_EQ(e.dg, Complex(2, 0));
  EXPECT_EQ(e.d2g, Complex(4, 0));
}

TEST(Generator, DerivativesMatchFiniteDifferences) {
  const double h = 1e-5;
  for (const auto& fam : sample_families()) {
    const Complex w{0.4, -0.3};
    const GeneratorJet j = eval_g_derivs(fam, w);
    const Complex fd1 = (eval_g(fam, w + h) - eval_g(fam, w - h)) / (2 * h);
    const Complex fd2 = (eval_g_derivs(fam, w + h).dg - eval_g_derivs(fam, w - h).dg) / (2 * h);
    EXPECT_LT(std::abs(fd1 - j.dg), 1e-8 * (1 + std::abs(j.dg)));
    EXPECT_LT(std::abs(fd2 - j.d2g), 1e-8 * (1 + std::abs(j.d2g)));
  }
}

TEST(Generator, ExpectedWronskian) {
  EXPECT_EQ(GeneratorFamily::linear(2.0, {1, 1}).expected_wronskian(), -4.0);
  EXPECT_EQ(GeneratorFamily::exponential(2.0, 3.0).expected_wronskian(), 0.0);
  EXPECT_EQ(GeneratorFamily::sine(2.0, 0.5, 0.0).expected_wronskian(), -1.0);
  // Purely imaginary scales keep a^2 real; the surface is then not space-like.
  const GeneratorFamily imag = GeneratorFamily::sine(Complex{0, 1}, 1.0, 0.0);
  EXPECT_EQ(imag.expected_wronskian(), 1.0);
  EXPECT_FALSE(imag.is_space_like());
  EXPECT_TRUE(GeneratorFamily::sine(1.0, 1.0, {0, 2}).is_space_like());
}

TEST(Generator, WronskianDefectExamples) {
  EXPECT_LT(std::abs(wronskian_defect(GeneratorFamily::sine(1.0, 1.0, 0.0), {0.7, 0.3})), 1e-15);
  EXPECT_LT(std::abs(wronskian_defect(GeneratorFamily::exponential(2.0, 3.0), {0.1, 0.2})), 1e-12);
  EXPECT_EQ(std::abs(wronskian_defect(GeneratorFamily::linear(2.0, {1, 1}), {5, -3})), 0.0);
}

TEST(Generator, WronskianDefectVanishesOnRandomSample) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> coord(-1.5, 1.5);
  for (const auto& fam : sample_families()) {
    for (int i = 0; i < 100; ++i) {
      const Complex w{coord(rng), coord(rng)};
      const Complex g = eval_g(fam, w);
      // Relative to the size of the individual products.
      const double scale = std::max(1.0, std::norm(g) + std::norm(eval_g_derivs(fam, w).dg));
      EXPECT_LT(std::abs(wronskian_defect(fam, w)), 1e-14 * scale);
    }
  }
}

TEST(Generator, RejectsBadScales) {
  EXPECT_THROW(GeneratorFamily::linear(0.0, 1.0), DomainError);
  EXPECT_THROW(GeneratorFamily::exponential(Complex{1, 1}, 1.0), DomainError);
  EXPECT_THROW(GeneratorFamily::sine(1.0, 0.0, 0.0), DomainError);
}

TEST(Generator, OverflowIsRangeError) {
  EXPECT_THROW(eval_g(GeneratorFamily::exponential(1.0, 1.0), 1000.0), RangeError);
  EXPECT_THROW(eval_g(GeneratorFamily::sine(1.0, 1.0, 0.0), {0, 1000}), RangeError);
}

TEST(PotentialPhi, Values) {
  EXPECT_NEAR(potential_phi(kPi / 2, 1.7), 0.0, 1e-16);
  EXPECT_NEAR(potential_phi(0.0, 1.0), -0.77193683290530472507, 1e-15);
  EXPECT_NEAR(potential_phi(0.0, 1.0), std::log(std::tanh(0.5)), 1e-15);
}

TEST(PotentialPhi, MatchesLogarithmicForm) {
  for (double x = -3; x <= 3; x += 0.37)
    for (double y = 0.05; y <= 3; y += 0.31) {
      const double direct = 0.5 * std::log((std::cosh(y) - std::cos(x)) / (std::cosh(y) + std::cos(x)));
      EXPECT_NEAR(potential_phi(x, y), direct, 1e-13);
      EXPECT_NEAR(std::tanh(potential_phi(x, y)), -std::cos(x) / std::cosh(y), 1e-15);
    }
}

TEST(PotentialPhi, Symmetries) {
  for (double x = -3; x <= 3; x += 0.29)
    for (double y = 0.1; y <= 2; y += 0.23) {
      EXPECT_NEAR(potential_phi(x + 2 * kPi, y), potential_phi(x, y), 1e-14);
      EXPECT_EQ(potential_phi(x, -y), potential_phi(x, y));
    }
}

TEST(PotentialPhi, SingularLattice) {
  EXPECT_THROW(potential_phi(0.0, 0.0), SingularPointError);
  EXPECT_THROW(potential_phi(kPi, 0.0), SingularPointError);
  EXPECT_THROW(potential_phi(-3 * kPi, 1e-12), SingularPointError);
  EXPECT_NO_THROW(potential_phi(kPi, 1e-6));
}

TEST(PotentialPhi, LaplacianConvergesQuadratically) {
  for (auto [x, y] : {std::pair{0.7, 0.4}, {2.0, -0.9}, {-1.2, 1.5}}) {
    const double l1 = std::fabs(five_point_laplacian(potential_phi, x, y, 1e-2));
    const double l2 = std::fabs(five_point_laplacian(potential_phi, x, y, 5e-3));
    EXPECT_LT(l1, 1e-3);
    EXPECT_GE(l1 / l2, 3.5);
    EXPECT_LE(l1 / l2, 4.5);
  }
}

TEST(CauchyRiemann, Examples) {
  const auto id = cr_identity_residual(holomorphic_identity(), holomorphic_identity(), {1, 1}, 1e-4);
  EXPECT_LT(id.dx, 1e-7);
  EXPECT_LT(id.dy, 1e-7);
  const auto es = cr_identity_residual(holomorphic_exp(), holomorphic_sin(), {0.5, 0.2}, 1e-4);
  EXPECT_LT(es.dx, 1e-6);
  EXPECT_LT(es.dy, 1e-6);
  const auto cc = cr_identity_residual(holomorphic_cos(), holomorphic_cos(), 0.0, 1e-4);
  EXPECT_LT(cc.dx, 1e-8);
  EXPECT_LT(cc.dy, 1e-8);
}

TEST(CauchyRiemann, QuadraticConvergenceUnderStepHalving) {
  const auto r1 = cr_identity_residual(holomorphic_exp(), holomorphic_sin(), {0.5, 0.2}, 1e-2);
  const auto r2 = cr_identity_residual(holomorphic_exp(), holomorphic_sin(), {0.5, 0.2}, 5e-3);
  EXPECT_GE(r1.dx / r2.dx, 3.5);
  EXPECT_LE(r1.dx / r2.dx, 4.5);
  EXPECT_GE(r1.dy / r2.dy, 3.5);
  EXPECT_LE(r1.dy / r2.dy, 4.5);
}

TEST(OdeCoefficients, LinearField) {
  const auto c = ode_coefficients([](double x, double) { return x; }, 0.3, -0.2, 1e-3);
  EXPECT_NEAR(c.A, 1.0, 1e-12);
  EXPECT_NEAR(c.B, 0.0, 1e-9);
  EXPECT_NEAR(c.C, 0.0, 1e-9);
}

TEST(OdeCoefficients, HarmonicPotential) {
  for (auto [x, y] : {std::pair{0.7, 0.4}, {2.0, -0.9}, {-1.2, 1.5}, {1.0, 0.1}}) {
    const auto c = ode_coefficients(potential_phi, x, y, 1e-3);
    EXPECT_LT(std::fabs(c.B), 1e-5);
    const double expected_a = 1 / (std::cosh(y) * std::cosh(y) - std::cos(x) * std::cos(x));
    EXPECT_NEAR(c.A, expected_a, 1e-5 * expected_a);
  }
  const double b1 = std::fabs(ode_coefficients(potential_phi, 0.7, 0.4, 1e-2).B);
  const double b2 = std::fabs(ode_coefficients(potential_phi, 0.7, 0.4, 5e-3).B);
  EXPECT_GE(b1 / b2, 3.5);
  EXPECT_LE(b1 / b2, 4.5);
}

TEST(OdeCoefficients, ReducesToProfileEquation) {
  // With B = 0, F'' / F'^3 = -C / A, which equals Re(g') / |g|^2 = -sinh(2 phi) / 2,
  // which is what turns the maximal equation into F'' + (1/2) F'^3 sinh 2 eta = 0.
  for (auto [x, y] : {std::pair{0.7, 0.4}, {2.0, -0.9}}) {
    const auto c = ode_coefficients(potential_phi, x, y, 1e-3);
    EXPECT_NEAR(-c.C / c.A, sine_generator_ratio(x, y), 1e-5);
  }
}

TEST(SineGeneratorRatio, Values) {
  EXPECT_NEAR(sine_generator_ratio(kPi / 2, 0.0), 0.0, 1e-16);
  EXPECT_NEAR(sine_generator_ratio(0.0, 1.0), 1.1172855274492741715, 1e-15);
  EXPECT_THROW(sine_generator_ratio(kPi, 0.0), SingularPointError);
}

TEST(SineGeneratorRatio, MatchesPotentialIdentity) {
  for (double x = -3; x <= 3; x += 0.21)
    for (double y = -2; y <= 2; y += 0.19) {
      if (std::hypot(x - kPi * std::round(x / kPi), y) < 0.05) continue;
      const double lhs = sine_generator_ratio(x, y);
      EXPECT_NEAR(lhs, -0.5 * std::sinh(2 * potential_phi(x, y)), 1e-10 * std::max(1.0, std::fabs(lhs)));
    }
}

}  // namespace
}  // namespace maxsurf
