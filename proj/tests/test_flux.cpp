#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "maxsurf/errors.hpp"
#include "maxsurf/flux.hpp"
#include "oracles.hpp"

namespace maxsurf {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kFlux06 = 6.3849688885271340406;  // 4 * 0.8 * K(0.8), mpmath

TEST(Contour, Validation) {
  EXPECT_THROW(Contour::circle({0, 0}, 0.0), ContourError);
  EXPECT_THROW(Contour::circle({0, 0}, -1.0), ContourError);
  EXPECT_THROW(Contour::circle({0, 0}, 0.5, 8), ContourError);
  EXPECT_THROW(Contour::rectangle({0, 0}, 0.5, 0.0), ContourError);
  EXPECT_NO_THROW(Contour::rectangle({0, 0}, 0.6, 0.4, 16));
}

TEST(Contour, Geometry) {
  const Contour c = Contour::circle({1, 0}, 0.5);
  EXPECT_TRUE(c.encloses({1.2, 0.1}));
  EXPECT_FALSE(c.encloses({1.6, 0}));
  EXPECT_NEAR(c.distance_to({1, 0}), 0.5, 1e-16);
  const Contour r = Contour::rectangle({0, 0}, 0.6, 0.4);
  EXPECT_TRUE(r.encloses({0.5, 0.3}));
  EXPECT_NEAR(r.distance_to({0, 0}), 0.4, 1e-16);
  EXPECT_NEAR(r.distance_to({1.6, 0}), 1.0, 1e-15);
  EXPECT_NEAR(r.distance_to({0.9, 0.8}), 0.5, 1e-15);
}

TEST(FluxIntegral, ConstantSlopeHasZeroFlux) {
  const auto field = constant_gradient_field({0.6, -0.3});
  EXPECT_NEAR(flux_integral(field, Contour::circle({0.3, 1}, 1.1)), 0.0, 1e-13);
  EXPECT_NEAR(flux_integral(field, Contour::rectangle({-2, 0}, 0.7, 1.3, 64)), 0.0, 1e-13);
}

TEST(FluxIntegral, CatenoidIsTwoPiC) {
  for (double c : {0.5, 1.0, 2.5}) {
    const auto field = catenoid_gradient_field(CatenoidParams(c, 2));
    for (double r : {0.5, 1.0, 2.0}) {
      EXPECT_NEAR(flux_integral(field, Contour::circle({0, 0}, r)), 2 * kPi * c, 1e-10);
    }
    EXPECT_NEAR(flux_integral(field, Contour::circle({0, 0}, 5.0)), 2 * kPi * c, 1e-10);
    EXPECT_NEAR(flux_integral(field, Contour::rectangle({0.1, -0.2}, 1.0, 0.7, 1024)), 2 * kPi * c,
                1e-8);
  }
  EXPECT_THROW(catenoid_gradient_field(CatenoidParams(1.0, 3)), MisuseError);
}

TEST(FluxIntegral, SurfaceMatchesClosedForm) {
  const auto fam = SurfaceFamily::from_alpha(0.6);
  const double f = flux_integral(surface_gradient_field(fam), Contour::circle({0, 0}, 0.7));
  // A_0 is a peak: the outward flux is negative.
  EXPECT_NEAR(f, -kFlux06, 1e-8);
  EXPECT_NEAR(closed_form_flux(fam), kFlux06, 1e-13);
  EXPECT_NEAR(closed_form_flux(fam), 4 * 0.8 * oracle::complete_K(0.8), 1e-12);
}

TEST(FluxIntegral, NodeDoublingIsConverged) {
  for (double alpha : {0.6, 0.9}) {
    const auto field = surface_gradient_field(SurfaceFamily::from_alpha(alpha));
    const double f64 = flux_integral(field, Contour::circle({0, 0}, 0.7, 64));
    const double f128 = flux_integral(field, Contour::circle({0, 0}, 0.7, 128));
    EXPECT_LT(std::fabs(f64 - f128), 1e-9) << alpha;
  }
}

TEST(FluxIntegral, SmallModulusNeedsMoreNodes) {
  // For small alpha the integrand has complex singularities close to the real
  // parameter axis, independently of the radius; 64 nodes leave ~1e-8 error.
  const auto field = surface_gradient_field(SurfaceFamily::from_alpha(0.3));
  auto at = [&](int n) { return flux_integral(field, Contour::circle({0, 0}, 0.7, n)); };
  EXPECT_GT(std::fabs(at(64) - at(128)), 1e-9);
  EXPECT_LT(std::fabs(at(128) - at(256)), 1e-12);
  EXPECT_NEAR(std::fabs(at(256)), 10.026943975653141270, 1e-9);
}

TEST(FluxIntegral, SignAlternatesAlongLattice) {
  const auto fam = SurfaceFamily::from_alpha(0.6);
  for (long k = -1; k <= 2; ++k) {
    const FluxReport rep = flux_at_singularity(fam, k, 0.7, 256);
    EXPECT_LT(*rep.abs_deviation, 1e-9);
    EXPECT_NEAR(rep.value, signed_flux_at(fam, k), 1e-9);
    // Sign convention shared with the light-cone ratio: (-1)^k flux < 0.
    EXPECT_LT((k % 2 == 0 ? 1 : -1) * rep.value, 0);
  }
}

TEST(FluxIntegral, ErrorPaths) {
  const auto field = surface_gradient_field(SurfaceFamily::from_alpha(0.6));
  // Circle through A_1 = (pi, 0).
  EXPECT_THROW(flux_integral(field, Contour::circle({kPi - 1, 0}, 1.0)), ContourError);
  // Encloses both A_0 and A_1.
  EXPECT_THROW(flux_integral(field, Contour::circle({kPi / 2, 0}, 2.0)), ContourError);
  EXPECT_THROW(flux_at_singularity(SurfaceFamily::from_alpha(0.6), 0, 3.5), ContourError);
  // A constant slope of norm >= 1 is not space-like.
  EXPECT_THROW(flux_integral(constant_gradient_field({0.8, 0.6}), Contour::circle({0, 0}, 1)),
               SpaceLikenessError);
}

TEST(FluxIntegral, SingularityFreeContourIsZero) {
  const auto field = surface_gradient_field(SurfaceFamily::from_alpha(0.6));
  EXPECT_NEAR(flux_integral(field, Contour::circle({kPi / 2, 0.8}, 0.5)), 0.0, 1e-9);
  EXPECT_NEAR(flux_integral(field, Contour::rectangle({kPi / 2, 0}, 1.2, 0.5, 256)), 0.0, 1e-9);
}

TEST(ClosedForm, QuadratureRoute) {
  for (double alpha = 0.05; alpha < 1; alpha += 0.05) {
    const auto fam = SurfaceFamily::from_alpha(alpha);
    EXPECT_NEAR(closed_form_flux_quadrature(fam), closed_form_flux(fam), 1e-10) << alpha;
  }
  // alpha -> 1: flux / alpha' -> 4 K(0) = 2 pi.
  const auto fam = SurfaceFamily::from_alpha(0.999999);
  EXPECT_NEAR(closed_form_flux(fam) / fam.alpha_prime(), 2 * kPi, 1e-5);
}

TEST(ContourInvariance, Examples) {
  const auto field = surface_gradient_field(SurfaceFamily::from_alpha(0.6));
  EXPECT_LT(contour_invariance(field, {Contour::circle({0, 0}, 0.3), Contour::circle({0, 0}, 0.7),
                                       Contour::circle({0, 0}, 1.2)}),
            1e-8);
  EXPECT_LT(contour_invariance(field, {Contour::circle({kPi, 0}, 0.5),
                                       Contour::rectangle({kPi, 0}, 0.6, 0.4)}),
            1e-7);
  const auto cat = catenoid_gradient_field(CatenoidParams(1.0, 2));
  EXPECT_LT(contour_invariance(cat, {Contour::circle({0, 0}, 0.5), Contour::circle({0, 0}, 5.0)}),
            1e-10);
  EXPECT_THROW(contour_invariance(field, {Contour::circle({0, 0}, 0.5), Contour::circle({kPi, 0}, 0.5)}),
               MisuseError);
}

TEST(IsEssential, Threshold) {
  EXPECT_TRUE(is_essential(6.38, 1e-6));
  EXPECT_TRUE(is_essential(-6.38, 1e-6));
  EXPECT_FALSE(is_essential(3e-12, 1e-6));
  EXPECT_FALSE(is_essential(0.0, 1e-12));
  EXPECT_THROW(is_essential(1.0, 0.0), DomainError);
}

}  // namespace
}  // namespace maxsurf
