#include "maxsurf/catenoid.hpp"

#include <cmath>
#include <string>

#include "maxsurf/errors.hpp"
#include "maxsurf/quadrature.hpp"

namespace maxsurf {
namespace {

constexpr double kQuadratureTolerance = 1e-12;

void require_radius(double r, bool allow_zero, const char* where) {
  if (!std::isfinite(r) || r < 0 || (!allow_zero && r == 0))
    throw DomainError(std::string(where) + ": invalid radius " + std::to_string(r));
}

}  // namespace

CatenoidParams::CatenoidParams(double c, int n) : c_(c), n_(n) {
  if (!std::isfinite(c) || c <= 0) throw DomainError("CatenoidParams: c must be positive");
  if (n < 2) throw DomainError("CatenoidParams: dimension n must be at least 2");
}

double catenoid_height_quadrature(const CatenoidParams& params, double r) {
  require_radius(r, true, "catenoid_height");
  const double c = params.c();
  const int power = 2 * (params.n() - 1);
  return c * adaptive_simpson(
                 [c, power](double lambda) { return 1 / std::sqrt(c * c + std::pow(lambda, power)); },
                 0.0, r, kQuadratureTolerance / c);
}

double catenoid_height(const CatenoidParams& params, double r) {
  require_radius(r, true, "catenoid_height");
  if (params.n() == 2) return params.c() * std::asinh(r / params.c());
  return catenoid_height_quadrature(params, r);
}

double catenoid_gradient_norm(const CatenoidParams& params, double r) {
  require_radius(r, false, "catenoid_gradient_norm");
  const double c = params.c();
  return c / std::sqrt(c * c + std::pow(r, 2 * (params.n() - 1)));
}

}  // namespace maxsurf
