#include "maxsurf/cli/report.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <ctime>
#include <limits>
#include <numbers>
#include <random>
#include <utility>

#include <fmt/format.h>

#include "maxsurf/catenoid.hpp"
#include "maxsurf/elliptic.hpp"
#include "maxsurf/errors.hpp"
#include "maxsurf/flux.hpp"
#include "maxsurf/holomorphic.hpp"
#include "maxsurf/lattice.hpp"
#include "maxsurf/quadrature.hpp"
#include "maxsurf/surface.hpp"

namespace maxsurf::cli {
namespace {

constexpr double kPi = std::numbers::pi;
// Sample points for the maximality check keep this far from the lattice; the
// stencil's truncation error grows like h^2 / d^3 toward a singular point.
constexpr double kRegularMargin = 0.5;

// NaN never satisfies a comparison, so a non-finite observation fails.
class Recorder {
 public:
  Recorder(std::vector<Check>& out, double alpha) : out_(out), alpha_(alpha) {}

  void at_most(std::string name, double observed, double bound) {
    add(std::move(name), observed <= bound, observed, bound);
  }
  void below(std::string name, double observed, double bound) {
    add(std::move(name), observed < bound, observed, bound);
  }
  void above(std::string name, double observed, double bound) {
    add(std::move(name), observed > bound, observed, bound);
  }
  void near(std::string name, double observed, double reference, double bound) {
    add(std::move(name), std::fabs(observed - reference) <= bound, observed, bound, reference);
  }

 private:
  void add(std::string name, bool ok, double observed, double bound,
           std::optional<double> reference = std::nullopt) {
    out_.push_back({std::move(name), alpha_, ok, observed, bound, reference});
  }
  std::vector<Check>& out_;
  double alpha_;
};

double uniform(std::mt19937_64& rng, double lo, double hi) {
  // Portable across standard libraries, unlike uniform_real_distribution.
  return lo + (hi - lo) * static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

template <class F>
double max_over(int n, double lo, double hi, F f) {
  double m = 0;
  for (int i = 0; i < n; ++i) m = std::max(m, f(lo + (hi - lo) * i / (n - 1)));
  return m;
}

void elliptic_checks(Recorder& rec, const SurfaceFamily& fam) {
  const double a = fam.alpha();
  const double K = fam.K_alpha();

  rec.at_most("elliptic.sn_odd_bounded", max_over(401, -2 * K, 2 * K, [&](double u) {
                const double s = jacobi_sn(u, a);
                return std::max(std::fabs(jacobi_sn(-u, a) + s), std::fabs(s) - 1);
              }), 1e-12);
  rec.at_most("elliptic.sn_period", max_over(401, -2 * K, 2 * K, [&](double u) {
                return std::fabs(jacobi_sn(u + 4 * K, a) - jacobi_sn(u, a));
              }), 1e-10);
  rec.at_most("elliptic.sn_arcsn_roundtrip", max_over(201, -1, 1, [&](double s) {
                return std::fabs(jacobi_sn(arcsn(s, a), a) - s);
              }), 1e-11);

  const double quad = adaptive_simpson(
      [&](double t) { return 1 / std::sqrt(1 - a * a * std::sin(t) * std::sin(t)); }, 0, kPi / 2,
      1e-14);
  rec.near("elliptic.K_quadrature", K, quad, 1e-10);

  double min_step = std::numeric_limits<double>::infinity();
  double prev = arcsn(-1 + 1e-9, a);
  for (int i = 1; i <= 400; ++i) {
    const double s = -1 + 1e-9 + (2 - 2e-9) * i / 400;
    const double v = arcsn(s, a);
    min_step = std::min(min_step, v - prev);
    prev = v;
  }
  rec.above("elliptic.arcsn_monotone", min_step, 0);

  const Modulus& m = fam.modulus();
  const double roundtrip = std::fabs(Modulus::from_k(m.k()).alpha() - a) / a;
  const double pythagoras = std::fabs(a * a + m.alpha_prime() * m.alpha_prime() - 1);
  rec.at_most("elliptic.modulus_roundtrip", std::max(roundtrip, pythagoras), 1e-14);
  rec.above("elliptic.modulus_k", m.k(), 1);
}

void holomorphic_checks(Recorder& rec) {
  using namespace std::complex_literals;
  const std::array families = {
      GeneratorFamily::linear(1.0, 0.0),
      GeneratorFamily::linear(2.0, 0.5 + 0.5i),
      GeneratorFamily::linear(0.5i, -1.0),
      GeneratorFamily::exponential(1.0, 1.0),
      GeneratorFamily::exponential(0.5, 2.0),
      GeneratorFamily::exponential(2.0, -0.7i),
      GeneratorFamily::sine(1.0, 1.0, 0.0),
      GeneratorFamily::sine(0.7, 1.3, 0.2),
      GeneratorFamily::sine(2.0, 0.5i, -1.0),
  };
  double defect = 0;
  for (const auto& g : families)
    for (int i = 0; i < 10; ++i)
      for (int j = 0; j < 10; ++j)
        defect = std::max(defect, std::abs(wronskian_defect(g, {-1 + 2.0 * i / 9, -1 + 2.0 * j / 9})));
  rec.at_most("holomorphic.wronskian_defect", defect, 1e-10);

  const std::array<std::pair<double, double>, 4> regular = {
      std::pair{0.7, 0.4}, {2.0, -0.9}, {-1.2, 1.5}, {1.0, 0.1}};
  const auto order = [](double coarse, double fine) {
    return std::fabs(std::fabs(coarse) / std::fabs(fine) - 4);
  };

  double lap = 0;
  for (auto [x, y] : regular)
    lap = std::max(lap, order(five_point_laplacian(potential_phi, x, y, 1e-2),
                              five_point_laplacian(potential_phi, x, y, 5e-3)));
  rec.at_most("holomorphic.phi_laplacian_order", lap, 0.5);

  const auto r1 = cr_identity_residual(holomorphic_exp(), holomorphic_sin(), {0.5, 0.2}, 1e-2);
  const auto r2 = cr_identity_residual(holomorphic_exp(), holomorphic_sin(), {0.5, 0.2}, 5e-3);
  rec.at_most("holomorphic.cr_identity_order", std::max(order(r1.dx, r2.dx), order(r1.dy, r2.dy)),
              0.5);

  double b = 0, a_err = 0;
  for (auto [x, y] : regular) {
    const auto c = ode_coefficients(potential_phi, x, y, 1e-3);
    b = std::max(b, std::fabs(c.B));
    const double expected = 1 / (std::cosh(y) * std::cosh(y) - std::cos(x) * std::cos(x));
    a_err = std::max(a_err, std::fabs(c.A - expected) / expected);
  }
  rec.at_most("holomorphic.ode_B_vanishes", b, 1e-5);
  rec.at_most("holomorphic.ode_B_order", order(ode_coefficients(potential_phi, 0.7, 0.4, 1e-2).B,
                                               ode_coefficients(potential_phi, 0.7, 0.4, 5e-3).B),
              0.5);
  rec.at_most("holomorphic.ode_A_modulus", a_err, 1e-5);

  double ratio = 0, sym = 0;
  for (int i = 0; i < 25; ++i)
    for (int j = 0; j < 12; ++j) {
      const double x = -kPi + 2 * kPi * (i + 0.5) / 25;
      const double y = -1.5 + 3.0 * (j + 0.5) / 12;
      const double phi = potential_phi(x, y);
      ratio = std::max(ratio, std::fabs(sine_generator_ratio(x, y) + 0.5 * std::sinh(2 * phi)));
      sym = std::max({sym, std::fabs(potential_phi(x + 2 * kPi, y) - phi),
                      std::fabs(potential_phi(x, -y) - phi)});
    }
  rec.at_most("holomorphic.generator_ratio_identity", ratio, 1e-10);
  rec.at_most("holomorphic.phi_symmetry", sym, 1e-14);
}

void surface_checks(Recorder& rec, const SurfaceFamily& fam) {
  const double slab = fam.slab_halfwidth();
  const double ap = fam.alpha_prime();

  GridSpec grid{-kPi, 3 * kPi, -3, 3, 400, 200, 0.05};
  const auto sup_norm = [&](double eps) {
    grid.exclusion_radius = eps;
    double m = 0;
    for (int j = 0; j < grid.ny; ++j)
      for (int i = 0; i < grid.nx; ++i)
        if (!grid.excluded(i, j)) m = std::max(m, fam.gradient_norm(grid.x_at(i), grid.y_at(j)).value);
    return m;
  };
  rec.below("surface.space_like", sup_norm(0.05), 1);
  // The sup tends to 1 as the excluded disks shrink.
  const double s1 = sup_norm(0.5), s2 = sup_norm(0.2), s3 = sup_norm(0.05);
  rec.above("surface.space_like_sup_trend", std::min(s2 - s1, s3 - s2), 0);

  double per = 0, top = 0;
  for (int j = 0; j < 41; ++j)
    for (int i = 0; i < 81; ++i) {
      const double x = -kPi + 4 * kPi * i / 80, y = -3 + 6.0 * j / 40;
      const double z = fam.height(x, y);
      per = std::max({per, std::fabs(fam.height(x + 2 * kPi, y) - z),
                      std::fabs(fam.height(x + kPi, y) + z), std::fabs(fam.height(x, -y) - z),
                      std::fabs(fam.height(-x, y) - z)});
      top = std::max(top, std::fabs(z));
    }
  rec.at_most("surface.periodicity", per, 1e-13);
  rec.at_most("surface.slab_bound", top - slab, 1e-12);

  double attained = 0;
  for (long k = -1; k <= 2; ++k) {
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    attained = std::max(attained, std::fabs(fam.height(kPi * static_cast<double>(k), 0) - sign * slab));
  }
  rec.at_most("surface.slab_attained", attained, 1e-12);

  std::mt19937_64 rng(0x5eed2024);
  double ratio_dev = 0, residual = 0;
  for (int n = 0; n < 20;) {
    const double x = uniform(rng, -kPi, 3 * kPi), y = uniform(rng, -2, 2);
    if (lattice_distance(x, y) < kRegularMargin) continue;
    ++n;
    const double c = fam.pde_residual(x, y, 1e-3);
    const double f = fam.pde_residual(x, y, 5e-4);
    residual = std::max(residual, std::fabs(c));
    ratio_dev = std::max(ratio_dev, std::fabs(std::fabs(c) / std::fabs(f) - 4));
  }
  rec.at_most("surface.pde_residual_order", ratio_dev, 0.5);
  rec.at_most("surface.pde_residual", residual, 1e-5);

  double route = 0, fd = 0;
  for (int j = 0; j < 15; ++j)
    for (int i = 0; i < 30; ++i) {
      const double x = -kPi + 2 * kPi * (i + 0.5) / 30, y = -2 + 4 * (j + 0.5) / 15;
      const double z = fam.height(x, y);
      route = std::max(route, std::fabs(z - ap * arcsn(std::tanh(potential_phi(x + kPi, y)), fam.alpha())));
      if (lattice_distance(x, y) < 0.05) continue;
      constexpr double h = 1e-5;
      const Vec2 g = fam.gradient(x, y);
      const double gx = (fam.height(x + h, y) - fam.height(x - h, y)) / (2 * h);
      const double gy = (fam.height(x, y + h) - fam.height(x, y - h)) / (2 * h);
      const double scale = std::max(std::hypot(g.x, g.y), 1e-3);
      fd = std::max(fd, std::hypot(gx - g.x, gy - g.y) / scale);
    }
  rec.at_most("surface.phi_route", route, 1e-12);
  rec.at_most("surface.gradient_fd", fd, 1e-6);

  double cone = 0, trend = -std::numeric_limits<double>::infinity();
  for (long k = 0; k <= 1; ++k)
    for (int d = 0; d < 8; ++d) {
      const Vec2 dir{std::cos(d * kPi / 4), std::sin(d * kPi / 4)};
      const double e2 = std::fabs(fam.lightcone_ratio(k, dir, 1e-2) - 1);
      const double e3 = std::fabs(fam.lightcone_ratio(k, dir, 1e-3) - 1);
      const double e4 = std::fabs(fam.lightcone_ratio(k, dir, 1e-4) - 1);
      cone = std::max(cone, e3);
      trend = std::max({trend, e3 - e2, e4 - e3});
    }
  rec.at_most("surface.lightcone", cone, 1e-2);
  rec.below("surface.lightcone_trend", trend, 0);

  double sn_err = 0, ode = 0;
  for (int i = 0; i <= 160; ++i) {
    const double eta = -4 + 8.0 * i / 160;
    sn_err = std::max(sn_err, std::fabs(jacobi_sn(profile_F(eta, fam.modulus()) / ap, fam.alpha()) -
                                        std::tanh(eta)));
    ode = std::max(ode, std::fabs(profile_ode_residual(eta, fam.modulus(), 1e-4)));
  }
  rec.at_most("surface.profile_sn_tanh", sn_err, 1e-11);
  rec.at_most("surface.profile_ode", ode, 1e-6);
}

void catenoid_checks(Recorder& rec) {
  double step = std::numeric_limits<double>::infinity(), sup = 0;
  for (double c : {0.5, 1.0, 2.0})
    for (int n : {2, 3, 4}) {
      const CatenoidParams p(c, n);
      // Below r = 1e-2, 1 - |grad t| ~ r^(2n-2) / 2c^2 drops under double resolution for n = 4.
      double prev_t = catenoid_height(p, 1e-2), prev_g = catenoid_gradient_norm(p, 1e-2);
      sup = std::max(sup, prev_g);
      for (int i = 1; i <= 100; ++i) {
        const double r = 1e-2 * std::pow(1e4, i / 100.0);
        const double t = catenoid_height(p, r), g = catenoid_gradient_norm(p, r);
        step = std::min({step, t - prev_t, prev_g - g});
        sup = std::max(sup, g);
        prev_t = t;
        prev_g = g;
      }
    }
  rec.above("catenoid.monotone", step, 0);
  rec.below("catenoid.space_like", sup, 1);

  double closed = 0;
  for (double c : {0.5, 1.0, 2.0}) {
    const CatenoidParams p(c, 2);
    closed = std::max(closed, max_over(41, -2, 2, [&](double e) {
                        const double r = std::pow(10.0, e);
                        return std::fabs(catenoid_height(p, r) - catenoid_height_quadrature(p, r));
                      }));
  }
  rec.at_most("catenoid.closed_form", closed, 1e-10);

  double flux = 0;
  for (double c : {0.5, 1.0, 2.0}) {
    const auto field = catenoid_gradient_field(CatenoidParams(c, 2));
    for (double r : {0.5, 1.0, 5.0})
      flux = std::max(flux, std::fabs(flux_integral(field, Contour::circle({0, 0}, r)) - 2 * kPi * c));
  }
  rec.at_most("catenoid.flux", flux, 1e-8);
}

void flux_checks(Recorder& rec, const SurfaceFamily& fam) {
  const auto field = surface_gradient_field(fam);
  const FluxReport at0 = flux_at_singularity(fam, 0);
  const double closed = closed_form_flux(fam);
  rec.near("flux.closed_form", std::fabs(at0.value), closed, 1e-8);
  rec.near("flux.closed_form_quadrature", closed_form_flux_quadrature(fam), closed, 1e-10);

  rec.at_most("flux.contour_invariance",
              contour_invariance(field, {Contour::circle({0, 0}, 0.3), Contour::circle({0, 0}, 0.7),
                                         Contour::circle({0, 0}, 1.2),
                                         Contour::rectangle({0, 0}, 0.6, 0.4)}),
              1e-7);
  rec.at_most("flux.node_convergence",
              std::fabs(flux_integral(field, Contour::circle({0, 0}, kDefaultFluxRadius, 128)) -
                        flux_integral(field, Contour::circle({0, 0}, kDefaultFluxRadius, 256))),
              1e-9);

  double spread = 0;
  int sign_mismatches = 0;
  for (long k = -1; k <= 2; ++k) {
    const double v = flux_at_singularity(fam, k).value;
    spread = std::max(spread, std::fabs(std::fabs(v) - std::fabs(at0.value)));
    // Peaks (even k) have an inward gradient, hence negative outward flux.
    if (std::signbit(v) != std::signbit(signed_flux_at(fam, k))) ++sign_mismatches;
  }
  rec.at_most("flux.lattice_magnitude", spread, 1e-9);
  rec.at_most("flux.lattice_sign", sign_mismatches, 0);

  rec.at_most("flux.singularity_free",
              std::fabs(flux_integral(field, Contour::circle({kPi / 2, 0.3}, 0.5))), 1e-9);
  rec.above("flux.essential", std::fabs(at0.value), 1e-6);
}

}  // namespace

bool VerificationReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

nlohmann::ordered_json VerificationReport::to_json() const {
  nlohmann::ordered_json list = nlohmann::ordered_json::array();
  for (const Check& c : checks) {
    nlohmann::ordered_json j;
    j["name"] = c.name;
    j["alpha"] = c.alpha;
    j["status"] = c.passed ? "pass" : "fail";
    j["observed"] = c.observed;
    j["bound"] = c.bound;
    if (c.reference) j["reference"] = *c.reference;
    list.push_back(std::move(j));
  }
  nlohmann::ordered_json doc;
  doc["checks"] = std::move(list);
  doc["alpha_values"] = alpha_values;
  doc["timestamp"] = timestamp;
  return doc;
}

VerificationReport run_verification(const std::vector<double>& alphas, std::string timestamp) {
  if (alphas.empty()) throw DomainError("verify: no alpha values given");
  std::vector<SurfaceFamily> families;
  for (double a : alphas) families.push_back(SurfaceFamily::from_alpha(a));

  VerificationReport report;
  report.alpha_values = alphas;
  report.timestamp = std::move(timestamp);
  for (const SurfaceFamily& fam : families) {
    Recorder rec(report.checks, fam.alpha());
    elliptic_checks(rec, fam);
    holomorphic_checks(rec);
    surface_checks(rec, fam);
    catenoid_checks(rec);
    flux_checks(rec, fam);
  }
  return report;
}

std::string default_timestamp() {
  std::time_t t{};
  if (const char* epoch = std::getenv("SOURCE_DATE_EPOCH"); epoch && *epoch)
    t = static_cast<std::time_t>(std::strtoll(epoch, nullptr, 10));
  else
    t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm utc{};
  gmtime_r(&t, &utc);
  return fmt::format("{:04d}-{:02d}-{:02d}T{:02d}:{:02d}:{:02d}Z", utc.tm_year + 1900, utc.tm_mon + 1,
                     utc.tm_mday, utc.tm_hour, utc.tm_min, utc.tm_sec);
}

}  // namespace maxsurf::cli
