#include "maxsurf/holomorphic.hpp"

#include <cmath>
#include <string>

#include "maxsurf/errors.hpp"
#include "maxsurf/lattice.hpp"

namespace maxsurf {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

// a^2 real up to rounding.
void require_real_square(Complex a, const char* what) {
  if (!std::isfinite(a.real()) || !std::isfinite(a.imag()))
    throw DomainError(std::string("generator: ") + what + " must be finite");
  if (std::abs(a) == 0) throw DomainError(std::string("generator: ") + what + " must be nonzero");
  const Complex sq = a * a;
  if (std::fabs(sq.imag()) > 1e-12 * std::abs(sq))
    throw DomainError(std::string("generator: ") + what + "^2 must be real");
}

bool is_real(Complex a) { return a.imag() == 0; }

Complex checked(Complex z, const char* what) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
    throw RangeError(std::string(what) + ": non-finite result");
  return z;
}

void require_regular(double x, double y, const char* what) {
  if (!std::isfinite(x) || !std::isfinite(y))
    throw DomainError(std::string(what) + ": non-finite point");
  if (is_lattice_point(x, y))
    throw SingularPointError(std::string(what) + ": singular point (pi k, 0)");
}

}  // namespace

GeneratorFamily GeneratorFamily::linear(Complex a, Complex c) {
  require_real_square(a, "a");
  return GeneratorFamily(LinearGenerator{a, c});
}

GeneratorFamily GeneratorFamily::exponential(Complex a, Complex b) {
  require_real_square(a, "a");
  require_real_square(b, "b");
  return GeneratorFamily(ExponentialGenerator{a, b});
}

GeneratorFamily GeneratorFamily::sine(Complex a, Complex b, Complex c) {
  require_real_square(a, "a");
  require_real_square(b, "b");
  return GeneratorFamily(SineGenerator{a, b, c});
}

double GeneratorFamily::expected_wronskian() const {
  return std::visit(Overloaded{
                        [](const LinearGenerator& g) { return -(g.a * g.a).real(); },
                        [](const ExponentialGenerator&) { return 0.0; },
                        [](const SineGenerator& g) { return -(g.a * g.a * g.b * g.b).real(); },
                    },
                    variant_);
}

bool GeneratorFamily::is_space_like() const {
  return std::visit(Overloaded{
                        [](const LinearGenerator& g) { return is_real(g.a); },
                        [](const ExponentialGenerator& g) { return is_real(g.a) && is_real(g.b); },
                        [](const SineGenerator& g) { return is_real(g.a) && is_real(g.b); },
                    },
                    variant_);
}

GeneratorJet eval_g_derivs(const GeneratorFamily& family, Complex w) {
  if (!std::isfinite(w.real()) || !std::isfinite(w.imag()))
    throw DomainError("eval_g: non-finite argument");
  const GeneratorJet jet = std::visit(
      Overloaded{
          [w](const LinearGenerator& g) { return GeneratorJet{g.a * w + g.c, g.a, Complex{}}; },
          [w](const ExponentialGenerator& g) {
            const Complex e = g.a * std::exp(g.b * w);
            return GeneratorJet{e, g.b * e, g.b * g.b * e};
          },
          [w](const SineGenerator& g) {
            const Complex arg = g.b * w + g.c;
            const Complex s = std::sin(arg), c = std::cos(arg);
            return GeneratorJet{g.a * s, g.a * g.b * c, -g.a * g.b * g.b * s};
          },
      },
      family.variant());
  checked(jet.g, "eval_g");
  checked(jet.dg, "eval_g");
  checked(jet.d2g, "eval_g");
  return jet;
}

Complex eval_g(const GeneratorFamily& family, Complex w) { return eval_g_derivs(family, w).g; }

Complex wronskian_defect(const GeneratorFamily& family, Complex w) {
  const GeneratorJet j = eval_g_derivs(family, w);
  return checked(j.g * j.d2g - j.dg * j.dg - family.expected_wronskian(), "wronskian_defect");
}

double potential_phi(double x, double y) {
  require_regular(x, y, "potential_phi");
  // tanh(phi) = -cos x / cosh y; cosh overflow sends the ratio to 0 as it should.
  return -std::atanh(std::cos(x) / std::cosh(y));
}

HolomorphicSample holomorphic_identity() {
  return {[](Complex w) { return w; }, [](Complex) { return Complex{1, 0}; }};
}

HolomorphicSample holomorphic_exp() {
  return {[](Complex w) { return std::exp(w); }, [](Complex w) { return std::exp(w); }};
}

HolomorphicSample holomorphic_sin() {
  return {[](Complex w) { return std::sin(w); }, [](Complex w) { return std::cos(w); }};
}

HolomorphicSample holomorphic_cos() {
  return {[](Complex w) { return std::cos(w); }, [](Complex w) { return -std::sin(w); }};
}

CauchyRiemannResidual cr_identity_residual(const HolomorphicSample& f, const HolomorphicSample& g,
                                           Complex w, double h) {
  if (!(h > 0)) throw DomainError("cr_identity_residual: step must be positive");
  auto re_product = [&](Complex z) { return (f.value(z) * std::conj(g.value(z))).real(); };
  const double ddx = (re_product(w + Complex{h, 0}) - re_product(w - Complex{h, 0})) / (2 * h);
  const double ddy = (re_product(w + Complex{0, h}) - re_product(w - Complex{0, h})) / (2 * h);
  const Complex fv = f.value(w), fd = f.derivative(w);
  const Complex gv = std::conj(g.value(w)), gd = std::conj(g.derivative(w));
  const double rx = std::fabs(ddx - (fd * gv + fv * gd).real());
  const double ry = std::fabs(ddy + (fd * gv - fv * gd).imag());
  if (!std::isfinite(rx) || !std::isfinite(ry))
    throw RangeError("cr_identity_residual: non-finite evaluation");
  return {rx, ry};
}

OdeCoefficients ode_coefficients(const ScalarField& phi, double x, double y, double h) {
  if (!(h > 0)) throw DomainError("ode_coefficients: step must be positive");
  const double c = phi(x, y);
  const double xp = phi(x + h, y), xm = phi(x - h, y);
  const double yp = phi(x, y + h), ym = phi(x, y - h);
  const double px = (xp - xm) / (2 * h);
  const double py = (yp - ym) / (2 * h);
  const double pxx = (xp - 2 * c + xm) / (h * h);
  const double pyy = (yp - 2 * c + ym) / (h * h);
  const double pxy =
      (phi(x + h, y + h) - phi(x + h, y - h) - phi(x - h, y + h) + phi(x - h, y - h)) / (4 * h * h);
  const OdeCoefficients out{px * px + py * py, pxx + pyy,
                            -px * px * pyy + 2 * px * py * pxy - py * py * pxx};
  if (!std::isfinite(out.A) || !std::isfinite(out.B) || !std::isfinite(out.C))
    throw RangeError("ode_coefficients: non-finite evaluation");
  return out;
}

double five_point_laplacian(const ScalarField& phi, double x, double y, double h) {
  if (!(h > 0)) throw DomainError("five_point_laplacian: step must be positive");
  return (phi(x + h, y) + phi(x - h, y) + phi(x, y + h) + phi(x, y - h) - 4 * phi(x, y)) / (h * h);
}

double sine_generator_ratio(double x, double y) {
  require_regular(x, y, "sine_generator_ratio");
  const Complex w{x, y};
  return std::cos(w).real() / std::norm(std::sin(w));
}

}  // namespace maxsurf
