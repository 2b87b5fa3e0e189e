#pragma once

// Holomorphic generators g(w) of harmonic level-set maximal surfaces and the
// numerical identities connecting them to the reduced profile ODE.
//
// A graph u = F(phi) with phi = Re h harmonic is maximal iff 1/h' = g solves
// g g'' - g'^2 = c for a real constant c.  The solutions are the linear,
// exponential and sine families below.  Everything downstream of the sine
// family uses the normalised generator g(w) = sin w, reached from
// a sin(b w + c) by an isometry and homothety of the w-plane.

#include <complex>
#include <functional>
#include <variant>

namespace maxsurf {

using Complex = std::complex<double>;

struct LinearGenerator {  // g = a w + c
  Complex a;
  Complex c;
};

struct ExponentialGenerator {  // g = a exp(b w)
  Complex a;
  Complex b;
};

struct SineGenerator {  // g = a sin(b w + c)
  Complex a;
  Complex b;
  Complex c;
};

class GeneratorFamily {
 public:
  using Variant = std::variant<LinearGenerator, ExponentialGenerator, SineGenerator>;

  // Scale parameters must be nonzero with a^2 (and b^2) real; a DomainError is
  // thrown otherwise.  Real a, b are the space-like representatives.
  static GeneratorFamily linear(Complex a, Complex c);
  static GeneratorFamily exponential(Complex a, Complex b);
  static GeneratorFamily sine(Complex a, Complex b, Complex c);

  const Variant& variant() const { return variant_; }

  /// The constant c in g g'' - g'^2 = c: -a^2, 0 and -a^2 b^2 respectively.
  double expected_wronskian() const;

  /// True when the scale parameters are real, the only case giving a
  /// space-like surface.
  bool is_space_like() const;

 private:
  explicit GeneratorFamily(Variant v) : variant_(v) {}
  Variant variant_;
};

struct GeneratorJet {
  Complex g;
  Complex dg;
  Complex d2g;
};

/// g(w) in closed form.  RangeError if the result is not finite.
Complex eval_g(const GeneratorFamily& family, Complex w);

/// (g, g', g'') in closed form.
GeneratorJet eval_g_derivs(const GeneratorFamily& family, Complex w);

/// g g'' - g'^2 - c_expected; vanishes identically on every family.
Complex wronskian_defect(const GeneratorFamily& family, Complex w);

/// phi(x, y) = Re h(w) = (1/2) ln((cosh y - cos x) / (cosh y + cos x)) for the
/// normalised generator g = sin w, with the integration constant of h set to 0.
/// SingularPointError within kSingularTolerance of (pi k, 0).
double potential_phi(double x, double y);

/// A holomorphic function known in closed form together with its derivative.
struct HolomorphicSample {
  std::function<Complex(Complex)> value;
  std::function<Complex(Complex)> derivative;
};

HolomorphicSample holomorphic_identity();
HolomorphicSample holomorphic_exp();
HolomorphicSample holomorphic_sin();
HolomorphicSample holomorphic_cos();

struct CauchyRiemannResidual {
  double dx;  // |d/dx Re(f conj g) - Re(f' conj g + f conj g')|
  double dy;  // |d/dy Re(f conj g) + Im(f' conj g - f conj g')|
};

/// Residuals of the product-rule identities for Re(f conj g), with the partial
/// derivatives taken by central differences of step h.  O(h^2).
CauchyRiemannResidual cr_identity_residual(const HolomorphicSample& f,
                                           const HolomorphicSample& g, Complex w,
                                           double h = 1e-4);

using ScalarField = std::function<double(double, double)>;

struct OdeCoefficients {
  double A;  // phi_x^2 + phi_y^2
  double B;  // phi_xx + phi_yy
  double C;  // -phi_x^2 phi_yy + 2 phi_x phi_y phi_xy - phi_y^2 phi_xx
};

/// Coefficients of A F'' + B F' + C F'^3 = 0 for u = F(phi), by central
/// differences of step h.
OdeCoefficients ode_coefficients(const ScalarField& phi, double x, double y, double h = 1e-4);

/// Five-point Laplacian of a scalar field.
double five_point_laplacian(const ScalarField& phi, double x, double y, double h);

/// Re(g') / |g|^2 for g = sin w, i.e. cos x cosh y / (sin^2 x + sinh^2 y).
/// Equals -(1/2) sinh(2 phi).  SingularPointError on the lattice.
double sine_generator_ratio(double x, double y);

}  // namespace maxsurf
