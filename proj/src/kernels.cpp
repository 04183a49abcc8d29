#include <cmath>
#include <numbers>
#include <string>

#include "orthoquad/errors.hpp"
#include "orthoquad/specfun.hpp"
#include "orthoquad/transform.hpp"

namespace orthoquad {

namespace {

constexpr double kF4Margin = 1e-3;

void check_mehler_z(Complex z) {
  if (z.imag() == 0.0) {
    const double r = z.real();
    if (r == 1.0 || r == -1.0) throw SingularKernelError("Mehler kernel is singular at z = +-1");
    if (!(std::abs(r) < 1.0)) throw DomainError("Mehler kernel requires |z| < 1 for real z");
    return;
  }
  if (z.real() == 0.0 && std::abs(z.imag()) == 1.0) return;
  throw DomainError("Mehler kernel supports real |z| < 1 or z = +-i");
}

void check_hille_hardy_z(double z) {
  if (z == 1.0) throw SingularKernelError("Hille-Hardy kernel is singular at z = 1");
  if (z == -1.0) return;
  if (!(std::abs(z) < 1.0) || z == 0.0)
    throw DomainError("Hille-Hardy kernel supports real 0 < |z| < 1 or z = -1");
}

void check_bailey_z(double z) {
  if (z == 1.0) throw SingularKernelError("Bailey kernel is singular at z = 1");
  if (!(z > 0.0 && z < 1.0)) throw DomainError("Bailey kernel supports real 0 < z < 1");
}

double real_z(Complex z, const char* who) {
  if (z.imag() != 0.0) throw DomainError(std::string(who) + " kernel requires real z");
  return z.real();
}

}  // namespace

Complex mehler_kernel(double x, double y, Complex z) {
  check_mehler_z(z);
  const Complex z2 = z * z;
  const Complex one_minus = 1.0 - z2;
  const Complex exponent = -((1.0 + z2) * (x * x + y * y) - 4.0 * x * y * z) / (2.0 * one_minus);
  return std::exp(exponent) / std::sqrt(std::numbers::pi * one_minus);
}

double hille_hardy_kernel(double alpha, double x, double y, double z) {
  PolynomialFamily::laguerre(alpha);
  check_hille_hardy_z(z);
  if (!(x > 0.0) || !(y > 0.0)) throw DomainError("Hille-Hardy kernel requires x, y > 0");

  const double one_minus = 1.0 - z;
  const double decay = (1.0 + z) * (x + y) / (2.0 * one_minus);
  const double prefactor =
      std::pow(std::abs(z), -0.5 * alpha) / one_minus * std::pow(y / x, 0.25);
  if (z > 0.0) {
    const double w = 2.0 * std::sqrt(x * y * z) / one_minus;
    return prefactor * std::exp(w - decay) * bessel_i_scaled(alpha, w);
  }
  // Negative z continues I_alpha onto the imaginary axis, where it becomes J_alpha.
  const double t = 2.0 * std::sqrt(x * y * -z) / one_minus;
  return prefactor * std::exp(-decay) * bessel_j(alpha, t);
}

double bailey_f4_radius(double z) { return 2.0 * std::sqrt(z) / (1.0 + z); }

double bailey_kernel(double alpha, double beta, double x, double y, double z) {
  PolynomialFamily::jacobi(alpha, beta);
  check_bailey_z(z);
  if (!(std::abs(x) < 1.0) || !(std::abs(y) < 1.0))
    throw DomainError("Bailey kernel requires x, y in (-1, 1)");

  const double ab = alpha + beta;
  const double zp = (1.0 + z) * (1.0 + z);
  F4Params p;
  p.a = 0.5 * (ab + 2.0);
  p.b = 0.5 * (ab + 3.0);
  p.c = alpha + 1.0;
  p.d = beta + 1.0;
  p.xi = z * (1.0 - x) * (1.0 - y) / zp;
  p.eta = z * (1.0 + x) * (1.0 + y) / zp;
  p.guard_margin = kF4Margin;

  const double generating =
      std::exp(log_gamma(ab + 2.0) - log_gamma(alpha + 1.0) - log_gamma(beta + 1.0)) *
      (1.0 - z) / std::pow(1.0 + z, ab + 2.0) * appell_f4(p);
  const double weight = std::pow((1.0 - x) * (1.0 - y), 0.5 * alpha + 0.25) *
                        std::pow((1.0 + x) * (1.0 + y), 0.5 * beta + 0.25);
  return weight / (std::exp2(ab + 1.0) * std::sqrt(1.0 - x * x)) * generating;
}

PoissonKernel::PoissonKernel(PolynomialFamily family, Complex z) : family_(family), z_(z) {
  family_.validate();
  switch (family_.kind) {
    case FamilyKind::hermite:
      check_mehler_z(z_);
      break;
    case FamilyKind::laguerre:
      check_hille_hardy_z(real_z(z_, "Hille-Hardy"));
      break;
    case FamilyKind::jacobi: {
      const double zr = real_z(z_, "Bailey");
      check_bailey_z(zr);
      if (bailey_f4_radius(zr) > 1.0 - kF4Margin)
        throw ConvergenceDomainError("Bailey kernel: z too close to 1 for the F4 series");
      break;
    }
  }
}

Complex PoissonKernel::operator()(double x, double y) const {
  switch (family_.kind) {
    case FamilyKind::hermite:
      return mehler_kernel(x, y, z_);
    case FamilyKind::laguerre:
      return hille_hardy_kernel(family_.alpha, x, y, z_.real());
    case FamilyKind::jacobi:
      return bailey_kernel(family_.alpha, family_.beta, x, y, z_.real());
  }
  return {};
}

}  // namespace orthoquad
