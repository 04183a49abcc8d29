#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "doctest.h"
#include "orthoquad/oracle.hpp"
#include "orthoquad/specfun.hpp"
#include "orthoquad/transform.hpp"

using namespace orthoquad;
using doctest::Approx;

namespace {

std::function<Complex(double)> expneg(double c = 1.0) {
  return [c](double x) { return std::exp(Complex(0.0, -c * x)); };
}

std::function<Complex(double)> bessel_integrand(double alpha, double c) {
  return [alpha, c](double x) -> Complex { return std::pow(x, 0.25) * bessel_j(alpha, c * std::sqrt(x)); };
}

std::function<Complex(double)> weighted_jacobi(const PolynomialFamily& f, int n) {
  return [f, n](double x) -> Complex { return envelope(f, x) * eval_poly(f, n, x); };
}

}  // namespace

TEST_CASE("adaptive integration on elementary integrands") {
  const std::vector<double> unit{0.0, 1.0};
  const auto square = integrate_adaptive([](double x) { return Complex(x * x); }, unit, 1e-14, 1e-14, 100);
  CHECK(square.value.real() == Approx(1.0 / 3.0).epsilon(1e-15));
  CHECK(square.panels == 1);

  const std::vector<double> pts{0.0, 1.0, 5.0, 40.0};
  const auto decay = integrate_adaptive([](double x) { return Complex(std::exp(-x), std::sin(x) * std::exp(-x)); },
                                        pts, 1e-13, 1e-13, 1000);
  CHECK(decay.value.real() == Approx(1.0 - std::exp(-40.0)).epsilon(1e-13));
  CHECK(decay.value.imag() == Approx(0.5).epsilon(1e-12));
  CHECK(decay.error <= 1e-13);

  const auto singular = integrate_adaptive([](double x) { return Complex(1.0 / std::sqrt(x)); }, unit,
                                           1e-10, 1e-10, 2000);
  CHECK(singular.value.real() == Approx(2.0).epsilon(1e-9));
}

TEST_CASE("adaptive integration is bit-stable") {
  const std::vector<double> pts{-3.0, 0.0, 2.0};
  auto f = [](double x) { return Complex(std::cos(7 * x) * std::exp(-x * x), x); };
  const auto a = integrate_adaptive(f, pts, 1e-12, 1e-12, 500);
  const auto b = integrate_adaptive(f, pts, 1e-12, 1e-12, 500);
  CHECK(a.value == b.value);
  CHECK(a.error == b.error);
  CHECK(a.panels == b.panels);
}

TEST_CASE("adaptive integration errors") {
  const std::vector<double> unit{0.0, 1.0};
  auto f = [](double x) { return Complex(std::pow(x, -0.9)); };
  try {
    integrate_adaptive(f, unit, 1e-12, 1e-12, 8);
    FAIL("expected AccuracyError");
  } catch (const AccuracyError& e) {
    CHECK(std::isfinite(e.estimate_re()));
    CHECK(e.estimate_re() > 1.0);
    CHECK(e.error_bound() > 1e-12);
  }
  const std::vector<double> one{0.0};
  const std::vector<double> unsorted{1.0, 0.0};
  CHECK_THROWS_AS(integrate_adaptive(f, one, 1e-8, 1e-8, 10), DomainError);
  CHECK_THROWS_AS(integrate_adaptive(f, unsorted, 1e-8, 1e-8, 10), DomainError);
  CHECK_THROWS_AS(integrate_adaptive(f, unit, 0.0, 1e-8, 10), DomainError);
}

TEST_CASE("closed forms at z = 1 reproduce the input") {
  FigureParams p = default_params(Figure::fig1);
  CHECK(closed_form_rhs(Figure::fig1, p, 1.0) == Approx(1.0).epsilon(1e-15));

  p = default_params(Figure::fig2);
  p.z = 1.0;
  for (double y : {0.3, 2.0, 17.0})
    CHECK(closed_form_rhs(Figure::fig2, p, y) == Approx(bessel_integrand(0.0, p.c)(y).real()).epsilon(1e-14));

  p = default_params(Figure::fig3);
  p.z = 1.0;
  const auto fam = PolynomialFamily::jacobi(0.0, 0.0);
  for (int n : {0, 3, 5})
    for (double y : {-0.7, 0.1, 0.95}) {
      p.degree = n;
      CHECK(closed_form_rhs(Figure::fig3, p, y) == Approx(weighted_jacobi(fam, n)(y).real()).epsilon(1e-14));
    }
}

TEST_CASE("figure defaults") {
  const auto f1 = default_params(Figure::fig1);
  CHECK(f1.order == 31);
  CHECK(f1.c == 1.0);
  const auto f2 = default_params(Figure::fig2);
  CHECK(f2.order == 30);
  CHECK(f2.alpha == 0.0);
  CHECK(f2.c == 2.0);
  CHECK(f2.z == 0.1);
  const auto f3 = default_params(Figure::fig3);
  CHECK(f3.order == 50);
  CHECK(f3.z == 0.25);
  CHECK(f3.degree == 5);
}

TEST_CASE("direct integration of the Hermite example") {
  IntegralTask task;
  task.family = PolynomialFamily::hermite();
  task.y = 0.0;
  task.z = 0.5;
  task.integrand = expneg();
  const auto est = direct_transform(task);
  const double closed = closed_form_rhs(Figure::fig1, default_params(Figure::fig1), 0.5);
  CHECK(closed == Approx(std::sqrt(1.6) * std::exp(-0.3)).epsilon(1e-15));
  CHECK(std::abs(est.value - closed) <= 1e-7);
  CHECK(est.error <= 1e-9);

  SUBCASE("Fourier limit z = i on a Gaussian") {
    IntegralTask fourier;
    fourier.family = PolynomialFamily::hermite();
    fourier.z = Complex(0.0, 1.0);
    fourier.integrand = [](double x) { return Complex(std::exp(-x * x)); };
    for (double y : {0.0, 0.8, -2.0}) {
      fourier.y = y;
      CHECK(std::abs(direct_transform(fourier).value - std::exp(-y * y / 4) / std::sqrt(2.0)) <= 1e-9);
    }
  }
}

TEST_CASE("Hankel identity self-check on the first Laguerre nodes") {
  const auto params = default_params(Figure::fig2);
  const auto rule = gauss_rule(PolynomialFamily::laguerre(params.alpha), params.order);
  for (int j = 0; j < 5; ++j) {
    IntegralTask task;
    task.family = PolynomialFamily::laguerre(params.alpha);
    task.y = rule.nodes[j];
    task.z = params.z;
    task.integrand = bessel_integrand(params.alpha, params.c);
    const auto est = direct_transform(task);
    CHECK(std::abs(est.value.real() - closed_form_rhs(Figure::fig2, params, task.y)) <= 1e-7);
    CHECK(std::abs(est.value.imag()) == 0.0);
  }
}

TEST_CASE("Hankel limit with an explicit truncation") {
  // int 1/2 (y/x)^(1/4) J_0(sqrt(xy)) x^(1/4) e^(-x) dx = y^(1/4) e^(-y/4) / 2
  IntegralTask task;
  task.family = PolynomialFamily::laguerre(0.0);
  task.z = -1.0;
  task.integrand = [](double x) { return Complex(std::pow(x, 0.25) * std::exp(-x)); };
  task.y = 1.3;
  CHECK_THROWS_AS(direct_transform(task), DomainError);
  task.truncation.upper = 60.0;
  const auto est = direct_transform(task);
  CHECK(std::abs(est.value.real() - std::pow(1.3, 0.25) * std::exp(-1.3 / 4) / 2) <= 1e-9);
}

TEST_CASE("direct integration of the Jacobi example") {
  const auto params = default_params(Figure::fig3);
  const auto fam = PolynomialFamily::jacobi(params.alpha, params.beta);
  for (double y : {-0.9, -0.3, 0.0, 0.55}) {
    IntegralTask task;
    task.family = fam;
    task.y = y;
    task.z = params.z;
    task.integrand = weighted_jacobi(fam, params.degree);
    const auto est = direct_transform(task);
    CHECK(std::abs(est.value.real() - closed_form_rhs(Figure::fig3, params, y)) <= 1e-7);
  }
  SUBCASE("unequal parameters") {
    FigureParams p = params;
    p.alpha = 1.0;
    p.beta = 0.5;
    p.degree = 3;
    p.z = 0.3;
    const auto f = PolynomialFamily::jacobi(p.alpha, p.beta);
    IntegralTask task;
    task.family = f;
    task.y = 0.2;
    task.z = p.z;
    task.integrand = weighted_jacobi(f, p.degree);
    CHECK(std::abs(direct_transform(task).value.real() - closed_form_rhs(Figure::fig3, p, 0.2)) <= 1e-7);
  }
}

TEST_CASE("direct integration rejects unsupported tasks") {
  IntegralTask task;
  task.family = PolynomialFamily::jacobi(0.0, 0.0);
  task.y = 0.2;
  task.z = 0.5;
  CHECK_THROWS_AS(direct_transform(task), DomainError);  // no integrand
  task.integrand = expneg();
  task.y = 1.5;
  CHECK_THROWS_AS(direct_transform(task), DomainError);
  task.y = 0.2;
  task.truncation.endpoint_gap = 0.0;
  CHECK_THROWS_AS(direct_transform(task), DomainError);
  task.truncation.endpoint_gap = 1e-10;
  task.z = 0.97;
  CHECK_THROWS_AS(direct_transform(task), ConvergenceDomainError);
  task.family = PolynomialFamily::hermite();
  task.z = 1.0;
  CHECK_THROWS_AS(direct_transform(task), SingularKernelError);
  task.family = PolynomialFamily::laguerre(0.0);
  task.z = 0.5;
  task.y = -1.0;
  CHECK_THROWS_AS(direct_transform(task), DomainError);
  CHECK_THROWS_AS(closed_form_rhs(Figure::fig2, default_params(Figure::fig2), -1.0), DomainError);
}

TEST_CASE("quadrature stays within three figure budgets of the direct integral") {
  SUBCASE("Hermite, center row, z grid") {
    const auto rule = std::make_shared<const QuadratureRule>(gauss_rule(PolynomialFamily::hermite(), 31));
    const Eigen::Index c = center_index(31);
    for (double z : {0.1, 0.3, 0.5, 0.7, 0.9}) {
      const auto dt = build_transform(rule, z);
      const Complex quad = apply_quadrature(dt, expneg())[c];
      IntegralTask task{PolynomialFamily::hermite(), 0.0, z, expneg()};
      CHECK(std::abs(quad - direct_transform(task).value) <= 3 * 0.01);
    }
  }
  SUBCASE("Laguerre, every row") {
    const auto p = default_params(Figure::fig2);
    const auto fam = PolynomialFamily::laguerre(p.alpha);
    const auto rule = std::make_shared<const QuadratureRule>(gauss_rule(fam, p.order));
    const auto dt = build_transform(rule, p.z);
    const auto quad = apply_quadrature(dt, bessel_integrand(p.alpha, p.c));
    for (int j = 0; j < p.order; ++j) {
      IntegralTask task{fam, rule->nodes[j], p.z, bessel_integrand(p.alpha, p.c)};
      CHECK(std::abs(quad[j] - direct_transform(task).value) <= 3 * 0.01);
    }
  }
  SUBCASE("Jacobi, every row") {
    const auto p = default_params(Figure::fig3);
    const auto fam = PolynomialFamily::jacobi(p.alpha, p.beta);
    const auto rule = std::make_shared<const QuadratureRule>(gauss_rule(fam, p.order));
    const auto dt = build_transform(rule, p.z);
    const auto quad = apply_quadrature(dt, weighted_jacobi(fam, p.degree));
    for (int j = 0; j < p.order; ++j) {
      IntegralTask task{fam, rule->nodes[j], p.z, weighted_jacobi(fam, p.degree)};
      CHECK(std::abs(quad[j] - direct_transform(task).value) <= 3 * 5e-4);
    }
  }
}
