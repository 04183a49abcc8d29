// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "orthoquad/cli.hpp"
#include "orthoquad/nodes.hpp"
#include "orthoquad/oracle.hpp"
#include "orthoquad/specfun.hpp"
#include "orthoquad/transform.hpp"
#include "support/series_oracle.hpp"

using namespace orthoquad;

namespace {

int failures = 0;

void report(int id, const char* name, bool ok, const std::string& detail) {
  std::printf("[%s] AC%-2d %-28s %s\n", ok ? "PASS" : "FAIL", id, name, detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

template <class F>
double seconds(F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

const std::vector<PolynomialFamily>& families() {
  static const std::vector<PolynomialFamily> f{PolynomialFamily::hermite(), PolynomialFamily::laguerre(0.0),
                                               PolynomialFamily::laguerre(1.5), PolynomialFamily::jacobi(0.0, 0.0),
                                               PolynomialFamily::jacobi(-0.5, 0.5), PolynomialFamily::jacobi(2.0, 1.0)};
  return f;
}

std::shared_ptr<const QuadratureRule> rule_ptr(const PolynomialFamily& f, int order) {
  return std::make_shared<const QuadratureRule>(gauss_rule(f, order));
}

// Runs `orthoquad reproduce <fig>` in-process and reads the summary line.
void figure(int id, const char* name, const char* fig, double lo, double hi, double budget_s) {
  std::string args[] = {"orthoquad", "reproduce", fig};
  char* argv[] = {args[0].data(), args[1].data(), args[2].data()};
  std::ostringstream out, err;
  int code = -1;
  const double t = seconds([&] { code = cli::run(3, argv, out, err); });
  const std::string text = out.str();
  const auto pos = text.rfind("error_norm=");
  if (code != 0 || pos == std::string::npos) {
    report(id, name, false, "exit code " + std::to_string(code) + " " + err.str());
    return;
  }
  const double e = std::strtod(text.c_str() + pos + 11, nullptr);
  const bool ok = e >= lo && e <= hi && t < budget_s;
  report(id, name, ok, fmt("error_norm=%.4g (allowed [%g, %g]) ", e, lo, hi) + fmt("runtime=%.3fs", t));
}

void exactness_at_one() {
  double worst = 0.0;
  for (const auto& f : families())
    for (int order : {5, 31, 50}) {
      const auto dt = build_transform(rule_ptr(f, order), 1.0);
      worst = std::max(worst, (dt.matrix - Eigen::MatrixXd::Identity(order, order)).cwiseAbs().maxCoeff());
    }
  report(4, "T(1) = I", worst <= 1e-11, fmt("max|T(1)-I|=%.3g (tol 1e-11)", worst));
}

void eigen_relation() {
  double worst = 0.0;
  for (const auto& f : families())
    for (int order : {1, 2, 5, 10, 20, 31, 40, 50}) {
      const auto rule = rule_ptr(f, order);
      for (Complex z : {Complex(0.25), Complex(-0.5), Complex(0.0, 1.0)}) {
        const auto dt = build_transform(rule, z);
        Complex zm = 1.0;
        for (int m = 0; m < order; ++m, zm *= z) {
          const Vector<Complex> w = rule->samples.row(m).transpose().cast<Complex>();
          worst = std::max(worst, (apply_quadrature(dt, w) - zm * w).norm());
        }
      }
    }
  report(5, "eigen-relation", worst <= 1e-9, fmt("max||T w_m - z^m w_m||=%.3g (tol 1e-9)", worst));
}

void semigroup() {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double worst = 0.0;
  for (const auto& f : families()) {
    const auto rule = rule_ptr(f, 40);
    for (int trial = 0; trial < 20; ++trial) {
      const Complex z1 = std::polar(std::sqrt(u(rng)), 2 * std::numbers::pi * u(rng));
      const Complex z2 = std::polar(std::sqrt(u(rng)), 2 * std::numbers::pi * u(rng));
      const auto a = build_transform(rule, z1);
      const auto b = build_transform(rule, z2);
      const auto ab = build_transform(rule, z1 * z2);
      worst = std::max(worst, (a.matrix * b.matrix - ab.matrix).cwiseAbs().maxCoeff());
    }
  }
  report(6, "semigroup", worst <= 1e-9, fmt("max|T(z1)T(z2)-T(z1 z2)|=%.3g (tol 1e-9)", worst));
}

void oracle_equivalence() {
  try {
    auto f = [](double x) { return std::exp(Complex(0.0, -x)); };
    IntegralTask task{PolynomialFamily::hermite(), 0.0, 0.5, f};
    const Complex direct = direct_transform(task).value;
    const double closed = closed_form_rhs(Figure::fig1, default_params(Figure::fig1), 0.5);
    const auto rule = rule_ptr(PolynomialFamily::hermite(), 31);
    const Complex quad = apply_quadrature(build_transform(rule, 0.5), std::function<Complex(double)>(f))[center_index(31)];
    const double e1 = std::abs(direct - closed);
    const double e2 = std::abs(quad - direct);
    report(7, "oracle equivalence", e1 <= 1e-7 && e2 <= 5e-3,
           fmt("|direct-closed|=%.3g (tol 1e-7) |quad-direct|=%.3g (tol 5e-3)", e1, e2));
  } catch (const std::exception& e) {
    report(7, "oracle equivalence", false, e.what());
  }
}

void kernel_vs_series() {
  std::mt19937_64 rng(99);
  auto u = [&](double a, double b) { return std::uniform_real_distribution<double>(a, b)(rng); };
  double worst = 0.0;
  for (const auto& f : families()) {
    for (int trial = 0; trial < 10; ++trial) {
      double x = 0, y = 0, z = 0;
      switch (f.kind) {
        case FamilyKind::hermite: x = u(-2, 2); y = u(-2, 2); z = u(-0.9, 0.9); break;
        case FamilyKind::laguerre: x = u(0.1, 10); y = u(0.1, 10); z = trial % 2 ? u(0.05, 0.9) : -u(0.05, 0.9); break;
        case FamilyKind::jacobi: x = u(-0.95, 0.95); y = u(-0.95, 0.95); z = u(0.01, 0.5); break;
      }
      const Complex closed = PoissonKernel(f, z)(x, y);
      worst = std::max(worst, std::abs(closed - oracle::kernel_series(f, x, y, z, 400)));
    }
  }
  report(8, "kernel vs bilinear series", worst <= 1e-7, fmt("max abs diff=%.3g (tol 1e-7)", worst));
}

void classical_rules() {
  const double pi = std::numbers::pi;
  double rule_err = 0.0;
  auto diff = [&](double got, double want) { rule_err = std::max(rule_err, std::abs(got - want)); };
  const auto h = gauss_rule(PolynomialFamily::hermite(), 2);
  diff(h.nodes[0], -std::sqrt(0.5));
  diff(h.nodes[1], std::sqrt(0.5));
  diff(h.weights[0], std::sqrt(pi) / 2);
  diff(h.weights[1], std::sqrt(pi) / 2);
  const auto l = gauss_rule(PolynomialFamily::laguerre(0.0), 2);
  diff(l.nodes[0], 2 - std::sqrt(2.0));
  diff(l.nodes[1], 2 + std::sqrt(2.0));
  diff(l.weights[0], (2 + std::sqrt(2.0)) / 4);
  diff(l.weights[1], (2 - std::sqrt(2.0)) / 4);
  const auto l1 = gauss_rule(PolynomialFamily::laguerre(0.0), 1);
  diff(l1.nodes[0], 1.0);
  diff(l1.weights[0], 1.0);
  const auto p2 = gauss_rule(PolynomialFamily::jacobi(0.0, 0.0), 2);
  diff(p2.nodes[1], 1 / std::sqrt(3.0));
  diff(p2.weights[0], 1.0);
  diff(p2.weights[1], 1.0);
  const auto p3 = gauss_rule(PolynomialFamily::jacobi(0.0, 0.0), 3);
  diff(p3.nodes[0], -std::sqrt(0.6));
  diff(p3.nodes[1], 0.0);
  diff(p3.nodes[2], std::sqrt(0.6));
  diff(p3.weights[0], 5.0 / 9);
  diff(p3.weights[1], 8.0 / 9);
  diff(p3.weights[2], 5.0 / 9);

  double moment_err = 0.0;
  for (const auto& f : families()) {
    for (int order = 1; order <= 20; ++order) {
      const auto r = gauss_rule(f, order);
      for (int m = 0; m <= 2 * order - 1; ++m) {
        double sum = 0.0, scale = 0.0, exact = 0.0;
        for (int k = 0; k < order; ++k) {
          const double base = f.kind == FamilyKind::jacobi ? 1.0 + r.nodes[k] : r.nodes[k];
          const double t = r.weights[k] * std::pow(base, m);
          sum += t;
          scale += std::abs(t);
        }
        switch (f.kind) {
          case FamilyKind::hermite: exact = m % 2 ? 0.0 : std::tgamma((m + 1) / 2.0); break;
          case FamilyKind::laguerre: exact = std::tgamma(m + f.alpha + 1); break;
          case FamilyKind::jacobi:
            exact = std::exp((m + f.alpha + f.beta + 1) * std::log(2.0) + std::lgamma(m + f.beta + 1) +
                             std::lgamma(f.alpha + 1) - std::lgamma(m + f.alpha + f.beta + 2));
            break;
        }
        moment_err = std::max(moment_err, std::abs(sum - exact) / std::max(scale, std::abs(exact)));
      }
    }
  }
  report(9, "classical quadrature", rule_err <= 1e-13 && moment_err <= 1e-10,
         fmt("rule err=%.3g (tol 1e-13) moment rel err=%.3g (tol 1e-10)", rule_err, moment_err));
}

void special_functions() {
  const double i0 = std::abs(bessel_i(0.0, 1.0) - oracle::bessel_i_series(0.0, 1.0));
  const double j0 = std::abs(bessel_j(0.0, oracle::j0_first_zero()));
  double f4 = 0.0;
  for (double xi : {0.1, 0.5, 0.8}) {
    F4Params p;
    p.a = 1.0;
    p.b = 1.5;
    p.c = 1.0;
    p.d = 1.0;
    p.xi = xi;
    f4 = std::max(f4, std::abs(appell_f4(p) - oracle::hyp2f1(p.a, p.b, p.c, xi)));
  }
  report(10, "special functions", i0 <= 1e-9 && j0 <= 1e-9 && f4 <= 1e-9,
         fmt("I0(1) err=%.3g J0(zero)=%.3g F4-2F1 err=%.3g (tol 1e-9)", i0, j0, f4));
}

void spacing() {
  struct Case {
    PolynomialFamily f;
    double lo, hi;
  };
  const Case cases[] = {{PolynomialFamily::hermite(), -1.0, 1.0},
                        {PolynomialFamily::laguerre(0.0), 10.0, 100.0},
                        {PolynomialFamily::jacobi(0.0, 0.0), -0.9, 0.9}};
  bool ok = true;
  std::string detail;
  for (const auto& c : cases) {
    const double d100 = spacing_diagnostics(c.f, 100, c.lo, c.hi).max_dev;
    const double d400 = spacing_diagnostics(c.f, 400, c.lo, c.hi).max_dev;
    ok = ok && d400 < 1.2 * d100;
    detail += c.f.name() + fmt(" %.3g->%.3g ", d100, d400);
  }
  report(11, "spacing asymptotics", ok, detail + "(max_dev N=100 -> N=400)");
}

}  // namespace

int main() {
  figure(1, "figure 1 reproduction", "fig1", 5e-4, 1e-2, 5.0);
  figure(2, "figure 2 reproduction", "fig2", 0.0, 1e-2, 5.0);
  figure(3, "figure 3 reproduction", "fig3", 0.0, 5e-4, 10.0);
  exactness_at_one();
  eigen_relation();
  semigroup();
  oracle_equivalence();
  kernel_vs_series();
  classical_rules();
  special_functions();
  spacing();
  std::printf("%d of 11 criteria passed\n", 11 - failures);
  return failures == 0 ? 0 : 1;
}
