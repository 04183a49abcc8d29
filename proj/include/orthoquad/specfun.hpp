#pragma once

#include <cstddef>

namespace orthoquad {

/// ln Gamma(x) for x > 0.
double log_gamma(double x);

/// Modified Bessel function I_alpha(x), alpha > -1, x >= 0.
/// Throws OverflowError (carrying ln I) when the value exceeds double range.
double bessel_i(double alpha, double x);

/// exp(-x) I_alpha(x); finite wherever I_alpha is, and for every x beyond.
double bessel_i_scaled(double alpha, double x);

/// Bessel function of the first kind J_alpha(x), alpha > -1, x >= 0.
double bessel_j(double alpha, double x);

/// Inputs to Appell's F4(a, b; c, d; xi, eta).
struct F4Params {
  double a = 0.0;
  double b = 0.0;
  double c = 1.0;
  double d = 1.0;
  double xi = 0.0;
  double eta = 0.0;
  double tol = 1e-12;
  std::size_t max_terms = 1'000'000;
  /// Required margin: sqrt|xi| + sqrt|eta| <= 1 - guard_margin.
  double guard_margin = 1e-3;
};

/// sqrt|xi| + sqrt|eta|; F4 converges when this is below one.
double f4_radius(double xi, double eta);

/// Double series sum over m, n >= 0 of
///   (a)_{m+n} (b)_{m+n} / ((c)_m (d)_n m! n!) xi^m eta^n,
/// accumulated by anti-diagonals m + n = K.
/// Throws ConvergenceDomainError outside the guarded region and
/// NumericalError when max_terms is exhausted.
double appell_f4(const F4Params& p);

namespace detail {

// Branches of bessel_i_scaled, exposed so their overlap can be tested.
double bessel_i_scaled_series(double alpha, double x);
double bessel_i_scaled_asymptotic(double alpha, double x);

/// Argument above which bessel_i_scaled uses the large-argument expansion.
double bessel_i_switch_point(double alpha);

}  // namespace detail

}  // namespace orthoquad
