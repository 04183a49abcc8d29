#pragma once

#include <Eigen/Dense>

#include <string>
#include <utility>

namespace orthoquad {

enum class FamilyKind { hermite, laguerre, jacobi };

/// One of the classical families. Construct through the named factories,
/// which reject parameters that make the orthogonality measure non-positive.
struct PolynomialFamily {
  FamilyKind kind = FamilyKind::hermite;
  double alpha = 0.0;  // Laguerre, Jacobi
  double beta = 0.0;   // Jacobi

  static PolynomialFamily hermite();
  static PolynomialFamily laguerre(double alpha);
  static PolynomialFamily jacobi(double alpha, double beta);

  /// Throws DomainError unless alpha > -1 (and beta > -1 for Jacobi).
  void validate() const;

  /// "hermite", "laguerre" or "jacobi".
  std::string name() const;

  /// Open orthogonality interval (a, b); infinite ends are +-inf.
  std::pair<double, double> interval() const;

  bool contains(double x) const;

  friend bool operator==(const PolynomialFamily&, const PolynomialFamily&) = default;
};

/// Coefficients of  a P_{n+1} + b P_n + c_prev P_{n-1} = x P_n.
struct RecurrenceCoeffs {
  int n = 0;
  double a = 0.0;
  double b = 0.0;
  double c_prev = 0.0;  // zero at n = 0, since P_{-1} = 0
};

/// A real number held as sign * exp(log_abs).
struct SignedLog {
  double log_abs = 0.0;
  int sign = 1;

  double value() const;
};

RecurrenceCoeffs recurrence_coeffs(const PolynomialFamily& family, int n);

/// Entries of the symmetrized tridiagonal operator: diagonal B_n and
/// off-diagonal sqrt(A_n C_n), where C_n multiplies P_n in x P_{n+1}.
double jacobi_diagonal(const PolynomialFamily& family, int n);
double jacobi_offdiagonal(const PolynomialFamily& family, int n);

/// Coefficient k_n of x^n in P_n, in log-magnitude form.
SignedLog leading_coeff_log(const PolynomialFamily& family, int n);
/// Coefficient k_n of x^n in P_n. May be +-inf for very large n.
double leading_coeff(const PolynomialFamily& family, int n);

/// s_n^2 with the per-family closed forms (Hermite 1/(2^n n!),
/// Laguerre n!/Gamma(n+alpha+1), Jacobi
/// (2n+a+b+1) n! Gamma(n+a+b+1) / (Gamma(n+a+1) Gamma(n+b+1))).
double norm_sq_recip(const PolynomialFamily& family, int n);
double log_norm_sq_recip(const PolynomialFamily& family, int n);

/// (s_0 P_0(x), ..., s_{N-1} P_{N-1}(x)) from the symmetrized recurrence.
/// Outside the oscillatory region entries grow geometrically; for large
/// arguments use orthonormal_sequence_scaled.
Eigen::VectorXd eval_orthonormal_sequence(const PolynomialFamily& family, int order,
                                          double x);

/// Same sequence as exp(log_scale) * values, rescaled so no entry overflows.
/// Entries negligible against the largest may underflow to zero.
struct ScaledSequence {
  Eigen::VectorXd values;
  double log_scale = 0.0;
};
ScaledSequence orthonormal_sequence_scaled(const PolynomialFamily& family, int order,
                                           double x);

/// Maximum degree accepted by eval_poly.
inline constexpr int kMaxRawDegree = 60;

/// Raw P_n(x) in the standard normalization; n <= kMaxRawDegree.
double eval_poly(const PolynomialFamily& family, int n, double x);

// Per-family constants of the Poisson-integral construction.

/// g(x): Hermite exp(-x^2/2), Laguerre x^(a/2+1/4) exp(-x/2),
/// Jacobi (1-x)^(a/2+1/4) (1+x)^(b/2+1/4).
double envelope(const PolynomialFamily& family, double x);

/// sigma(x): x, sqrt(x), arccos(x).
double sigma_map(const PolynomialFamily& family, double x);

/// Asymptotic node spacing in sigma: pi/sqrt(2N), pi/(2 sqrt N), pi/N.
double sigma_spacing(const PolynomialFamily& family, int order);

/// The constant A: 1, 1/2, 2^(-a-b-1).
double transform_constant(const PolynomialFamily& family);

/// mu_0 = integral of the weight: sqrt(pi), Gamma(a+1),
/// 2^(a+b+1) B(a+1, b+1).
double total_measure(const PolynomialFamily& family);

/// kappa = mu_0 * s_0^2, the factor by which s_n P_n misses being
/// orthonormal: sqrt(pi), 1, 2^(a+b+1).
double measure_scale(const PolynomialFamily& family);

}  // namespace orthoquad
