#pragma once

#include <Eigen/Dense>

#include "orthoquad/orthopoly.hpp"

namespace orthoquad {

/// Principal N x N block of the symmetrized recurrence operator.
struct JacobiMatrix {
  Eigen::VectorXd diag;     // B_0 .. B_{N-1}
  Eigen::VectorXd offdiag;  // sqrt(A_n C_n), n = 0 .. N-2; strictly positive

  Eigen::Index size() const { return diag.size(); }
  Eigen::MatrixXd dense() const;
};

JacobiMatrix jacobi_matrix(const PolynomialFamily& family, int order);

/// Eigen-decomposition of a symmetric tridiagonal matrix, ascending.
struct TridiagonalEigen {
  Eigen::VectorXd values;
  Eigen::MatrixXd vectors;  // column k pairs with values[k]; empty unless requested
  int iterations = 0;
};

inline constexpr int kMaxQlIterations = 10'000;

/// Implicit-shift QL iteration. Eigenvector columns are normalized and
/// signed so their first nonzero component is positive.
/// Throws NumericalError when the iteration cap is reached.
TridiagonalEigen tridiagonal_eigen(const Eigen::VectorXd& diag, const Eigen::VectorXd& offdiag,
                                   bool compute_vectors, int max_iterations = kMaxQlIterations);

/// Zeros of P_N, ascending: eigenvalues of the Jacobi matrix, each
/// refined by one Newton step on the orthonormal recurrence.
Eigen::VectorXd zeros(const PolynomialFamily& family, int order);

/// Gauss weights mu_0 * u_0(x_k)^2.
Eigen::VectorXd gauss_weights(const PolynomialFamily& family, int order);

/// Gauss rule of order N with its orthonormal sample matrix:
/// samples(n, k) = u_n(x_k), row n = degree, column k = node.
/// Columns are unit vectors with samples(0, k) > 0; the matrix is orthogonal.
struct QuadratureRule {
  PolynomialFamily family;
  int order = 0;
  Eigen::VectorXd nodes;
  Eigen::VectorXd weights;
  Eigen::MatrixXd samples;
};

QuadratureRule gauss_rule(const PolynomialFamily& family, int order);

struct SpacingDiagnostics {
  double mean_gap = 0.0;  // mean |sigma(x_{k+1}) - sigma(x_k)| over the window
  double max_dev = 0.0;   // max relative deviation of a gap from lambda
  double lambda = 0.0;    // asymptotic spacing for this order
  int nodes_in_window = 0;
};

/// Gap statistics of sigma(x_k) for the zeros inside (lo, hi).
SpacingDiagnostics spacing_diagnostics(const PolynomialFamily& family, int order, double lo,
                                       double hi);

}  // namespace orthoquad
