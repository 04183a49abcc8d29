#include "orthoquad/nodes.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>
#include <vector>

#include "orthoquad/errors.hpp"

namespace orthoquad {

namespace {

void require_order(int order) {
  if (order < 1) throw DomainError("quadrature order must be at least 1");
}

struct NewtonRatio {
  double value = 0.0;       // q_N(x)
  double derivative = 0.0;  // q_N'(x), same scale as value
};

// q_N and q_N' by the signed orthonormal recurrence, with joint rescaling.
NewtonRatio orthonormal_top(const Eigen::VectorXd& diag, const Eigen::VectorXd& eps, double x) {
  const Eigen::Index order = diag.size();
  double q_prev = 0.0, q = 1.0;
  double d_prev = 0.0, d = 0.0;
  double eps_prev = 0.0;
  for (Eigen::Index n = 0; n < order; ++n) {
    const double q_next = ((x - diag[n]) * q - eps_prev * q_prev) / eps[n];
    const double d_next = (q + (x - diag[n]) * d - eps_prev * d_prev) / eps[n];
    q_prev = q;
    q = q_next;
    d_prev = d;
    d = d_next;
    eps_prev = eps[n];
    const double big = std::max(std::abs(q), std::abs(d));
    if (big > 1e200) {
      q /= 1e200;
      q_prev /= 1e200;
      d /= 1e200;
      d_prev /= 1e200;
    }
  }
  return {q, d};
}

void polish(const PolynomialFamily& family, Eigen::VectorXd& x) {
  const auto order = static_cast<int>(x.size());
  Eigen::VectorXd diag(order), eps(order);
  for (int n = 0; n < order; ++n) {
    diag[n] = jacobi_diagonal(family, n);
    const double sign = recurrence_coeffs(family, n).a < 0.0 ? -1.0 : 1.0;
    eps[n] = sign * jacobi_offdiagonal(family, n);
  }
  const Eigen::VectorXd original = x;
  for (int k = 0; k < order; ++k) {
    const NewtonRatio r = orthonormal_top(diag, eps, original[k]);
    if (r.derivative == 0.0 || !std::isfinite(r.value / r.derivative)) continue;
    const double step = r.value / r.derivative;
    // Only accept a refinement that stays well inside the neighbouring gaps.
    double room = std::numeric_limits<double>::infinity();
    if (k > 0) room = std::min(room, original[k] - original[k - 1]);
    if (k + 1 < order) room = std::min(room, original[k + 1] - original[k]);
    if (std::abs(step) < 1e-3 * room && std::abs(step) < 1e-8 * std::max(1.0, std::abs(original[k])))
      x[k] = original[k] - step;
  }
}

}  // namespace

Eigen::MatrixXd JacobiMatrix::dense() const {
  const Eigen::Index n = size();
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  m.diagonal() = diag;
  if (n > 1) {
    m.diagonal(1) = offdiag;
    m.diagonal(-1) = offdiag;
  }
  return m;
}

JacobiMatrix jacobi_matrix(const PolynomialFamily& family, int order) {
  require_order(order);
  JacobiMatrix m;
  m.diag.resize(order);
  m.offdiag.resize(order - 1);
  for (int n = 0; n < order; ++n) m.diag[n] = jacobi_diagonal(family, n);
  for (int n = 0; n + 1 < order; ++n) m.offdiag[n] = jacobi_offdiagonal(family, n);
  return m;
}

TridiagonalEigen tridiagonal_eigen(const Eigen::VectorXd& diag, const Eigen::VectorXd& offdiag,
                                   bool compute_vectors, int max_iterations) {
  const Eigen::Index n = diag.size();
  if (n < 1) throw DomainError("tridiagonal_eigen: empty matrix");
  if (offdiag.size() != n - 1) throw DomainError("tridiagonal_eigen: off-diagonal size mismatch");

  Eigen::VectorXd d = diag;
  Eigen::VectorXd e = Eigen::VectorXd::Zero(n);
  e.head(n - 1) = offdiag;
  Eigen::MatrixXd z;
  if (compute_vectors) z = Eigen::MatrixXd::Identity(n, n);

  constexpr double eps = std::numeric_limits<double>::epsilon();
  int iterations = 0;
  for (Eigen::Index l = 0; l < n; ++l) {
    for (;;) {
      Eigen::Index m = l;
      for (; m < n - 1; ++m) {
        const double scale = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= eps * scale) break;
      }
      if (m == l) break;
      if (++iterations > max_iterations)
        throw NumericalError("tridiagonal_eigen: no convergence after " +
                             std::to_string(max_iterations) + " iterations");

      // Wilkinson-type shift from the leading 2x2 block.
      double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
      double r = std::hypot(g, 1.0);
      g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
      double s = 1.0, c = 1.0, p = 0.0;
      bool deflated = false;
      for (Eigen::Index i = m - 1; i >= l; --i) {
        const double f = s * e[i];
        const double b = c * e[i];
        r = std::hypot(f, g);
        e[i + 1] = r;
        if (r == 0.0) {
          d[i + 1] -= p;
          e[m] = 0.0;
          deflated = true;
          break;
        }
        s = f / r;
        c = g / r;
        g = d[i + 1] - p;
        r = (d[i] - g) * s + 2.0 * c * b;
        p = s * r;
        d[i + 1] = g + p;
        g = c * r - b;
        if (compute_vectors) {
          for (Eigen::Index k = 0; k < n; ++k) {
            const double t = z(k, i + 1);
            z(k, i + 1) = s * z(k, i) + c * t;
            z(k, i) = c * z(k, i) - s * t;
          }
        }
        if (i == 0) break;
      }
      if (deflated) continue;
      d[l] -= p;
      e[l] = g;
      e[m] = 0.0;
    }
  }

  std::vector<Eigen::Index> order(n);
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::sort(order.begin(), order.end(), [&](Eigen::Index a, Eigen::Index b) { return d[a] < d[b]; });

  TridiagonalEigen out;
  out.iterations = iterations;
  out.values.resize(n);
  for (Eigen::Index k = 0; k < n; ++k) out.values[k] = d[order[k]];
  if (compute_vectors) {
    out.vectors.resize(n, n);
    for (Eigen::Index k = 0; k < n; ++k) {
      Eigen::VectorXd v = z.col(order[k]);
      v.normalize();
      for (Eigen::Index i = 0; i < n; ++i) {
        if (v[i] != 0.0) {
          if (v[i] < 0.0) v = -v;
          break;
        }
      }
      out.vectors.col(k) = v;
    }
  }
  return out;
}

Eigen::VectorXd zeros(const PolynomialFamily& family, int order) {
  const JacobiMatrix m = jacobi_matrix(family, order);
  Eigen::VectorXd x = tridiagonal_eigen(m.diag, m.offdiag, false).values;
  polish(family, x);
  const bool symmetric = family.kind == FamilyKind::hermite ||
                         (family.kind == FamilyKind::jacobi && family.alpha == family.beta);
  if (symmetric) {
    const Eigen::Index n = x.size();
    for (Eigen::Index k = 0; k < n / 2; ++k) {
      const double r = 0.5 * (x[n - 1 - k] - x[k]);
      x[k] = -r;
      x[n - 1 - k] = r;
    }
    if (n % 2 == 1) x[n / 2] = 0.0;
  }
  return x;
}

QuadratureRule gauss_rule(const PolynomialFamily& family, int order) {
  QuadratureRule rule;
  rule.family = family;
  rule.order = order;
  rule.nodes = zeros(family, order);
  rule.samples.resize(order, order);
  rule.weights.resize(order);
  const double mu0 = total_measure(family);
  for (int k = 0; k < order; ++k) {
    // Column k is the unit eigenvector for x_k, read off the recurrence.
    Eigen::VectorXd v = orthonormal_sequence_scaled(family, order, rule.nodes[k]).values;
    v.normalize();
    rule.samples.col(k) = v;
    rule.weights[k] = mu0 * v[0] * v[0];
  }
  return rule;
}

Eigen::VectorXd gauss_weights(const PolynomialFamily& family, int order) {
  return gauss_rule(family, order).weights;
}

SpacingDiagnostics spacing_diagnostics(const PolynomialFamily& family, int order, double lo,
                                       double hi) {
  if (!(lo < hi) || !family.contains(lo) || !family.contains(hi))
    throw DomainError("spacing_diagnostics: window must lie strictly inside the interval");
  const Eigen::VectorXd x = zeros(family, order);

  std::vector<double> mapped;
  for (Eigen::Index k = 0; k < x.size(); ++k)
    if (x[k] > lo && x[k] < hi) mapped.push_back(sigma_map(family, x[k]));
  if (mapped.size() < 2)
    throw InsufficientNodesError("spacing_diagnostics: fewer than two nodes in window");

  SpacingDiagnostics out;
  out.lambda = sigma_spacing(family, order);
  out.nodes_in_window = static_cast<int>(mapped.size());
  double total = 0.0;
  for (std::size_t k = 0; k + 1 < mapped.size(); ++k) {
    const double gap = std::abs(mapped[k + 1] - mapped[k]);
    total += gap;
    out.max_dev = std::max(out.max_dev, std::abs(gap - out.lambda) / out.lambda);
  }
  out.mean_gap = total / static_cast<double>(mapped.size() - 1);
  return out;
}

}  // namespace orthoquad
