#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <functional>
#include <memory>
#include <string>
#include <type_traits>

#include "orthoquad/errors.hpp"
#include "orthoquad/nodes.hpp"

namespace orthoquad {

using Complex = std::complex<double>;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

/// T(z) = U^T diag(1, z, ..., z^{N-1}) U for a Gauss rule. Scalar is the
/// type of z: double for real z, std::complex<double> otherwise.
template <typename Scalar>
struct DiscreteTransform {
  std::shared_ptr<const QuadratureRule> rule;
  Scalar z{};
  Matrix<Scalar> matrix;

  const PolynomialFamily& family() const { return rule->family; }
  int order() const { return rule->order; }
};

/// (1, z, ..., z^{N-1}) by repeated multiplication.
template <typename Scalar>
Vector<Scalar> power_sequence(Scalar z, Eigen::Index count) {
  Vector<Scalar> out(count);
  Scalar p{1};
  for (Eigen::Index n = 0; n < count; ++n) {
    out[n] = p;
    p *= z;
  }
  return out;
}

/// Builds T(z). The upper triangle is computed and mirrored, so T is
/// symmetric bit for bit.
template <typename Scalar>
DiscreteTransform<Scalar> build_transform(std::shared_ptr<const QuadratureRule> rule, Scalar z) {
  if (!rule) throw DomainError("build_transform: null quadrature rule");
  const Eigen::Index n = rule->order;
  const Matrix<Scalar> u = rule->samples.template cast<Scalar>();
  const Vector<Scalar> powers = power_sequence(z, n);

  DiscreteTransform<Scalar> dt;
  dt.rule = std::move(rule);
  dt.z = z;
  dt.matrix.noalias() = u.transpose() * powers.asDiagonal() * u;
  dt.matrix.template triangularView<Eigen::StrictlyLower>() = dt.matrix.transpose();
  return dt;
}

template <typename Scalar>
DiscreteTransform<Scalar> build_transform(const QuadratureRule& rule, Scalar z) {
  return build_transform(std::make_shared<const QuadratureRule>(rule), z);
}

/// Zero-based index of the row whose node is the center of a symmetric
/// rule with odd N (node 0 for Hermite).
inline Eigen::Index center_index(int order) {
  if (order < 1 || order % 2 == 0) throw DomainError("center row requires odd N");
  return (order - 1) / 2;
}

/// result[j] = sum_k T_jk f(x_k) for f sampled at the rule's nodes.
template <typename Scalar, typename Derived>
auto apply_quadrature(const DiscreteTransform<Scalar>& dt,
                      const Eigen::MatrixBase<Derived>& samples) {
  using Out = typename Eigen::ScalarBinaryOpTraits<Scalar, typename Derived::Scalar>::ReturnType;
  if (samples.size() != dt.matrix.cols())
    throw DomainError("apply_quadrature: expected " + std::to_string(dt.matrix.cols()) +
                      " samples, got " + std::to_string(samples.size()));
  for (Eigen::Index k = 0; k < samples.size(); ++k) {
    using std::isfinite;
    const auto v = samples(k);
    bool finite = false;
    if constexpr (std::is_arithmetic_v<typename Derived::Scalar>)
      finite = isfinite(v);
    else
      finite = isfinite(v.real()) && isfinite(v.imag());
    if (!finite)
      throw EvaluationError("apply_quadrature: non-finite sample at node " + std::to_string(k),
                            static_cast<int>(k));
  }
  Vector<Out> result = dt.matrix.template cast<Out>() * samples.template cast<Out>();
  return result;
}

/// Samples a callable at every node and applies the quadrature.
template <typename Scalar>
Vector<Complex> apply_quadrature(const DiscreteTransform<Scalar>& dt,
                                 const std::function<Complex(double)>& f) {
  const Eigen::VectorXd& nodes = dt.rule->nodes;
  Vector<Complex> samples(nodes.size());
  for (Eigen::Index k = 0; k < nodes.size(); ++k) samples[k] = f(nodes[k]);
  return apply_quadrature(dt, samples);
}

// Poisson kernels in the dx form used by the quadratures.

/// Mehler kernel (pi(1-z^2))^{-1/2} exp(-[(1+z^2)(x^2+y^2) - 4xyz] / (2(1-z^2))).
/// Supported z: real with |z| < 1, or exactly +i / -i.
Complex mehler_kernel(double x, double y, Complex z);

/// Hille-Hardy kernel for Laguerre order alpha; x, y > 0.
/// Supported z: real with 0 < |z| < 1, or z = -1 (Hankel form).
double hille_hardy_kernel(double alpha, double x, double y, double z);

/// Bailey kernel for Jacobi (alpha, beta); x, y in (-1, 1), 0 < z < 1.
double bailey_kernel(double alpha, double beta, double x, double y, double z);

/// Largest sqrt(xi) + sqrt(eta) over x in (-1, 1) for the Bailey kernel:
/// 2 sqrt(z) / (1 + z).
double bailey_f4_radius(double z);

/// A kernel bound to a family and z, checked once at construction.
class PoissonKernel {
 public:
  /// Throws DomainError (or SingularKernelError for z = +-1) when z is not
  /// in the family's supported set.
  PoissonKernel(PolynomialFamily family, Complex z);

  Complex operator()(double x, double y) const;

  const PolynomialFamily& family() const { return family_; }
  Complex z() const { return z_; }

 private:
  PolynomialFamily family_;
  Complex z_;
};

}  // namespace orthoquad
