#include "orthoquad/orthopoly.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "orthoquad/errors.hpp"
#include "orthoquad/specfun.hpp"

namespace orthoquad {

namespace {

constexpr double kRescaleThreshold = 1e200;

void require_degree(int n) {
  if (n < 0) throw DomainError("polynomial degree must be nonnegative");
}

double sign_of(double v) { return v < 0.0 ? -1.0 : 1.0; }

}  // namespace

PolynomialFamily PolynomialFamily::hermite() { return {FamilyKind::hermite, 0.0, 0.0}; }

PolynomialFamily PolynomialFamily::laguerre(double alpha) {
  PolynomialFamily f{FamilyKind::laguerre, alpha, 0.0};
  f.validate();
  return f;
}

PolynomialFamily PolynomialFamily::jacobi(double alpha, double beta) {
  PolynomialFamily f{FamilyKind::jacobi, alpha, beta};
  f.validate();
  return f;
}

void PolynomialFamily::validate() const {
  switch (kind) {
    case FamilyKind::hermite:
      return;
    case FamilyKind::laguerre:
      if (!(alpha > -1.0) || !std::isfinite(alpha))
        throw DomainError("Laguerre family requires alpha > -1");
      return;
    case FamilyKind::jacobi:
      if (!(alpha > -1.0) || !(beta > -1.0) || !std::isfinite(alpha) || !std::isfinite(beta))
        throw DomainError("Jacobi family requires alpha > -1 and beta > -1");
      return;
  }
}

std::string PolynomialFamily::name() const {
  switch (kind) {
    case FamilyKind::hermite: return "hermite";
    case FamilyKind::laguerre: return "laguerre";
    case FamilyKind::jacobi: return "jacobi";
  }
  return "unknown";
}

std::pair<double, double> PolynomialFamily::interval() const {
  constexpr double inf = std::numeric_limits<double>::infinity();
  switch (kind) {
    case FamilyKind::hermite: return {-inf, inf};
    case FamilyKind::laguerre: return {0.0, inf};
    case FamilyKind::jacobi: return {-1.0, 1.0};
  }
  return {-inf, inf};
}

bool PolynomialFamily::contains(double x) const {
  const auto [lo, hi] = interval();
  return x > lo && x < hi;
}

double SignedLog::value() const { return sign * std::exp(log_abs); }

RecurrenceCoeffs recurrence_coeffs(const PolynomialFamily& family, int n) {
  require_degree(n);
  family.validate();
  const double dn = n;
  RecurrenceCoeffs r;
  r.n = n;
  switch (family.kind) {
    case FamilyKind::hermite:
      r.a = 0.5;
      r.b = 0.0;
      r.c_prev = dn;
      break;
    case FamilyKind::laguerre:
      r.a = -(dn + 1.0);
      r.b = 2.0 * dn + family.alpha + 1.0;
      r.c_prev = n == 0 ? 0.0 : -(dn + family.alpha);
      break;
    case FamilyKind::jacobi: {
      const double a = family.alpha;
      const double b = family.beta;
      const double ab = a + b;
      if (n == 0) {
        r.a = 2.0 / (ab + 2.0);
        r.b = (b - a) / (ab + 2.0);
        r.c_prev = 0.0;
        break;
      }
      const double two_n = 2.0 * dn + ab;
      r.a = 2.0 * (dn + 1.0) * (dn + ab + 1.0) / ((two_n + 1.0) * (two_n + 2.0));
      r.b = (b * b - a * a) / (two_n * (two_n + 2.0));
      r.c_prev = 2.0 * (dn + a) * (dn + b) / (two_n * (two_n + 1.0));
      break;
    }
  }
  return r;
}

double jacobi_diagonal(const PolynomialFamily& family, int n) {
  return recurrence_coeffs(family, n).b;
}

double jacobi_offdiagonal(const PolynomialFamily& family, int n) {
  const double a = recurrence_coeffs(family, n).a;
  const double c = recurrence_coeffs(family, n + 1).c_prev;
  const double product = a * c;
  if (!(product > 0.0))
    throw DomainError("recurrence is not symmetrizable: A_n C_n <= 0");
  return std::sqrt(product);
}

SignedLog leading_coeff_log(const PolynomialFamily& family, int n) {
  require_degree(n);
  family.validate();
  const double dn = n;
  switch (family.kind) {
    case FamilyKind::hermite:
      return {dn * std::numbers::ln2, 1};
    case FamilyKind::laguerre:
      return {-log_gamma(dn + 1.0), n % 2 == 0 ? 1 : -1};
    case FamilyKind::jacobi: {
      if (n == 0) return {0.0, 1};
      const double ab = family.alpha + family.beta;
      return {log_gamma(2.0 * dn + ab + 1.0) - dn * std::numbers::ln2 - log_gamma(dn + 1.0) -
                  log_gamma(dn + ab + 1.0),
              1};
    }
  }
  return {};
}

double leading_coeff(const PolynomialFamily& family, int n) {
  return leading_coeff_log(family, n).value();
}

double log_norm_sq_recip(const PolynomialFamily& family, int n) {
  require_degree(n);
  family.validate();
  const double dn = n;
  switch (family.kind) {
    case FamilyKind::hermite:
      return -dn * std::numbers::ln2 - log_gamma(dn + 1.0);
    case FamilyKind::laguerre:
      return log_gamma(dn + 1.0) - log_gamma(dn + family.alpha + 1.0);
    case FamilyKind::jacobi: {
      const double a = family.alpha;
      const double b = family.beta;
      const double ab = a + b;
      // (2n+ab+1) Gamma(n+ab+1) is rewritten through Gamma(n+ab+2) so that
      // n = 0 with ab + 1 <= 0 stays finite.
      const double head = n == 0 ? 0.0 : std::log((2.0 * dn + ab + 1.0) / (dn + ab + 1.0));
      return head + log_gamma(dn + 1.0) + log_gamma(dn + ab + 2.0) - log_gamma(dn + a + 1.0) -
             log_gamma(dn + b + 1.0);
    }
  }
  return 0.0;
}

double norm_sq_recip(const PolynomialFamily& family, int n) {
  return std::exp(log_norm_sq_recip(family, n));
}

ScaledSequence orthonormal_sequence_scaled(const PolynomialFamily& family, int order,
                                           double x) {
  if (order < 1) throw DomainError("sequence length must be at least 1");
  family.validate();

  ScaledSequence out;
  out.values.resize(order);
  out.values[0] = std::exp(0.5 * log_norm_sq_recip(family, 0));
  if (order == 1) return out;

  // eps_n q_{n+1} = (x - B_n) q_n - eps_{n-1} q_{n-1}, eps_n = sign(A_n) sqrt(A_n C_n)
  double eps_prev = 0.0;
  for (int n = 0; n + 1 < order; ++n) {
    const double eps = sign_of(recurrence_coeffs(family, n).a) * jacobi_offdiagonal(family, n);
    const double prev = n == 0 ? 0.0 : out.values[n - 1];
    double next = ((x - jacobi_diagonal(family, n)) * out.values[n] - eps_prev * prev) / eps;
    if (std::abs(next) > kRescaleThreshold) {
      out.values.head(n + 1) /= kRescaleThreshold;
      next /= kRescaleThreshold;
      out.log_scale += std::log(kRescaleThreshold);
    }
    out.values[n + 1] = next;
    eps_prev = eps;
  }
  return out;
}

Eigen::VectorXd eval_orthonormal_sequence(const PolynomialFamily& family, int order, double x) {
  ScaledSequence s = orthonormal_sequence_scaled(family, order, x);
  if (s.log_scale != 0.0) s.values *= std::exp(s.log_scale);
  return s.values;
}

double eval_poly(const PolynomialFamily& family, int n, double x) {
  require_degree(n);
  if (n > kMaxRawDegree)
    throw DomainError("eval_poly: degree " + std::to_string(n) + " exceeds guard " +
                      std::to_string(kMaxRawDegree));
  double prev = 0.0;
  double cur = 1.0;
  for (int k = 0; k < n; ++k) {
    const RecurrenceCoeffs r = recurrence_coeffs(family, k);
    const double next = ((x - r.b) * cur - r.c_prev * prev) / r.a;
    prev = cur;
    cur = next;
  }
  return cur;
}

double envelope(const PolynomialFamily& family, double x) {
  switch (family.kind) {
    case FamilyKind::hermite:
      return std::exp(-0.5 * x * x);
    case FamilyKind::laguerre:
      return std::pow(x, 0.5 * family.alpha + 0.25) * std::exp(-0.5 * x);
    case FamilyKind::jacobi:
      return std::pow(1.0 - x, 0.5 * family.alpha + 0.25) *
             std::pow(1.0 + x, 0.5 * family.beta + 0.25);
  }
  return 0.0;
}

double sigma_map(const PolynomialFamily& family, double x) {
  switch (family.kind) {
    case FamilyKind::hermite: return x;
    case FamilyKind::laguerre: return std::sqrt(x);
    case FamilyKind::jacobi: return std::acos(x);
  }
  return x;
}

double sigma_spacing(const PolynomialFamily& family, int order) {
  const double n = order;
  switch (family.kind) {
    case FamilyKind::hermite: return std::numbers::pi / std::sqrt(2.0 * n);
    case FamilyKind::laguerre: return std::numbers::pi / (2.0 * std::sqrt(n));
    case FamilyKind::jacobi: return std::numbers::pi / n;
  }
  return 0.0;
}

double transform_constant(const PolynomialFamily& family) {
  switch (family.kind) {
    case FamilyKind::hermite: return 1.0;
    case FamilyKind::laguerre: return 0.5;
    case FamilyKind::jacobi: return std::exp2(-family.alpha - family.beta - 1.0);
  }
  return 1.0;
}

double total_measure(const PolynomialFamily& family) {
  family.validate();
  switch (family.kind) {
    case FamilyKind::hermite:
      return std::sqrt(std::numbers::pi);
    case FamilyKind::laguerre:
      return std::exp(log_gamma(family.alpha + 1.0));
    case FamilyKind::jacobi: {
      const double a = family.alpha;
      const double b = family.beta;
      return std::exp((a + b + 1.0) * std::numbers::ln2 + log_gamma(a + 1.0) +
                      log_gamma(b + 1.0) - log_gamma(a + b + 2.0));
    }
  }
  return 1.0;
}

double measure_scale(const PolynomialFamily& family) {
  switch (family.kind) {
    case FamilyKind::hermite: return std::sqrt(std::numbers::pi);
    case FamilyKind::laguerre: return 1.0;
    case FamilyKind::jacobi: return std::exp2(family.alpha + family.beta + 1.0);
  }
  return 1.0;
}

}  // namespace orthoquad
