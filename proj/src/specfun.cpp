#include "orthoquad/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "orthoquad/errors.hpp"

namespace orthoquad {

namespace {

constexpr double kBigScale = 1e250;
constexpr double kSeriesEps = 1e-17;

void require_order(double alpha, const char* who) {
  if (!(alpha > -1.0) || !std::isfinite(alpha))
    throw DomainError(std::string(who) + ": order must satisfy alpha > -1");
}

void require_argument(double x, const char* who) {
  if (!(x >= 0.0) || !std::isfinite(x))
    throw DomainError(std::string(who) + ": argument must be finite and nonnegative");
}

bool is_nonpositive_integer(double v) { return v <= 0.0 && v == std::floor(v); }

// Neumaier-compensated running sum.
struct CompensatedSum {
  double sum = 0.0;
  double carry = 0.0;
  void add(double v) {
    const double t = sum + v;
    if (std::abs(sum) >= std::abs(v))
      carry += (sum - t) + v;
    else
      carry += (v - t) + sum;
    sum = t;
  }
  double value() const { return sum + carry; }
};

// J_alpha by its power series; used where no cancellation occurs (x < 1).
double bessel_j_series(double alpha, double x) {
  const double q = 0.25 * x * x;
  double term = 1.0;
  double sum = 1.0;
  for (int m = 1; m < 200; ++m) {
    term *= -q / (m * (m + alpha));
    sum += term;
    if (std::abs(term) < kSeriesEps * std::abs(sum)) break;
  }
  return sum * std::exp(alpha * std::log(0.5 * x) - log_gamma(alpha + 1.0));
}

// J_alpha by Miller's backward recurrence, normalized with
//   (x/2)^alpha = sum_m c_m J_{alpha+2m}(x),
//   c_0 = Gamma(alpha+1), c_m = (alpha+2m) Gamma(alpha+m)/m!.
// Coefficients below are divided by Gamma(alpha+1).
double bessel_j_miller(double alpha, double x) {
  int top = static_cast<int>(std::ceil(x + 30.0 + 5.0 * std::cbrt(x)));
  if (top % 2 != 0) ++top;

  const int half = top / 2;
  std::vector<double> coeff(half + 1);
  coeff[0] = 1.0;
  double gamma_ratio = 1.0;  // Gamma(alpha+m) / (m! Gamma(alpha+1)), m = 1
  for (int m = 1; m <= half; ++m) {
    coeff[m] = (alpha + 2.0 * m) * gamma_ratio;
    gamma_ratio *= (alpha + m) / (m + 1.0);
  }

  double upper = 0.0;  // order alpha + k + 1
  double cur = 1e-30;  // order alpha + k
  double norm = coeff[half] * cur;
  for (int k = top; k > 0; --k) {
    const double lower = 2.0 * (alpha + k) / x * cur - upper;
    upper = cur;
    cur = lower;
    if (std::abs(cur) > kBigScale) {
      cur /= kBigScale;
      upper /= kBigScale;
      norm /= kBigScale;
    }
    if ((k - 1) % 2 == 0) norm += coeff[(k - 1) / 2] * cur;
  }
  const double lead = std::exp(alpha * std::log(0.5 * x) - log_gamma(alpha + 1.0));
  return cur * lead / norm;
}

}  // namespace

double log_gamma(double x) {
  if (!(x > 0.0)) throw DomainError("log_gamma: argument must be positive");
  if (std::isinf(x)) return x;
#if defined(__GLIBC__)
  int sign = 0;
  return ::lgamma_r(x, &sign);
#else
  return std::lgamma(x);
#endif
}

namespace detail {

double bessel_i_switch_point(double alpha) { return std::max(30.0, 2.0 * alpha * alpha); }

double bessel_i_scaled_series(double alpha, double x) {
  const double q = 0.25 * x * x;
  double log_lead = alpha * std::log(0.5 * x) - log_gamma(alpha + 1.0) - x;
  double term = 1.0;
  double sum = 1.0;
  for (int m = 1;; ++m) {
    term *= q / (m * (m + alpha));
    sum += term;
    if (sum > kBigScale) {
      sum /= kBigScale;
      term /= kBigScale;
      log_lead += std::log(kBigScale);
    }
    if (m > 0.5 * x && term < kSeriesEps * sum) break;
    if (m > 100000) throw NumericalError("bessel_i: series did not converge");
  }
  return sum * std::exp(log_lead);
}

double bessel_i_scaled_asymptotic(double alpha, double x) {
  const double mu = 4.0 * alpha * alpha;
  double term = 1.0;
  double sum = 1.0;
  double last = 1.0;
  for (int k = 1; k < 200; ++k) {
    const double odd = 2.0 * k - 1.0;
    term *= -(mu - odd * odd) / (8.0 * k * x);
    if (std::abs(term) > std::abs(last)) break;
    sum += term;
    last = term;
    if (std::abs(term) < kSeriesEps * std::abs(sum)) break;
  }
  return sum / std::sqrt(2.0 * std::numbers::pi * x);
}

}  // namespace detail

double bessel_i_scaled(double alpha, double x) {
  require_order(alpha, "bessel_i");
  require_argument(x, "bessel_i");
  if (x == 0.0) {
    if (alpha == 0.0) return 1.0;
    if (alpha > 0.0) return 0.0;
    throw OverflowError("bessel_i: I_alpha(0) is infinite for alpha < 0",
                        std::numeric_limits<double>::infinity());
  }
  if (x <= detail::bessel_i_switch_point(alpha)) return detail::bessel_i_scaled_series(alpha, x);
  return detail::bessel_i_scaled_asymptotic(alpha, x);
}

double bessel_i(double alpha, double x) {
  const double scaled = bessel_i_scaled(alpha, x);
  if (scaled == 0.0) return 0.0;
  const double log_value = x + std::log(scaled);
  if (log_value > std::log(std::numeric_limits<double>::max()))
    throw OverflowError("bessel_i: value exceeds double range", log_value);
  return scaled * std::exp(x);
}

double bessel_j(double alpha, double x) {
  require_order(alpha, "bessel_j");
  require_argument(x, "bessel_j");
  if (x == 0.0) {
    if (alpha == 0.0) return 1.0;
    if (alpha > 0.0) return 0.0;
    throw OverflowError("bessel_j: J_alpha(0) is infinite for alpha < 0",
                        std::numeric_limits<double>::infinity());
  }
  if (x < 1.0) return bessel_j_series(alpha, x);
  return bessel_j_miller(alpha, x);
}

double f4_radius(double xi, double eta) { return std::sqrt(std::abs(xi)) + std::sqrt(std::abs(eta)); }

double appell_f4(const F4Params& p) {
  if (is_nonpositive_integer(p.c) || is_nonpositive_integer(p.d))
    throw DomainError("appell_f4: c and d must not be nonpositive integers");
  if (!(p.tol > 0.0) || p.max_terms == 0)
    throw DomainError("appell_f4: tol and max_terms must be positive");
  const double radius = f4_radius(p.xi, p.eta);
  if (!(radius <= 1.0 - p.guard_margin))
    throw ConvergenceDomainError("appell_f4: sqrt|xi| + sqrt|eta| = " + std::to_string(radius) +
                                 " outside the convergence region");

  // diag[m] = t_{m, K-m}; each anti-diagonal is derived from the previous one
  // without dividing by xi or eta.
  std::vector<double> diag{1.0};
  std::vector<double> next;
  CompensatedSum total;
  total.add(1.0);
  std::size_t terms = 1;
  double prev_abs = 1.0;

  for (int k = 0;; ++k) {
    const double pochhammer = (p.a + k) * (p.b + k);
    next.assign(k + 2, 0.0);
    next[0] = diag[0] * pochhammer * p.eta / ((p.d + k) * (k + 1.0));
    for (int m = 1; m <= k + 1; ++m)
      next[m] = diag[m - 1] * pochhammer * p.xi / ((p.c + m - 1.0) * m);

    double diag_abs = 0.0;
    for (double t : next) {
      total.add(t);
      diag_abs += std::abs(t);
    }
    terms += next.size();
    diag.swap(next);

    if (diag_abs == 0.0) break;
    if (k >= 2 && diag_abs < prev_abs) {
      const double ratio = diag_abs / prev_abs;
      const double tail = diag_abs * ratio / (1.0 - ratio);
      if (tail <= p.tol * std::abs(total.value())) break;
    }
    prev_abs = diag_abs;
    if (terms >= p.max_terms)
      throw NumericalError("appell_f4: max_terms exhausted before convergence");
  }
  return total.value();
}

}  // namespace orthoquad
