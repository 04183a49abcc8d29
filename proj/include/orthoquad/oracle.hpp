#pragma once

#include <complex>
#include <functional>
#include <optional>
#include <span>

#include "orthoquad/orthopoly.hpp"

namespace orthoquad {

/// Per-family cutoffs for the infinite or endpoint-singular domains.
struct Truncation {
  /// Hermite: integrate |x| <= upper; Laguerre: (0, upper]. Derived from
  /// the kernel envelope when empty.
  std::optional<double> upper;
  /// Jacobi: integrate [-1 + endpoint_gap, 1 - endpoint_gap].
  double endpoint_gap = 1e-10;
};

/// One evaluation of the Poisson integral  int K(x, y, z) f(x) dx.
struct IntegralTask {
  PolynomialFamily family;
  double y = 0.0;
  std::complex<double> z{0.5, 0.0};
  std::function<std::complex<double>(double)> integrand;
  double abs_tol = 1e-10;
  double rel_tol = 1e-10;
  Truncation truncation;
  int max_panels = 4000;
};

struct IntegralEstimate {
  std::complex<double> value;
  double error = 0.0;
  int panels = 0;
};

/// Globally adaptive Gauss-Kronrod (7/15) integration over the panels
/// spanned by `breakpoints` (ascending, at least two). The panel with the
/// largest error is bisected until the summed error is below
/// max(abs_tol, rel_tol |value|). Panel values are added pairwise in
/// position order, so results are bit-stable for fixed inputs.
/// Throws AccuracyError when max_panels is reached.
IntegralEstimate integrate_adaptive(const std::function<std::complex<double>(double)>& f,
                                    std::span<const double> breakpoints, double abs_tol,
                                    double rel_tol, int max_panels);

/// Direct numerical evaluation of the Poisson integral at task.y.
IntegralEstimate direct_transform(const IntegralTask& task);

enum class Figure { fig1, fig2, fig3 };

/// Parameters of the three worked identities. `degree` applies to fig3,
/// `c` to fig1 and fig2.
struct FigureParams {
  int order = 31;
  double z = 0.5;
  double alpha = 0.0;
  double beta = 0.0;
  double c = 1.0;
  int degree = 5;
};

FigureParams default_params(Figure figure);

/// Closed-form side of each identity.
///  fig1, abscissa z:  sqrt(2/(1+z^2)) exp(-c^2 (1-z^2) / (2(1+z^2)))
///  fig2, abscissa y:  2 z^(-a/2)/(1+z) y^(1/4) exp(-(1-z)/(1+z) (c^2+y)/2)
///                     J_a(2c sqrt(yz)/(1+z))
///  fig3, abscissa y:  z^n (1-y)^(a/2+1/4) (1+y)^(b/2+1/4) P_n^(a,b)(y)
double closed_form_rhs(Figure figure, const FigureParams& params, double abscissa);

}  // namespace orthoquad
