#include "orthoquad/oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <queue>
#include <string>
#include <vector>

#include "orthoquad/errors.hpp"
#include "orthoquad/specfun.hpp"
#include "orthoquad/transform.hpp"

namespace orthoquad {

namespace {

// Kronrod abscissae (descending, last is the center) and weights; Gauss
// weights pair with the odd-indexed abscissae.
constexpr std::array<double, 8> kKronrodNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double lo = 0.0;
  double hi = 0.0;
  Complex value;
  double error = 0.0;
};

Panel gauss_kronrod(const std::function<Complex(double)>& f, double lo, double hi) {
  const double center = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  const Complex fc = f(center);
  Complex kronrod = fc * kKronrodWeights[7];
  Complex gauss = fc * kGaussWeights[3];
  for (int i = 0; i < 7; ++i) {
    const double dx = half * kKronrodNodes[i];
    const Complex pair = f(center - dx) + f(center + dx);
    kronrod += kKronrodWeights[i] * pair;
    if (i % 2 == 1) gauss += kGaussWeights[i / 2] * pair;
  }
  Panel p{lo, hi, kronrod * half, 0.0};
  p.error = std::abs((kronrod - gauss) * half);
  return p;
}

Complex pairwise_sum(std::span<const Panel> panels) {
  if (panels.empty()) return {};
  if (panels.size() == 1) return panels.front().value;
  const std::size_t mid = panels.size() / 2;
  return pairwise_sum(panels.first(mid)) + pairwise_sum(panels.subspan(mid));
}

std::vector<double> graded_toward_left(double lo, double hi, int levels) {
  std::vector<double> points{lo};
  for (int k = levels; k >= 1; --k) points.push_back(lo + (hi - lo) * std::ldexp(1.0, -k));
  points.push_back(hi);
  return points;
}

std::vector<double> hermite_breakpoints(const IntegralTask& task) {
  const double x_max = task.truncation.upper.value_or(
      2.0 * std::max(std::abs(task.y), 1.0) + std::sqrt(2.0 * std::log(1.0 / task.abs_tol)));
  std::vector<double> points;
  constexpr int kPanels = 16;
  for (int i = 0; i <= kPanels; ++i) points.push_back(-x_max + 2.0 * x_max * i / kPanels);
  return points;
}

std::vector<double> laguerre_breakpoints(const IntegralTask& task) {
  double x_max = 0.0;
  if (task.truncation.upper) {
    x_max = *task.truncation.upper;
  } else {
    const double z = task.z.real();
    if (z <= -1.0)
      throw DomainError("direct_transform: Laguerre kernel has no decay at z = -1; "
                        "supply an explicit truncation");
    // Envelope exp(-a x + b sqrt(x)) driven below abs_tol * 1e-2.
    const double a = (1.0 + z) / (2.0 * (1.0 - z));
    const double b = z > 0.0 ? 2.0 * std::sqrt(task.y * z) / (1.0 - z) : 0.0;
    const double level = std::log(1.0 / (task.abs_tol * 1e-2));
    const double t = (b + std::sqrt(b * b + 4.0 * a * level)) / (2.0 * a);
    x_max = std::max(t * t, 2.0 * task.y + 1.0);
  }
  return graded_toward_left(0.0, x_max, 40);
}

std::vector<double> jacobi_breakpoints(const IntegralTask& task) {
  const double gap = task.truncation.endpoint_gap;
  if (!(gap > 0.0 && gap < 0.5)) throw DomainError("direct_transform: endpoint_gap must be in (0, 0.5)");
  const double lo = -1.0 + gap;
  const double hi = 1.0 - gap;
  // Geometric grading toward both endpoints.
  std::vector<double> grades;
  for (double h = 0.5; h > gap; h *= 0.5) grades.push_back(h);
  std::vector<double> points{lo};
  for (auto it = grades.rbegin(); it != grades.rend(); ++it) points.push_back(-1.0 + *it);
  for (double h : grades) points.push_back(1.0 - h);
  points.push_back(hi);
  return points;
}

}  // namespace

IntegralEstimate integrate_adaptive(const std::function<Complex(double)>& f,
                                    std::span<const double> breakpoints, double abs_tol,
                                    double rel_tol, int max_panels) {
  if (breakpoints.size() < 2) throw DomainError("integrate_adaptive: need at least two breakpoints");
  if (!(abs_tol > 0.0) || !(rel_tol > 0.0)) throw DomainError("integrate_adaptive: tolerances must be positive");

  auto worse = [](const Panel& a, const Panel& b) {
    if (a.error != b.error) return a.error < b.error;
    return a.lo > b.lo;
  };
  std::priority_queue<Panel, std::vector<Panel>, decltype(worse)> queue(worse);
  std::vector<Panel> finished;  // panels too narrow to split further

  Complex total;
  double error = 0.0;
  for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
    if (!(breakpoints[i] < breakpoints[i + 1]))
      throw DomainError("integrate_adaptive: breakpoints must be strictly ascending");
    Panel p = gauss_kronrod(f, breakpoints[i], breakpoints[i + 1]);
    total += p.value;
    error += p.error;
    queue.push(p);
  }

  auto collect = [&]() {
    std::vector<Panel> all = finished;
    auto copy = queue;
    while (!copy.empty()) {
      all.push_back(copy.top());
      copy.pop();
    }
    std::sort(all.begin(), all.end(), [](const Panel& a, const Panel& b) { return a.lo < b.lo; });
    IntegralEstimate est;
    est.value = pairwise_sum(all);
    est.panels = static_cast<int>(all.size());
    for (const Panel& p : all) est.error += p.error;
    return est;
  };

  int panels = static_cast<int>(queue.size());
  while (!queue.empty() && error > std::max(abs_tol, rel_tol * std::abs(total))) {
    if (panels >= max_panels) {
      const IntegralEstimate best = collect();
      throw AccuracyError("integrate_adaptive: tolerance not reached within " +
                              std::to_string(max_panels) + " panels",
                          best.value.real(), best.value.imag(), best.error);
    }
    const Panel worst = queue.top();
    queue.pop();
    const double mid = 0.5 * (worst.lo + worst.hi);
    if (!(mid > worst.lo && mid < worst.hi)) {
      finished.push_back(worst);
      continue;
    }
    const Panel left = gauss_kronrod(f, worst.lo, mid);
    const Panel right = gauss_kronrod(f, mid, worst.hi);
    total += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    queue.push(left);
    queue.push(right);
    ++panels;
  }
  return collect();
}

IntegralEstimate direct_transform(const IntegralTask& task) {
  if (!task.integrand) throw DomainError("direct_transform: missing integrand");
  const PoissonKernel kernel(task.family, task.z);
  if (task.family.kind != FamilyKind::hermite && !task.family.contains(task.y))
    throw DomainError("direct_transform: y outside the orthogonality interval");

  std::vector<double> points;
  switch (task.family.kind) {
    case FamilyKind::hermite: points = hermite_breakpoints(task); break;
    case FamilyKind::laguerre: points = laguerre_breakpoints(task); break;
    case FamilyKind::jacobi: points = jacobi_breakpoints(task); break;
  }
  const double y = task.y;
  auto integrand = [&](double x) { return kernel(x, y) * task.integrand(x); };
  return integrate_adaptive(integrand, points, task.abs_tol, task.rel_tol, task.max_panels);
}

FigureParams default_params(Figure figure) {
  FigureParams p;
  switch (figure) {
    case Figure::fig1:
      p.order = 31;
      p.c = 1.0;
      break;
    case Figure::fig2:
      p.order = 30;
      p.alpha = 0.0;
      p.c = 2.0;
      p.z = 0.1;
      break;
    case Figure::fig3:
      p.order = 50;
      p.alpha = 0.0;
      p.beta = 0.0;
      p.z = 0.25;
      p.degree = 5;
      break;
  }
  return p;
}

double closed_form_rhs(Figure figure, const FigureParams& p, double abscissa) {
  switch (figure) {
    case Figure::fig1: {
      const double z2 = abscissa * abscissa;
      return std::sqrt(2.0 / (1.0 + z2)) * std::exp(-p.c * p.c * (1.0 - z2) / (2.0 * (1.0 + z2)));
    }
    case Figure::fig2: {
      const double y = abscissa;
      const double z = p.z;
      if (!(z > 0.0) || !(y > 0.0)) throw DomainError("fig2 closed form requires z > 0 and y > 0");
      return 2.0 * std::pow(z, -0.5 * p.alpha) / (1.0 + z) * std::pow(y, 0.25) *
             std::exp(-(1.0 - z) / (1.0 + z) * (p.c * p.c + y) / 2.0) *
             bessel_j(p.alpha, 2.0 * p.c * std::sqrt(y * z) / (1.0 + z));
    }
    case Figure::fig3: {
      const double y = abscissa;
      const PolynomialFamily fam = PolynomialFamily::jacobi(p.alpha, p.beta);
      return std::pow(p.z, p.degree) * envelope(fam, y) * eval_poly(fam, p.degree, y);
    }
  }
  return 0.0;
}

}  // namespace orthoquad
