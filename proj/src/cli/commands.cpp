#include <charconv>
#include <cmath>
#include <fstream>
#include <memory>
#include <ostream>
#include <sstream>
#include <string>
#include <system_error>

#include "json.hpp"
#include "orthoquad/cli.hpp"
#include "orthoquad/nodes.hpp"
#include "orthoquad/oracle.hpp"
#include "orthoquad/specfun.hpp"
#include "orthoquad/transform.hpp"

namespace orthoquad::cli {

namespace {

using Json = nlohmann::ordered_json;

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(first, last - first + 1));
}

double parse_real(std::string_view text) {
  const std::string t = trim(text);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc{} || ptr != t.data() + t.size() || t.empty())
    throw DomainError("cannot parse number '" + t + "'");
  return v;
}

std::string format_complex(Complex z) { return format_number(z.real()) + "," + format_number(z.imag()); }

std::string family_header(const PolynomialFamily& f) {
  std::string s = "family=" + f.name();
  if (f.kind != FamilyKind::hermite) s += " alpha=" + format_number(f.alpha);
  if (f.kind == FamilyKind::jacobi) s += " beta=" + format_number(f.beta);
  return s;
}

Json family_json(const PolynomialFamily& f) {
  Json j;
  j["family"] = f.name();
  if (f.kind != FamilyKind::hermite) j["alpha"] = f.alpha;
  if (f.kind == FamilyKind::jacobi) j["beta"] = f.beta;
  return j;
}

int require_order(const RunConfig& config) {
  if (config.order < 1) throw DomainError("--n must be at least 1");
  return config.order;
}

Complex require_z(const RunConfig& config) {
  if (!config.z) throw DomainError("--z is required");
  return *config.z;
}

// Zero-based rows selected by --j.
std::vector<Eigen::Index> selected_rows(const RunConfig& config, int order) {
  std::vector<Eigen::Index> rows;
  if (config.center) {
    rows.push_back(center_index(order));
  } else if (config.row) {
    if (*config.row < 1 || *config.row > order)
      throw DomainError("--j must lie in 1.." + std::to_string(order));
    rows.push_back(*config.row - 1);
  } else {
    for (Eigen::Index j = 0; j < order; ++j) rows.push_back(j);
  }
  return rows;
}

struct Table {
  std::vector<std::string> header_lines;  // without the leading '#'
  Json config;
  std::vector<std::string> columns;
  std::vector<std::vector<Json>> rows;  // numbers, strings or null
};

std::string cell_text(const Json& v) {
  if (v.is_null()) return "";
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  if (v.is_number()) return format_number(v.get<double>());
  return v.get<std::string>();
}

void write_table(const Table& t, OutputFormat format, std::ostream& out,
                 const std::optional<double>& error_norm = std::nullopt) {
  if (format == OutputFormat::json) {
    Json doc;
    doc["config"] = t.config;
    doc["columns"] = t.columns;
    Json rows = Json::array();
    for (const auto& r : t.rows) rows.push_back(r);
    doc["rows"] = std::move(rows);
    if (error_norm) doc["error_norm"] = *error_norm;
    out << doc.dump(2) << '\n';
    return;
  }
  for (const auto& h : t.header_lines) out << "# " << h << '\n';
  for (std::size_t i = 0; i < t.columns.size(); ++i) out << (i ? "," : "") << t.columns[i];
  out << '\n';
  for (const auto& r : t.rows) {
    for (std::size_t i = 0; i < r.size(); ++i) out << (i ? "," : "") << cell_text(r[i]);
    out << '\n';
  }
  if (error_norm) out << "error_norm=" << format_number(*error_norm) << '\n';
  if (!out) throw IoError("failed writing output");
}

}  // namespace

Complex parse_complex(std::string_view text) {
  const auto comma = text.find(',');
  if (comma == std::string_view::npos) return {parse_real(text), 0.0};
  return {parse_real(text.substr(0, comma)), parse_real(text.substr(comma + 1))};
}

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

const std::vector<std::string>& builtin_names() {
  static const std::vector<std::string> names{"expneg", "besselj", "jacobi_weighted", "gaussian",
                                              "poly"};
  return names;
}

std::function<Complex(double)> builtin_function(const RunConfig& config) {
  const std::string& name = config.function;
  const double c = config.c;
  if (name == "expneg") return [c](double x) { return std::exp(Complex(0.0, -c * x)); };
  if (name == "besselj") {
    const double alpha = config.family.alpha;
    return [c, alpha](double x) -> Complex {
      return std::pow(x, 0.25) * bessel_j(alpha, c * std::sqrt(x));
    };
  }
  if (name == "jacobi_weighted") {
    const PolynomialFamily fam = PolynomialFamily::jacobi(config.family.alpha, config.family.beta);
    const int n = config.degree;
    return [fam, n](double x) -> Complex { return envelope(fam, x) * eval_poly(fam, n, x); };
  }
  if (name == "gaussian") return [c](double x) -> Complex { return std::exp(-c * x * x); };
  if (name == "poly") {
    const int n = config.degree;
    return [n](double x) -> Complex { return std::pow(x, n); };
  }
  throw DomainError("unknown function '" + name + "'");
}

std::vector<Complex> read_samples(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open samples file '" + path + "'");
  std::vector<Complex> values;
  std::string line;
  while (std::getline(in, line)) {
    const std::string t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    values.push_back(parse_complex(t));
  }
  return values;
}

void cmd_nodes(const RunConfig& config, std::ostream& out) {
  const int order = require_order(config);
  const QuadratureRule rule = gauss_rule(config.family, order);
  Table t;
  t.header_lines.push_back("orthoquad nodes " + family_header(config.family) +
                           " n=" + std::to_string(order));
  t.config = family_json(config.family);
  t.config["n"] = order;
  t.columns = {"k", "x_k", "w_k"};
  for (int k = 0; k < order; ++k) t.rows.push_back({k + 1, rule.nodes[k], rule.weights[k]});
  write_table(t, config.format, out);
}

void cmd_matrix(const RunConfig& config, std::ostream& out) {
  const int order = require_order(config);
  const Complex z = require_z(config);
  const auto rule = std::make_shared<const QuadratureRule>(gauss_rule(config.family, order));
  const auto dt = build_transform(rule, z);
  Table t;
  t.header_lines.push_back("orthoquad matrix " + family_header(config.family) +
                           " n=" + std::to_string(order) + " z=" + format_complex(z));
  t.config = family_json(config.family);
  t.config["n"] = order;
  t.config["z"] = {z.real(), z.imag()};
  t.columns = {"j", "k", "re", "im"};
  for (int j = 0; j < order; ++j)
    for (int k = 0; k < order; ++k)
      t.rows.push_back({j + 1, k + 1, dt.matrix(j, k).real(), dt.matrix(j, k).imag()});
  write_table(t, config.format, out);
}

void cmd_quad(const RunConfig& config, std::ostream& out) {
  const int order = require_order(config);
  const Complex z = require_z(config);
  if (config.function.empty()) throw DomainError("--f is required");
  const auto rule = std::make_shared<const QuadratureRule>(gauss_rule(config.family, order));
  const auto dt = build_transform(rule, z);

  const bool sampled = config.function.rfind("file:", 0) == 0;
  std::function<Complex(double)> f;
  Vector<Complex> samples(order);
  if (sampled) {
    const std::vector<Complex> values = read_samples(config.function.substr(5));
    if (static_cast<int>(values.size()) != order)
      throw DomainError("samples file has " + std::to_string(values.size()) + " values, expected " +
                        std::to_string(order));
    for (int k = 0; k < order; ++k) samples[k] = values[k];
  } else {
    f = builtin_function(config);
    for (int k = 0; k < order; ++k) samples[k] = f(rule->nodes[k]);
  }
  const Vector<Complex> result = apply_quadrature(dt, samples);

  Table t;
  std::string fdesc = "f=" + config.function;
  if (!sampled) fdesc += " c=" + format_number(config.c) + " degree=" + std::to_string(config.degree);
  t.header_lines.push_back("orthoquad quad " + family_header(config.family) +
                           " n=" + std::to_string(order) + " z=" + format_complex(z) + " " + fdesc +
                           " oracle=" + (config.oracle ? "on" : "off"));
  t.config = family_json(config.family);
  t.config["n"] = order;
  t.config["z"] = {z.real(), z.imag()};
  t.config["f"] = config.function;
  t.config["c"] = config.c;
  t.config["degree"] = config.degree;
  t.config["oracle"] = config.oracle;
  t.columns = {"j", "y_j", "quad_re", "quad_im", "oracle_re", "oracle_im", "abs_err", "status"};

  for (Eigen::Index j : selected_rows(config, order)) {
    const double y = rule->nodes[j];
    std::vector<Json> row{static_cast<int>(j + 1), y, result[j].real(), result[j].imag()};
    if (!config.oracle) {
      row.insert(row.end(), {Json(), Json(), Json(), "skipped"});
    } else if (sampled) {
      row.insert(row.end(), {Json(), Json(), Json(), "unavailable"});
    } else {
      IntegralTask task;
      task.family = config.family;
      task.y = y;
      task.z = z;
      task.integrand = f;
      try {
        const IntegralEstimate est = direct_transform(task);
        row.insert(row.end(), {est.value.real(), est.value.imag(), std::abs(result[j] - est.value),
                               "ok"});
      } catch (const AccuracyError& e) {
        const Complex best(e.estimate_re(), e.estimate_im());
        row.insert(row.end(), {best.real(), best.imag(), std::abs(result[j] - best), "accuracy"});
      } catch (const DomainError&) {
        row.insert(row.end(), {Json(), Json(), Json(), "unsupported"});
      }
    }
    t.rows.push_back(std::move(row));
  }
  write_table(t, config.format, out);
}

Figure parse_figure(std::string_view name) {
  if (name == "fig1") return Figure::fig1;
  if (name == "fig2") return Figure::fig2;
  if (name == "fig3") return Figure::fig3;
  throw DomainError("unknown figure '" + std::string(name) + "' (expected fig1, fig2 or fig3)");
}

ReproduceSummary reproduce(Figure figure, const ReproduceOverrides& o) {
  FigureParams p = default_params(figure);
  if (o.order) p.order = *o.order;
  if (o.z) p.z = *o.z;
  if (o.alpha) p.alpha = *o.alpha;
  if (o.beta) p.beta = *o.beta;
  if (o.c) p.c = *o.c;
  if (o.degree) p.degree = *o.degree;
  if (p.order < 1) throw DomainError("--n must be at least 1");

  ReproduceSummary s;
  switch (figure) {
    case Figure::fig1: {
      const auto rule = std::make_shared<const QuadratureRule>(
          gauss_rule(PolynomialFamily::hermite(), p.order));
      const Eigen::Index center = center_index(p.order);
      Vector<Complex> f(p.order);
      for (int k = 0; k < p.order; ++k) f[k] = std::exp(Complex(0.0, -p.c * rule->nodes[k]));
      for (int m = 1; m <= 99; ++m) {
        const double z = m / 100.0;
        const auto dt = build_transform(rule, z);
        const Complex value = (dt.matrix.row(center).cast<Complex>() * f).value();
        s.abscissa.push_back(z);
        s.lhs.push_back(closed_form_rhs(figure, p, z));
        s.rhs.push_back(value);
      }
      break;
    }
    case Figure::fig2:
    case Figure::fig3: {
      const PolynomialFamily fam = figure == Figure::fig2
                                       ? PolynomialFamily::laguerre(p.alpha)
                                       : PolynomialFamily::jacobi(p.alpha, p.beta);
      if (figure == Figure::fig3 && (p.degree < 0 || p.degree > kMaxRawDegree))
        throw DomainError("--degree must lie in 0.." + std::to_string(kMaxRawDegree));
      const auto rule = std::make_shared<const QuadratureRule>(gauss_rule(fam, p.order));
      const auto dt = build_transform(rule, p.z);
      Eigen::VectorXd f(p.order);
      for (int k = 0; k < p.order; ++k) {
        const double x = rule->nodes[k];
        f[k] = figure == Figure::fig2 ? std::pow(x, 0.25) * bessel_j(p.alpha, p.c * std::sqrt(x))
                                      : envelope(fam, x) * eval_poly(fam, p.degree, x);
      }
      const Eigen::VectorXd quad = apply_quadrature(dt, f);
      for (int j = 0; j < p.order; ++j) {
        s.abscissa.push_back(j + 1);
        s.lhs.push_back(closed_form_rhs(figure, p, rule->nodes[j]));
        s.rhs.emplace_back(quad[j], 0.0);
      }
      break;
    }
  }
  double sq = 0.0;
  for (std::size_t i = 0; i < s.lhs.size(); ++i) {
    const double d = s.lhs[i] - s.rhs[i].real();
    sq += d * d;
  }
  s.error_norm = std::sqrt(sq);
  return s;
}

ReproduceSummary cmd_reproduce(Figure figure, const ReproduceOverrides& o, OutputFormat format,
                               std::ostream& out) {
  const ReproduceSummary s = reproduce(figure, o);
  FigureParams p = default_params(figure);
  if (o.order) p.order = *o.order;
  if (o.z) p.z = *o.z;
  if (o.alpha) p.alpha = *o.alpha;
  if (o.beta) p.beta = *o.beta;
  if (o.c) p.c = *o.c;
  if (o.degree) p.degree = *o.degree;

  Table t;
  Json cfg;
  std::ostringstream h;
  switch (figure) {
    case Figure::fig1:
      h << "orthoquad reproduce fig1 family=hermite n=" << p.order << " f=expneg c="
        << format_number(p.c) << " row=center";
      t.header_lines.push_back(h.str());
      t.header_lines.push_back("z-grid: z_m = m/100, m = 1..99");
      cfg = {{"figure", "fig1"}, {"n", p.order}, {"c", p.c}, {"row", "center"},
             {"z_grid", "m/100, m=1..99"}};
      break;
    case Figure::fig2:
      h << "orthoquad reproduce fig2 family=laguerre alpha=" << format_number(p.alpha)
        << " n=" << p.order << " z=" << format_number(p.z) << " c=" << format_number(p.c)
        << " rows=all";
      t.header_lines.push_back(h.str());
      cfg = {{"figure", "fig2"}, {"alpha", p.alpha}, {"n", p.order},
             {"z", p.z},         {"c", p.c},         {"rows", "all"}};
      break;
    case Figure::fig3:
      h << "orthoquad reproduce fig3 family=jacobi alpha=" << format_number(p.alpha)
        << " beta=" << format_number(p.beta) << " n=" << p.order << " z=" << format_number(p.z)
        << " degree=" << p.degree << " rows=all";
      t.header_lines.push_back(h.str());
      cfg = {{"figure", "fig3"}, {"alpha", p.alpha}, {"beta", p.beta}, {"n", p.order},
             {"z", p.z},         {"degree", p.degree}, {"rows", "all"}};
      break;
  }
  t.config = cfg;
  t.columns = {"abscissa", "lhs", "rhs_re", "rhs_im"};
  for (std::size_t i = 0; i < s.lhs.size(); ++i) {
    Json abscissa = figure == Figure::fig1 ? Json(s.abscissa[i]) : Json(static_cast<int>(s.abscissa[i]));
    t.rows.push_back({abscissa, s.lhs[i], s.rhs[i].real(), s.rhs[i].imag()});
  }
  write_table(t, format, out, s.error_norm);
  return s;
}

}  // namespace orthoquad::cli
