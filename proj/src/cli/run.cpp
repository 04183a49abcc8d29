#include <fstream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "orthoquad/cli.hpp"

namespace orthoquad::cli {

namespace {

struct RawOptions {
  std::string family = "hermite";
  double alpha = 0.0;
  double beta = 0.0;
  int order = 0;
  std::string z;
  std::string row;
  std::string function;
  double c = 1.0;
  int degree = 5;
  bool oracle = false;
  std::string out;
  std::string format = "csv";
  std::string figure;
};

PolynomialFamily make_family(const RawOptions& o) {
  PolynomialFamily f;
  if (o.family == "hermite") {
    f = PolynomialFamily::hermite();
  } else if (o.family == "laguerre") {
    f = PolynomialFamily::laguerre(o.alpha);
  } else if (o.family == "jacobi") {
    f = PolynomialFamily::jacobi(o.alpha, o.beta);
  } else {
    throw DomainError("unknown family '" + o.family + "'");
  }
  return f;
}

RunConfig make_config(const RawOptions& o) {
  RunConfig cfg;
  cfg.family = make_family(o);
  cfg.order = o.order;
  if (!o.z.empty()) cfg.z = parse_complex(o.z);
  if (o.row == "center") {
    cfg.center = true;
  } else if (!o.row.empty()) {
    try {
      std::size_t used = 0;
      cfg.row = std::stoi(o.row, &used);
      if (used != o.row.size()) throw std::invalid_argument(o.row);
    } catch (const std::logic_error&) {
      throw DomainError("--j expects a 1-based index or 'center'");
    }
  }
  cfg.function = o.function;
  cfg.c = o.c;
  cfg.degree = o.degree;
  cfg.oracle = o.oracle;
  cfg.out = o.out;
  cfg.format = o.format == "json" ? OutputFormat::json : OutputFormat::csv;
  return cfg;
}

// Writes to a string first so a failed command leaves no partial file.
template <class Body>
void emit(const std::string& path, std::ostream& out, Body&& body) {
  if (path.empty()) {
    body(out);
    return;
  }
  std::ostringstream buffer;
  body(buffer);
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError("cannot open output file '" + path + "'");
  file << buffer.str();
  file.flush();
  if (!file) throw IoError("failed writing output file '" + path + "'");
}

}  // namespace

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Gaussian quadrature for Poisson-integral transforms of classical orthogonal polynomials",
               "orthoquad"};
  app.require_subcommand(1);
  RawOptions o;

  auto add_family = [&](CLI::App* sub) {
    sub->add_option("--family", o.family, "hermite, laguerre or jacobi")
        ->check(CLI::IsMember({"hermite", "laguerre", "jacobi"}));
    sub->add_option("--alpha", o.alpha, "Laguerre/Jacobi parameter alpha");
    sub->add_option("--beta", o.beta, "Jacobi parameter beta");
  };
  auto add_output = [&](CLI::App* sub) {
    sub->add_option("--out", o.out, "Output path (default: stdout)");
    sub->add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  };

  auto* nodes = app.add_subcommand("nodes", "Gauss nodes and weights");
  add_family(nodes);
  nodes->add_option("--n", o.order, "Number of nodes")->required();
  add_output(nodes);

  auto* matrix = app.add_subcommand("matrix", "Discrete transform matrix T(z)");
  add_family(matrix);
  matrix->add_option("--n", o.order, "Number of nodes")->required();
  matrix->add_option("--z", o.z, "Transform parameter, \"re\" or \"re,im\"")->required();
  add_output(matrix);

  auto* quad = app.add_subcommand("quad", "Apply T(z) to sampled f, optionally against direct integration");
  add_family(quad);
  quad->add_option("--n", o.order, "Number of nodes")->required();
  quad->add_option("--z", o.z, "Transform parameter, \"re\" or \"re,im\"")->required();
  quad->add_option("--j", o.row, "Row index (1-based) or 'center'; all rows when omitted");
  quad->add_option("--f", o.function, "expneg, besselj, jacobi_weighted, gaussian, poly or file:<path>")
      ->required();
  quad->add_option("--c", o.c, "Parameter c of the builtin integrand");
  quad->add_option("--degree", o.degree, "Degree for jacobi_weighted and poly");
  quad->add_flag("--oracle", o.oracle, "Evaluate the integral directly for comparison");
  add_output(quad);

  auto* repro = app.add_subcommand("reproduce", "Reproduce a worked example: fig1, fig2 or fig3");
  repro->add_option("figure", o.figure, "fig1, fig2 or fig3")->required();
  auto* n_opt = repro->add_option("--n", o.order, "Override number of nodes");
  auto* z_opt = repro->add_option("--z", o.z, "Override z (fig2, fig3)");
  auto* a_opt = repro->add_option("--alpha", o.alpha, "Override alpha");
  auto* b_opt = repro->add_option("--beta", o.beta, "Override beta");
  auto* c_opt = repro->add_option("--c", o.c, "Override c (fig1, fig2)");
  auto* d_opt = repro->add_option("--degree", o.degree, "Override degree (fig3)");
  add_output(repro);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitValidation;
  }

  try {
    if (repro->parsed()) {
      ReproduceOverrides ov;
      if (*n_opt) ov.order = o.order;
      if (*z_opt) {
        const auto z = parse_complex(o.z);
        if (z.imag() != 0.0) throw DomainError("reproduce: --z must be real");
        ov.z = z.real();
      }
      if (*a_opt) ov.alpha = o.alpha;
      if (*b_opt) ov.beta = o.beta;
      if (*c_opt) ov.c = o.c;
      if (*d_opt) ov.degree = o.degree;
      const Figure fig = parse_figure(o.figure);
      const OutputFormat fmt = o.format == "json" ? OutputFormat::json : OutputFormat::csv;
      emit(o.out, out, [&](std::ostream& s) { cmd_reproduce(fig, ov, fmt, s); });
      return kExitOk;
    }
    const RunConfig cfg = make_config(o);
    if (nodes->parsed()) emit(cfg.out, out, [&](std::ostream& s) { cmd_nodes(cfg, s); });
    if (matrix->parsed()) emit(cfg.out, out, [&](std::ostream& s) { cmd_matrix(cfg, s); });
    if (quad->parsed()) emit(cfg.out, out, [&](std::ostream& s) { cmd_quad(cfg, s); });
    return kExitOk;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const NumericalError& e) {
    err << "numerical failure: " << e.what() << '\n';
    return kExitNumerical;
  }
}

}  // namespace orthoquad::cli
