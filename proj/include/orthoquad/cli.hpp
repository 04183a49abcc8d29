#pragma once

#include <complex>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "orthoquad/errors.hpp"
#include "orthoquad/oracle.hpp"
#include "orthoquad/orthopoly.hpp"

namespace orthoquad::cli {

enum class OutputFormat { csv, json };

/// Exit codes of the orthoquad executable.
inline constexpr int kExitOk = 0;
inline constexpr int kExitIo = 1;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitNumerical = 3;

/// Output file could not be opened or written.
class IoError : public Error {
 public:
  using Error::Error;
};

struct RunConfig {
  PolynomialFamily family;
  int order = 0;  // 0 selects the command default
  std::optional<std::complex<double>> z;
  std::optional<int> row;  // 1-based; empty means every row
  bool center = false;
  std::string function;    // builtin name or "file:<path>"
  double c = 1.0;
  int degree = 5;
  bool oracle = false;
  std::string out;         // empty writes to the caller's stream
  OutputFormat format = OutputFormat::csv;
};

/// Parses "re" or "re,im".
std::complex<double> parse_complex(std::string_view text);

/// Shortest decimal string that parses back to the same double.
std::string format_number(double v);

/// Names accepted by --f besides "file:<path>".
const std::vector<std::string>& builtin_names();

/// Resolves a builtin integrand for the given config.
std::function<std::complex<double>(double)> builtin_function(const RunConfig& config);

/// Reads one sample per line ("re" or "re,im"); blank and '#' lines skipped.
std::vector<std::complex<double>> read_samples(const std::string& path);

void cmd_nodes(const RunConfig& config, std::ostream& out);
void cmd_matrix(const RunConfig& config, std::ostream& out);
void cmd_quad(const RunConfig& config, std::ostream& out);

struct ReproduceSummary {
  std::vector<double> abscissa;
  std::vector<double> lhs;
  std::vector<std::complex<double>> rhs;
  double error_norm = 0.0;
};

/// Overrides in `config` (order, z, alpha, beta, c, degree) replace the
/// figure defaults when set.
struct ReproduceOverrides {
  std::optional<int> order;
  std::optional<double> z;
  std::optional<double> alpha;
  std::optional<double> beta;
  std::optional<double> c;
  std::optional<int> degree;
};

ReproduceSummary reproduce(Figure figure, const ReproduceOverrides& overrides);
ReproduceSummary cmd_reproduce(Figure figure, const ReproduceOverrides& overrides,
                               OutputFormat format, std::ostream& out);

Figure parse_figure(std::string_view name);

/// Full command-line entry point; returns the process exit code.
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace orthoquad::cli
