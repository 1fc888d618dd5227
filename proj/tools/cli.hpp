#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "conjugate/fourier.hpp"
#include "conjugate/quantum.hpp"
#include "conjugate/signal.hpp"
#include "conjugate/widths.hpp"

namespace conjugate::cli {

enum class Command { widths, uncertainty, corpus_audit, sample, alias, reconstruct, brillouin, hydrogen };
enum class OutputFormat { json, csv };

std::string_view to_string(Command command) noexcept;

// A named physical bound or an explicit dimensionless constant.
using BoundSpec = std::variant<BoundChoice, double>;

struct RunConfig {
  Command command = Command::uncertainty;
  Convention convention = Convention::omega;
  BoundSpec bound = BoundChoice::hbar_over_2;

  // Signal source: one or more families, or a CSV file.
  std::vector<SignalFamily> families;
  std::optional<std::string> input_path;
  Domain domain = Domain::generic;
  std::optional<double> span;
  std::optional<std::size_t> count;

  OutputFormat output = OutputFormat::json;
  std::optional<std::string> output_path;

  // sample / reconstruct
  std::size_t factor = 2;
  std::optional<double> truncation_limit;

  // uncertainty extras
  std::optional<PairKind> pair;
  bool sweep = false;

  // alias
  double frequency = 0.0;
  double rate = 1.0;

  // brillouin
  double lattice_spacing = 1.0;
  double wavenumber = 0.0;
  std::optional<double> compare_wavenumber;
  std::size_t sites = 64;

  // hydrogen
  int n = 2;
  int m = 1;
  int z = 1;
  std::optional<int> n_max;
};

struct UsageError {
  std::string message;
  bool help = false;  // --help was requested; not a failure
};

// Never throws: every argument list yields a config or a diagnostic naming
// the offending token.
std::variant<RunConfig, UsageError> parse_config(const std::vector<std::string>& args);

// Parses "gaussian:sigma=1,center=0". Throws ParameterError naming the bad
// token.
SignalFamily parse_family(const std::string& text);

std::string usage();

inline constexpr int kExitOk = 0;
inline constexpr int kExitComputation = 1;
inline constexpr int kExitUsage = 2;

// Writes the report to `out` (or the configured output path). Library
// errors become a structured JSON error on `out` with exit status 1.
int run(const RunConfig& config, const PhysicalConstants& constants, std::ostream& out);

// argv handling, CONJUGATE_BENCH_CONSTANTS lookup and exit codes.
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace conjugate::cli
