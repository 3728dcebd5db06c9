#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "rabi/feasibility.hpp"
#include "rabi/spectra.hpp"

// Command-line front end. Every subcommand turns a RunConfig into one or more
// tables (or a JSON report) and writes them under the configured output
// directory. The table builders are exposed for testing.

namespace rabi::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitConfig = 2,
  kExitNumeric = 3,
  kExitRegime = 4,
};

enum class TimeMode { PeriodFractions, Absolute };

struct TimeSpec {
  TimeMode mode = TimeMode::PeriodFractions;
  std::vector<double> samples;
};

struct OutputSpec {
  std::string format = "csv";  // csv | json
  std::string path = ".";      // output directory
};

struct RunConfig {
  double omega_q = 3.0;
  std::vector<double> couplings{1.3};
  std::optional<int> n_max;  // empty: converge automatically
  QGrid grid;
  TimeSpec times;
  int levels = 20;
  int states = 4;
  double floor = 1e-4;
  std::vector<DeviceScenario> physical;
  OutputSpec output;
};

/// Strict parse: unknown keys and wrong types raise ConfigError.
RunConfig parse_config(const nlohmann::json& doc);
RunConfig load_config(const std::string& path);

/// Default time samples: 101 points over one tunneling period.
std::vector<double> default_period_samples();

using Cell = std::variant<std::monostate, double, long long, bool, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

/// Shortest representation that parses back to the same double; NaN and
/// infinities become empty cells.
std::string format_double(double value);
std::string to_csv(const Table& table);
nlohmann::ordered_json to_json(const Table& table);

Table spectrum_table(const RunConfig& config);
Table wavefunction_table(const RunConfig& config);

struct DynamicsTables {
  Table density_exact;
  Table density_approx;
  Table observables;
};
DynamicsTables dynamics_tables(const RunConfig& config);

Table potential_table(const RunConfig& config);
nlohmann::ordered_json feasibility_json(const RunConfig& config);

/// Canned configurations for the figure ids 1, 2, 3, 4, 5a, 5b.
RunConfig figure_config(const std::string& id);

/// Full command-line entry point; returns the process exit status.
int run(int argc, const char* const* argv);

}  // namespace rabi::cli
