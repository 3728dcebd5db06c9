#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "rabi/cli.hpp"
#include "rabi/errors.hpp"

namespace rabi::cli {

namespace {

namespace fs = std::filesystem;

struct Overrides {
  std::string config_path;
  std::optional<double> omega;
  std::vector<double> lambdas;
  std::optional<int> n_max;
  std::optional<std::string> out;
  std::optional<std::string> format;
};

void apply(const Overrides& o, RunConfig& cfg) {
  if (o.omega) cfg.omega_q = *o.omega;
  if (!o.lambdas.empty()) cfg.couplings = o.lambdas;
  if (o.n_max) cfg.n_max = *o.n_max;
  if (o.out) cfg.output.path = *o.out;
  if (o.format) cfg.output.format = *o.format;
  if (!(cfg.omega_q > 0.0)) throw ConfigError("--omega must be positive");
  for (double c : cfg.couplings)
    if (!(c >= 0.0)) throw ConfigError("--lambda must be >= 0");
  if (cfg.n_max && *cfg.n_max < 2) throw ConfigError("--n-max must be >= 2");
  if (cfg.output.format != "csv" && cfg.output.format != "json")
    throw ConfigError("--format must be csv or json");
}

RunConfig base_config(const Overrides& o) {
  RunConfig cfg;
  if (!o.config_path.empty()) cfg = load_config(o.config_path);
  else cfg.times.samples = default_period_samples();
  apply(o, cfg);
  return cfg;
}

fs::path write_text(const RunConfig& cfg, const std::string& stem, const std::string& ext,
                    const std::string& text) {
  const fs::path dir(cfg.output.path);
  std::error_code ec;
  fs::create_directories(dir, ec);
  const fs::path file = dir / (stem + "." + ext);
  std::ofstream out(file, std::ios::binary);
  if (!out) throw ConfigError("cannot write '" + file.string() + "'");
  out << text;
  std::cout << file.string() << '\n';
  return file;
}

void write_table(const RunConfig& cfg, const std::string& stem, const Table& table) {
  if (cfg.output.format == "json")
    write_text(cfg, stem, "json", to_json(table).dump(2) + "\n");
  else
    write_text(cfg, stem, "csv", to_csv(table));
}

void write_dynamics(const RunConfig& cfg, const std::string& prefix, bool densities, bool observables) {
  const DynamicsTables d = dynamics_tables(cfg);
  if (densities) {
    write_table(cfg, prefix + "density_exact", d.density_exact);
    write_table(cfg, prefix + "density_approx", d.density_approx);
  }
  if (observables) write_table(cfg, prefix + "observables", d.observables);
}

void reproduce(const std::string& id, const Overrides& o) {
  RunConfig cfg = figure_config(id);
  if (o.out) cfg.output.path = *o.out;
  if (o.format) cfg.output.format = *o.format;
  if (o.n_max) cfg.n_max = *o.n_max;
  const std::string stem = "figure" + id;
  if (id == "1") write_table(cfg, stem, spectrum_table(cfg));
  else if (id == "2") write_table(cfg, stem, wavefunction_table(cfg));
  else if (id == "3") write_dynamics(cfg, stem + "_", true, false);
  else if (id == "4") write_dynamics(cfg, stem + "_", false, true);
  else write_table(cfg, stem, potential_table(cfg));
}

}  // namespace

int run(int argc, const char* const* argv) {
  CLI::App app{"Rabi-model tunneling doublets: spectra, dynamics, effective potentials"};
  app.require_subcommand(1);
  app.fallthrough();

  Overrides o;
  app.add_option("--config", o.config_path, "JSON run configuration");
  app.add_option("--omega", o.omega, "qubit splitting Omega in units of omega0");
  app.add_option("--lambda", o.lambdas, "coupling lambda in units of omega0 (repeatable)");
  app.add_option("--n-max", o.n_max, "fixed Fock truncation (default: converge automatically)");
  app.add_option("--out", o.out, "output directory");
  app.add_option("--format", o.format, "csv or json");

  auto* spectrum = app.add_subcommand("spectrum", "exact and approximate energy levels");
  auto* wavefunctions = app.add_subcommand("wavefunctions", "ground and first excited state projections");
  auto* dynamics = app.add_subcommand("dynamics", "tunneling dynamics from the left-localized state");
  auto* potential = app.add_subcommand("potential", "effective potentials and doublet counts");
  auto* feasibility = app.add_subcommand("feasibility", "device tunneling time and crossover temperature");
  std::vector<std::string> presets;
  feasibility->add_option("--preset", presets, "built-in device scenario (repeatable)");
  auto* figure = app.add_subcommand("reproduce-figure", "regenerate the data behind one figure");
  std::string figure_id;
  figure->add_option("id", figure_id, "1, 2, 3, 4, 5a or 5b")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (figure->parsed()) {
      reproduce(figure_id, o);
      return kExitOk;
    }
    RunConfig cfg = base_config(o);
    if (spectrum->parsed()) write_table(cfg, "spectrum", spectrum_table(cfg));
    else if (wavefunctions->parsed()) write_table(cfg, "wavefunctions", wavefunction_table(cfg));
    else if (dynamics->parsed()) write_dynamics(cfg, "", true, true);
    else if (potential->parsed()) write_table(cfg, "potential", potential_table(cfg));
    else if (feasibility->parsed()) {
      for (const auto& name : presets) cfg.physical.push_back(device_preset(name));
      write_text(cfg, "feasibility", "json", feasibility_json(cfg).dump(2) + "\n");
    }
    return kExitOk;
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const RegimeError& e) {
    std::cerr << "regime error: " << e.what() << '\n';
    return kExitRegime;
  } catch (const NumericError& e) {
    std::cerr << "numeric error: " << e.what() << '\n';
    return kExitNumeric;
  }
}

}  // namespace rabi::cli
