#include <algorithm>
#include <cmath>
#include <limits>

#include "rabi/cli.hpp"
#include "rabi/dynamics.hpp"
#include "rabi/errors.hpp"
#include "rabi/potential.hpp"
#include "rabi/specfun.hpp"
#include "rabi/variational.hpp"

namespace rabi::cli {

namespace {

constexpr double kSpectrumTol = 1e-9;
constexpr const char* kSingleMinimum = "single-minimum regime";

SpectralResult spectrum_for(const RunConfig& cfg, const ModelParams& params, int k) {
  if (cfg.n_max) {
    ConvergenceOptions opts;
    opts.initial_n_max = *cfg.n_max;
    opts.cap_n_max = std::max(*cfg.n_max, kMaxNMax);
    return converged_spectrum(params, k, std::numeric_limits<double>::infinity(), opts);
  }
  return converged_spectrum(params, k, kSpectrumTol);
}

bool double_well(const ModelParams& params) {
  return 4.0 * params.coupling * params.coupling > params.omega_q;
}

std::string q_column(double q) { return "q=" + format_double(q); }

}  // namespace

Table spectrum_table(const RunConfig& cfg) {
  Table t;
  t.columns = {"omega_q",       "coupling", "index",         "energy_exact", "energy_approx_full",
               "energy_approx_simplified", "parity", "N", "approx_parity", "note"};
  for (double coupling : cfg.couplings) {
    const ModelParams params{cfg.omega_q, coupling};
    const SpectralResult spec = spectrum_for(cfg, params, cfg.levels);

    struct Approx {
      double full, simplified;
      int n, parity;
    };
    std::vector<Approx> approx;
    const bool regime_ok = double_well(params);
    if (regime_ok) {
      for (int n = 0; n < cfg.levels; ++n) {
        const auto full = doublet_energies(params, n, false);
        const auto simple = doublet_energies(params, n, true);
        const int base = (n % 2 == 0) ? 1 : -1;
        approx.push_back({full.minus, simple.minus, n, -base});
        approx.push_back({full.plus, simple.plus, n, base});
      }
      std::stable_sort(approx.begin(), approx.end(),
                       [](const Approx& a, const Approx& b) { return a.full < b.full; });
    }

    const int rows = std::min<int>(cfg.levels, static_cast<int>(spec.size()));
    for (int i = 0; i < rows; ++i) {
      std::vector<Cell> row{cfg.omega_q, coupling, static_cast<long long>(i), spec.eigenvalues(i)};
      if (regime_ok) {
        const auto& a = approx[static_cast<std::size_t>(i)];
        row.insert(row.end(), {a.full, a.simplified, static_cast<long long>(spec.parities[i]),
                               static_cast<long long>(a.n), static_cast<long long>(a.parity), std::string{}});
      } else {
        row.insert(row.end(), {std::monostate{}, std::monostate{}, static_cast<long long>(spec.parities[i]),
                               std::monostate{}, std::monostate{}, std::string(kSingleMinimum)});
      }
      t.rows.push_back(std::move(row));
    }
  }
  return t;
}

Table wavefunction_table(const RunConfig& cfg) {
  Table t;
  t.columns = {"coupling", "state", "q", "psi_plus_z_exact", "psi_minus_z_exact",
               "psi_plus_z_approx", "psi_minus_z_approx"};
  const std::vector<double> q = cfg.grid.values();
  for (double coupling : cfg.couplings) {
    const ModelParams params{cfg.omega_q, coupling};
    const SpectralResult spec = spectrum_for(cfg, params, 2);
    const Eigen::MatrixXd table = ho_wavefunctions(spec.basis.n_max, q);
    const bool regime_ok = double_well(params);
    const std::array<const char*, 2> names{"ground", "first-excited"};
    const std::array<DoubletSign, 2> signs{DoubletSign::Minus, DoubletSign::Plus};
    for (int k = 0; k < 2; ++k) {
      JointState exact = spec.state(k);
      std::optional<PositionProjections> approx;
      if (regime_ok) {
        const JointState phi = parity_doublet_state(params, 0, signs[k], spec.basis);
        if (phi.coefficients.dot(exact.coefficients).real() < 0.0) exact.coefficients *= -1.0;
        approx = position_projections(phi, q, table);
      }
      const PositionProjections proj = position_projections(exact, q, table);
      for (std::size_t i = 0; i < q.size(); ++i) {
        std::vector<Cell> row{coupling, std::string(names[k]), q[i], proj.plus_z[i].real(),
                              proj.minus_z[i].real()};
        if (approx) {
          row.emplace_back(approx->plus_z[i].real());
          row.emplace_back(approx->minus_z[i].real());
        } else {
          row.emplace_back(std::monostate{});
          row.emplace_back(std::monostate{});
        }
        t.rows.push_back(std::move(row));
      }
    }
  }
  return t;
}

DynamicsTables dynamics_tables(const RunConfig& cfg) {
  if (cfg.couplings.size() != 1) throw ConfigError("dynamics takes exactly one coupling value");
  const ModelParams params{cfg.omega_q, cfg.couplings.front()};
  const double period = tunneling_period(params);
  const std::vector<double> times = cfg.times.mode == TimeMode::PeriodFractions
                                        ? period_fraction_times(cfg.times.samples, period)
                                        : cfg.times.samples;

  const SpectralResult spec = spectrum_for(cfg, params, 10);
  const JointState psi0 = initial_left_state(params, spec.basis);
  const Trajectory exact = evolve_exact(psi0, spec, times, cfg.grid);
  const Trajectory approx = evolve_approx(params, times, spec.basis, cfg.grid);

  DynamicsTables out;
  const std::vector<double> q = cfg.grid.values();
  std::vector<std::string> density_cols{"t"};
  for (double x : q) density_cols.push_back(q_column(x));
  out.density_exact.columns = density_cols;
  out.density_approx.columns = density_cols;
  out.observables.columns = {"t", "sz_exact", "sx_exact", "sy_exact", "sz_approx", "sx_approx"};

  for (std::size_t i = 0; i < times.size(); ++i) {
    const double t_scaled = times[i] / period;
    std::vector<Cell> row_exact{t_scaled};
    std::vector<Cell> row_approx{t_scaled};
    for (double v : exact.densities[i].values) row_exact.emplace_back(v);
    for (double v : approx.densities[i].values) row_approx.emplace_back(v);
    out.density_exact.rows.push_back(std::move(row_exact));
    out.density_approx.rows.push_back(std::move(row_approx));
    const auto& e = exact.observables[i];
    const auto& a = approx.closed_form[i];
    out.observables.rows.push_back({t_scaled, e.z, e.x, e.y, a.z, a.x});
  }
  return out;
}

Table potential_table(const RunConfig& cfg) {
  Table t;
  t.columns = {"coupling", "kind", "label", "q", "E_b"};
  for (int k = 0; k < cfg.states; ++k) {
    t.columns.push_back("V_" + std::to_string(k));
    t.columns.push_back("mask_" + std::to_string(k));
  }
  const std::vector<double> q = cfg.grid.values();
  const auto blank_states = [&](std::vector<Cell>& row) {
    for (int k = 0; k < cfg.states; ++k) {
      row.emplace_back(std::monostate{});
      row.emplace_back(std::monostate{});
    }
  };

  for (double coupling : cfg.couplings) {
    const ModelParams params{cfg.omega_q, coupling};
    const SpectralResult spec = spectrum_for(cfg, params, cfg.states);
    const Eigen::MatrixXd table = ho_wavefunctions(spec.basis.n_max, q);
    const PotentialCurve band = lower_band(params, q);

    std::vector<PotentialCurve> curves;
    for (int k = 0; k < cfg.states; ++k) {
      const DensityProfile rho = density_profile(spec.state(k), q, table, cfg.grid.spacing());
      curves.push_back(curvature_potential(rho, spec.eigenvalues(k), cfg.floor));
    }

    for (std::size_t i = 0; i < q.size(); ++i) {
      std::vector<Cell> row{coupling, std::string("curve"), std::string{}, q[i], band.values[i]};
      for (const auto& c : curves) {
        row.emplace_back(c.values[i]);
        row.emplace_back(static_cast<bool>(c.mask[i]));
      }
      t.rows.push_back(std::move(row));
    }

    std::vector<Cell> energies{coupling, std::string("energy"), std::string("eigenenergy"),
                               std::monostate{}, std::monostate{}};
    std::vector<Cell> parities{coupling, std::string("parity"), std::string("parity"),
                               std::monostate{}, std::monostate{}};
    for (int k = 0; k < cfg.states; ++k) {
      energies.emplace_back(spec.eigenvalues(k));
      energies.emplace_back(std::monostate{});
      parities.emplace_back(static_cast<long long>(spec.parities[static_cast<std::size_t>(k)]));
      parities.emplace_back(std::monostate{});
    }
    t.rows.push_back(std::move(energies));
    t.rows.push_back(std::move(parities));

    const auto summary = [&](const std::string& label, Cell value) {
      std::vector<Cell> row{coupling, std::string("summary"), label, std::monostate{}, std::move(value)};
      blank_states(row);
      t.rows.push_back(std::move(row));
    };
    if (double_well(params)) {
      const auto counts = doublet_counts(params);
      const auto stats = barrier_stats(params);
      summary("energy_bound", counts.energy_bound);
      summary("overlap_count", static_cast<long long>(counts.overlap_count));
      summary("large_N_bound", counts.large_n_bound);
      summary("minimum_value", stats.minimum_value);
      summary("barrier_value", stats.barrier_value);
      summary("barrier_height", stats.barrier_height);
    } else {
      summary("note", std::string(kSingleMinimum));
    }
  }
  return t;
}

nlohmann::ordered_json feasibility_json(const RunConfig& cfg) {
  if (cfg.physical.empty())
    throw ConfigError("feasibility needs a 'physical' block or --preset");
  nlohmann::ordered_json doc;
  auto list = nlohmann::ordered_json::array();
  for (const auto& s : cfg.physical) {
    const FeasibilityReport r = feasibility_report(s.model, s.context);
    const DoubletCounts counts = doublet_counts(s.model);
    nlohmann::ordered_json item;
    item["name"] = s.name;
    item["omega_q"] = s.model.omega_q;
    item["coupling"] = s.model.coupling;
    item["omega0"] = s.context.omega0;
    item["T_env"] = s.context.t_env;
    item["quality_factor"] = s.context.quality_factor ? nlohmann::ordered_json(*s.context.quality_factor)
                                                      : nlohmann::ordered_json(nullptr);
    item["t_Q"] = r.t_q;
    item["Gamma_th"] = r.gamma_th;
    item["T_c"] = r.t_c;
    item["delta_V"] = r.delta_v;
    item["tau_th"] = r.tau_th ? nlohmann::ordered_json(*r.tau_th) : nlohmann::ordered_json(nullptr);
    item["regime"] = r.quantum_dominated ? "quantum-tunneling-dominated" : "thermal-activation-dominated";
    item["doublet_counts"] = {{"energy_bound", counts.energy_bound},
                              {"overlap_count", counts.overlap_count},
                              {"large_N_bound", counts.large_n_bound}};
    list.push_back(std::move(item));
  }
  doc["scenarios"] = std::move(list);
  return doc;
}

RunConfig figure_config(const std::string& id) {
  RunConfig cfg;
  cfg.omega_q = 3.0;
  cfg.times.samples = default_period_samples();
  if (id == "1") {
    cfg.couplings = {1.3, 2.0};
    cfg.levels = 20;
  } else if (id == "2") {
    cfg.couplings = {2.0, 1.3};
  } else if (id == "3" || id == "4") {
    cfg.couplings = {1.3};
    cfg.times.samples.clear();
    for (int i = 0; i <= 200; ++i) cfg.times.samples.push_back(i / 200.0);
  } else if (id == "5a") {
    cfg.couplings = {1.3};
    cfg.states = 4;
  } else if (id == "5b") {
    cfg.couplings = {2.0};
    cfg.states = 6;
  } else {
    throw ConfigError("unknown figure id '" + id + "' (expected 1, 2, 3, 4, 5a or 5b)");
  }
  return cfg;
}

}  // namespace rabi::cli
