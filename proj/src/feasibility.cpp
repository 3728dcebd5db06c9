#include "rabi/feasibility.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "rabi/errors.hpp"
#include "rabi/potential.hpp"
#include "rabi/variational.hpp"

namespace rabi {

void PhysicalContext::validate() const {
  if (!(omega0 > 0.0) || !std::isfinite(omega0))
    throw std::invalid_argument("omega0 must be positive and finite");
  if (!(t_env >= 0.0)) throw std::invalid_argument("T_env must be >= 0");
  if (quality_factor && !(*quality_factor > 0.0))
    throw std::invalid_argument("quality factor must be positive");
}

double tunneling_time(const ModelParams& params, const PhysicalContext& ctx) {
  ctx.validate();
  return std::numbers::pi / (tunneling_splitting(params) * ctx.omega0);
}

double barrier_height_joules(const ModelParams& params, const PhysicalContext& ctx) {
  ctx.validate();
  return barrier_stats(params).barrier_height * constants::kHbar * ctx.omega0;
}

double arrhenius_rate_at(double omega0, double delta_v_joules, double temperature) {
  const double attempt = omega0 / (2.0 * std::numbers::pi);
  if (temperature == 0.0) return delta_v_joules > 0.0 ? 0.0 : attempt;
  return attempt * std::exp(-delta_v_joules / (constants::kBoltzmann * temperature));
}

double arrhenius_rate(const ModelParams& params, const PhysicalContext& ctx) {
  return arrhenius_rate_at(ctx.omega0, barrier_height_joules(params, ctx), ctx.t_env);
}

double crossover_temperature(const ModelParams& params, const PhysicalContext& ctx) {
  const double dw = tunneling_splitting(params);
  if (!(2.0 * dw < 1.0)) {
    std::ostringstream msg;
    msg << "no crossover regime: 2 dw / omega0 = " << 2.0 * dw << " >= 1";
    throw RegimeError(msg.str());
  }
  return -barrier_height_joules(params, ctx) / (constants::kBoltzmann * std::log(2.0 * dw));
}

std::optional<double> thermal_decoherence_time(const PhysicalContext& ctx) {
  if (!ctx.quality_factor || !(ctx.t_env > 0.0)) return std::nullopt;
  return constants::kHbar * *ctx.quality_factor / (constants::kBoltzmann * ctx.t_env);
}

FeasibilityReport feasibility_report(const ModelParams& params, const PhysicalContext& ctx) {
  ctx.validate();
  FeasibilityReport r;
  r.t_q = tunneling_time(params, ctx);
  r.delta_v = barrier_height_joules(params, ctx);
  r.gamma_th = arrhenius_rate(params, ctx);
  r.t_c = crossover_temperature(params, ctx);
  r.tau_th = thermal_decoherence_time(ctx);
  r.quantum_dominated = ctx.t_env < r.t_c;
  return r;
}

const std::vector<DeviceScenario>& device_presets() {
  // Qubit at 10 GHz in both. Environment temperatures are typical dilution
  // refrigerator base temperatures; Q = 1e5 is the low end for 10-100 MHz
  // mechanical resonators.
  static const std::vector<DeviceScenario> presets = {
      {"dilatational-3GHz", {3.0, 1.3}, {10e9 / 3.0, 0.010, std::nullopt}},
      {"flexural-100MHz", {100.0, 5.1}, {1.0e8, 0.010, 1e5}},
  };
  return presets;
}

const DeviceScenario& device_preset(const std::string& name) {
  for (const auto& p : device_presets())
    if (p.name == name) return p;
  throw ConfigError("unknown device preset '" + name + "'");
}

}  // namespace rabi
