#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rabi/model.hpp"

// Order-of-magnitude estimates for observing oscillator tunneling in a
// device. Inputs and outputs are SI. The oscillator frequency is an angular
// frequency in rad/s; a device quoted at "3.3 GHz" is entered as 3.3e9.

namespace rabi {

namespace constants {
inline constexpr double kHbar = 1.054571817e-34;      // J s
inline constexpr double kBoltzmann = 1.380649e-23;    // J / K
}  // namespace constants

struct PhysicalContext {
  double omega0 = 0.0;  // rad/s
  double t_env = 0.0;   // K
  std::optional<double> quality_factor;

  void validate() const;
};

struct FeasibilityReport {
  double t_q = 0.0;      // s, one barrier transit pi / dw
  double gamma_th = 0.0; // 1/s, Arrhenius activation rate at t_env
  double t_c = 0.0;      // K, crossover temperature
  double delta_v = 0.0;  // J, barrier height
  std::optional<double> tau_th;  // s, hbar Q / k_B T_env
  bool quantum_dominated = false;  // t_env < t_c
};

/// pi / (dw omega0) with dw the variational ground-doublet splitting.
double tunneling_time(const ModelParams& params, const PhysicalContext& ctx);

/// (omega0 / 2 pi) exp(-dV / k_B T). Zero at T = 0.
double arrhenius_rate(const ModelParams& params, const PhysicalContext& ctx);
double arrhenius_rate_at(double omega0, double delta_v_joules, double temperature);

/// -(dV / k_B) / ln(2 dw / omega0): the temperature at which the activation
/// rate equals 1 / t_Q. Throws RegimeError when 2 dw >= omega0.
double crossover_temperature(const ModelParams& params, const PhysicalContext& ctx);

/// hbar Q / k_B T_env, when Q is known and T_env > 0.
std::optional<double> thermal_decoherence_time(const PhysicalContext& ctx);

double barrier_height_joules(const ModelParams& params, const PhysicalContext& ctx);

FeasibilityReport feasibility_report(const ModelParams& params, const PhysicalContext& ctx);

struct DeviceScenario {
  std::string name;
  ModelParams model;
  PhysicalContext context;
};

/// Built-in scenarios: "dilatational-3GHz" and "flexural-100MHz".
const std::vector<DeviceScenario>& device_presets();
const DeviceScenario& device_preset(const std::string& name);

}  // namespace rabi
