#pragma once

#include <array>
#include <complex>
#include <span>
#include <vector>

#include "rabi/model.hpp"
#include "rabi/spectra.hpp"

namespace rabi {

struct BlochVector {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
};

/// Oscillator position density sampled on a grid.
struct DensityProfile {
  std::vector<double> grid;
  std::vector<double> values;
  double mass = 0.0;       // trapezoidal integral over the grid
  bool truncated = false;  // more than kGridMassTol of the mass lies outside
};

inline constexpr double kGridMassTol = 1e-3;

enum class EvolutionMode { Exact, Approximate };

struct Trajectory {
  EvolutionMode mode = EvolutionMode::Exact;
  std::vector<double> times;  // units 1/omega0
  std::vector<JointState> states;
  std::vector<BlochVector> observables;  // from the states by partial trace
  std::vector<DensityProfile> densities;

  // Approximate mode only: amplitudes on (Phi_{-,0}, Phi_{+,0}) and the
  // closed forms <sigma_x> = cos theta0, <sigma_z> = sin theta0 cos(dw t).
  std::vector<std::array<std::complex<double>, 2>> doublet_amplitudes;
  std::vector<BlochVector> closed_form;
};

/// psi_{0,L}: the left coherent state times the optimally rotated qubit.
JointState initial_left_state(const ModelParams& params, const BasisSpec& basis);

/// Expands state0 in the eigenbasis and propagates each component with its
/// phase. Requires a convergence-checked spectrum on the state's basis.
Trajectory evolve_exact(const JointState& state0, const SpectralResult& spectrum,
                        std::span<const double> times, const QGrid& grid = {});

/// Two-level evolution in the ground doublet {Phi_{-,0}, Phi_{+,0}}, starting
/// from their equal-weight sum.
Trajectory evolve_approx(const ModelParams& params, std::span<const double> times,
                         const BasisSpec& basis, const QGrid& grid = {});

BlochVector qubit_observables(const JointState& state);

DensityProfile density_profile(const JointState& state, const QGrid& grid);
DensityProfile density_profile(const JointState& state, std::span<const double> grid,
                               const Eigen::MatrixXd& ho_table, double spacing);

/// 2 pi / dw with dw the variational ground-doublet splitting.
double tunneling_period(const ModelParams& params);

/// Converts fractions of `period` to absolute times.
std::vector<double> period_fraction_times(std::span<const double> fractions, double period);

/// Integral of |a - b| over the grid (trapezoid).
double l1_distance(const DensityProfile& a, const DensityProfile& b);

}  // namespace rabi
