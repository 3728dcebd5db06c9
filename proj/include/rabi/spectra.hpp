#pragma once

#include <complex>
#include <limits>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "rabi/model.hpp"

namespace rabi {

struct SpectralResult {
  Eigen::VectorXd eigenvalues;   // ascending, units hbar omega0
  Eigen::MatrixXd eigenvectors;  // orthonormal columns, product basis
  std::vector<int> parities;     // +1 / -1 per column
  std::vector<double> boundary;  // probability in the top two Fock levels, per column
  BasisSpec basis;
  bool converged = false;  // set only after a truncation convergence check

  Eigen::Index size() const { return eigenvalues.size(); }
  JointState state(Eigen::Index k) const;
};

/// Full dense symmetric eigendecomposition with parity labels. Eigenvalue
/// clusters closer than kDegeneracyTol are rotated into parity eigenstates
/// before labeling. Throws NumericError if the eigensolver does not converge.
SpectralResult diagonalize(const HamiltonianMatrix& h);

inline constexpr double kDegeneracyTol = 1e-10;
inline constexpr double kBoundaryTol = 1e-8;
inline constexpr int kMaxNMax = 2048;

struct ConvergenceOptions {
  int initial_n_max = kDefaultNMax;
  int cap_n_max = kMaxNMax;
};

/// Doubles n_max from the initial value until the k lowest eigenvalues move
/// by less than `tol` between rounds and their eigenvectors keep less than
/// kBoundaryTol in the top two Fock levels. An infinite tolerance returns
/// after the first round. Throws NumericError naming the first unconverged
/// level when the cap is exceeded.
SpectralResult converged_spectrum(const ModelParams& params, int k, double tol,
                                  const ConvergenceOptions& options = {});

/// Uniform grid of dimensionless positions.
struct QGrid {
  double q_min = -6.0;
  double q_max = 6.0;
  int points = 601;

  std::vector<double> values() const;
  double spacing() const { return (q_max - q_min) / (points - 1); }
};

struct PositionProjections {
  std::vector<double> grid;
  std::vector<std::complex<double>> plus_z;   // <q|<+z|psi>
  std::vector<std::complex<double>> minus_z;  // <q|<-z|psi>

  /// Components along |+x>, |-x> = (|+z> +/- |-z>)/sqrt(2).
  PositionProjections rotated_to_x() const;
  std::vector<double> density() const;
};

/// Oscillator wavefunction projected on each sigma_z qubit state. Rejects
/// states whose norm differs from 1 by more than 1e-6.
PositionProjections position_projections(const JointState& state, const QGrid& grid);

/// Same, reusing precomputed oscillator eigenfunctions (rows = levels,
/// columns = grid points) for repeated evaluation on one grid.
PositionProjections position_projections(const JointState& state, std::span<const double> grid,
                                         const Eigen::MatrixXd& ho_table);

double trapezoid(std::span<const double> values, double spacing);

}  // namespace rabi
