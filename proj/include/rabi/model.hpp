#pragma once

#include <complex>

#include <Eigen/Dense>

// Truncated Rabi Hamiltonian
//
//   H = (Omega/2) sigma_x + omega0 a^dag a + lambda sigma_z (a^dag + a)
//
// in units hbar = omega0 = 1. No constant shift is applied, so energies are
// those of the Hamiltonian exactly as written above.
//
// Product basis ordering: index 2n is |n,+z>, index 2n+1 is |n,-z>.

namespace rabi {

struct ModelParams {
  double omega_q = 0.0;   // qubit splitting Omega, units of omega0
  double coupling = 0.0;  // lambda, units of omega0

  void validate() const;
};

struct BasisSpec {
  int n_max = 0;  // Fock levels |0> ... |n_max-1>

  Eigen::Index dimension() const { return 2 * static_cast<Eigen::Index>(n_max); }
  static Eigen::Index index(int n, int qubit) { return 2 * static_cast<Eigen::Index>(n) + qubit; }

  friend bool operator==(const BasisSpec&, const BasisSpec&) = default;
};

inline constexpr int kPlusZ = 0;
inline constexpr int kMinusZ = 1;

/// Default truncation adequate for Omega <= 5, lambda <= 2.5.
inline constexpr int kDefaultNMax = 120;

struct HamiltonianMatrix {
  Eigen::MatrixXd entries;
  BasisSpec basis;
};

/// Complex amplitudes over the product basis.
struct JointState {
  Eigen::VectorXcd coefficients;
  BasisSpec basis;

  double norm() const { return coefficients.norm(); }
};

HamiltonianMatrix build_hamiltonian(const ModelParams& params, const BasisSpec& basis);

/// Parity exp[i pi (a^dag a + sigma_x/2 - 1/2)] = (-1)^n (x) sigma_x, which in
/// the sigma_z basis maps |n,+z> -> (-1)^n |n,-z> and vice versa.
Eigen::MatrixXd parity_matrix(const BasisSpec& basis);

/// Applies the parity operator without forming the matrix.
Eigen::VectorXcd apply_parity(const JointState& state);

/// Probability carried by the two highest Fock levels.
double boundary_occupation(const Eigen::Ref<const Eigen::VectorXcd>& coefficients,
                           const BasisSpec& basis);

/// <psi|H|psi> for a normalized state.
double energy_expectation(const HamiltonianMatrix& h, const JointState& state);

}  // namespace rabi
