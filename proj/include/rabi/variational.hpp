#pragma once

#include <vector>

#include "rabi/model.hpp"

// Parity-doublet variational approximation for the slow-oscillator regime.
//
// The trial state |alpha> (x) (cos(theta/2)|+x> + sin(theta/2)|-x>) has mean
// energy (Omega/2) cos theta + 2 lambda alpha sin theta + alpha^2. Above the
// critical coupling (epsilon = Omega / 4 lambda^2 < 1) it has two degenerate
// minima at alpha = +/-alpha0. The branch sin(theta0) >= 0 is used
// throughout, which fixes alpha0 <= 0: the left-displaced minimum.
//
// Displaced number states D[alpha0]|N> built on each minimum give the left
// and right states psi_{N,L}, psi_{N,R}; their even and odd combinations
// Phi_{+/-,N} are parity eigenstates with parity +/-(-1)^N and approximate
// the tunneling doublets of the exact spectrum.

namespace rabi {

struct VariationalSolution {
  double epsilon = 0.0;  // Omega omega0 / 4 lambda^2, in (0, 1)
  double theta0 = 0.0;   // cos(theta0) = -epsilon, theta0 in (pi/2, pi)
  double alpha0 = 0.0;   // -(lambda/omega0) sin(theta0) <= 0
};

enum class Side { Left, Right };
enum class DoubletSign { Minus = -1, Plus = +1 };

inline int to_int(DoubletSign s) { return static_cast<int>(s); }

/// Throws RegimeError when 4 lambda^2 <= Omega (epsilon >= 1): the energy
/// surface then has its single minimum at alpha = 0, theta = pi.
VariationalSolution variational_params(const ModelParams& params);

double mean_energy(double alpha, double theta, const ModelParams& params);

/// -(lambda^2)(1 + epsilon^2), the value at either minimum.
double minimum_mean_energy(const ModelParams& params);

/// e^{-2 alpha0^2} L_N(4 alpha0^2).
double overlap_factor(const VariationalSolution& sol, int n);

/// sqrt(1 -/+ epsilon * overlap): the norm of (psi_L +/- psi_R)/sqrt(2).
double doublet_normalization(const VariationalSolution& sol, int n, DoubletSign sign);

struct DoubletEnergies {
  double minus = 0.0;
  double plus = 0.0;

  double splitting() const { return plus - minus; }
};

/// Energies <Phi_{+/-,N}|H|Phi_{+/-,N}>. With `simplified`, the expression
/// expanded to first order in the overlap factor.
DoubletEnergies doublet_energies(const ModelParams& params, int n, bool simplified = false);

struct DoubletRow {
  int n = 0;
  DoubletEnergies energies;
  double norm_minus = 0.0;
  double norm_plus = 0.0;
};

/// Rows for N = 0 .. count-1.
std::vector<DoubletRow> doublet_table(const ModelParams& params, int count);

/// Ground-doublet splitting
///   Omega (1 - eps^2) e^{-2 alpha0^2} / (1 - eps^2 e^{-4 alpha0^2}).
double tunneling_splitting(const ModelParams& params);

/// Leading-order form Omega (1 - eps^2) e^{-2 alpha0^2}.
double tunneling_splitting_leading(const ModelParams& params);

/// Displaced number state D[+/-alpha0]|N> times the rotated qubit state,
/// expressed in the sigma_z product basis. Throws TruncationError if the
/// displaced state loses more than `tail_tol` of its norm beyond n_max.
JointState displaced_joint_state(const ModelParams& params, int n, Side side,
                                 const BasisSpec& basis, double tail_tol = 1e-8);

/// Normalized parity doublet state Phi_{sign,N}.
JointState parity_doublet_state(const ModelParams& params, int n, DoubletSign sign,
                                const BasisSpec& basis, double tail_tol = 1e-8);

/// |<a|b>|. Rejects states on different bases.
double fidelity(const JointState& a, const JointState& b);

}  // namespace rabi
