#pragma once

#include <span>
#include <vector>

#include <Eigen/Dense>

// Special functions and harmonic-oscillator primitives.
//
// Position is the dimensionless coordinate q~ = sqrt(m omega0 / 2 hbar) q,
// in which the coherent state |alpha> (alpha real) has its density peak at
// q~ = alpha and the vacuum wavefunction is (2/pi)^{1/4} exp(-q~^2).

namespace rabi {

/// Laguerre polynomial L_n(x) by upward three-term recurrence.
double laguerre(int n, double x);

/// Associated Laguerre polynomial L_n^{(k)}(x), k >= 0, by upward recurrence.
double assoc_laguerre(int n, int k, double x);

/// n-th oscillator eigenfunction in q~, normalized to unit integral over q~.
/// The recurrence runs on rescaled values with the exponent tracked
/// separately, so large n does not overflow.
double ho_wavefunction(int n, double q);

/// All eigenfunctions 0..n_count-1 sampled on `grid`; row n holds psi_n.
Eigen::MatrixXd ho_wavefunctions(int n_count, std::span<const double> grid);

/// <-alpha,N|alpha,N> = exp(-2 alpha^2) L_N(4 alpha^2).
double displaced_overlap(int n, double alpha);

/// <-alpha,N|alpha,M> = <N|D[2 alpha]|M> for real alpha.
double displaced_cross_overlap(int m, int n, double alpha);

/// Fock coefficients <m|D[alpha]|N>, m = 0..n_max-1, for real alpha.
/// Built from |alpha,N+1> = (a^dag - alpha)|alpha,N> / sqrt(N+1) starting
/// at the coherent state; no entry depends on levels beyond n_max.
std::vector<double> displaced_fock_coefficients(double alpha, int n, int n_max);

}  // namespace rabi
