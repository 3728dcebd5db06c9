#pragma once

#include <span>
#include <vector>

#include "rabi/dynamics.hpp"
#include "rabi/model.hpp"
#include "rabi/spectra.hpp"
#include "rabi/variational.hpp"

// Effective double-well pictures of the oscillator motion.
//
// lower_band: the semiclassical lower energy band obtained by dropping the
// oscillator kinetic term and diagonalizing the remaining 2x2 problem at
// each position, in q~ units:
//   E_b(q~) = q~^2 - sqrt(4 lambda^2 q~^2 + Omega^2/4) - 1/2.
//
// curvature_potential: inverts the one-dimensional Schrodinger equation for
// a stationary density rho = psi^2,
//   V(q~) = (1/4)[rho''/(2 rho) - (rho'/(2 rho))^2] + E,
// which is only meaningful away from near-nodes of rho.

namespace rabi {

struct PotentialCurve {
  std::vector<double> grid;
  std::vector<double> values;  // NaN where no value could be formed
  std::vector<bool> mask;      // true where the value is trustworthy
};

struct BarrierStats {
  double minima_location = 0.0;  // |alpha0|; minima sit at +/- this q~
  double minimum_value = 0.0;
  double barrier_value = 0.0;
  double barrier_height = 0.0;
};

struct BarrierGap {
  double exact = 0.0;      // (1/2)(4 alpha0^2 / (1 -/+ eps) - 1)
  double small_eps = 0.0;  // 2 lambda^2 - 1/2 +/- Omega/2
  bool bound_state = false;  // 2 lambda > sqrt(1 + Omega)
};

struct DoubletCounts {
  double energy_bound = 0.0;
  int overlap_count = 0;
  double large_n_bound = 0.0;
};

inline constexpr double kDefaultDensityFloor = 1e-4;

PotentialCurve lower_band(const ModelParams& params, std::span<const double> grid);
double lower_band_at(const ModelParams& params, double q);
double lower_band_curvature_at_origin(const ModelParams& params);

/// Five-point central differences; the two points at each end and points
/// with rho < floor * max(rho) are masked. Throws std::invalid_argument for
/// fewer than five points, a non-uniform grid or non-positive densities.
PotentialCurve curvature_potential(const DensityProfile& density, double energy,
                                   double floor = kDefaultDensityFloor);

/// Second derivative of the density at the grid point nearest q~ = 0.
double density_curvature_at_origin(const DensityProfile& density);

BarrierStats barrier_stats(const ModelParams& params);

/// Order-of-magnitude estimate of V(0) - E_{+/-,0} from the variational
/// doublet densities.
BarrierGap variational_barrier_gap(const ModelParams& params, DoubletSign sign);

/// 2N - 1 + 2 sqrt(2N^2 - 2N + 1): mean plus two standard deviations of the
/// distribution e^{-x} L_{N-1}(x)^2, doublets numbered from 1.
double doublet_overlap_lhs(int n);

DoubletCounts doublet_counts(const ModelParams& params);

/// Number of level pairs (0,1), (2,3), ... counted from the bottom while the
/// pair has opposite parities and splits by less than `max_splitting`.
int count_split_doublets(const SpectralResult& spectrum, double max_splitting);

/// Number of level pairs (0,1), (2,3), ... whose both members lie below
/// `barrier`.
int count_doublets_below(const SpectralResult& spectrum, double barrier);

}  // namespace rabi
