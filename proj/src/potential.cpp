#include "rabi/potential.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace rabi {

double lower_band_at(const ModelParams& params, double q) {
  const double l = params.coupling;
  const double half_omega = 0.5 * params.omega_q;
  return q * q - std::sqrt(4.0 * l * l * q * q + half_omega * half_omega) - 0.5;
}

double lower_band_curvature_at_origin(const ModelParams& params) {
  params.validate();
  return 2.0 - 8.0 * params.coupling * params.coupling / params.omega_q;
}

PotentialCurve lower_band(const ModelParams& params, std::span<const double> grid) {
  params.validate();
  PotentialCurve out;
  out.grid.assign(grid.begin(), grid.end());
  out.values.reserve(grid.size());
  for (double q : grid) out.values.push_back(lower_band_at(params, q));
  out.mask.assign(grid.size(), true);
  return out;
}

PotentialCurve curvature_potential(const DensityProfile& density, double energy, double floor) {
  const auto& rho = density.values;
  const std::size_t n = rho.size();
  if (n < 5 || density.grid.size() != n)
    throw std::invalid_argument("curvature_potential needs at least 5 grid points");
  if (!(floor > 0.0)) throw std::invalid_argument("density floor must be positive");
  if (std::any_of(rho.begin(), rho.end(), [](double r) { return !(r > 0.0); }))
    throw std::invalid_argument("curvature_potential needs strictly positive densities");
  const double h = density.grid[1] - density.grid[0];
  for (std::size_t i = 2; i < n; ++i)
    if (std::abs((density.grid[i] - density.grid[i - 1]) - h) > 1e-9 * std::abs(h) + 1e-12)
      throw std::invalid_argument("curvature_potential needs a uniform grid");

  const double peak = *std::max_element(rho.begin(), rho.end());
  PotentialCurve out;
  out.grid = density.grid;
  out.values.assign(n, std::numeric_limits<double>::quiet_NaN());
  out.mask.assign(n, false);
  for (std::size_t i = 2; i + 2 < n; ++i) {
    const double d1 = (-rho[i + 2] + 8.0 * rho[i + 1] - 8.0 * rho[i - 1] + rho[i - 2]) / (12.0 * h);
    const double d2 = (-rho[i + 2] + 16.0 * rho[i + 1] - 30.0 * rho[i] + 16.0 * rho[i - 1] - rho[i - 2]) /
                      (12.0 * h * h);
    const double log_d = d1 / (2.0 * rho[i]);
    out.values[i] = 0.25 * (d2 / (2.0 * rho[i]) - log_d * log_d) + energy;
    out.mask[i] = rho[i] >= floor * peak;
  }
  return out;
}

double density_curvature_at_origin(const DensityProfile& density) {
  const auto& g = density.grid;
  const auto& rho = density.values;
  if (g.size() < 5) throw std::invalid_argument("need at least 5 grid points");
  std::size_t i = 0;
  for (std::size_t j = 1; j < g.size(); ++j)
    if (std::abs(g[j]) < std::abs(g[i])) i = j;
  if (i < 2 || i + 2 >= g.size()) throw std::invalid_argument("origin too close to the grid edge");
  const double h = g[1] - g[0];
  return (-rho[i + 2] + 16.0 * rho[i + 1] - 30.0 * rho[i] + 16.0 * rho[i - 1] - rho[i - 2]) / (12.0 * h * h);
}

BarrierStats barrier_stats(const ModelParams& params) {
  const auto sol = variational_params(params);
  const double l2 = params.coupling * params.coupling;
  BarrierStats out;
  out.minima_location = std::abs(sol.alpha0);
  out.minimum_value = -l2 * (1.0 + sol.epsilon * sol.epsilon) - 0.5;
  out.barrier_value = -0.5 * (params.omega_q + 1.0);
  out.barrier_height = l2 * (1.0 + sol.epsilon * sol.epsilon) - 0.5 * params.omega_q;
  return out;
}

BarrierGap variational_barrier_gap(const ModelParams& params, DoubletSign sign) {
  const auto sol = variational_params(params);
  const int s = to_int(sign);
  const double l2 = params.coupling * params.coupling;
  BarrierGap out;
  out.exact = 0.5 * (4.0 * sol.alpha0 * sol.alpha0 / (1.0 - s * sol.epsilon) - 1.0);
  out.small_eps = 2.0 * l2 - 0.5 + s * 0.5 * params.omega_q;
  out.bound_state = 2.0 * params.coupling > std::sqrt(1.0 + params.omega_q);
  return out;
}

double doublet_overlap_lhs(int n) {
  if (n < 1) throw std::invalid_argument("doublets are numbered from 1");
  const double nn = n;
  return 2.0 * nn - 1.0 + 2.0 * std::sqrt(2.0 * nn * nn - 2.0 * nn + 1.0);
}

DoubletCounts doublet_counts(const ModelParams& params) {
  const auto sol = variational_params(params);
  const double l2 = params.coupling * params.coupling;
  const double eps2 = sol.epsilon * sol.epsilon;
  const double four_alpha2 = 4.0 * sol.alpha0 * sol.alpha0;

  DoubletCounts out;
  out.energy_bound = l2 * (1.0 + eps2) - 0.5 * params.omega_q + 0.5;
  // The left-hand side grows with N, so count until it first reaches 4 alpha0^2.
  int count = 0;
  while (doublet_overlap_lhs(count + 1) < four_alpha2) ++count;
  out.overlap_count = count;
  out.large_n_bound = 0.83 * l2 * (1.0 - eps2) + 0.5;
  return out;
}

int count_split_doublets(const SpectralResult& spectrum, double max_splitting) {
  int count = 0;
  for (Eigen::Index k = 0; k + 1 < spectrum.size(); k += 2) {
    const double split = spectrum.eigenvalues(k + 1) - spectrum.eigenvalues(k);
    const bool opposite = spectrum.parities[static_cast<std::size_t>(k)] !=
                          spectrum.parities[static_cast<std::size_t>(k + 1)];
    if (!(opposite && split < max_splitting)) break;
    ++count;
  }
  return count;
}

int count_doublets_below(const SpectralResult& spectrum, double barrier) {
  int count = 0;
  for (Eigen::Index k = 0; k + 1 < spectrum.size(); k += 2) {
    if (!(spectrum.eigenvalues(k + 1) < barrier)) break;
    ++count;
  }
  return count;
}

}  // namespace rabi
