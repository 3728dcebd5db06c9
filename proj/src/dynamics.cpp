#include "rabi/dynamics.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "rabi/specfun.hpp"
#include "rabi/variational.hpp"

namespace rabi {

namespace {

void require_normalized(const JointState& state, double tol = 1e-6) {
  if (std::abs(state.norm() - 1.0) > tol)
    throw std::invalid_argument("state is not normalized (norm " + std::to_string(state.norm()) + ")");
}

}  // namespace

JointState initial_left_state(const ModelParams& params, const BasisSpec& basis) {
  return displaced_joint_state(params, 0, Side::Left, basis);
}

BlochVector qubit_observables(const JointState& state) {
  require_normalized(state);
  std::complex<double> cross = 0.0;
  double pop_up = 0.0;
  double pop_down = 0.0;
  for (int n = 0; n < state.basis.n_max; ++n) {
    const auto up = state.coefficients(BasisSpec::index(n, kPlusZ));
    const auto down = state.coefficients(BasisSpec::index(n, kMinusZ));
    cross += std::conj(up) * down;
    pop_up += std::norm(up);
    pop_down += std::norm(down);
  }
  return {2.0 * cross.real(), 2.0 * cross.imag(), pop_up - pop_down};
}

DensityProfile density_profile(const JointState& state, std::span<const double> grid,
                               const Eigen::MatrixXd& ho_table, double spacing) {
  const PositionProjections proj = position_projections(state, grid, ho_table);
  DensityProfile out;
  out.grid = proj.grid;
  out.values = proj.density();
  out.mass = trapezoid(out.values, spacing);
  out.truncated = std::abs(1.0 - out.mass) > kGridMassTol;
  return out;
}

DensityProfile density_profile(const JointState& state, const QGrid& grid) {
  const std::vector<double> q = grid.values();
  return density_profile(state, q, ho_wavefunctions(state.basis.n_max, q), grid.spacing());
}

Trajectory evolve_exact(const JointState& state0, const SpectralResult& spectrum,
                        std::span<const double> times, const QGrid& grid) {
  if (!spectrum.converged) throw std::invalid_argument("evolve_exact needs a converged spectrum");
  if (!(spectrum.basis == state0.basis))
    throw std::invalid_argument("initial state and spectrum live on different bases");
  require_normalized(state0);

  const Eigen::MatrixXd& v = spectrum.eigenvectors;
  const Eigen::VectorXd c_re = v.transpose() * state0.coefficients.real();
  const Eigen::VectorXd c_im = v.transpose() * state0.coefficients.imag();

  const std::vector<double> q = grid.values();
  const Eigen::MatrixXd table = ho_wavefunctions(state0.basis.n_max, q);

  Trajectory traj;
  traj.mode = EvolutionMode::Exact;
  traj.times.assign(times.begin(), times.end());
  for (double t : times) {
    Eigen::VectorXd ph_re(spectrum.size()), ph_im(spectrum.size());
    for (Eigen::Index k = 0; k < spectrum.size(); ++k) {
      const std::complex<double> phase = std::polar(1.0, -spectrum.eigenvalues(k) * t);
      const std::complex<double> ck{c_re(k), c_im(k)};
      const std::complex<double> a = phase * ck;
      ph_re(k) = a.real();
      ph_im(k) = a.imag();
    }
    JointState s{Eigen::VectorXcd(state0.basis.dimension()), state0.basis};
    s.coefficients.real() = v * ph_re;
    s.coefficients.imag() = v * ph_im;
    traj.observables.push_back(qubit_observables(s));
    traj.densities.push_back(density_profile(s, q, table, grid.spacing()));
    traj.states.push_back(std::move(s));
  }
  return traj;
}

Trajectory evolve_approx(const ModelParams& params, std::span<const double> times,
                         const BasisSpec& basis, const QGrid& grid) {
  const auto sol = variational_params(params);
  const DoubletEnergies e = doublet_energies(params, 0);
  const JointState minus = parity_doublet_state(params, 0, DoubletSign::Minus, basis);
  const JointState plus = parity_doublet_state(params, 0, DoubletSign::Plus, basis);
  const double dw = e.splitting();

  const std::vector<double> q = grid.values();
  const Eigen::MatrixXd table = ho_wavefunctions(basis.n_max, q);

  Trajectory traj;
  traj.mode = EvolutionMode::Approximate;
  traj.times.assign(times.begin(), times.end());
  const double r = 1.0 / std::sqrt(2.0);
  for (double t : times) {
    const std::complex<double> a_minus = r * std::polar(1.0, -e.minus * t);
    const std::complex<double> a_plus = r * std::polar(1.0, -e.plus * t);
    JointState s{a_minus * minus.coefficients + a_plus * plus.coefficients, basis};
    traj.doublet_amplitudes.push_back({a_minus, a_plus});
    traj.observables.push_back(qubit_observables(s));
    traj.closed_form.push_back({std::cos(sol.theta0), 0.0, std::sin(sol.theta0) * std::cos(dw * t)});
    traj.densities.push_back(density_profile(s, q, table, grid.spacing()));
    traj.states.push_back(std::move(s));
  }
  return traj;
}

double tunneling_period(const ModelParams& params) {
  return 2.0 * std::numbers::pi / tunneling_splitting(params);
}

std::vector<double> period_fraction_times(std::span<const double> fractions, double period) {
  std::vector<double> out;
  out.reserve(fractions.size());
  for (double f : fractions) out.push_back(f * period);
  return out;
}

double l1_distance(const DensityProfile& a, const DensityProfile& b) {
  if (a.grid.size() != b.grid.size() || a.grid.size() < 2)
    throw std::invalid_argument("density profiles on different grids");
  std::vector<double> diff(a.values.size());
  for (std::size_t i = 0; i < diff.size(); ++i) diff[i] = std::abs(a.values[i] - b.values[i]);
  return trapezoid(diff, a.grid[1] - a.grid[0]);
}

}  // namespace rabi
