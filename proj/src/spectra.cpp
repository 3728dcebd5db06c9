#include "rabi/spectra.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "rabi/errors.hpp"
#include "rabi/specfun.hpp"

namespace rabi {

JointState SpectralResult::state(Eigen::Index k) const {
  if (k < 0 || k >= size()) throw std::out_of_range("eigenstate index out of range");
  return {eigenvectors.col(k).cast<std::complex<double>>(), basis};
}

namespace {

// Rotates each near-degenerate cluster of columns into parity eigenstates
// and records the parity label of every column.
void label_parities(SpectralResult& result) {
  const Eigen::MatrixXd parity = parity_matrix(result.basis);
  const Eigen::Index dim = result.size();
  result.parities.assign(static_cast<std::size_t>(dim), 0);

  Eigen::Index start = 0;
  while (start < dim) {
    Eigen::Index stop = start + 1;
    while (stop < dim &&
           std::abs(result.eigenvalues(stop) - result.eigenvalues(stop - 1)) <
               kDegeneracyTol * std::max(1.0, std::abs(result.eigenvalues(stop))))
      ++stop;
    const Eigen::Index width = stop - start;
    auto block = result.eigenvectors.middleCols(start, width);
    if (width > 1) {
      const Eigen::MatrixXd projected = block.transpose() * parity * block;
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> rot(projected);
      const Eigen::MatrixXd rotated = block * rot.eigenvectors();
      block = rotated;
    }
    for (Eigen::Index k = start; k < stop; ++k) {
      const double p = result.eigenvectors.col(k).dot(parity * result.eigenvectors.col(k));
      result.parities[static_cast<std::size_t>(k)] = p >= 0.0 ? 1 : -1;
    }
    start = stop;
  }
}

}  // namespace

SpectralResult diagonalize(const HamiltonianMatrix& h) {
  if (h.entries.rows() != h.basis.dimension() || h.entries.cols() != h.basis.dimension())
    throw std::invalid_argument("Hamiltonian shape does not match its basis");

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h.entries, Eigen::ComputeEigenvectors);
  if (solver.info() != Eigen::Success)
    throw NumericError("symmetric eigensolver failed to converge (dimension " +
                       std::to_string(h.entries.rows()) + ")");

  SpectralResult result;
  result.eigenvalues = solver.eigenvalues();
  result.eigenvectors = solver.eigenvectors();
  result.basis = h.basis;
  label_parities(result);

  const Eigen::Index dim = result.size();
  const Eigen::Index top = std::min<Eigen::Index>(4, dim);
  result.boundary.resize(static_cast<std::size_t>(dim));
  for (Eigen::Index k = 0; k < dim; ++k)
    result.boundary[static_cast<std::size_t>(k)] = result.eigenvectors.col(k).tail(top).squaredNorm();
  return result;
}

SpectralResult converged_spectrum(const ModelParams& params, int k, double tol,
                                  const ConvergenceOptions& options) {
  params.validate();
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  if (!(tol > 0.0)) throw std::invalid_argument("tol must be positive");
  if (options.initial_n_max < 2 || options.initial_n_max > options.cap_n_max)
    throw std::invalid_argument("initial n_max must lie in [2, cap]");

  int n_max = options.initial_n_max;
  while (BasisSpec{n_max}.dimension() < k) n_max *= 2;
  SpectralResult previous = diagonalize(build_hamiltonian(params, {n_max}));
  if (std::isinf(tol)) {
    previous.converged = true;
    return previous;
  }

  int first_bad = -1;
  double worst_shift = 0.0;
  while (true) {
    const int next_n = n_max * 2;
    if (next_n > options.cap_n_max) {
      std::ostringstream msg;
      msg << "spectrum not converged within n_max cap " << options.cap_n_max;
      if (first_bad >= 0)
        msg << ": level " << first_bad << " still shifted by " << worst_shift << " at n_max " << n_max;
      throw NumericError(msg.str());
    }
    SpectralResult current = diagonalize(build_hamiltonian(params, {next_n}));
    first_bad = -1;
    for (int i = 0; i < k; ++i) {
      const double shift = std::abs(current.eigenvalues(i) - previous.eigenvalues(i));
      if (!(shift < tol) || current.boundary[static_cast<std::size_t>(i)] >= kBoundaryTol) {
        first_bad = i;
        worst_shift = shift;
        break;
      }
    }
    if (first_bad < 0) {
      current.converged = true;
      return current;
    }
    previous = std::move(current);
    n_max = next_n;
  }
}

std::vector<double> QGrid::values() const {
  if (points < 2 || !(q_max > q_min)) throw std::invalid_argument("grid needs points >= 2 and q_max > q_min");
  std::vector<double> out(static_cast<std::size_t>(points));
  const double h = spacing();
  for (int i = 0; i < points; ++i) out[static_cast<std::size_t>(i)] = q_min + h * i;
  return out;
}

PositionProjections PositionProjections::rotated_to_x() const {
  PositionProjections out;
  out.grid = grid;
  out.plus_z.resize(plus_z.size());
  out.minus_z.resize(minus_z.size());
  const double r = 1.0 / std::sqrt(2.0);
  for (std::size_t i = 0; i < plus_z.size(); ++i) {
    out.plus_z[i] = r * (plus_z[i] + minus_z[i]);
    out.minus_z[i] = r * (plus_z[i] - minus_z[i]);
  }
  return out;
}

std::vector<double> PositionProjections::density() const {
  std::vector<double> rho(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) rho[i] = std::norm(plus_z[i]) + std::norm(minus_z[i]);
  return rho;
}

PositionProjections position_projections(const JointState& state, const QGrid& grid) {
  const std::vector<double> q = grid.values();
  return position_projections(state, q, ho_wavefunctions(state.basis.n_max, q));
}

PositionProjections position_projections(const JointState& state, std::span<const double> grid,
                                         const Eigen::MatrixXd& ho_table) {
  if (std::abs(state.norm() - 1.0) > 1e-6)
    throw std::invalid_argument("state is not normalized (norm " + std::to_string(state.norm()) + ")");
  if (ho_table.rows() < state.basis.n_max || ho_table.cols() != static_cast<Eigen::Index>(grid.size()))
    throw std::invalid_argument("oscillator table does not match basis and grid");

  const int n_max = state.basis.n_max;
  Eigen::VectorXcd up(n_max), down(n_max);
  for (int n = 0; n < n_max; ++n) {
    up(n) = state.coefficients(BasisSpec::index(n, kPlusZ));
    down(n) = state.coefficients(BasisSpec::index(n, kMinusZ));
  }
  const auto table_t = ho_table.topRows(n_max).transpose();
  const auto project = [&](const Eigen::VectorXcd& amps) {
    const Eigen::VectorXd re = table_t * amps.real();
    const Eigen::VectorXd im = table_t * amps.imag();
    std::vector<std::complex<double>> values(static_cast<std::size_t>(re.size()));
    for (Eigen::Index i = 0; i < re.size(); ++i) values[static_cast<std::size_t>(i)] = {re(i), im(i)};
    return values;
  };

  PositionProjections out;
  out.grid.assign(grid.begin(), grid.end());
  out.plus_z = project(up);
  out.minus_z = project(down);
  return out;
}

double trapezoid(std::span<const double> values, double spacing) {
  if (values.size() < 2) return 0.0;
  double sum = 0.5 * (values.front() + values.back());
  for (std::size_t i = 1; i + 1 < values.size(); ++i) sum += values[i];
  return sum * spacing;
}

}  // namespace rabi
