#include "rabi/model.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace rabi {

void ModelParams::validate() const {
  if (!(omega_q > 0.0) || !std::isfinite(omega_q))
    throw std::invalid_argument("omega_q must be positive and finite, got " + std::to_string(omega_q));
  if (!(coupling >= 0.0) || !std::isfinite(coupling))
    throw std::invalid_argument("coupling must be non-negative and finite, got " +
                                std::to_string(coupling));
}

HamiltonianMatrix build_hamiltonian(const ModelParams& params, const BasisSpec& basis) {
  params.validate();
  if (basis.n_max < 2)
    throw std::invalid_argument("n_max must be >= 2, got " + std::to_string(basis.n_max));

  const Eigen::Index dim = basis.dimension();
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(dim, dim);
  const double half_omega = 0.5 * params.omega_q;
  for (int n = 0; n < basis.n_max; ++n) {
    const auto up = BasisSpec::index(n, kPlusZ);
    const auto down = BasisSpec::index(n, kMinusZ);
    h(up, up) = n;
    h(down, down) = n;
    h(up, down) = half_omega;
    h(down, up) = half_omega;
    if (n + 1 < basis.n_max) {
      const double g = params.coupling * std::sqrt(n + 1.0);
      const auto up1 = BasisSpec::index(n + 1, kPlusZ);
      const auto down1 = BasisSpec::index(n + 1, kMinusZ);
      h(up, up1) = g;
      h(up1, up) = g;
      h(down, down1) = -g;
      h(down1, down) = -g;
    }
  }
  return {std::move(h), basis};
}

Eigen::MatrixXd parity_matrix(const BasisSpec& basis) {
  const Eigen::Index dim = basis.dimension();
  Eigen::MatrixXd p = Eigen::MatrixXd::Zero(dim, dim);
  for (int n = 0; n < basis.n_max; ++n) {
    const double s = (n % 2 == 0) ? 1.0 : -1.0;
    const auto up = BasisSpec::index(n, kPlusZ);
    const auto down = BasisSpec::index(n, kMinusZ);
    p(up, down) = s;
    p(down, up) = s;
  }
  return p;
}

Eigen::VectorXcd apply_parity(const JointState& state) {
  Eigen::VectorXcd out(state.coefficients.size());
  for (int n = 0; n < state.basis.n_max; ++n) {
    const double s = (n % 2 == 0) ? 1.0 : -1.0;
    const auto up = BasisSpec::index(n, kPlusZ);
    const auto down = BasisSpec::index(n, kMinusZ);
    out(up) = s * state.coefficients(down);
    out(down) = s * state.coefficients(up);
  }
  return out;
}

double boundary_occupation(const Eigen::Ref<const Eigen::VectorXcd>& coefficients,
                           const BasisSpec& basis) {
  const Eigen::Index dim = basis.dimension();
  const Eigen::Index top = std::min<Eigen::Index>(4, dim);
  return coefficients.tail(top).squaredNorm();
}

double energy_expectation(const HamiltonianMatrix& h, const JointState& state) {
  if (!(h.basis == state.basis)) throw std::invalid_argument("state and Hamiltonian bases differ");
  // Real symmetric H: <psi|H|psi> = re^T H re + im^T H im.
  const Eigen::VectorXd re = state.coefficients.real();
  const Eigen::VectorXd im = state.coefficients.imag();
  return re.dot(h.entries * re) + im.dot(h.entries * im);
}

}  // namespace rabi
