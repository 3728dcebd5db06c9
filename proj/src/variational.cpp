#include "rabi/variational.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "rabi/errors.hpp"
#include "rabi/specfun.hpp"

namespace rabi {

VariationalSolution variational_params(const ModelParams& params) {
  params.validate();
  const double four_lambda2 = 4.0 * params.coupling * params.coupling;
  if (!(four_lambda2 > params.omega_q)) {
    std::ostringstream msg;
    msg << "single-minimum regime: epsilon = Omega/(4 lambda^2) ";
    if (four_lambda2 > 0.0)
      msg << "= " << params.omega_q / four_lambda2 << " >= 1";
    else
      msg << "is infinite";
    msg << "; the only minimum is alpha = 0, theta = pi";
    throw RegimeError(msg.str());
  }
  VariationalSolution sol;
  sol.epsilon = params.omega_q / four_lambda2;
  sol.theta0 = std::acos(-sol.epsilon);
  sol.alpha0 = -params.coupling * std::sqrt(1.0 - sol.epsilon * sol.epsilon);
  return sol;
}

double mean_energy(double alpha, double theta, const ModelParams& params) {
  return 0.5 * params.omega_q * std::cos(theta) + 2.0 * params.coupling * alpha * std::sin(theta) +
         alpha * alpha;
}

double minimum_mean_energy(const ModelParams& params) {
  const auto sol = variational_params(params);
  return -params.coupling * params.coupling * (1.0 + sol.epsilon * sol.epsilon);
}

double overlap_factor(const VariationalSolution& sol, int n) {
  return displaced_overlap(n, sol.alpha0);
}

double doublet_normalization(const VariationalSolution& sol, int n, DoubletSign sign) {
  return std::sqrt(1.0 - to_int(sign) * sol.epsilon * overlap_factor(sol, n));
}

DoubletEnergies doublet_energies(const ModelParams& params, int n, bool simplified) {
  if (n < 0) throw std::invalid_argument("N must be >= 0");
  const auto sol = variational_params(params);
  const double eps = sol.epsilon;
  const double overlap = overlap_factor(sol, n);
  const double half_omega = 0.5 * params.omega_q;
  const double base = n - params.coupling * params.coupling * (1.0 - eps * eps);

  DoubletEnergies out;
  if (simplified) {
    const double shift = half_omega * (1.0 - eps * eps) * overlap;
    out.minus = -half_omega * eps + base - shift;
    out.plus = -half_omega * eps + base + shift;
  } else {
    out.minus = -half_omega * (eps + overlap) / (1.0 + eps * overlap) + base;
    out.plus = -half_omega * (eps - overlap) / (1.0 - eps * overlap) + base;
  }
  return out;
}

std::vector<DoubletRow> doublet_table(const ModelParams& params, int count) {
  const auto sol = variational_params(params);
  std::vector<DoubletRow> rows;
  rows.reserve(static_cast<std::size_t>(std::max(count, 0)));
  for (int n = 0; n < count; ++n) {
    rows.push_back({n, doublet_energies(params, n),
                    doublet_normalization(sol, n, DoubletSign::Minus),
                    doublet_normalization(sol, n, DoubletSign::Plus)});
  }
  return rows;
}

double tunneling_splitting(const ModelParams& params) {
  const auto sol = variational_params(params);
  const double eps2 = sol.epsilon * sol.epsilon;
  const double a2 = sol.alpha0 * sol.alpha0;
  return params.omega_q * (1.0 - eps2) * std::exp(-2.0 * a2) / (1.0 - eps2 * std::exp(-4.0 * a2));
}

double tunneling_splitting_leading(const ModelParams& params) {
  const auto sol = variational_params(params);
  const double eps2 = sol.epsilon * sol.epsilon;
  return params.omega_q * (1.0 - eps2) * std::exp(-2.0 * sol.alpha0 * sol.alpha0);
}

JointState displaced_joint_state(const ModelParams& params, int n, Side side,
                                 const BasisSpec& basis, double tail_tol) {
  if (basis.n_max < 2) throw std::invalid_argument("n_max must be >= 2");
  const auto sol = variational_params(params);
  const double alpha = side == Side::Left ? sol.alpha0 : -sol.alpha0;
  const std::vector<double> osc = displaced_fock_coefficients(alpha, n, basis.n_max);

  double kept = 0.0;
  for (double c : osc) kept += c * c;
  const double tail = std::max(0.0, 1.0 - kept);
  if (tail > tail_tol) {
    std::ostringstream msg;
    msg << "n_max = " << basis.n_max << " truncates D[" << alpha << "]|" << n
        << ">: tail mass " << tail << " exceeds " << tail_tol;
    throw TruncationError(msg.str(), tail);
  }

  // cos(t/2)|+x> +/- sin(t/2)|-x> in the sigma_z basis; the right state
  // carries the sign flip on |-x>.
  const double c = std::cos(0.5 * sol.theta0);
  const double s = std::sin(0.5 * sol.theta0);
  const double r = 1.0 / std::sqrt(2.0);
  const double up = side == Side::Left ? r * (c + s) : r * (c - s);
  const double down = side == Side::Left ? r * (c - s) : r * (c + s);

  JointState state{Eigen::VectorXcd::Zero(basis.dimension()), basis};
  for (int m = 0; m < basis.n_max; ++m) {
    state.coefficients(BasisSpec::index(m, kPlusZ)) = osc[static_cast<std::size_t>(m)] * up;
    state.coefficients(BasisSpec::index(m, kMinusZ)) = osc[static_cast<std::size_t>(m)] * down;
  }
  return state;
}

JointState parity_doublet_state(const ModelParams& params, int n, DoubletSign sign,
                                const BasisSpec& basis, double tail_tol) {
  const auto sol = variational_params(params);
  const JointState left = displaced_joint_state(params, n, Side::Left, basis, tail_tol);
  const JointState right = displaced_joint_state(params, n, Side::Right, basis, tail_tol);
  const double norm = doublet_normalization(sol, n, sign);
  JointState out{(left.coefficients + double(to_int(sign)) * right.coefficients) /
                     (std::sqrt(2.0) * norm),
                 basis};
  return out;
}

double fidelity(const JointState& a, const JointState& b) {
  if (!(a.basis == b.basis)) throw std::invalid_argument("fidelity: states live on different bases");
  return std::abs(a.coefficients.dot(b.coefficients));
}

}  // namespace rabi
