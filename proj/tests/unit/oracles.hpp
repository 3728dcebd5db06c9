#pragma once

#include <algorithm>
#include <cmath>
#include <utility>
#include <vector>

#include <Eigen/Eigenvalues>

// Reference computations that share no code with the library: matrix
// elements of the displacement operator from the standard-library
// associated Laguerre functions, and the parity-sector tridiagonal form of
// the Hamiltonian.

namespace oracle {

// <m|D[beta]|n> for real beta.
inline double displacement_element(int m, int n, double beta) {
  const bool upper = m >= n;
  const int lo = upper ? n : m;
  const int hi = upper ? m : n;
  const double b = upper ? beta : -beta;
  if (b == 0.0) return m == n ? 1.0 : 0.0;
  const double log_mag = 0.5 * (std::lgamma(lo + 1.0) - std::lgamma(hi + 1.0)) +
                         (hi - lo) * std::log(std::abs(b)) - 0.5 * b * b;
  const double sign = (b < 0.0 && (hi - lo) % 2 == 1) ? -1.0 : 1.0;
  return sign * std::exp(log_mag) *
         std::assoc_laguerre(static_cast<unsigned>(lo), static_cast<unsigned>(hi - lo), b * b);
}

// <-alpha,N|alpha,M> as a sum over Fock states.
inline double fock_sum_overlap(int n, int m, double alpha, int terms = 260) {
  double sum = 0.0;
  for (int k = 0; k < terms; ++k)
    sum += displacement_element(k, n, -alpha) * displacement_element(k, m, alpha);
  return sum;
}

// Eigenvalues of the sector with parity p: basis |n> (x) (|+z> + p(-1)^n |-z>)/sqrt2,
// diagonal n + p(-1)^n Omega/2, off-diagonal lambda sqrt(n+1).
inline Eigen::VectorXd sector_eigenvalues(double omega, double lambda, int n_max, int p) {
  Eigen::VectorXd diag(n_max), sub(n_max - 1);
  for (int n = 0; n < n_max; ++n) diag(n) = n + p * (n % 2 == 0 ? 1.0 : -1.0) * omega / 2.0;
  for (int n = 0; n + 1 < n_max; ++n) sub(n) = lambda * std::sqrt(n + 1.0);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
  es.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}

// Lowest `count` levels of both sectors merged, with their parities.
inline std::vector<std::pair<double, int>> labelled_levels(double omega, double lambda, int n_max,
                                                           int count) {
  std::vector<std::pair<double, int>> all;
  for (int p : {+1, -1}) {
    const Eigen::VectorXd e = sector_eigenvalues(omega, lambda, n_max, p);
    for (Eigen::Index i = 0; i < e.size(); ++i) all.emplace_back(e(i), p);
  }
  std::sort(all.begin(), all.end());
  all.resize(static_cast<std::size_t>(count));
  return all;
}

inline double trapezoid(const std::vector<double>& y, double h) {
  double s = 0.0;
  for (std::size_t i = 0; i + 1 < y.size(); ++i) s += 0.5 * (y[i] + y[i + 1]) * h;
  return s;
}

}  // namespace oracle
