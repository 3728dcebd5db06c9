#include "rabi/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace rabi {

namespace {

void require_nonnegative(int n, const char* what) {
  if (n < 0) throw std::invalid_argument(std::string(what) + " must be >= 0");
}

// Rescale threshold for the oscillator recurrence. Values are pulled back
// toward 1 whenever they pass this bound; the exponent is tracked in log_scale.
constexpr double kRescale = 1e150;

}  // namespace

double laguerre(int n, double x) { return assoc_laguerre(n, 0, x); }

double assoc_laguerre(int n, int k, double x) {
  require_nonnegative(n, "laguerre degree");
  require_nonnegative(k, "laguerre order");
  if (n == 0) return 1.0;
  double prev = 1.0;
  double cur = 1.0 + k - x;
  for (int j = 1; j < n; ++j) {
    double next = ((2.0 * j + 1.0 + k - x) * cur - (j + k) * prev) / (j + 1.0);
    prev = cur;
    cur = next;
  }
  return cur;
}

double ho_wavefunction(int n, double q) {
  require_nonnegative(n, "oscillator level");
  // Standard eigenfunctions phi_n(x) with x = sqrt(2) q~; the density per
  // unit q~ picks up a factor sqrt(2), hence 2^{1/4} on the amplitude.
  const double x = std::numbers::sqrt2 * q;
  const double log_phi0 = -0.5 * x * x - 0.25 * std::log(std::numbers::pi) +
                          0.25 * std::log(2.0);
  double prev = 0.0;
  double cur = 1.0;
  double log_scale = log_phi0;
  for (int j = 0; j < n; ++j) {
    double next = std::sqrt(2.0 / (j + 1)) * x * cur - std::sqrt(double(j) / (j + 1)) * prev;
    prev = cur;
    cur = next;
    if (std::abs(cur) > kRescale) {
      prev /= kRescale;
      cur /= kRescale;
      log_scale += std::log(kRescale);
    }
  }
  if (cur == 0.0) return 0.0;
  const double sign = cur < 0 ? -1.0 : 1.0;
  return sign * std::exp(std::log(std::abs(cur)) + log_scale);
}

Eigen::MatrixXd ho_wavefunctions(int n_count, std::span<const double> grid) {
  require_nonnegative(n_count, "level count");
  const auto points = static_cast<Eigen::Index>(grid.size());
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(n_count, points);
  std::vector<double> raw(static_cast<std::size_t>(n_count));
  for (Eigen::Index p = 0; p < points; ++p) {
    const double x = std::numbers::sqrt2 * grid[static_cast<std::size_t>(p)];
    const double log_phi0 = -0.5 * x * x - 0.25 * std::log(std::numbers::pi) +
                            0.25 * std::log(2.0);
    // Run the recurrence with a shared running scale; rescaling multiplies
    // every stored value so far by the same factor.
    double prev = 0.0;
    double cur = 1.0;
    double log_scale = log_phi0;
    for (int j = 0; j < n_count; ++j) {
      if (cur == 0.0) {
        out(j, p) = 0.0;
      } else {
        const double mag = std::log(std::abs(cur)) + log_scale;
        out(j, p) = (cur < 0 ? -1.0 : 1.0) * (mag < -745.0 ? 0.0 : std::exp(mag));
      }
      double next = std::sqrt(2.0 / (j + 1)) * x * cur - std::sqrt(double(j) / (j + 1)) * prev;
      prev = cur;
      cur = next;
      if (std::abs(cur) > kRescale) {
        prev /= kRescale;
        cur /= kRescale;
        log_scale += std::log(kRescale);
      }
    }
  }
  return out;
}

double displaced_overlap(int n, double alpha) {
  require_nonnegative(n, "N");
  const double a2 = alpha * alpha;
  return std::exp(-2.0 * a2) * laguerre(n, 4.0 * a2);
}

namespace {

// <row|D(beta)|col> for real beta.
double displacement_element(int row, int col, double beta) {
  const double b2 = beta * beta;
  const int lo = std::min(row, col);
  const int gap = std::abs(row - col);
  const double poly = assoc_laguerre(lo, gap, b2);
  if (gap == 0) return std::exp(-0.5 * b2) * poly;
  if (beta == 0.0 || poly == 0.0) return 0.0;
  // beta^{row-col} above the diagonal, (-beta)^{col-row} below
  double sign = (beta < 0 && gap % 2 == 1) ? -1.0 : 1.0;
  if (row < col && gap % 2 == 1) sign = -sign;
  const double log_mag = 0.5 * (std::lgamma(lo + 1.0) - std::lgamma(lo + gap + 1.0)) +
                         gap * std::log(std::abs(beta)) - 0.5 * b2;
  return sign * std::exp(log_mag) * poly;
}

}  // namespace

double displaced_cross_overlap(int m, int n, double alpha) {
  require_nonnegative(m, "M");
  require_nonnegative(n, "N");
  // <N|D(2 alpha)|M>
  return displacement_element(n, m, 2.0 * alpha);
}

std::vector<double> displaced_fock_coefficients(double alpha, int n, int n_max) {
  require_nonnegative(n, "N");
  if (n_max < 1) throw std::invalid_argument("n_max must be >= 1");
  std::vector<double> c(static_cast<std::size_t>(n_max));
  for (int m = 0; m < n_max; ++m) c[static_cast<std::size_t>(m)] = displacement_element(m, n, alpha);
  return c;
}

}  // namespace rabi
