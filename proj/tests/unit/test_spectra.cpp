#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <string>

#include <doctest.h>

#include "oracles.hpp"
#include "rabi/errors.hpp"
#include "rabi/specfun.hpp"
#include "rabi/spectra.hpp"
#include "rabi/variational.hpp"

using namespace rabi;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct GoldenRow {
  double exact, approx_full, approx_simplified;
  int parity;
};

std::vector<GoldenRow> load_golden(const std::string& name) {
  std::ifstream in(std::string(RABI_GOLDEN_DIR) + "/" + name);
  REQUIRE(in);
  std::string line;
  std::getline(in, line);
  std::vector<GoldenRow> rows;
  while (std::getline(in, line)) {
    std::stringstream ss(line);
    std::string f[7];
    for (auto& x : f) std::getline(ss, x, ',');
    rows.push_back({std::stod(f[1]), std::stod(f[3]), std::stod(f[4]), std::stoi(f[2])});
  }
  return rows;
}

}  // namespace

TEST_CASE("diagonalize: invariants at the benchmark point") {
  const HamiltonianMatrix h = build_hamiltonian({3.0, 1.3}, {120});
  const SpectralResult r = diagonalize(h);
  REQUIRE(r.size() == 240);
  CHECK_FALSE(r.converged);
  CHECK(r.eigenvalues(0) == doctest::Approx(-2.17).epsilon(0.01 / 2.17));
  CHECK(r.eigenvalues(1) == doctest::Approx(-2.01).epsilon(0.01 / 2.01));

  const Eigen::MatrixXd& v = r.eigenvectors;
  const double residual = (h.entries * v - v * r.eigenvalues.asDiagonal()).colwise().norm().maxCoeff();
  CHECK(residual < 1e-8);
  CHECK((v.transpose() * v - Eigen::MatrixXd::Identity(240, 240)).cwiseAbs().maxCoeff() < 1e-10);

  const Eigen::MatrixXd p = parity_matrix(h.basis);
  double worst = 0.0;
  for (Eigen::Index k = 0; k < r.size(); ++k)
    worst = std::max(worst, (p * v.col(k) - r.parities[k] * v.col(k)).norm());
  CHECK(worst < 1e-6);
  // ground doublet ordering: odd parity below even parity
  CHECK(r.parities[0] == -1);
  CHECK(r.parities[1] == +1);
}

TEST_CASE("diagonalize agrees with the parity-sector tridiagonal forms") {
  for (double lam : {0.4, 1.3, 2.0}) {
    const SpectralResult r = diagonalize(build_hamiltonian({3.0, lam}, {160}));
    const auto ref = oracle::labelled_levels(3.0, lam, 160, 30);
    for (int k = 0; k < 30; ++k) {
      CHECK(r.eigenvalues(k) == doctest::Approx(ref[k].first).epsilon(1e-10));
      CHECK(r.parities[k] == ref[k].second);
    }
  }
}

TEST_CASE("diagonalize: degenerate clusters are rotated into parity eigenstates") {
  // lambda = 0: |n,+x> and |n+3,-x> are degenerate when Omega = 3
  const HamiltonianMatrix h = build_hamiltonian({3.0, 0.0}, {12});
  const SpectralResult r = diagonalize(h);
  const Eigen::MatrixXd p = parity_matrix(h.basis);
  for (Eigen::Index k = 0; k < r.size(); ++k)
    CHECK((p * r.eigenvectors.col(k) - r.parities[k] * r.eigenvectors.col(k)).norm() < 1e-10);
}

TEST_CASE("diagonalize: decoupled spectrum") {
  const SpectralResult r = diagonalize(build_hamiltonian({2.5, 0.0}, {20}));
  CHECK(r.eigenvalues(0) == doctest::Approx(-1.25));
  CHECK(r.eigenvalues(1) == doctest::Approx(-0.25));
  CHECK(r.eigenvalues(2) == doctest::Approx(0.75));
  CHECK(r.eigenvalues(3) == doctest::Approx(1.25));
}

TEST_CASE("spectrum regression against the stored golden levels") {
  for (const auto& [lam, file] : {std::pair{1.3, "spectrum_lambda_1.3.csv"}, std::pair{2.0, "spectrum_lambda_2.csv"}}) {
    const auto golden = load_golden(file);
    REQUIRE(golden.size() == 20u);
    const SpectralResult r = converged_spectrum({3.0, lam}, 20, 1e-9);
    for (int k = 0; k < 20; ++k) {
      CHECK(std::abs(r.eigenvalues(k) - golden[k].exact) < 1e-8);
      CHECK(r.parities[k] == golden[k].parity);
    }
  }
}

TEST_CASE("converged_spectrum: stabilization points") {
  const SpectralResult a = converged_spectrum({3.0, 1.3}, 4, 1e-9);
  CHECK(a.converged);
  CHECK(a.basis.n_max <= 240);
  const SpectralResult b = converged_spectrum({3.0, 2.0}, 20, 1e-9);
  CHECK(b.converged);
  CHECK(b.basis.n_max <= 480);
  for (int k = 0; k < 20; ++k) CHECK(b.boundary[k] < kBoundaryTol);
}

TEST_CASE("converged_spectrum: infinite tolerance returns the first round") {
  ConvergenceOptions opts;
  opts.initial_n_max = 30;
  const SpectralResult r = converged_spectrum({3.0, 1.3}, 2, kInf, opts);
  CHECK(r.basis.n_max == 30);
  CHECK(r.converged);
}

TEST_CASE("converged_spectrum: exhausting the cap names the level") {
  ConvergenceOptions opts;
  opts.initial_n_max = 4;
  opts.cap_n_max = 16;
  try {
    converged_spectrum({3.0, 2.0}, 6, 1e-9, opts);
    FAIL("expected NumericError");
  } catch (const NumericError& e) {
    CHECK(std::string(e.what()).find("level") != std::string::npos);
  }
  CHECK_THROWS_AS(converged_spectrum({3.0, 2.0}, 0, 1e-9), std::invalid_argument);
}

TEST_CASE("eigenvalues decrease weakly as the truncation grows") {
  const SpectralResult small = diagonalize(build_hamiltonian({3.0, 2.0}, {20}));
  const SpectralResult large = diagonalize(build_hamiltonian({3.0, 2.0}, {40}));
  for (int k = 0; k < 30; ++k) CHECK(large.eigenvalues(k) <= small.eigenvalues(k) + 1e-12);
}

TEST_CASE("position_projections: vacuum times +z") {
  const BasisSpec b{10};
  JointState s{Eigen::VectorXcd::Zero(b.dimension()), b};
  s.coefficients(BasisSpec::index(0, kPlusZ)) = 1.0;
  const QGrid g{-5.0, 5.0, 101};
  const PositionProjections pr = position_projections(s, g);
  for (std::size_t i = 0; i < pr.grid.size(); ++i) {
    CHECK(pr.plus_z[i].real() == doctest::Approx(ho_wavefunction(0, pr.grid[i])));
    CHECK(std::abs(pr.minus_z[i]) == 0.0);
  }
  const PositionProjections x = pr.rotated_to_x();
  CHECK(x.plus_z[50].real() == doctest::Approx(ho_wavefunction(0, 0.0) / std::sqrt(2.0)));
  CHECK(x.minus_z[50].real() == doctest::Approx(ho_wavefunction(0, 0.0) / std::sqrt(2.0)));

  s.coefficients *= 1.01;
  CHECK_THROWS_AS(position_projections(s, g), std::invalid_argument);
}

TEST_CASE("position_projections: eigenstate densities are symmetric and normalized") {
  const SpectralResult r = converged_spectrum({3.0, 2.0}, 6, 1e-9);
  const QGrid g{-8.0, 8.0, 801};
  for (int k = 0; k < 6; ++k) {
    const std::vector<double> rho = position_projections(r.state(k), g).density();
    double asym = 0.0;
    for (std::size_t i = 0; i < rho.size(); ++i) asym = std::max(asym, std::abs(rho[i] - rho[rho.size() - 1 - i]));
    CHECK(asym < 1e-8);
    CHECK(std::abs(trapezoid(rho, g.spacing()) - 1.0) < 1e-4);
  }
}

TEST_CASE("position_projections: ground-state +z component sits mainly in the left well") {
  const ModelParams p{3.0, 2.0};
  const double a0 = variational_params(p).alpha0;
  const SpectralResult r = converged_spectrum(p, 2, 1e-9);
  const QGrid g{-6.0, 6.0, 1201};
  const PositionProjections pr = position_projections(r.state(0), g);
  const auto q = g.values();
  const auto at = [&](double x) {
    const auto i = static_cast<std::size_t>(std::lround((x - g.q_min) / g.spacing()));
    return std::abs(pr.plus_z[i].real());
  };
  // main peak at alpha0 < 0; the small secondary peak at -alpha0 comes from
  // the rotated qubit state and vanishes for theta0 = pi/2
  CHECK(at(a0) > 5.0 * at(-a0));
  CHECK(at(-a0) > 1e-2);
  std::size_t arg = 0;
  for (std::size_t i = 0; i < q.size(); ++i)
    if (std::abs(pr.plus_z[i]) > std::abs(pr.plus_z[arg])) arg = i;
  CHECK(q[arg] == doctest::Approx(a0).epsilon(0.05));
}
