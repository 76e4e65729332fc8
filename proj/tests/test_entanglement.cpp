#include <cmath>
#include <random>

#include "doctest.h"
#include "ktops/entanglement.hpp"
#include "ktops/rmt_ensemble.hpp"
#include "oracles.hpp"

using namespace ktops;

namespace {

SchmidtSpectrum spectrum(std::initializer_list<double> v) {
  RVector r(static_cast<Eigen::Index>(v.size()));
  int i = 0;
  for (double x : v) r(i++) = x;
  return SchmidtSpectrum::from_eigenvalues(r);
}

CMatrix random_unitary(int d, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g;
  CMatrix z(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) z(i, j) = cplx(g(rng), g(rng));
  Eigen::HouseholderQR<CMatrix> qr(z);
  return qr.householderQ() * CMatrix::Identity(d, d);
}

}  // namespace

TEST_CASE("entropy of simple spectra") {
  CHECK(von_neumann_entropy(spectrum({1.0})) == 0.0);
  CHECK(von_neumann_entropy(spectrum({1.0, 0.0, 0.0})) == 0.0);
  CHECK(linear_entropy(spectrum({1.0, 0.0})) == 0.0);
  CHECK(von_neumann_entropy(spectrum({0.5, 0.5})) == doctest::Approx(std::log(2.0)).epsilon(1e-15));
  CHECK(linear_entropy(spectrum({0.5, 0.5})) == doctest::Approx(0.5));
  CHECK(von_neumann_entropy(spectrum({0.5, 0.25, 0.25})) == doctest::Approx(1.5 * std::log(2.0)).epsilon(1e-15));
  CHECK(linear_entropy(spectrum({0.5, 0.25, 0.25})) == doctest::Approx(0.625));
}

TEST_CASE("SchmidtSpectrum normalizes and rejects negative values") {
  const SchmidtSpectrum s = spectrum({0.25, 0.5, -1e-12, 0.25});
  CHECK(s.values()(0) == 0.5);
  CHECK(s.values()(3) == 0.0);
  CHECK_THROWS_AS(spectrum({0.6, 0.5, -1e-3}), NumericalError);
  CHECK_THROWS_AS(spectrum({0.0, 0.0}), NumericalError);
}

TEST_CASE("two-qubit reduced density matrix against an explicit partial trace") {
  std::mt19937_64 rng(7);
  std::normal_distribution<double> g;
  for (int trial = 0; trial < 20; ++trial) {
    Eigen::Vector4cd v;
    for (int i = 0; i < 4; ++i) v(i) = cplx(g(rng), g(rng));
    v.normalize();
    const BipartiteState psi(2, 2, CVector(v));
    const Eigen::Matrix2cd ref = oracle::partial_trace_2x2(v);
    const DensityMatrix rho = reduced_density_matrix(psi, Subsystem::first);
    CHECK((rho.matrix() - CMatrix(ref)).cwiseAbs().maxCoeff() < 1e-12);
    const auto [l1, l2] = oracle::eig2(ref);
    const SchmidtSpectrum s = schmidt_spectrum(psi);
    CHECK(std::abs(s.values()(0) - l1) < 1e-12);
    CHECK(std::abs(s.values()(1) - l2) < 1e-12);
    const double sv = -(l1 * std::log(l1) + l2 * std::log(l2));
    CHECK(std::abs(von_neumann_entropy(s) - sv) < 1e-12);
  }
}

TEST_CASE("both reduced density matrices share their nonzero spectrum") {
  const BipartiteState psi = sample_random_state(5, 9, EnsembleKind::complex, 11);
  const DensityMatrix r1 = reduced_density_matrix(psi, Subsystem::first);
  const DensityMatrix r2 = reduced_density_matrix(psi, Subsystem::second);
  CHECK(r1.dim() == 5);
  CHECK(r2.dim() == 9);
  Eigen::SelfAdjointEigenSolver<CMatrix> e1(r1.matrix()), e2(r2.matrix());
  const RVector a = e1.eigenvalues().reverse();
  const RVector b = e2.eigenvalues().reverse().head(5);
  CHECK((a - b).cwiseAbs().maxCoeff() < 1e-13);
  CHECK(e2.eigenvalues().head(4).cwiseAbs().maxCoeff() < 1e-13);
}

TEST_CASE("entropy is invariant under local unitaries") {
  const BipartiteState psi = sample_random_state(4, 6, EnsembleKind::complex, 3);
  const CMatrix u1 = random_unitary(4, 21), u2 = random_unitary(6, 22);
  const CMatrixRowMajor a = psi.amplitude_matrix();
  const CMatrixRowMajor b = u1 * a * u2.transpose();
  const BipartiteState rotated(4, 6, Eigen::Map<const CVector>(b.data(), b.size()));
  CHECK(std::abs(von_neumann_entropy(schmidt_spectrum(psi)) - von_neumann_entropy(schmidt_spectrum(rotated))) < 1e-12);
  CHECK(std::abs(linear_entropy(schmidt_spectrum(psi)) - linear_entropy(schmidt_spectrum(rotated))) < 1e-12);
}

TEST_CASE("entropies stay within their bounds") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const BipartiteState psi = sample_random_state(6, 10, EnsembleKind::real, seed);
    const SchmidtSpectrum s = schmidt_spectrum(psi);
    CHECK(s.values().sum() == doctest::Approx(1.0).epsilon(1e-13));
    const double sv = von_neumann_entropy(s), sr = linear_entropy(s);
    CHECK(sv >= 0.0);
    CHECK(sv <= std::log(6.0) + 1e-12);
    CHECK(sr >= 0.0);
    CHECK(sr <= 1.0 - 1.0 / 6.0 + 1e-12);
  }
}

TEST_CASE("DensityMatrix::checked rejects invalid input") {
  CMatrix bad = CMatrix::Identity(2, 2) * 0.5;
  bad(0, 1) = cplx(0.1, 0.0);
  CHECK_THROWS_AS(DensityMatrix::checked(bad), NumericalError);
  CHECK_THROWS_AS(DensityMatrix::checked(CMatrix::Identity(2, 2)), NumericalError);
  CMatrix neg = CMatrix::Zero(2, 2);
  neg(0, 0) = 1.5;
  neg(1, 1) = -0.5;
  CHECK_THROWS_AS(DensityMatrix::checked(neg), NumericalError);
}
