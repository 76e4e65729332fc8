#include "ktops/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

#include <Eigen/Eigenvalues>

namespace ktops {

namespace {

constexpr double kNegativeTolerance = 1e-10;

RVector hermitian_eigenvalues(const CMatrix& h) {
  Eigen::SelfAdjointEigenSolver<CMatrix> es(h, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw NumericalError("RDM eigendecomposition failed");
  return es.eigenvalues();
}

}  // namespace

SchmidtSpectrum SchmidtSpectrum::from_eigenvalues(RVector raw) {
  for (Eigen::Index i = 0; i < raw.size(); ++i) {
    if (!std::isfinite(raw(i))) throw NumericalError("non-finite Schmidt value");
    if (raw(i) < -kNegativeTolerance) {
      throw NumericalError("Schmidt value " + std::to_string(raw(i)) + " is below -1e-10");
    }
    raw(i) = std::max(raw(i), 0.0);
  }
  const double sum = raw.sum();
  if (!(sum > 0.0)) throw NumericalError("Schmidt values sum to zero");
  raw /= sum;
  std::sort(raw.data(), raw.data() + raw.size(), std::greater<>());
  return SchmidtSpectrum(std::move(raw));
}

DensityMatrix DensityMatrix::checked(CMatrix entries) {
  if (entries.rows() != entries.cols()) throw InvalidArgument("density matrix must be square");
  if ((entries - entries.adjoint()).cwiseAbs().maxCoeff() > 1e-12) {
    throw NumericalError("density matrix is not Hermitian");
  }
  if (std::abs(entries.trace().real() - 1.0) > 1e-10) {
    throw NumericalError("density matrix trace is not 1");
  }
  if (hermitian_eigenvalues(entries).minCoeff() < -kNegativeTolerance) {
    throw NumericalError("density matrix has a negative eigenvalue");
  }
  return DensityMatrix(std::move(entries));
}

DensityMatrix reduced_density_matrix(const BipartiteState& psi, Subsystem which) {
  const auto a = psi.amplitude_matrix();
  CMatrix rho;
  if (which == Subsystem::first) {
    rho = a * a.adjoint();
  } else {
    rho = a.transpose() * a.conjugate();
  }
  // Enforce exact Hermiticity; the products above are Hermitian only up to rounding.
  rho = 0.5 * (rho + rho.adjoint()).eval();
  return DensityMatrix::checked(std::move(rho));
}

SchmidtSpectrum schmidt_spectrum_of(const Eigen::Ref<const CMatrixRowMajor>& a) {
  CMatrix rho;
  if (a.rows() <= a.cols()) {
    rho = a * a.adjoint();
  } else {
    rho = a.transpose() * a.conjugate();
  }
  return SchmidtSpectrum::from_eigenvalues(hermitian_eigenvalues(rho));
}

SchmidtSpectrum schmidt_spectrum(const BipartiteState& psi) { return schmidt_spectrum_of(psi.amplitude_matrix()); }

double von_neumann_entropy(const SchmidtSpectrum& s) {
  double acc = 0.0;
  for (double lambda : s.values()) {
    if (lambda > 0.0) acc -= lambda * std::log(lambda);
  }
  return acc;
}

double linear_entropy(const SchmidtSpectrum& s) { return 1.0 - s.values().squaredNorm(); }

}  // namespace ktops
