#pragma once

#include "ktops/coupled_tops.hpp"

namespace ktops {

/// Eigenvalues of a reduced density matrix: descending, non-negative, summing to 1.
class SchmidtSpectrum {
 public:
  /// Sorts descending, clamps values in [-1e-10, 0) to zero and renormalizes.
  /// Throws NumericalError on anything more negative or a vanishing sum.
  static SchmidtSpectrum from_eigenvalues(RVector raw);

  const RVector& values() const { return values_; }
  Eigen::Index size() const { return values_.size(); }

 private:
  explicit SchmidtSpectrum(RVector v) : values_(std::move(v)) {}
  RVector values_;
};

/// Hermitian, unit-trace, positive semidefinite matrix.
class DensityMatrix {
 public:
  /// Validates Hermiticity (1e-12), trace (1e-10) and positivity (eigenvalues >= -1e-10).
  static DensityMatrix checked(CMatrix entries);

  int dim() const { return static_cast<int>(entries_.rows()); }
  const CMatrix& matrix() const { return entries_; }

 private:
  explicit DensityMatrix(CMatrix e) : entries_(std::move(e)) {}
  CMatrix entries_;
};

enum class Subsystem { first, second };

/// A A^+ (N x N) for `first`, A^T A^* (M x M, i.e. Tr_1) for `second`.
DensityMatrix reduced_density_matrix(const BipartiteState& psi, Subsystem which);

/// Eigenvalues of the smaller reduced density matrix.
SchmidtSpectrum schmidt_spectrum(const BipartiteState& psi);

/// Same, for a raw N x M amplitude matrix (no normalization check). Used by the
/// batch kernels, which hold many states side by side.
SchmidtSpectrum schmidt_spectrum_of(const Eigen::Ref<const CMatrixRowMajor>& a);

/// -sum lambda ln lambda in nats, 0 ln 0 = 0.
double von_neumann_entropy(const SchmidtSpectrum& s);

/// 1 - sum lambda^2
double linear_entropy(const SchmidtSpectrum& s);

}  // namespace ktops
