#pragma once

#include "ktops/types.hpp"

namespace ktops {

/// Spin quantum number stored as the integer 2j, so j = 1/2, 1, 3/2, ... are exact.
class Spin {
 public:
  /// Throws InvalidArgument unless twice_j >= 1.
  explicit Spin(int twice_j);

  /// Accepts j = 0.5, 1, 1.5, ...; rejects j <= 0 and non-half-integral values.
  static Spin from_value(double j);

  int twice() const { return twice_j_; }
  double value() const { return 0.5 * twice_j_; }
  int dim() const { return twice_j_ + 1; }
  bool is_integer() const { return twice_j_ % 2 == 0; }

  /// Magnetic quantum number at basis row `row` (m = j - row, descending).
  double m_at(int row) const { return value() - row; }

  friend bool operator==(const Spin&, const Spin&) = default;

 private:
  int twice_j_;
};

/// Angular momentum matrices in the |j,m> basis, m = j, j-1, ..., -j.
struct SpinOperators {
  Spin j;
  CMatrix jx;
  CMatrix jy;
  CMatrix jz;

  int dim() const { return j.dim(); }
};

/// Dense unitary matrix. Built only by the factories below or by code that
/// assembles it from unitary factors.
class UnitaryMatrix {
 public:
  /// Verifies ||U^+U - I||_max <= 1e-10 * dim; throws NumericalError otherwise.
  static UnitaryMatrix checked(CMatrix entries);
  /// Skips the O(d^3) check; for products of already-checked factors.
  static UnitaryMatrix trusted(CMatrix entries);

  int dim() const { return static_cast<int>(entries_.rows()); }
  const CMatrix& matrix() const { return entries_; }
  UnitaryMatrix adjoint() const;

  /// max_{ij} |(U^+U - I)_{ij}|
  double unitarity_defect() const;

 private:
  explicit UnitaryMatrix(CMatrix entries) : entries_(std::move(entries)) {}
  CMatrix entries_;
};

SpinOperators build_spin_operators(Spin j);

/// exp(-i t H) for Hermitian H by eigendecomposition.
CMatrix hermitian_exp(const CMatrix& h, double t);

/// exp(-i (pi/2) Jy)
UnitaryMatrix free_precession_unitary(const SpinOperators& ops);

/// diag exp(-i k (m + alpha)^2 / (2j))
UnitaryMatrix kick_unitary(const SpinOperators& ops, double k, double alpha);

/// diag exp(-i eps m1 m2 / sqrt(j1 j2)) on the product basis, idx = row1 * M + row2.
UnitaryMatrix coupling_unitary(const SpinOperators& ops1, const SpinOperators& ops2, double epsilon);

/// Diagonal of coupling_unitary without materializing the d x d matrix.
CVector coupling_phases(Spin j1, Spin j2, double epsilon);

/// Kronecker product a (x) b with the product-basis layout used throughout.
CMatrix kron(const CMatrix& a, const CMatrix& b);

}  // namespace ktops
