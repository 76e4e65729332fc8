#include "ktops/spin_algebra.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include <Eigen/Eigenvalues>

namespace ktops {

Spin::Spin(int twice_j) : twice_j_(twice_j) {
  if (twice_j < 1) {
    throw InvalidArgument("spin must satisfy 2j >= 1, got 2j = " + std::to_string(twice_j));
  }
}

Spin Spin::from_value(double j) {
  const double twice = 2.0 * j;
  const double rounded = std::round(twice);
  if (!std::isfinite(j) || j <= 0.0 || std::abs(twice - rounded) > 1e-9) {
    throw InvalidArgument("spin must be a positive half-integer, got " + std::to_string(j));
  }
  return Spin(static_cast<int>(rounded));
}

UnitaryMatrix UnitaryMatrix::checked(CMatrix entries) {
  if (entries.rows() != entries.cols()) {
    throw InvalidArgument("unitary matrix must be square");
  }
  UnitaryMatrix u(std::move(entries));
  const double defect = u.unitarity_defect();
  if (!(defect <= 1e-10 * u.dim())) {
    throw NumericalError("matrix is not unitary: max |U^+U - I| = " + std::to_string(defect));
  }
  return u;
}

UnitaryMatrix UnitaryMatrix::trusted(CMatrix entries) {
  if (entries.rows() != entries.cols()) {
    throw InvalidArgument("unitary matrix must be square");
  }
  return UnitaryMatrix(std::move(entries));
}

UnitaryMatrix UnitaryMatrix::adjoint() const { return UnitaryMatrix(entries_.adjoint()); }

double UnitaryMatrix::unitarity_defect() const {
  const CMatrix gram = entries_.adjoint() * entries_;
  return (gram - CMatrix::Identity(dim(), dim())).cwiseAbs().maxCoeff();
}

SpinOperators build_spin_operators(Spin j) {
  const int d = j.dim();
  const double jv = j.value();
  CMatrix raise = CMatrix::Zero(d, d);
  // <j, m+1 | J+ | j, m> sits one row above m in the descending basis.
  for (int row = 1; row < d; ++row) {
    const double m = j.m_at(row);
    raise(row - 1, row) = std::sqrt(jv * (jv + 1.0) - m * (m + 1.0));
  }
  const CMatrix lower = raise.adjoint();

  SpinOperators ops{j, CMatrix(d, d), CMatrix(d, d), CMatrix::Zero(d, d)};
  ops.jx = 0.5 * (raise + lower);
  ops.jy = (raise - lower) / cplx(0.0, 2.0);
  for (int row = 0; row < d; ++row) ops.jz(row, row) = j.m_at(row);
  return ops;
}

CMatrix hermitian_exp(const CMatrix& h, double t) {
  Eigen::SelfAdjointEigenSolver<CMatrix> es(h);
  if (es.info() != Eigen::Success) {
    throw NumericalError("Hermitian eigendecomposition failed");
  }
  const RVector& w = es.eigenvalues();
  const CMatrix& v = es.eigenvectors();
  CVector phases(w.size());
  for (Eigen::Index i = 0; i < w.size(); ++i) phases(i) = std::polar(1.0, -t * w(i));
  return v * phases.asDiagonal() * v.adjoint();
}

UnitaryMatrix free_precession_unitary(const SpinOperators& ops) {
  return UnitaryMatrix::checked(hermitian_exp(ops.jy, std::numbers::pi / 2.0));
}

UnitaryMatrix kick_unitary(const SpinOperators& ops, double k, double alpha) {
  if (!std::isfinite(k) || !std::isfinite(alpha)) {
    throw InvalidArgument("kick strength and alpha must be finite");
  }
  const int d = ops.dim();
  const double two_j = ops.j.twice();
  CMatrix u = CMatrix::Zero(d, d);
  for (int row = 0; row < d; ++row) {
    const double shifted = ops.j.m_at(row) + alpha;
    u(row, row) = std::polar(1.0, -k * shifted * shifted / two_j);
  }
  return UnitaryMatrix::trusted(std::move(u));
}

CVector coupling_phases(Spin j1, Spin j2, double epsilon) {
  if (!std::isfinite(epsilon)) throw InvalidArgument("coupling strength must be finite");
  const int n = j1.dim();
  const int m = j2.dim();
  const double scale = epsilon / std::sqrt(j1.value() * j2.value());
  CVector phases(static_cast<Eigen::Index>(n) * m);
  for (int r1 = 0; r1 < n; ++r1) {
    for (int r2 = 0; r2 < m; ++r2) {
      phases(static_cast<Eigen::Index>(r1) * m + r2) = std::polar(1.0, -scale * j1.m_at(r1) * j2.m_at(r2));
    }
  }
  return phases;
}

UnitaryMatrix coupling_unitary(const SpinOperators& ops1, const SpinOperators& ops2, double epsilon) {
  CMatrix u = coupling_phases(ops1.j, ops2.j, epsilon).asDiagonal();
  return UnitaryMatrix::trusted(std::move(u));
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  const Eigen::Index br = b.rows(), bc = b.cols();
  CMatrix out(a.rows() * br, a.cols() * bc);
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * br, j * bc, br, bc) = a(i, j) * b;
    }
  }
  return out;
}

}  // namespace ktops
