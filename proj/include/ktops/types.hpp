#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace ktops {

using cplx = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RMatrix = Eigen::MatrixXd;
using RVector = Eigen::VectorXd;

// Row-major view type for reshaping a product-basis vector into its N x M
// amplitude matrix without copying.
using CMatrixRowMajor = Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

/// Bad caller input: wrong dimensions, out-of-range parameters.
class InvalidArgument : public std::invalid_argument {
 public:
  explicit InvalidArgument(const std::string& what) : std::invalid_argument(what) {}
};

/// An eigensolver, series or quadrature did not meet its tolerance.
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

/// A requested Hilbert-space dimension exceeds the configured cap.
class DimensionCapExceeded : public std::runtime_error {
 public:
  explicit DimensionCapExceeded(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ktops
