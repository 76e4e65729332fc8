#include "ktops/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "ktops/entanglement.hpp"
#include "ktops/rmt_ensemble.hpp"

namespace ktops::kernels {

namespace {

void check_layout(const CMatrix& states, int n_dim, int m_dim) {
  if (n_dim < 1 || m_dim < 1 || states.rows() != static_cast<Eigen::Index>(n_dim) * m_dim) {
    throw InvalidArgument("state columns have length " + std::to_string(states.rows()) + ", expected N*M = " +
                          std::to_string(static_cast<long>(n_dim) * m_dim));
  }
}

RVector spectrum_of_column(const CMatrix& states, Eigen::Index c, int n_dim, int m_dim) {
  const Eigen::Map<const CMatrixRowMajor> a(states.col(c).data(), n_dim, m_dim);
  return schmidt_spectrum_of(a).values();
}

}  // namespace

void apply_unitary(const CMatrix& u, const CVector& in, CVector& out, Exec exec) {
  if (u.cols() != in.size()) throw InvalidArgument("apply_unitary: dimension mismatch");
  const Eigen::Index d = u.rows();
  out.resize(d);
  if (exec == Exec::serial) {
    // Reference: column-major sweep, one accumulation per row.
    out.setZero();
    for (Eigen::Index c = 0; c < u.cols(); ++c) {
      const cplx x = in(c);
      for (Eigen::Index r = 0; r < d; ++r) out(r) += u(r, c) * x;
    }
    return;
  }
#pragma omp parallel
  {
    // Each thread owns a contiguous row block.
#ifdef _OPENMP
    const int threads = omp_get_num_threads();
    const int tid = omp_get_thread_num();
#else
    const int threads = 1;
    const int tid = 0;
#endif
    const Eigen::Index chunk = (d + threads - 1) / threads;
    const Eigen::Index begin = std::min<Eigen::Index>(d, tid * chunk);
    const Eigen::Index len = std::min<Eigen::Index>(d, begin + chunk) - begin;
    if (len > 0) out.segment(begin, len).noalias() = u.middleRows(begin, len) * in;
  }
}

RMatrix column_schmidt_spectra(const CMatrix& states, int n_dim, int m_dim, Exec exec) {
  check_layout(states, n_dim, m_dim);
  const int k = std::min(n_dim, m_dim);
  const Eigen::Index cols = states.cols();
  RMatrix out(k, cols);
  if (exec == Exec::serial) {
    for (Eigen::Index c = 0; c < cols; ++c) out.col(c) = spectrum_of_column(states, c, n_dim, m_dim);
    return out;
  }
#pragma omp parallel for schedule(dynamic, 4)
  for (Eigen::Index c = 0; c < cols; ++c) out.col(c) = spectrum_of_column(states, c, n_dim, m_dim);
  return out;
}

RMatrix random_state_spectra(int n_dim, int m_dim, EnsembleKind kind, int trials, std::uint64_t seed, Exec exec) {
  if (trials < 0) throw InvalidArgument("trials must be non-negative");
  RMatrix out(n_dim, trials);
  auto one = [&](int t) {
    const BipartiteState psi = sample_random_state(n_dim, m_dim, kind, derive_seed(seed, static_cast<std::uint64_t>(t)));
    out.col(t) = schmidt_spectrum(psi).values();
  };
  if (exec == Exec::serial) {
    for (int t = 0; t < trials; ++t) one(t);
    return out;
  }
#pragma omp parallel for schedule(dynamic, 4)
  for (int t = 0; t < trials; ++t) one(t);
  return out;
}

RMatrix spectra_entropies(const RMatrix& spectra, Exec exec) {
  const Eigen::Index cols = spectra.cols();
  RMatrix out(2, cols);
  auto one = [&](Eigen::Index c) {
    double sv = 0.0;
    double purity = 0.0;
    for (Eigen::Index i = 0; i < spectra.rows(); ++i) {
      const double lambda = spectra(i, c);
      if (lambda > 0.0) sv -= lambda * std::log(lambda);
      purity += lambda * lambda;
    }
    out(0, c) = sv;
    out(1, c) = 1.0 - purity;
  };
  if (exec == Exec::serial) {
    for (Eigen::Index c = 0; c < cols; ++c) one(c);
    return out;
  }
#pragma omp parallel for schedule(static)
  for (Eigen::Index c = 0; c < cols; ++c) one(c);
  return out;
}

}  // namespace ktops::kernels
