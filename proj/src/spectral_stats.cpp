#include "ktops/spectral_stats.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <numbers>
#include <numeric>
#include <string>

#include <Eigen/Eigenvalues>

#include "ktops/kernels.hpp"

namespace ktops {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double wrap_angle(double theta) {
  double a = std::fmod(theta, kTwoPi);
  if (a < 0.0) a += kTwoPi;
  if (a >= kTwoPi) a = 0.0;
  return a;
}

void check_dims(const FloquetSpectrum& spec, int n_dim, int m_dim) {
  if (static_cast<long>(n_dim) * m_dim != spec.dim()) {
    throw InvalidArgument("spectrum dimension " + std::to_string(spec.dim()) + " does not match N*M = " +
                          std::to_string(static_cast<long>(n_dim) * m_dim));
  }
}

// Unfolded spacings of sorted angles on the circle, wrap-around last.
std::vector<double> circular_spacings(std::vector<double> angles) {
  std::sort(angles.begin(), angles.end());
  const double d = static_cast<double>(angles.size());
  std::vector<double> s(angles.size());
  for (std::size_t i = 0; i + 1 < angles.size(); ++i) s[i] = d * (angles[i + 1] - angles[i]) / kTwoPi;
  s.back() = d * (angles.front() + kTwoPi - angles.back()) / kTwoPi;
  return s;
}

NnsdResult finish_nnsd(std::vector<double> spacings, int bins, double s_max) {
  NnsdResult out;
  out.mean_spacing = std::accumulate(spacings.begin(), spacings.end(), 0.0) / static_cast<double>(spacings.size());
  out.histogram = Histogram::build(spacings, 0.0, s_max, bins);
  out.ks_distance = ks_distance(spacings, &wigner_surmise_cdf);
  out.spacings = std::move(spacings);
  return out;
}

}  // namespace

FloquetSpectrum diagonalize_floquet(const UnitaryMatrix& u) {
  Eigen::ComplexSchur<CMatrix> schur(u.matrix());
  if (schur.info() != Eigen::Success) throw NumericalError("Schur decomposition of the Floquet operator failed");
  const CMatrix& t = schur.matrixT();
  const CMatrix& z = schur.matrixU();
  const int d = u.dim();

  std::vector<double> angles(d);
  for (int i = 0; i < d; ++i) angles[i] = wrap_angle(std::arg(t(i, i)));
  std::vector<int> order(d);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return angles[a] < angles[b]; });

  FloquetSpectrum spec{RVector(d), CMatrix(d, d)};
  for (int i = 0; i < d; ++i) {
    spec.eigenangles(i) = angles[order[i]];
    spec.eigenstates.col(i) = z.col(order[i]);
  }
  return spec;
}

FloquetSpectrum diagonalize_floquet(const UnitaryMatrix& u, const UnitaryMatrix& symmetry,
                                    double degeneracy_tolerance) {
  if (symmetry.dim() != u.dim()) throw InvalidArgument("symmetry operator has the wrong dimension");
  FloquetSpectrum spec = diagonalize_floquet(u);
  const int d = spec.dim();
  if (d < 2) return spec;

  std::vector<std::vector<int>> clusters{{0}};
  for (int i = 1; i < d; ++i) {
    if (spec.eigenangles(i) - spec.eigenangles(i - 1) <= degeneracy_tolerance) {
      clusters.back().push_back(i);
    } else {
      clusters.push_back({i});
    }
  }
  if (clusters.size() > 1 && spec.eigenangles(0) + kTwoPi - spec.eigenangles(d - 1) <= degeneracy_tolerance) {
    clusters.front().insert(clusters.front().end(), clusters.back().begin(), clusters.back().end());
    clusters.pop_back();
  }

  for (const auto& cluster : clusters) {
    if (cluster.size() < 2) continue;
    const Eigen::Index k = static_cast<Eigen::Index>(cluster.size());
    CMatrix basis(d, k);
    for (Eigen::Index c = 0; c < k; ++c) basis.col(c) = spec.eigenstates.col(cluster[c]);
    const CMatrix restricted = basis.adjoint() * symmetry.matrix() * basis;
    Eigen::ComplexSchur<CMatrix> inner(restricted);
    if (inner.info() != Eigen::Success) throw NumericalError("symmetry diagonalization in a degenerate cluster failed");
    const CMatrix rotated = basis * inner.matrixU();
    for (Eigen::Index c = 0; c < k; ++c) spec.eigenstates.col(cluster[c]) = rotated.col(c);
  }
  return spec;
}

double max_eigen_residual(const UnitaryMatrix& u, const FloquetSpectrum& spec) {
  double worst = 0.0;
  for (int i = 0; i < spec.dim(); ++i) {
    const CVector v = spec.eigenstates.col(i);
    const CVector r = u.matrix() * v - std::polar(1.0, spec.eigenangles(i)) * v;
    worst = std::max(worst, r.norm());
  }
  return worst;
}

double orthonormality_defect(const FloquetSpectrum& spec) {
  const CMatrix gram = spec.eigenstates.adjoint() * spec.eigenstates;
  return (gram - CMatrix::Identity(spec.dim(), spec.dim())).cwiseAbs().maxCoeff();
}

MeanEntropies eigenstate_entanglement_average(const FloquetSpectrum& spec, int n_dim, int m_dim) {
  check_dims(spec, n_dim, m_dim);
  const RMatrix spectra = kernels::column_schmidt_spectra(spec.eigenstates, n_dim, m_dim, kernels::Exec::parallel);
  const RMatrix ent = kernels::spectra_entropies(spectra, kernels::Exec::parallel);
  std::vector<double> sv(ent.cols());
  std::vector<double> sr(ent.cols());
  for (Eigen::Index c = 0; c < ent.cols(); ++c) {
    sv[c] = ent(0, c);
    sr[c] = ent(1, c);
  }
  return summarize_entropies(sv, sr);
}

RdmHistogram pooled_eigenstate_rdm_spectrum(const FloquetSpectrum& spec, int n_dim, int m_dim, int bins) {
  check_dims(spec, n_dim, m_dim);
  const RMatrix spectra = kernels::column_schmidt_spectra(spec.eigenstates, n_dim, m_dim, kernels::Exec::parallel);
  const std::vector<double> pooled(spectra.data(), spectra.data() + spectra.size());
  return compare_with_mp(pooled, n_dim, m_dim, bins);
}

double wigner_surmise_pdf(double s) {
  return s < 0.0 ? 0.0 : std::numbers::pi / 2.0 * s * std::exp(-std::numbers::pi * s * s / 4.0);
}

double wigner_surmise_cdf(double s) { return s <= 0.0 ? 0.0 : 1.0 - std::exp(-std::numbers::pi * s * s / 4.0); }

double ks_distance(std::vector<double> samples, double (*cdf)(double)) {
  if (samples.empty()) throw InvalidArgument("ks_distance needs at least one sample");
  std::sort(samples.begin(), samples.end());
  const double n = static_cast<double>(samples.size());
  double d = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double f = cdf(samples[i]);
    d = std::max({d, (static_cast<double>(i) + 1.0) / n - f, f - static_cast<double>(i) / n});
  }
  return d;
}

NnsdResult nnsd(const RVector& eigenangles, int bins, double s_max) {
  if (eigenangles.size() < 2) throw InvalidArgument("nnsd needs at least 2 eigenangles");
  std::vector<double> angles(eigenangles.size());
  for (Eigen::Index i = 0; i < eigenangles.size(); ++i) angles[i] = wrap_angle(eigenangles(i));
  return finish_nnsd(circular_spacings(std::move(angles)), bins, s_max);
}

NnsdResult nnsd_by_sector(const RVector& eigenangles, const std::vector<int>& sector, int bins, double s_max) {
  if (sector.size() != static_cast<std::size_t>(eigenangles.size())) {
    throw InvalidArgument("one sector label per eigenangle is required");
  }
  std::map<int, std::vector<double>> by_sector;
  for (Eigen::Index i = 0; i < eigenangles.size(); ++i) by_sector[sector[i]].push_back(wrap_angle(eigenangles(i)));
  std::vector<double> pooled;
  for (auto& [label, angles] : by_sector) {
    if (angles.size() < 2) continue;
    const std::vector<double> s = circular_spacings(std::move(angles));
    pooled.insert(pooled.end(), s.begin(), s.end());
  }
  if (pooled.empty()) throw InvalidArgument("nnsd_by_sector: no sector holds 2 or more eigenangles");
  return finish_nnsd(std::move(pooled), bins, s_max);
}

UnitaryMatrix parity_operator(Spin j1, Spin j2) {
  const SpinOperators a = build_spin_operators(j1);
  const SpinOperators b = build_spin_operators(j2);
  const double pi = std::numbers::pi;
  return UnitaryMatrix::checked(kron(hermitian_exp(a.jy, -pi), hermitian_exp(b.jy, -pi)));
}

double commutation_residual(const UnitaryMatrix& u, const UnitaryMatrix& r) {
  if (u.dim() != r.dim()) throw InvalidArgument("commutation_residual: dimension mismatch");
  return (r.matrix() * u.matrix() * r.matrix().adjoint() - u.matrix()).cwiseAbs().maxCoeff();
}

SymmetryLabels symmetry_labels(const FloquetSpectrum& spec, const UnitaryMatrix& r) {
  if (r.dim() != spec.dim()) throw InvalidArgument("symmetry_labels: dimension mismatch");
  static const std::array<cplx, 4> kRoots{cplx(1, 0), cplx(-1, 0), cplx(0, 1), cplx(0, -1)};
  SymmetryLabels out;
  const CMatrix rv = r.matrix() * spec.eigenstates;
  for (int i = 0; i < spec.dim(); ++i) {
    const cplx value = spec.eigenstates.col(i).dot(rv.col(i));
    out.eigenvalues.push_back(value);
    out.max_residual = std::max(out.max_residual, (rv.col(i) - value * spec.eigenstates.col(i)).norm());
    int best = 0;
    for (int k = 1; k < 4; ++k) {
      if (std::abs(value - kRoots[k]) < std::abs(value - kRoots[best])) best = k;
    }
    out.sector.push_back(best);
  }
  return out;
}

namespace {

CMatrix local_time_reversal(Spin j, bool x_first) {
  const SpinOperators ops = build_spin_operators(j);
  const double pi = std::numbers::pi;
  const CMatrix flip_x = hermitian_exp(ops.jx, -pi);           // exp(i pi Jx)
  const CMatrix quarter_y = hermitian_exp(ops.jy, -pi / 2.0);  // exp(i pi Jy / 2)
  return x_first ? CMatrix(quarter_y * flip_x) : CMatrix(flip_x * quarter_y);
}

}  // namespace

UnitaryMatrix time_reversal_operator(Spin j1, Spin j2) {
  return UnitaryMatrix::checked(kron(local_time_reversal(j1, true), local_time_reversal(j2, true)));
}

UnitaryMatrix literal_time_reversal_operator(Spin j1, Spin j2) {
  return UnitaryMatrix::checked(kron(local_time_reversal(j1, false), local_time_reversal(j2, false)));
}

double time_reversal_residual(const UnitaryMatrix& u, const UnitaryMatrix& v) {
  if (u.dim() != v.dim()) throw InvalidArgument("time_reversal_residual: dimension mismatch");
  const CMatrix lhs = v.matrix() * u.matrix().conjugate() * v.matrix().adjoint();
  return (lhs - u.matrix().adjoint()).cwiseAbs().maxCoeff();
}

double time_reversal_check(const UnitaryMatrix& u, Spin j1, Spin j2) {
  return time_reversal_residual(u, time_reversal_operator(j1, j2));
}

}  // namespace ktops
