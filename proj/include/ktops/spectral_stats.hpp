#pragma once

#include <vector>

#include "ktops/histogram.hpp"
#include "ktops/rmt_ensemble.hpp"
#include "ktops/spin_algebra.hpp"

namespace ktops {

/// Eigenangles in [0, 2 pi), ascending, with matching orthonormal eigenvector columns.
struct FloquetSpectrum {
  RVector eigenangles;
  CMatrix eigenstates;

  int dim() const { return static_cast<int>(eigenangles.size()); }
};

/// Complex Schur form of the (normal) Floquet operator. Schur vectors of a
/// normal matrix are orthonormal eigenvectors, so near-degenerate pairs stay
/// orthogonal.
FloquetSpectrum diagonalize_floquet(const UnitaryMatrix& u);

/// As above, then rotates each cluster of eigenangles closer than
/// `degeneracy_tolerance` so that the eigenvectors also diagonalize `symmetry`
/// (a unitary commuting with u).
FloquetSpectrum diagonalize_floquet(const UnitaryMatrix& u, const UnitaryMatrix& symmetry,
                                    double degeneracy_tolerance = 1e-9);

/// max_i ||U v_i - e^{i theta_i} v_i||_2
double max_eigen_residual(const UnitaryMatrix& u, const FloquetSpectrum& spec);
/// max |V^+ V - I|
double orthonormality_defect(const FloquetSpectrum& spec);

/// Unweighted means (and standard errors across eigenstates) of S_V and S_R
/// over every eigenvector read as a state on C^N (x) C^M.
MeanEntropies eigenstate_entanglement_average(const FloquetSpectrum& spec, int n_dim, int m_dim);

/// Pooled Schmidt values of every eigenvector compared against MPDensity(N, M/N).
RdmHistogram pooled_eigenstate_rdm_spectrum(const FloquetSpectrum& spec, int n_dim, int m_dim, int bins);

/// P(s) = (pi/2) s exp(-pi s^2 / 4)
double wigner_surmise_pdf(double s);
/// 1 - exp(-pi s^2 / 4)
double wigner_surmise_cdf(double s);
/// Kolmogorov-Smirnov distance between the empirical CDF of `samples` and `cdf`.
double ks_distance(std::vector<double> samples, double (*cdf)(double));

struct NnsdResult {
  std::vector<double> spacings;  // unfolded, in eigenangle order, wrap-around spacing last
  Histogram histogram;
  double mean_spacing = 0.0;
  double ks_distance = 0.0;  // against the Wigner surmise
};

/// Unfolds angles on the circle by the uniform density d / 2 pi (so spacings
/// average exactly 1), including the wrap-around spacing, and compares the
/// spacing distribution with the Wigner surmise. Histogram on [0, s_max).
NnsdResult nnsd(const RVector& eigenangles, int bins = 30, double s_max = 4.0);

/// nnsd applied separately to each symmetry sector (labels from
/// symmetry_labels), spacings pooled before the KS comparison.
NnsdResult nnsd_by_sector(const RVector& eigenangles, const std::vector<int>& sector, int bins = 30,
                          double s_max = 4.0);

/// R = exp(i pi Jy1) (x) exp(i pi Jy2)
UnitaryMatrix parity_operator(Spin j1, Spin j2);

/// max |R U R^+ - U|
double commutation_residual(const UnitaryMatrix& u, const UnitaryMatrix& r);

struct SymmetryLabels {
  std::vector<cplx> eigenvalues;  // v^+ R v per eigenvector
  std::vector<int> sector;        // index of the nearest of {1, -1, i, -i}
  double max_residual = 0.0;      // max ||R v - (v^+ R v) v||
};
SymmetryLabels symmetry_labels(const FloquetSpectrum& spec, const UnitaryMatrix& r);

/// Unitary part V of the generalized time reversal T = V K on each top:
/// V_i = exp(i pi Jy/2) exp(i pi Jx), i.e. exp(i pi Jx) acts first.
UnitaryMatrix time_reversal_operator(Spin j1, Spin j2);
/// The same factors multiplied in the opposite order,
/// exp(i pi Jx) exp(i pi Jy/2). Only a symmetry of U_T when alpha1 = alpha2 = 0.
UnitaryMatrix literal_time_reversal_operator(Spin j1, Spin j2);

/// max |V conj(U) V^+ - U^+|; small iff T U T^{-1} = U^{-1}.
double time_reversal_residual(const UnitaryMatrix& u, const UnitaryMatrix& v);
double time_reversal_check(const UnitaryMatrix& u, Spin j1, Spin j2);

}  // namespace ktops
