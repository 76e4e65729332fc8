#pragma once

#include <cstdint>
#include <functional>
#include <string_view>
#include <vector>

#include "ktops/coupled_tops.hpp"
#include "ktops/histogram.hpp"

namespace ktops {

/// Large-N eigenvalue density of an N-dimensional reduced density matrix of a
/// random pure state on C^N (x) C^M, Q = M/N >= 1:
///
///   f(lambda) = (N Q / 2 pi) sqrt((lambda_max - lambda)(lambda - lambda_min)) / lambda,
///   lambda_{min,max} = (1 + 1/Q -/+ 2/sqrt(Q)) / N.
///
/// f integrates to 1; N f(lambda) d lambda counts eigenvalues.
class MPDensity {
 public:
  MPDensity(int n_dim, double q_ratio);

  int n_dim() const { return n_; }
  double q_ratio() const { return q_; }
  double lambda_min() const { return lambda_min_; }
  double lambda_max() const { return lambda_max_; }

 private:
  int n_;
  double q_;
  double lambda_min_;
  double lambda_max_;
};

/// f(lambda); 0 outside [lambda_min, lambda_max], +inf at lambda = 0 when Q = 1.
double mp_density_at(const MPDensity& d, double lambda);

/// int_{lambda_min}^{lambda_max} f(lambda) g(lambda) d lambda restricted to
/// [lo, hi]. Uses lambda = lambda_min + w sin^2(u), which removes the square-root
/// endpoint behaviour and the 1/lambda pole at the origin for Q = 1.
/// Throws NumericalError if the error estimate exceeds `tolerance`.
double mp_integrate(const MPDensity& d, const std::function<double(double)>& g, double lo, double hi,
                    double tolerance = 1e-10);
double mp_integrate(const MPDensity& d, const std::function<double(double)>& g, double tolerance = 1e-10);

/// Mass of f on each histogram bin [edges[b], edges[b+1]).
std::vector<double> mp_bin_masses(const MPDensity& d, const std::vector<double>& edges);

/// -N int f(lambda) lambda ln(lambda) d lambda; equals ln(gamma(Q) N).
double entropy_bound_quadrature(const MPDensity& d);

/// gamma(Q) = Q/(Q+1) exp[Q / (2 (Q+1)^2) 3F2(1, 1, 3/2; 2, 3; 4Q/(Q+1)^2)]
double gamma_factor(double q_ratio);

/// Ensemble mean of the linear entropy, 1 - (M + N + 1) / (MN + 2).
double mean_linear_entropy(long n_dim, long m_dim);

enum class EnsembleKind { real, complex };

std::string_view to_string(EnsembleKind kind);
EnsembleKind ensemble_kind_from_string(std::string_view s);

/// Seed for independent stream `index` derived from a base seed. Monte Carlo
/// trial i always uses derive_seed(seed, i), so results do not depend on the
/// thread schedule.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

/// i.i.d. standard Gaussian amplitudes (real, or complex with independent real
/// and imaginary parts), normalized. Deterministic in `seed`.
BipartiteState sample_random_state(int n_dim, int m_dim, EnsembleKind kind, std::uint64_t seed);

/// Pooled Schmidt values of `trials` random states, histogrammed on
/// [0, 1.2 lambda_max] with lambda_max from MPDensity(N, M/N).
struct RdmHistogram {
  Histogram histogram;
  std::vector<double> theory_mass;  // mp_bin_masses on the same edges
  double l1_distance = 0.0;
  double outside_support_fraction = 0.0;  // pooled eigenvalues outside [lambda_min, lambda_max]
  double below_support_fraction = 0.0;    // pooled eigenvalues below lambda_min
};

/// Builds the histogram and its comparison against f for a pool of eigenvalues.
RdmHistogram compare_with_mp(const std::vector<double>& pooled, int n_dim, int m_dim, int bins);

RdmHistogram monte_carlo_rdm_histogram(int n_dim, int m_dim, EnsembleKind kind, int trials, int bins,
                                       std::uint64_t seed);

struct MeanEntropies {
  double mean_sv = 0.0;
  double se_sv = 0.0;
  double mean_sr = 0.0;
  double se_sr = 0.0;
  long samples = 0;
};

/// Sample mean and standard error (n-1 normalization) of paired entropy values.
MeanEntropies summarize_entropies(const std::vector<double>& sv, const std::vector<double>& sr);

MeanEntropies monte_carlo_mean_entropies(int n_dim, int m_dim, EnsembleKind kind, int trials, std::uint64_t seed);

}  // namespace ktops
