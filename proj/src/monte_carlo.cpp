#include "ktops/rmt_ensemble.hpp"

#include <cmath>

#include "ktops/kernels.hpp"

namespace ktops {

RdmHistogram compare_with_mp(const std::vector<double>& pooled, int n_dim, int m_dim, int bins) {
  if (bins < 2) throw InvalidArgument("histogram needs at least 2 bins");
  if (n_dim < 1 || m_dim < n_dim) throw InvalidArgument("compare_with_mp requires 1 <= N <= M");
  const MPDensity density(n_dim, static_cast<double>(m_dim) / n_dim);
  RdmHistogram out;
  out.histogram = Histogram::build(pooled, 0.0, 1.2 * density.lambda_max(), bins);
  out.theory_mass = mp_bin_masses(density, out.histogram.edges);
  out.l1_distance = out.histogram.l1_distance(out.theory_mass);
  long outside = 0;
  long below = 0;
  for (double lambda : pooled) {
    if (lambda < density.lambda_min()) ++below;
    if (lambda < density.lambda_min() || lambda > density.lambda_max()) ++outside;
  }
  const double total = pooled.empty() ? 1.0 : static_cast<double>(pooled.size());
  out.outside_support_fraction = static_cast<double>(outside) / total;
  out.below_support_fraction = static_cast<double>(below) / total;
  return out;
}

RdmHistogram monte_carlo_rdm_histogram(int n_dim, int m_dim, EnsembleKind kind, int trials, int bins,
                                       std::uint64_t seed) {
  if (trials < 1) throw InvalidArgument("monte_carlo_rdm_histogram requires trials >= 1");
  if (bins < 2) throw InvalidArgument("monte_carlo_rdm_histogram requires bins >= 2");
  const RMatrix spectra = kernels::random_state_spectra(n_dim, m_dim, kind, trials, seed, kernels::Exec::parallel);
  const std::vector<double> pooled(spectra.data(), spectra.data() + spectra.size());
  return compare_with_mp(pooled, n_dim, m_dim, bins);
}

MeanEntropies summarize_entropies(const std::vector<double>& sv, const std::vector<double>& sr) {
  if (sv.size() != sr.size()) throw InvalidArgument("entropy samples must be paired");
  MeanEntropies out;
  out.samples = static_cast<long>(sv.size());
  if (sv.empty()) return out;
  auto mean_se = [](const std::vector<double>& x, double& mean, double& se) {
    const double n = static_cast<double>(x.size());
    double sum = 0.0;
    for (double v : x) sum += v;
    mean = sum / n;
    if (x.size() < 2) {
      se = 0.0;
      return;
    }
    double ss = 0.0;
    for (double v : x) ss += (v - mean) * (v - mean);
    se = std::sqrt(ss / (n - 1.0) / n);
  };
  mean_se(sv, out.mean_sv, out.se_sv);
  mean_se(sr, out.mean_sr, out.se_sr);
  return out;
}

MeanEntropies monte_carlo_mean_entropies(int n_dim, int m_dim, EnsembleKind kind, int trials, std::uint64_t seed) {
  if (trials < 2) throw InvalidArgument("monte_carlo_mean_entropies requires trials >= 2");
  const RMatrix spectra = kernels::random_state_spectra(n_dim, m_dim, kind, trials, seed, kernels::Exec::parallel);
  const RMatrix ent = kernels::spectra_entropies(spectra, kernels::Exec::parallel);
  std::vector<double> sv(ent.cols());
  std::vector<double> sr(ent.cols());
  for (Eigen::Index c = 0; c < ent.cols(); ++c) {
    sv[c] = ent(0, c);
    sr[c] = ent(1, c);
  }
  return summarize_entropies(sv, sr);
}

}  // namespace ktops
