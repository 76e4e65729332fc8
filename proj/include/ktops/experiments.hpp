#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "ktops/output.hpp"
#include "ktops/rmt_ensemble.hpp"
#include "ktops/spectral_stats.hpp"

namespace ktops::experiments {

inline constexpr const char* kVersion = KTOPS_VERSION;

/// Physical parameters shared by the simulation runners.
struct TopParams {
  double j1 = 10.0;
  double j2 = 10.0;
  double k = 3.0;
  double epsilon = 0.1;
  double alpha1 = 0.47;
  double alpha2 = 0.47;
};

struct PlateauStats {
  double mean = 0.0;
  double stddev = 0.0;
  int window_start = 0;  // statistics cover t = window_start + 1 .. steps
  int samples = 0;
};

/// mean and population standard deviation of values[window_start + 1 ..]
PlateauStats plateau(const std::vector<double>& values, int window_start);

// ---- evolve ---------------------------------------------------------------

enum class InitialState { product, maximal };

struct EvolveConfig {
  TopParams top;
  int steps = 4000;
  InitialState initial = InitialState::product;
  double theta = 1.7;  // coherent-state polar angle, both tops
  double phi = -0.5;   // coherent-state azimuth, both tops
  int window_start = -1;  // -1: steps / 2
  int dim_cap = 4000;
};

struct EvolveResult {
  int n_dim = 0;
  int m_dim = 0;
  std::vector<double> sv;
  std::vector<double> sr;
  PlateauStats sv_plateau;
  PlateauStats sr_plateau;
  double ln_06n = 0.0;    // ln(0.6 N)
  double ln_gamma_n = 0.0;  // ln(gamma(M/N) N)
  double ln_n = 0.0;
  double sr_rmt = 0.0;    // 1 - (M + N + 1)/(MN + 2)
  double one_minus_2_over_n = 0.0;
  double one_minus_1_over_n = 0.0;
  int renormalizations = 0;
};

EvolveResult run_evolve(const EvolveConfig& cfg);
void write_evolve(const std::filesystem::path& path, const EvolveConfig& cfg, const EvolveResult& r);

// ---- eigenstates ----------------------------------------------------------

struct EigenstatesConfig {
  TopParams top{6.0, 6.0, 9.0, 10.0, 0.47, 0.47};  // j2 is derived from each Q
  std::vector<double> q_list{1.0, 2.0, 3.0, 4.0};
  bool with_parity_variant = false;  // also run alpha1 = alpha2 = 0
  int trials = 2000;
  EnsembleKind ensemble = EnsembleKind::real;
  std::uint64_t seed = 20021;
  int dim_cap = 4000;
};

struct EigenstatesRow {
  double q = 0.0;
  int n_dim = 0;
  int m_dim = 0;
  double alpha1 = 0.0;
  double alpha2 = 0.0;
  MeanEntropies kicked_top;
  MeanEntropies monte_carlo;
  double gamma = 0.0;
  double theory_sv = 0.0;  // ln(gamma N)
  double theory_sr = 0.0;  // 1 - (M + N + 1)/(MN + 2)
  double ln_n = 0.0;
};

std::vector<EigenstatesRow> run_eigenstates(const EigenstatesConfig& cfg);
void write_eigenstates(const std::filesystem::path& path, const EigenstatesConfig& cfg,
                       const std::vector<EigenstatesRow>& rows);

// ---- rdm-spectrum ---------------------------------------------------------

struct RdmSpectrumConfig {
  TopParams top{10.0, 10.0, 9.0, 10.0, 0.47, 0.47};
  std::vector<double> q_list{1.0, 2.0};
  int bins = 60;
  int trials = 500;
  EnsembleKind ensemble = EnsembleKind::real;
  std::uint64_t seed = 20021;
  int curve_points = 400;
  int dim_cap = 4000;
};

struct RdmSpectrumEntry {
  double q = 0.0;
  int n_dim = 0;
  int m_dim = 0;
  double lambda_min = 0.0;
  double lambda_max = 0.0;
  RdmHistogram kicked_top;
  RdmHistogram monte_carlo;
  std::vector<double> curve_lambda;
  std::vector<double> curve_density;
};

std::vector<RdmSpectrumEntry> run_rdm_spectrum(const RdmSpectrumConfig& cfg);
void write_rdm_spectrum(const std::filesystem::path& path, const RdmSpectrumConfig& cfg,
                        const std::vector<RdmSpectrumEntry>& entries);

// ---- theory ---------------------------------------------------------------

struct TheoryConfig {
  std::vector<double> q_list{1.0, 1.5, 2.0, 4.0, 8.0, 32.0};
  int n_dim = 33;
};

struct TheoryRow {
  double q = 0.0;
  int n_dim = 0;
  double m_dim = 0.0;  // Q N, not necessarily integral
  double gamma = 0.0;
  double ln_gamma_n = 0.0;
  double entropy_quadrature = 0.0;
  double lambda_min = 0.0;
  double lambda_max = 0.0;
  double sr = 0.0;  // 1 - (M + N + 1)/(MN + 2) at M = Q N
};

std::vector<TheoryRow> run_theory(const TheoryConfig& cfg);
void write_theory(const std::filesystem::path& path, const TheoryConfig& cfg, const std::vector<TheoryRow>& rows);

// ---- nnsd -----------------------------------------------------------------

enum class NnsdDiagnostic { none, picket_fence, poisson };

struct NnsdConfig {
  TopParams top{6.0, 25.5, 9.0, 10.0, 0.47, 0.47};
  int bins = 30;
  double s_max = 4.0;
  bool split_parity = false;
  NnsdDiagnostic diagnostic = NnsdDiagnostic::none;
  std::uint64_t seed = 20021;  // poisson diagnostic only
  int dim_cap = 4000;
};

struct NnsdRun {
  int dim = 0;
  NnsdResult result;
  bool sectors_split = false;
  std::vector<std::string> warnings;
};

NnsdRun run_nnsd(const NnsdConfig& cfg);
void write_nnsd(const std::filesystem::path& path, const NnsdConfig& cfg, const NnsdRun& run);

// ---- helpers shared with the CLI and tests --------------------------------

/// M = Q N; throws InvalidArgument unless it is an integer (within 1e-9) and Q >= 1.
int second_dimension(int n_dim, double q);
/// Throws DimensionCapExceeded when d > cap.
void check_dim_cap(long d, int cap);
std::string to_string(InitialState s);
InitialState initial_state_from_string(const std::string& s);
std::string to_string(NnsdDiagnostic d);
NnsdDiagnostic diagnostic_from_string(const std::string& s);

}  // namespace ktops::experiments
