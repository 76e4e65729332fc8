// Command-line front end for the coupled-kicked-top experiments.
//
// Exit codes: 0 success, 1 I/O failure, 2 invalid arguments,
// 3 dimension cap exceeded, 4 numerical failure.

#include <exception>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "ktops/experiments.hpp"

namespace ex = ktops::experiments;

namespace {

constexpr int kExitIo = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitDimCap = 3;
constexpr int kExitNumerical = 4;

void add_top_flags(CLI::App* cmd, ex::TopParams& top, bool with_j2) {
  cmd->add_option("--j1", top.j1, "spin of the first top (half-integer)")->capture_default_str();
  if (with_j2) cmd->add_option("--j2", top.j2, "spin of the second top (half-integer, 2j2+1 >= 2j1+1)")->capture_default_str();
  cmd->add_option("--k", top.k, "kick strength")->capture_default_str();
  cmd->add_option("--epsilon", top.epsilon, "coupling strength")->capture_default_str();
  cmd->add_option("--alpha1", top.alpha1, "parity-breaking phase of top 1")->capture_default_str();
  cmd->add_option("--alpha2", top.alpha2, "parity-breaking phase of top 2")->capture_default_str();
}

void add_ensemble_flag(CLI::App* cmd, std::string& ensemble) {
  cmd->add_option("--ensemble", ensemble, "random-state ensemble for the Monte Carlo comparison")
      ->check(CLI::IsMember({"real", "complex"}))
      ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ktops: entanglement statistics of coupled kicked tops versus random-matrix predictions"};
  app.require_subcommand(1);
  std::string out;
  int dim_cap = 4000;

  ex::EvolveConfig evolve_cfg;
  std::string initial = "product";
  auto* evolve = app.add_subcommand("evolve", "entropy time series S_V(t), S_R(t) under the Floquet map");
  add_top_flags(evolve, evolve_cfg.top, true);
  evolve->add_option("--steps", evolve_cfg.steps, "number of kicks")->capture_default_str();
  evolve->add_option("--initial", initial, "initial state")->check(CLI::IsMember({"product", "maximal"}))->capture_default_str();
  evolve->add_option("--theta", evolve_cfg.theta, "coherent-state polar angle (both tops)")->capture_default_str();
  evolve->add_option("--phi", evolve_cfg.phi, "coherent-state azimuth (both tops)")->capture_default_str();
  evolve->add_option("--window-start", evolve_cfg.window_start, "plateau window starts after this step (-1: steps/2)")
      ->capture_default_str();
  evolve->footer("CSV columns: t, s_v, s_r. JSON: plateau mean/stddev and reference values.");

  ex::EigenstatesConfig eig_cfg;
  std::string eig_ensemble = "real";
  std::uint64_t eig_seed = eig_cfg.seed;
  auto* eig = app.add_subcommand("eigenstates", "spectral average of eigenstate entanglement over a Q = M/N sweep");
  add_top_flags(eig, eig_cfg.top, false);
  eig->add_option("--q-list", eig_cfg.q_list, "comma-separated Q values (Q*N must be integral)")->delimiter(',');
  eig->add_flag("--with-parity-variant", eig_cfg.with_parity_variant, "also run alpha1 = alpha2 = 0");
  eig->add_option("--trials", eig_cfg.trials, "random states per Q for the Monte Carlo comparison")->capture_default_str();
  eig->add_option("--seed", eig_seed, "Monte Carlo seed")->capture_default_str();
  add_ensemble_flag(eig, eig_ensemble);
  eig->footer(
      "CSV columns: q, n, m, alpha1, alpha2, mean_sv, se_sv, mean_sr, se_sr, gamma, theory_sv, theory_sr, ln_n, "
      "mc_mean_sv, mc_se_sv, mc_mean_sr, mc_se_sr.");

  ex::RdmSpectrumConfig rdm_cfg;
  std::string rdm_ensemble = "real";
  std::uint64_t rdm_seed = rdm_cfg.seed;
  auto* rdm = app.add_subcommand("rdm-spectrum", "pooled eigenstate RDM eigenvalue histograms against the MP density");
  add_top_flags(rdm, rdm_cfg.top, false);
  rdm->add_option("--q-list", rdm_cfg.q_list, "comma-separated Q values (Q*N must be integral)")->delimiter(',');
  rdm->add_option("--bins", rdm_cfg.bins, "histogram bins over [0, 1.2 lambda_max]")->capture_default_str();
  rdm->add_option("--trials", rdm_cfg.trials, "random states per Q for the Monte Carlo histogram")->capture_default_str();
  rdm->add_option("--seed", rdm_seed, "Monte Carlo seed")->capture_default_str();
  add_ensemble_flag(rdm, rdm_ensemble);
  rdm->footer(
      "CSV columns: q, bin_lo, bin_hi, kicked_top_density, rmt_density, theory_density. "
      "<out>_curve.csv: q, lambda, density. JSON: l1 distances and support leakage.");

  ex::TheoryConfig theory_cfg;
  auto* theory = app.add_subcommand("theory", "gamma(Q), ln(gamma N), MP support edges and mean linear entropy");
  theory->add_option("--q-list", theory_cfg.q_list, "comma-separated Q values")->delimiter(',');
  theory->add_option("--n", theory_cfg.n_dim, "subsystem dimension N")->capture_default_str();
  theory->footer("CSV columns: q, n, m, gamma, ln_gamma_n, entropy_quadrature, lambda_min, lambda_max, s_r.");

  ex::NnsdConfig nnsd_cfg;
  std::string diagnostic = "none";
  std::uint64_t nnsd_seed = nnsd_cfg.seed;
  auto* nnsd = app.add_subcommand("nnsd", "nearest-neighbour spacing distribution of the Floquet eigenangles");
  add_top_flags(nnsd, nnsd_cfg.top, true);
  nnsd->add_option("--bins", nnsd_cfg.bins, "histogram bins over [0, 4)")->capture_default_str();
  nnsd->add_flag("--split-parity", nnsd_cfg.split_parity, "split spacings by parity sector (alpha = 0 only)");
  nnsd->add_option("--diagnostic", diagnostic, "replace the spectrum by a synthetic control")
      ->check(CLI::IsMember({"none", "picket-fence", "poisson"}))
      ->capture_default_str();
  nnsd->add_option("--seed", nnsd_seed, "seed for the poisson diagnostic")->capture_default_str();
  nnsd->footer("CSV columns: s_lo, s_hi, density, wigner_surmise. <out>_spacings.csv: index, spacing.");

  for (auto* cmd : {evolve, eig, rdm, theory, nnsd}) {
    cmd->add_option("--out", out, "output CSV path (a .json summary is written alongside)");
    cmd->add_option("--dim-cap", dim_cap, "refuse Hilbert spaces larger than this")->capture_default_str();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInvalid;
  }

  try {
    if (*evolve) {
      evolve_cfg.initial = ex::initial_state_from_string(initial);
      evolve_cfg.dim_cap = dim_cap;
      const auto r = ex::run_evolve(evolve_cfg);
      const std::string path = out.empty() ? "evolve.csv" : out;
      ex::write_evolve(path, evolve_cfg, r);
      std::cout << "N = " << r.n_dim << ", M = " << r.m_dim << "\n"
                << "plateau S_V = " << r.sv_plateau.mean << " +- " << r.sv_plateau.stddev
                << "   (ln 0.6N = " << r.ln_06n << ", ln N = " << r.ln_n << ")\n"
                << "plateau S_R = " << r.sr_plateau.mean << " +- " << r.sr_plateau.stddev
                << "   (1-2/N = " << r.one_minus_2_over_n << ", 1-1/N = " << r.one_minus_1_over_n << ")\n"
                << "wrote " << path << "\n";
    } else if (*eig) {
      eig_cfg.ensemble = ktops::ensemble_kind_from_string(eig_ensemble);
      eig_cfg.seed = eig_seed;
      eig_cfg.dim_cap = dim_cap;
      const auto rows = ex::run_eigenstates(eig_cfg);
      const std::string path = out.empty() ? "eigenstates.csv" : out;
      ex::write_eigenstates(path, eig_cfg, rows);
      for (const auto& r : rows) {
        std::cout << "Q = " << r.q << " alpha = " << r.alpha1 << ": <S_V> = " << r.kicked_top.mean_sv
                  << "  ln(gamma N) = " << r.theory_sv << "  RMT MC = " << r.monte_carlo.mean_sv << "\n";
      }
      std::cout << "wrote " << path << "\n";
    } else if (*rdm) {
      rdm_cfg.ensemble = ktops::ensemble_kind_from_string(rdm_ensemble);
      rdm_cfg.seed = rdm_seed;
      rdm_cfg.dim_cap = dim_cap;
      const auto entries = ex::run_rdm_spectrum(rdm_cfg);
      const std::string path = out.empty() ? "rdm_spectrum.csv" : out;
      ex::write_rdm_spectrum(path, rdm_cfg, entries);
      for (const auto& e : entries) {
        std::cout << "Q = " << e.q << ": l1(kicked top) = " << e.kicked_top.l1_distance
                  << "  l1(RMT) = " << e.monte_carlo.l1_distance
                  << "  outside support = " << e.kicked_top.outside_support_fraction << "\n";
      }
      std::cout << "wrote " << path << "\n";
    } else if (*theory) {
      const auto rows = ex::run_theory(theory_cfg);
      const std::string path = out.empty() ? "theory.csv" : out;
      ex::write_theory(path, theory_cfg, rows);
      for (const auto& r : rows) {
        std::cout << "Q = " << r.q << ": gamma = " << r.gamma << "  ln(gamma N) = " << r.ln_gamma_n << "\n";
      }
      std::cout << "wrote " << path << "\n";
    } else if (*nnsd) {
      nnsd_cfg.diagnostic = ex::diagnostic_from_string(diagnostic);
      nnsd_cfg.seed = nnsd_seed;
      nnsd_cfg.dim_cap = dim_cap;
      const auto run = ex::run_nnsd(nnsd_cfg);
      const std::string path = out.empty() ? "nnsd.csv" : out;
      ex::write_nnsd(path, nnsd_cfg, run);
      for (const auto& w : run.warnings) std::cerr << "warning: " << w << "\n";
      std::cout << "d = " << run.dim << ": KS distance to Wigner surmise = " << run.result.ks_distance
                << ", mean spacing = " << run.result.mean_spacing << "\nwrote " << path << "\n";
    }
  } catch (const ktops::InvalidArgument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const ktops::DimensionCapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDimCap;
  } catch (const ktops::NumericalError& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  }
  return 0;
}
