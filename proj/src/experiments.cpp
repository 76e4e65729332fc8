#include "ktops/experiments.hpp"

#include <cmath>
#include <exception>
#include <numbers>
#include <random>
#include <string>

#include "json.hpp"
#include "ktops/coupled_tops.hpp"
#include "ktops/entanglement.hpp"

namespace ktops::experiments {

using output::format_number;
using output::Metadata;
using json = nlohmann::json;

namespace {

Metadata base_metadata(const std::string& subcommand) {
  return {{"artifact", "ktops"}, {"artifact_version", kVersion}, {"subcommand", subcommand}};
}

void add(Metadata& meta, const std::string& key, double v) { meta.emplace_back(key, format_number(v)); }
void add(Metadata& meta, const std::string& key, const std::string& v) { meta.emplace_back(key, v); }

void add_top(Metadata& meta, const TopParams& t, bool include_j2 = true) {
  add(meta, "j1", t.j1);
  if (include_j2) add(meta, "j2", t.j2);
  add(meta, "k", t.k);
  add(meta, "epsilon", t.epsilon);
  add(meta, "alpha1", t.alpha1);
  add(meta, "alpha2", t.alpha2);
}

std::string join_numbers(const std::vector<double>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + format_number(xs[i]);
  return s;
}

json metadata_json(const Metadata& meta) {
  json j = json::object();
  for (const auto& [k, v] : meta) j[k] = v;
  return j;
}

void write_summary(const std::filesystem::path& csv_path, const Metadata& meta, json results) {
  json doc;
  doc["metadata"] = metadata_json(meta);
  doc["results"] = std::move(results);
  output::write_text(output::companion_json_path(csv_path), doc.dump(2) + "\n");
}

TopConfig make_top(const TopParams& t) {
  return TopConfig(Spin::from_value(t.j1), Spin::from_value(t.j2), t.k, t.epsilon, t.alpha1, t.alpha2);
}

json entropies_json(const MeanEntropies& m) {
  return {{"mean_sv", m.mean_sv}, {"se_sv", m.se_sv}, {"mean_sr", m.mean_sr}, {"se_sr", m.se_sr},
          {"samples", m.samples}};
}

// Runs body(i) for i in [0, count) in parallel and rethrows the first exception.
template <typename Body>
void parallel_points(int count, Body body) {
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(count));
#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < count; ++i) {
    try {
      body(i);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace

PlateauStats plateau(const std::vector<double>& values, int window_start) {
  PlateauStats p;
  p.window_start = window_start;
  if (values.empty()) return p;
  const std::size_t first = std::min(values.size() - 1, static_cast<std::size_t>(std::max(window_start + 1, 0)));
  const double n = static_cast<double>(values.size() - first);
  double sum = 0.0;
  for (std::size_t i = first; i < values.size(); ++i) sum += values[i];
  p.mean = sum / n;
  double ss = 0.0;
  for (std::size_t i = first; i < values.size(); ++i) ss += (values[i] - p.mean) * (values[i] - p.mean);
  p.stddev = std::sqrt(ss / n);
  p.samples = static_cast<int>(n);
  return p;
}

int second_dimension(int n_dim, double q) {
  if (!(q >= 1.0) || !std::isfinite(q)) throw InvalidArgument("Q must be >= 1, got " + format_number(q));
  const double m = q * n_dim;
  const double rounded = std::round(m);
  if (std::abs(m - rounded) > 1e-9 || rounded > 1e9) {
    throw InvalidArgument("M = Q*N = " + format_number(m) + " is not an integer");
  }
  return static_cast<int>(rounded);
}

void check_dim_cap(long d, int cap) {
  if (d > cap) {
    throw DimensionCapExceeded("Hilbert-space dimension " + std::to_string(d) + " exceeds --dim-cap " +
                               std::to_string(cap));
  }
}

std::string to_string(InitialState s) { return s == InitialState::product ? "product" : "maximal"; }

InitialState initial_state_from_string(const std::string& s) {
  if (s == "product") return InitialState::product;
  if (s == "maximal") return InitialState::maximal;
  throw InvalidArgument("initial state must be 'product' or 'maximal', got '" + s + "'");
}

std::string to_string(NnsdDiagnostic d) {
  switch (d) {
    case NnsdDiagnostic::none: return "none";
    case NnsdDiagnostic::picket_fence: return "picket-fence";
    case NnsdDiagnostic::poisson: return "poisson";
  }
  return "none";
}

NnsdDiagnostic diagnostic_from_string(const std::string& s) {
  if (s == "none") return NnsdDiagnostic::none;
  if (s == "picket-fence") return NnsdDiagnostic::picket_fence;
  if (s == "poisson") return NnsdDiagnostic::poisson;
  throw InvalidArgument("diagnostic must be none, picket-fence or poisson, got '" + s + "'");
}

// ---- evolve ---------------------------------------------------------------

EvolveResult run_evolve(const EvolveConfig& cfg) {
  if (cfg.steps < 0) throw InvalidArgument("--steps must be non-negative");
  const TopConfig top = make_top(cfg.top);
  check_dim_cap(top.total_dim(), cfg.dim_cap);
  const int window = cfg.window_start < 0 ? cfg.steps / 2 : cfg.window_start;
  if (cfg.steps > 0 && window >= cfg.steps) throw InvalidArgument("plateau window start must be < steps");

  const BipartiteState psi0 =
      cfg.initial == InitialState::product
          ? product_state(coherent_state(top.j1(), cfg.theta, cfg.phi), coherent_state(top.j2(), cfg.theta, cfg.phi))
          : maximally_entangled_state(top.n_dim(), top.m_dim());

  EvolveResult r;
  r.n_dim = top.n_dim();
  r.m_dim = top.m_dim();
  r.sv.reserve(static_cast<std::size_t>(cfg.steps) + 1);
  r.sr.reserve(static_cast<std::size_t>(cfg.steps) + 1);
  const UnitaryMatrix u = build_floquet(top);
  r.renormalizations = evolve_observed(u, psi0, cfg.steps, [&](int, const BipartiteState& psi) {
    const SchmidtSpectrum s = schmidt_spectrum(psi);
    r.sv.push_back(von_neumann_entropy(s));
    r.sr.push_back(linear_entropy(s));
  });
  r.sv_plateau = plateau(r.sv, window);
  r.sr_plateau = plateau(r.sr, window);
  const double n = r.n_dim;
  r.ln_06n = std::log(0.6 * n);
  r.ln_gamma_n = std::log(gamma_factor(static_cast<double>(r.m_dim) / r.n_dim) * n);
  r.ln_n = std::log(n);
  r.sr_rmt = mean_linear_entropy(r.n_dim, r.m_dim);
  r.one_minus_2_over_n = 1.0 - 2.0 / n;
  r.one_minus_1_over_n = 1.0 - 1.0 / n;
  return r;
}

void write_evolve(const std::filesystem::path& path, const EvolveConfig& cfg, const EvolveResult& r) {
  Metadata meta = base_metadata("evolve");
  add_top(meta, cfg.top);
  add(meta, "initial", to_string(cfg.initial));
  add(meta, "theta", cfg.theta);
  add(meta, "phi", cfg.phi);
  add(meta, "steps", cfg.steps);
  add(meta, "window_start", r.sv_plateau.window_start);
  add(meta, "dim_cap", cfg.dim_cap);
  add(meta, "N", r.n_dim);
  add(meta, "M", r.m_dim);

  output::CsvTable table{{"t", "s_v", "s_r"}, {}};
  for (std::size_t t = 0; t < r.sv.size(); ++t) table.add_row({static_cast<double>(t), r.sv[t], r.sr[t]});
  output::write_csv(path, meta, table);

  json res = {
      {"plateau_sv", {{"mean", r.sv_plateau.mean}, {"stddev", r.sv_plateau.stddev}, {"samples", r.sv_plateau.samples}}},
      {"plateau_sr", {{"mean", r.sr_plateau.mean}, {"stddev", r.sr_plateau.stddev}, {"samples", r.sr_plateau.samples}}},
      {"reference",
       {{"ln_0.6N", r.ln_06n},
        {"ln_gammaN", r.ln_gamma_n},
        {"ln_N", r.ln_n},
        {"sr_rmt", r.sr_rmt},
        {"1-2/N", r.one_minus_2_over_n},
        {"1-1/N", r.one_minus_1_over_n}}},
      {"renormalizations", r.renormalizations}};
  write_summary(path, meta, std::move(res));
}

// ---- eigenstates ----------------------------------------------------------

std::vector<EigenstatesRow> run_eigenstates(const EigenstatesConfig& cfg) {
  if (cfg.q_list.empty()) throw InvalidArgument("--q-list must not be empty");
  if (cfg.trials < 2) throw InvalidArgument("--trials must be >= 2 for standard errors");
  const Spin j1 = Spin::from_value(cfg.top.j1);
  const int n = j1.dim();

  struct Point {
    double q;
    int m;
    double a1;
    double a2;
  };
  std::vector<Point> points;
  for (double q : cfg.q_list) {
    const int m = second_dimension(n, q);
    check_dim_cap(static_cast<long>(n) * m, cfg.dim_cap);
    points.push_back({q, m, cfg.top.alpha1, cfg.top.alpha2});
    if (cfg.with_parity_variant) points.push_back({q, m, 0.0, 0.0});
  }

  std::vector<EigenstatesRow> rows(points.size());
  parallel_points(static_cast<int>(points.size()), [&](int i) {
    const Point& p = points[i];
    const TopConfig top(j1, Spin(p.m - 1), cfg.top.k, cfg.top.epsilon, p.a1, p.a2);
    const FloquetSpectrum spec = diagonalize_floquet(build_floquet(top));
    EigenstatesRow& row = rows[i];
    row.q = p.q;
    row.n_dim = n;
    row.m_dim = p.m;
    row.alpha1 = p.a1;
    row.alpha2 = p.a2;
    row.kicked_top = eigenstate_entanglement_average(spec, n, p.m);
    // The random-state comparison depends on (N, M) only, so both alpha variants share it.
    row.monte_carlo =
        monte_carlo_mean_entropies(n, p.m, cfg.ensemble, cfg.trials, derive_seed(cfg.seed, static_cast<std::uint64_t>(p.m)));
    row.gamma = gamma_factor(static_cast<double>(p.m) / n);
    row.theory_sv = std::log(row.gamma * n);
    row.theory_sr = mean_linear_entropy(n, p.m);
    row.ln_n = std::log(static_cast<double>(n));
  });
  return rows;
}

void write_eigenstates(const std::filesystem::path& path, const EigenstatesConfig& cfg,
                       const std::vector<EigenstatesRow>& rows) {
  Metadata meta = base_metadata("eigenstates");
  add_top(meta, cfg.top, false);
  add(meta, "q_list", join_numbers(cfg.q_list));
  add(meta, "with_parity_variant", cfg.with_parity_variant ? "true" : "false");
  add(meta, "trials", cfg.trials);
  add(meta, "ensemble", std::string(to_string(cfg.ensemble)));
  add(meta, "seed", std::to_string(cfg.seed));
  add(meta, "dim_cap", cfg.dim_cap);

  output::CsvTable table{{"q", "n", "m", "alpha1", "alpha2", "mean_sv", "se_sv", "mean_sr", "se_sr", "gamma",
                          "theory_sv", "theory_sr", "ln_n", "mc_mean_sv", "mc_se_sv", "mc_mean_sr", "mc_se_sr"},
                         {}};
  json res = json::array();
  for (const auto& r : rows) {
    table.add_row({r.q, static_cast<double>(r.n_dim), static_cast<double>(r.m_dim), r.alpha1, r.alpha2,
                   r.kicked_top.mean_sv, r.kicked_top.se_sv, r.kicked_top.mean_sr, r.kicked_top.se_sr, r.gamma,
                   r.theory_sv, r.theory_sr, r.ln_n, r.monte_carlo.mean_sv, r.monte_carlo.se_sv, r.monte_carlo.mean_sr,
                   r.monte_carlo.se_sr});
    res.push_back({{"q", r.q},
                   {"m", r.m_dim},
                   {"alpha1", r.alpha1},
                   {"alpha2", r.alpha2},
                   {"kicked_top", entropies_json(r.kicked_top)},
                   {"monte_carlo", entropies_json(r.monte_carlo)},
                   {"gamma", r.gamma},
                   {"theory_sv", r.theory_sv},
                   {"theory_sr", r.theory_sr}});
  }
  output::write_csv(path, meta, table);
  write_summary(path, meta, std::move(res));
}

// ---- rdm-spectrum ---------------------------------------------------------

std::vector<RdmSpectrumEntry> run_rdm_spectrum(const RdmSpectrumConfig& cfg) {
  if (cfg.q_list.empty()) throw InvalidArgument("--q-list must not be empty");
  if (cfg.trials < 1) throw InvalidArgument("--trials must be >= 1");
  if (cfg.bins < 2) throw InvalidArgument("--bins must be >= 2");
  if (cfg.curve_points < 2) throw InvalidArgument("curve needs at least 2 points");
  const Spin j1 = Spin::from_value(cfg.top.j1);
  const int n = j1.dim();
  std::vector<int> ms;
  for (double q : cfg.q_list) {
    ms.push_back(second_dimension(n, q));
    check_dim_cap(static_cast<long>(n) * ms.back(), cfg.dim_cap);
  }

  std::vector<RdmSpectrumEntry> entries(cfg.q_list.size());
  parallel_points(static_cast<int>(entries.size()), [&](int i) {
    const int m = ms[i];
    const TopConfig top(j1, Spin(m - 1), cfg.top.k, cfg.top.epsilon, cfg.top.alpha1, cfg.top.alpha2);
    const FloquetSpectrum spec = diagonalize_floquet(build_floquet(top));
    RdmSpectrumEntry& e = entries[i];
    e.q = cfg.q_list[i];
    e.n_dim = n;
    e.m_dim = m;
    const MPDensity density(n, static_cast<double>(m) / n);
    e.lambda_min = density.lambda_min();
    e.lambda_max = density.lambda_max();
    e.kicked_top = pooled_eigenstate_rdm_spectrum(spec, n, m, cfg.bins);
    e.monte_carlo = monte_carlo_rdm_histogram(n, m, cfg.ensemble, cfg.trials, cfg.bins,
                                              derive_seed(cfg.seed, static_cast<std::uint64_t>(m)));
    const double hi = 1.2 * density.lambda_max();
    for (int p = 0; p < cfg.curve_points; ++p) {
      const double lambda = hi * (p + 0.5) / cfg.curve_points;
      e.curve_lambda.push_back(lambda);
      e.curve_density.push_back(mp_density_at(density, lambda));
    }
  });
  return entries;
}

void write_rdm_spectrum(const std::filesystem::path& path, const RdmSpectrumConfig& cfg,
                        const std::vector<RdmSpectrumEntry>& entries) {
  Metadata meta = base_metadata("rdm-spectrum");
  add_top(meta, cfg.top, false);
  add(meta, "q_list", join_numbers(cfg.q_list));
  add(meta, "bins", cfg.bins);
  add(meta, "trials", cfg.trials);
  add(meta, "ensemble", std::string(to_string(cfg.ensemble)));
  add(meta, "seed", std::to_string(cfg.seed));
  add(meta, "curve_points", cfg.curve_points);
  add(meta, "dim_cap", cfg.dim_cap);

  output::CsvTable hist{{"q", "bin_lo", "bin_hi", "kicked_top_density", "rmt_density", "theory_density"}, {}};
  output::CsvTable curve{{"q", "lambda", "density"}, {}};
  json res = json::array();
  for (const auto& e : entries) {
    const Histogram& kt = e.kicked_top.histogram;
    for (int b = 0; b < kt.bins(); ++b) {
      hist.add_row({e.q, kt.edges[b], kt.edges[b + 1], kt.density[b], e.monte_carlo.histogram.density[b],
                    e.kicked_top.theory_mass[b] / kt.width()});
    }
    for (std::size_t p = 0; p < e.curve_lambda.size(); ++p) curve.add_row({e.q, e.curve_lambda[p], e.curve_density[p]});
    res.push_back({{"q", e.q},
                   {"n", e.n_dim},
                   {"m", e.m_dim},
                   {"lambda_min", e.lambda_min},
                   {"lambda_max", e.lambda_max},
                   {"l1_kicked_top", e.kicked_top.l1_distance},
                   {"l1_rmt", e.monte_carlo.l1_distance},
                   {"outside_support_kicked_top", e.kicked_top.outside_support_fraction},
                   {"below_support_kicked_top", e.kicked_top.below_support_fraction},
                   {"outside_support_rmt", e.monte_carlo.outside_support_fraction}});
  }
  output::write_csv(path, meta, hist);
  output::write_csv(output::sibling_path(path, "curve"), meta, curve);
  write_summary(path, meta, std::move(res));
}

// ---- theory ---------------------------------------------------------------

std::vector<TheoryRow> run_theory(const TheoryConfig& cfg) {
  if (cfg.q_list.empty()) throw InvalidArgument("--q-list must not be empty");
  if (cfg.n_dim < 1) throw InvalidArgument("N must be >= 1");
  std::vector<TheoryRow> rows;
  for (double q : cfg.q_list) {
    if (!(q >= 1.0) || !std::isfinite(q)) throw InvalidArgument("Q must be >= 1, got " + format_number(q));
    TheoryRow r;
    r.q = q;
    r.n_dim = cfg.n_dim;
    r.m_dim = q * cfg.n_dim;
    r.gamma = gamma_factor(q);
    r.ln_gamma_n = std::log(r.gamma * cfg.n_dim);
    const MPDensity density(cfg.n_dim, q);
    r.entropy_quadrature = entropy_bound_quadrature(density);
    r.lambda_min = density.lambda_min();
    r.lambda_max = density.lambda_max();
    const double n = cfg.n_dim;
    r.sr = 1.0 - (r.m_dim + n + 1.0) / (r.m_dim * n + 2.0);
    rows.push_back(r);
  }
  return rows;
}

void write_theory(const std::filesystem::path& path, const TheoryConfig& cfg, const std::vector<TheoryRow>& rows) {
  Metadata meta = base_metadata("theory");
  add(meta, "q_list", join_numbers(cfg.q_list));
  add(meta, "N", cfg.n_dim);
  output::CsvTable table{{"q", "n", "m", "gamma", "ln_gamma_n", "entropy_quadrature", "lambda_min", "lambda_max", "s_r"},
                         {}};
  json res = json::array();
  for (const auto& r : rows) {
    table.add_row({r.q, static_cast<double>(r.n_dim), r.m_dim, r.gamma, r.ln_gamma_n, r.entropy_quadrature,
                   r.lambda_min, r.lambda_max, r.sr});
    res.push_back({{"q", r.q}, {"gamma", r.gamma}, {"ln_gamma_n", r.ln_gamma_n}, {"s_r", r.sr}});
  }
  output::write_csv(path, meta, table);
  write_summary(path, meta, std::move(res));
}

// ---- nnsd -----------------------------------------------------------------

NnsdRun run_nnsd(const NnsdConfig& cfg) {
  if (cfg.bins < 1) throw InvalidArgument("--bins must be >= 1");
  const TopConfig top = make_top(cfg.top);
  const long d = top.total_dim();
  check_dim_cap(d, cfg.dim_cap);
  NnsdRun run;
  run.dim = static_cast<int>(d);

  if (cfg.diagnostic != NnsdDiagnostic::none) {
    RVector angles(d);
    std::mt19937_64 rng(cfg.seed);
    std::uniform_real_distribution<double> uniform(0.0, 2.0 * std::numbers::pi);
    for (long i = 0; i < d; ++i) {
      angles(i) = cfg.diagnostic == NnsdDiagnostic::picket_fence ? 2.0 * std::numbers::pi * i / d : uniform(rng);
    }
    run.result = nnsd(angles, cfg.bins, cfg.s_max);
    return run;
  }

  const bool parity_unbroken = cfg.top.alpha1 == 0.0 && cfg.top.alpha2 == 0.0;
  if (cfg.top.j1 == cfg.top.j2 && cfg.top.alpha1 == cfg.top.alpha2) {
    run.warnings.emplace_back("identical tops: exchange symmetry is present and its sectors are not split");
  }
  const UnitaryMatrix u = build_floquet(top);
  if (cfg.split_parity && parity_unbroken) {
    const UnitaryMatrix r = parity_operator(top.j1(), top.j2());
    const FloquetSpectrum spec = diagonalize_floquet(u, r);
    const SymmetryLabels labels = symmetry_labels(spec, r);
    run.result = nnsd_by_sector(spec.eigenangles, labels.sector, cfg.bins, cfg.s_max);
    run.sectors_split = true;
    return run;
  }
  if (cfg.split_parity) {
    run.warnings.emplace_back("parity is broken (alpha != 0); --split-parity ignored");
  } else if (parity_unbroken) {
    run.warnings.emplace_back("parity unbroken (alpha1 = alpha2 = 0) without --split-parity: spacings mix parity sectors");
  }
  run.result = nnsd(diagonalize_floquet(u).eigenangles, cfg.bins, cfg.s_max);
  return run;
}

void write_nnsd(const std::filesystem::path& path, const NnsdConfig& cfg, const NnsdRun& run) {
  Metadata meta = base_metadata("nnsd");
  add_top(meta, cfg.top);
  add(meta, "bins", cfg.bins);
  add(meta, "s_max", cfg.s_max);
  add(meta, "split_parity", cfg.split_parity ? "true" : "false");
  add(meta, "diagnostic", to_string(cfg.diagnostic));
  add(meta, "seed", std::to_string(cfg.seed));
  add(meta, "dim_cap", cfg.dim_cap);
  add(meta, "dim", run.dim);
  for (std::size_t i = 0; i < run.warnings.size(); ++i) add(meta, "warning" + std::to_string(i), run.warnings[i]);

  const Histogram& h = run.result.histogram;
  output::CsvTable table{{"s_lo", "s_hi", "density", "wigner_surmise"}, {}};
  for (int b = 0; b < h.bins(); ++b) table.add_row({h.edges[b], h.edges[b + 1], h.density[b], wigner_surmise_pdf(h.center(b))});
  output::CsvTable spacings{{"index", "spacing"}, {}};
  for (std::size_t i = 0; i < run.result.spacings.size(); ++i) {
    spacings.add_row({static_cast<double>(i), run.result.spacings[i]});
  }
  output::write_csv(path, meta, table);
  output::write_csv(output::sibling_path(path, "spacings"), meta, spacings);
  write_summary(path, meta,
                {{"ks_distance", run.result.ks_distance},
                 {"mean_spacing", run.result.mean_spacing},
                 {"sectors_split", run.sectors_split},
                 {"warnings", run.warnings}});
}

}  // namespace ktops::experiments
