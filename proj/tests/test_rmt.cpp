#include <cmath>
#include <numbers>

#include "doctest.h"
#include "ktops/hypergeometric.hpp"
#include "ktops/histogram.hpp"
#include "ktops/rmt_ensemble.hpp"
#include "oracles.hpp"

using namespace ktops;

namespace {

// Entropy factor evaluated to 15 digits with an arbitrary-precision library.
struct GammaValue {
  double q;
  double gamma;
};
constexpr GammaValue kGamma[] = {
    {1.0, 0.606530659712633},  {1.5, 0.716531310573789},  {2.0, 0.778800783071405},
    {4.0, 0.882496902584595},  {8.0, 0.939413062813476},  {32.0, 0.984496437005408},
};

std::vector<double> log_grid(double lo, double hi, int points) {
  std::vector<double> out;
  for (int i = 0; i < points; ++i) out.push_back(lo * std::pow(hi / lo, i / (points - 1.0)));
  return out;
}

}  // namespace

TEST_CASE("3F2 series") {
  CHECK(hyp3f2_series(1, 1, 1.5, 2, 3, 0.0) == 1.0);
  CHECK(hyp3f2_series(1, 1, 1.5, 2, 3, 1.0) == doctest::Approx(8.0 * (std::log(2.0) - 0.5)).epsilon(1e-13));
  // 3F2(1, 1, 1; 2, 2; z) = Li2(z) / z and Li2(1) = pi^2 / 6 converges too slowly; use z = 1/2 instead,
  // Li2(1/2) = pi^2/12 - ln^2(2)/2.
  const double li2_half = std::numbers::pi * std::numbers::pi / 12.0 - 0.5 * std::log(2.0) * std::log(2.0);
  CHECK(hyp3f2_series(1, 1, 1, 2, 2, 0.5) == doctest::Approx(2.0 * li2_half).epsilon(1e-14));
  double prev = 0.0;
  for (double z = 0.0; z <= 1.0; z += 0.05) {
    const double v = hyp3f2_series(1, 1, 1.5, 2, 3, z);
    CHECK(v > prev);
    prev = v;
  }
  CHECK_THROWS_AS(hyp3f2_series(1, 1, 1.5, 2, 3, 1.01), InvalidArgument);
  CHECK_THROWS_AS(hyp3f2_series(1, 1, 1.5, 2, 3, -0.1), InvalidArgument);
  CHECK_THROWS_AS(hyp3f2_series(1, 1, 1.5, 0, 3, 0.5), InvalidArgument);
  CHECK_THROWS_AS(hyp3f2_series(1, 1, 1.5, -2, 3, 0.5), InvalidArgument);
  CHECK_THROWS_AS(hyp3f2_series(1, 1, 1, 2, 1, 1.0), InvalidArgument);
  CHECK_THROWS_AS(hyp3f2_series(1, 1, 1.5, 2, 3, 1.0, SeriesOptions{1e-14, 10}), NumericalError);
}

TEST_CASE("gamma factor matches high-precision values") {
  for (const auto& g : kGamma) {
    CAPTURE(g.q);
    CHECK(std::abs(gamma_factor(g.q) - g.gamma) <= 1e-8 * g.gamma);
  }
  CHECK(std::abs(gamma_factor(1e6) - 1.0) < 1e-3);
  CHECK_THROWS_AS(gamma_factor(0.5), InvalidArgument);
}

TEST_CASE("gamma factor agrees with direct quadrature of the entropy integral") {
  for (double q : log_grid(1.0, 100.0, 15)) {
    const MPDensity d(33, q);
    CAPTURE(q);
    CHECK(std::abs(entropy_bound_quadrature(d) - std::log(gamma_factor(q) * 33.0)) < 1e-8);
  }
}

TEST_CASE("MP support endpoints") {
  const MPDensity d(33, 4.0);
  CHECK(d.lambda_min() == doctest::Approx(0.25 / 33.0).epsilon(1e-15));
  CHECK(d.lambda_max() == doctest::Approx(2.25 / 33.0).epsilon(1e-15));
  const MPDensity one(10, 1.0);
  CHECK(one.lambda_min() == 0.0);
  CHECK(one.lambda_max() == doctest::Approx(0.4));
  CHECK(mp_density_at(d, 0.5 * d.lambda_min()) == 0.0);
  CHECK(mp_density_at(d, 1.5 * d.lambda_max()) == 0.0);
  CHECK(std::isinf(mp_density_at(one, 0.0)));
  CHECK_THROWS_AS(MPDensity(10, 0.9), InvalidArgument);
}

TEST_CASE("MP density is normalized with mean 1/N") {
  for (double q : log_grid(1.0, 100.0, 12)) {
    for (int n : {2, 13, 33}) {
      const MPDensity d(n, q);
      CAPTURE(q);
      CAPTURE(n);
      const double norm = mp_integrate(d, [](double) { return 1.0; });
      const double mean = mp_integrate(d, [](double l) { return l; });
      CHECK(std::abs(norm - 1.0) < 1e-10);
      CHECK(std::abs(mean - 1.0 / n) < 1e-10 / n);
      // independent midpoint-rule reference
      CHECK(std::abs(oracle::mp_midpoint(n, q, [](double) { return 1.0; }) - norm) < 1e-8);
      const double second = mp_integrate(d, [](double l) { return l * l; });
      CHECK(std::abs(oracle::mp_midpoint(n, q, [](double l) { return l * l; }) - second) < 1e-8 * second);
    }
  }
}

TEST_CASE("bin masses sum to one and match a midpoint reference") {
  const MPDensity d(21, 2.0);
  std::vector<double> edges;
  for (int b = 0; b <= 40; ++b) edges.push_back(1.2 * d.lambda_max() * b / 40.0);
  const std::vector<double> mass = mp_bin_masses(d, edges);
  double total = 0.0;
  for (double m : mass) total += m;
  CHECK(std::abs(total - 1.0) < 1e-10);
  for (int b = 0; b < 40; b += 7) {
    const double lo = edges[b], hi = edges[b + 1];
    const double ref = oracle::mp_midpoint(21, 2.0, [&](double l) { return l >= lo && l < hi ? 1.0 : 0.0; });
    CAPTURE(b);
    CHECK(std::abs(mass[b] - ref) < 1e-4);
  }
}

TEST_CASE("mean linear entropy closed form") {
  CHECK(mean_linear_entropy(2, 2) == doctest::Approx(1.0 - 5.0 / 6.0));
  CHECK(mean_linear_entropy(13, 13) == doctest::Approx(1.0 - 27.0 / 171.0));
  CHECK(mean_linear_entropy(3, 5) == doctest::Approx(mean_linear_entropy(5, 3)));
  CHECK(mean_linear_entropy(1, 7) == doctest::Approx(0.0));
}

TEST_CASE("ensemble kind parsing") {
  CHECK(ensemble_kind_from_string("real") == EnsembleKind::real);
  CHECK(ensemble_kind_from_string("complex") == EnsembleKind::complex);
  CHECK(to_string(EnsembleKind::complex) == "complex");
  CHECK_THROWS_AS(ensemble_kind_from_string("goe"), InvalidArgument);
}

TEST_CASE("random states are deterministic in the seed") {
  const BipartiteState a = sample_random_state(5, 8, EnsembleKind::complex, 42);
  const BipartiteState b = sample_random_state(5, 8, EnsembleKind::complex, 42);
  const BipartiteState c = sample_random_state(5, 8, EnsembleKind::complex, 43);
  CHECK(a.amplitudes() == b.amplitudes());
  CHECK((a.amplitudes() - c.amplitudes()).norm() > 0.1);
  const BipartiteState r = sample_random_state(5, 8, EnsembleKind::real, 42);
  CHECK(r.amplitudes().imag().cwiseAbs().maxCoeff() == 0.0);
  CHECK(derive_seed(1, 2) == derive_seed(1, 2));
  CHECK(derive_seed(1, 2) != derive_seed(1, 3));
  CHECK(derive_seed(1, 2) != derive_seed(2, 2));
}

TEST_CASE("Monte Carlo means against exact ensemble averages") {
  SUBCASE("linear entropy, both ensembles") {
    // The mean purity 1 - <S_R> is (N+M)/(NM+1) for complex states and
    // (N+M+1)/(NM+2) for real ones.
    const int n = 6, m = 11;
    const MeanEntropies re = monte_carlo_mean_entropies(n, m, EnsembleKind::real, 4000, 5);
    const MeanEntropies cx = monte_carlo_mean_entropies(n, m, EnsembleKind::complex, 4000, 5);
    CHECK(std::abs(re.mean_sr - mean_linear_entropy(n, m)) < 4.0 * re.se_sr);
    CHECK(std::abs(cx.mean_sr - (1.0 - (n + m) / (n * m + 1.0))) < 4.0 * cx.se_sr);
  }
  SUBCASE("von Neumann entropy of complex states against the exact mean") {
    for (auto [n, m] : {std::pair{2, 2}, std::pair{4, 9}, std::pair{8, 8}}) {
      const MeanEntropies cx = monte_carlo_mean_entropies(n, m, EnsembleKind::complex, 4000, 17);
      CAPTURE(n);
      CAPTURE(m);
      CHECK(std::abs(cx.mean_sv - oracle::page_mean_entropy(n, m)) < 4.0 * cx.se_sv);
    }
  }
  SUBCASE("standard error shrinks like 1/sqrt(trials)") {
    const MeanEntropies small = monte_carlo_mean_entropies(5, 5, EnsembleKind::real, 400, 9);
    const MeanEntropies large = monte_carlo_mean_entropies(5, 5, EnsembleKind::real, 6400, 9);
    CHECK(small.se_sv / large.se_sv == doctest::Approx(4.0).epsilon(0.15));
  }
  CHECK_THROWS_AS(monte_carlo_mean_entropies(5, 5, EnsembleKind::real, 1, 9), InvalidArgument);
}

TEST_CASE("summarize_entropies") {
  const MeanEntropies s = summarize_entropies({1.0, 2.0, 3.0}, {0.0, 0.0, 0.0});
  CHECK(s.mean_sv == doctest::Approx(2.0));
  CHECK(s.se_sv == doctest::Approx(1.0 / std::sqrt(3.0)));
  CHECK(s.se_sr == 0.0);
  CHECK(s.samples == 3);
  CHECK_THROWS_AS(summarize_entropies({1.0}, {1.0, 2.0}), InvalidArgument);
}

TEST_CASE("histogram") {
  const std::vector<double> samples{0.05, 0.15, 0.15, 0.95, 1.5, -0.2};
  const Histogram h = Histogram::build(samples, 0.0, 1.0, 10);
  CHECK(h.bins() == 10);
  CHECK(h.total == 6);
  CHECK(h.counts[0] == 1);
  CHECK(h.counts[1] == 2);
  CHECK(h.counts[9] == 1);
  CHECK(h.width() == doctest::Approx(0.1));
  CHECK(h.center(0) == doctest::Approx(0.05));
  CHECK(h.mass(1) == doctest::Approx(2.0 / 6.0));
  CHECK(h.density[1] == doctest::Approx(2.0 / 6.0 / 0.1));
  std::vector<double> ref(10, 0.0);
  ref[0] = 1.0;
  CHECK(h.l1_distance(ref) == doctest::Approx(5.0 / 6.0 + 2.0 / 6.0 + 1.0 / 6.0));
  CHECK_THROWS_AS(Histogram::build(samples, 1.0, 0.0, 10), InvalidArgument);
  CHECK_THROWS_AS(h.l1_distance(std::vector<double>(3, 0.0)), InvalidArgument);
}

TEST_CASE("random-state Schmidt spectra approach the MP density") {
  const RdmHistogram small = monte_carlo_rdm_histogram(16, 32, EnsembleKind::real, 200, 40, 1);
  const RdmHistogram large = monte_carlo_rdm_histogram(32, 64, EnsembleKind::real, 200, 40, 1);
  CHECK(large.l1_distance < small.l1_distance);
  CHECK(large.histogram.total == 200 * 32);
  double theory = 0.0;
  for (double m : large.theory_mass) theory += m;
  CHECK(theory == doctest::Approx(1.0).epsilon(1e-9));
}
