#include "ktops/rmt_ensemble.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <string>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "ktops/hypergeometric.hpp"

namespace ktops {

MPDensity::MPDensity(int n_dim, double q_ratio) : n_(n_dim), q_(q_ratio) {
  if (n_dim < 1) throw InvalidArgument("MPDensity requires N >= 1");
  if (!(q_ratio >= 1.0) || !std::isfinite(q_ratio)) throw InvalidArgument("MPDensity requires finite Q >= 1");
  const double base = 1.0 + 1.0 / q_ratio;
  const double spread = 2.0 / std::sqrt(q_ratio);
  // (1 - 1/sqrt(Q))^2 is the cancellation-free form of 1 + 1/Q - 2/sqrt(Q).
  const double root = 1.0 - 1.0 / std::sqrt(q_ratio);
  lambda_min_ = root * root / n_dim;
  lambda_max_ = (base + spread) / n_dim;
}

double mp_density_at(const MPDensity& d, double lambda) {
  const double lo = d.lambda_min();
  const double hi = d.lambda_max();
  if (lambda < lo || lambda > hi) return 0.0;
  if (lambda == 0.0) return std::numeric_limits<double>::infinity();
  return d.n_dim() * d.q_ratio() / (2.0 * std::numbers::pi) * std::sqrt((hi - lambda) * (lambda - lo)) / lambda;
}

double mp_integrate(const MPDensity& d, const std::function<double(double)>& g, double lo, double hi,
                    double tolerance) {
  const double lmin = d.lambda_min();
  const double w = d.lambda_max() - lmin;
  const double a = std::max(lo, lmin);
  const double b = std::min(hi, d.lambda_max());
  if (!(b > a)) return 0.0;

  auto to_u = [&](double lambda) { return std::asin(std::sqrt(std::clamp((lambda - lmin) / w, 0.0, 1.0))); };
  const double prefactor = d.n_dim() * d.q_ratio() / std::numbers::pi;
  // f(lambda) d lambda = (NQ/pi) w^2 sin^2 u cos^2 u / lambda du
  auto integrand = [&](double u) {
    const double s = std::sin(u);
    const double c = std::cos(u);
    const double lambda = lmin + w * s * s;
    const double jac = lmin == 0.0 ? w * c * c : w * w * s * s * c * c / lambda;
    return prefactor * jac * g(lambda);
  };

  double error = 0.0;
  const double result = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
      integrand, to_u(a), to_u(b), 20, 1e-13, &error);
  if (!(error <= tolerance * std::max(1.0, std::abs(result)))) {
    throw NumericalError("MP quadrature did not converge (error estimate " + std::to_string(error) + ")");
  }
  return result;
}

double mp_integrate(const MPDensity& d, const std::function<double(double)>& g, double tolerance) {
  return mp_integrate(d, g, d.lambda_min(), d.lambda_max(), tolerance);
}

std::vector<double> mp_bin_masses(const MPDensity& d, const std::vector<double>& edges) {
  std::vector<double> masses;
  if (edges.size() < 2) return masses;
  masses.reserve(edges.size() - 1);
  const auto one = [](double) { return 1.0; };
  for (std::size_t b = 0; b + 1 < edges.size(); ++b) masses.push_back(mp_integrate(d, one, edges[b], edges[b + 1]));
  return masses;
}

double entropy_bound_quadrature(const MPDensity& d) {
  const double integral =
      mp_integrate(d, [](double lambda) { return lambda > 0.0 ? lambda * std::log(lambda) : 0.0; }, 1e-9);
  return -d.n_dim() * integral;
}

double gamma_factor(double q_ratio) {
  if (!(q_ratio >= 1.0) || !std::isfinite(q_ratio)) {
    throw InvalidArgument("gamma_factor requires finite Q >= 1, got " + std::to_string(q_ratio));
  }
  const double qp1 = q_ratio + 1.0;
  const double z = std::min(1.0, 4.0 * q_ratio / (qp1 * qp1));
  const double series = hyp3f2_series(1.0, 1.0, 1.5, 2.0, 3.0, z);
  return q_ratio / qp1 * std::exp(q_ratio / (2.0 * qp1 * qp1) * series);
}

double mean_linear_entropy(long n_dim, long m_dim) {
  if (n_dim < 1 || m_dim < 1) throw InvalidArgument("mean_linear_entropy requires N, M >= 1");
  const double n = static_cast<double>(n_dim);
  const double m = static_cast<double>(m_dim);
  return 1.0 - (m + n + 1.0) / (m * n + 2.0);
}

std::string_view to_string(EnsembleKind kind) { return kind == EnsembleKind::real ? "real" : "complex"; }

EnsembleKind ensemble_kind_from_string(std::string_view s) {
  if (s == "real") return EnsembleKind::real;
  if (s == "complex") return EnsembleKind::complex;
  throw InvalidArgument("ensemble must be 'real' or 'complex', got '" + std::string(s) + "'");
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  std::array<std::uint32_t, 2> out{};
  seq.generate(out.begin(), out.end());
  return (static_cast<std::uint64_t>(out[0]) << 32) | out[1];
}

BipartiteState sample_random_state(int n_dim, int m_dim, EnsembleKind kind, std::uint64_t seed) {
  if (n_dim < 1 || m_dim < n_dim) throw InvalidArgument("sample_random_state requires 1 <= N <= M");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  CVector amps(static_cast<Eigen::Index>(n_dim) * m_dim);
  for (Eigen::Index i = 0; i < amps.size(); ++i) {
    const double re = gauss(rng);
    const double im = kind == EnsembleKind::complex ? gauss(rng) : 0.0;
    amps(i) = cplx(re, im);
  }
  return BipartiteState::normalized(n_dim, m_dim, std::move(amps));
}

}  // namespace ktops
