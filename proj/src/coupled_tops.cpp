#include "ktops/coupled_tops.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "ktops/kernels.hpp"

namespace ktops {

namespace {

constexpr double kNormTolerance = 1e-10;
constexpr double kDriftTolerance = 1e-12;

}  // namespace

TopConfig::TopConfig(Spin j1, Spin j2, double k, double epsilon, double alpha1, double alpha2)
    : j1_(j1), j2_(j2), k_(k), epsilon_(epsilon), alpha1_(alpha1), alpha2_(alpha2) {
  if (j1.dim() > j2.dim()) {
    throw InvalidArgument("TopConfig requires 2*j1+1 <= 2*j2+1 (N <= M)");
  }
  if (!std::isfinite(k) || !std::isfinite(epsilon) || !std::isfinite(alpha1) || !std::isfinite(alpha2)) {
    throw InvalidArgument("TopConfig parameters must be finite");
  }
}

BipartiteState::BipartiteState(int n_dim, int m_dim, CVector amplitudes)
    : n_(n_dim), m_(m_dim), amps_(std::move(amplitudes)) {
  if (n_dim < 1 || m_dim < 1) throw InvalidArgument("subsystem dimensions must be positive");
  if (amps_.size() != static_cast<Eigen::Index>(n_dim) * m_dim) {
    throw InvalidArgument("amplitude vector length " + std::to_string(amps_.size()) +
                          " does not match N*M = " + std::to_string(n_dim * m_dim));
  }
  if (std::abs(amps_.norm() - 1.0) > kNormTolerance) {
    throw InvalidArgument("bipartite state is not normalized (norm " + std::to_string(amps_.norm()) + ")");
  }
}

BipartiteState BipartiteState::normalized(int n_dim, int m_dim, CVector amplitudes) {
  const double norm = amplitudes.norm();
  if (!(norm > 0.0) || !std::isfinite(norm)) throw InvalidArgument("cannot normalize a zero or non-finite vector");
  amplitudes /= norm;
  return BipartiteState(n_dim, m_dim, std::move(amplitudes));
}

FloquetFactors floquet_factors(const TopConfig& cfg) {
  const SpinOperators ops1 = build_spin_operators(cfg.j1());
  const SpinOperators ops2 = build_spin_operators(cfg.j2());
  FloquetFactors f;
  f.coupling = coupling_phases(cfg.j1(), cfg.j2(), cfg.epsilon());
  f.top1 = free_precession_unitary(ops1).matrix() * kick_unitary(ops1, cfg.k(), cfg.alpha1()).matrix();
  f.top2 = free_precession_unitary(ops2).matrix() * kick_unitary(ops2, cfg.k(), cfg.alpha2()).matrix();
  return f;
}

UnitaryMatrix build_floquet(const TopConfig& cfg) {
  const FloquetFactors f = floquet_factors(cfg);
  const int n = cfg.n_dim();
  const int m = cfg.m_dim();
  CMatrix u(static_cast<Eigen::Index>(n) * m, static_cast<Eigen::Index>(n) * m);
  // Block (r1, c1) of U1 (x) U2 is U1(r1, c1) * U2; the diagonal coupling scales columns.
  for (int c1 = 0; c1 < n; ++c1) {
    const auto cols = f.coupling.segment(static_cast<Eigen::Index>(c1) * m, m);
    const CMatrix scaled = f.top2 * cols.asDiagonal();
    for (int r1 = 0; r1 < n; ++r1) {
      u.block(static_cast<Eigen::Index>(r1) * m, static_cast<Eigen::Index>(c1) * m, m, m) = f.top1(r1, c1) * scaled;
    }
  }
  return UnitaryMatrix::trusted(std::move(u));
}

CVector apply_floquet_factors(const FloquetFactors& f, const CVector& psi) {
  const Eigen::Index n = f.top1.rows();
  const Eigen::Index m = f.top2.rows();
  if (psi.size() != n * m) throw InvalidArgument("state dimension does not match Floquet factors");
  CMatrixRowMajor a = Eigen::Map<const CMatrixRowMajor>(psi.data(), n, m);
  a = a.cwiseProduct(Eigen::Map<const CMatrixRowMajor>(f.coupling.data(), n, m));
  // (U1 (x) U2) vec(A) = vec(U1 A U2^T) in the row-major layout.
  CMatrixRowMajor out = f.top1 * a * f.top2.transpose();
  return Eigen::Map<const CVector>(out.data(), n * m);
}

CVector coherent_state(Spin j, double theta, double phi) {
  if (!(theta >= 0.0 && theta <= std::numbers::pi) || !std::isfinite(phi)) {
    throw InvalidArgument("coherent state requires theta in [0, pi] and finite phi");
  }
  const SpinOperators ops = build_spin_operators(j);
  const CMatrix generator = ops.jx * std::sin(phi) - ops.jy * std::cos(phi);
  CVector top = CVector::Zero(j.dim());
  top(0) = 1.0;
  CVector v = hermitian_exp(generator, -theta) * top;
  v.normalize();
  return v;
}

BipartiteState product_state(const CVector& v1, const CVector& v2) {
  if (std::abs(v1.norm() - 1.0) > kNormTolerance || std::abs(v2.norm() - 1.0) > kNormTolerance) {
    throw InvalidArgument("product_state factors must be normalized");
  }
  const Eigen::Index n = v1.size();
  const Eigen::Index m = v2.size();
  CVector amps(n * m);
  for (Eigen::Index i = 0; i < n; ++i) amps.segment(i * m, m) = v1(i) * v2;
  return BipartiteState(static_cast<int>(n), static_cast<int>(m), std::move(amps));
}

BipartiteState maximally_entangled_state(int n_dim, int m_dim) {
  if (n_dim < 1 || n_dim > m_dim) throw InvalidArgument("maximally_entangled_state requires 1 <= N <= M");
  CVector amps = CVector::Zero(static_cast<Eigen::Index>(n_dim) * m_dim);
  const double a = 1.0 / std::sqrt(static_cast<double>(n_dim));
  for (int i = 0; i < n_dim; ++i) amps(static_cast<Eigen::Index>(i) * m_dim + i) = a;
  return BipartiteState(n_dim, m_dim, std::move(amps));
}

int evolve_observed(const UnitaryMatrix& u, const BipartiteState& psi0, int steps,
                    const std::function<void(int, const BipartiteState&)>& observe) {
  if (steps < 0) throw InvalidArgument("steps must be non-negative");
  if (u.dim() != psi0.amplitudes().size()) {
    throw InvalidArgument("unitary dimension " + std::to_string(u.dim()) + " does not match state dimension " +
                          std::to_string(psi0.amplitudes().size()));
  }
  observe(0, psi0);
  int renormalizations = 0;
  CVector current = psi0.amplitudes();
  CVector next(current.size());
  for (int t = 1; t <= steps; ++t) {
    kernels::apply_unitary(u.matrix(), current, next, kernels::Exec::parallel);
    current.swap(next);
    const double norm = current.norm();
    if (std::abs(norm - 1.0) > kDriftTolerance) {
      current /= norm;
      ++renormalizations;
    }
    observe(t, BipartiteState(psi0.n_dim(), psi0.m_dim(), current));
  }
  return renormalizations;
}

Trajectory evolve(const UnitaryMatrix& u, const BipartiteState& psi0, int steps) {
  Trajectory traj;
  traj.states.reserve(static_cast<std::size_t>(steps < 0 ? 0 : steps) + 1);
  traj.renormalizations =
      evolve_observed(u, psi0, steps, [&](int, const BipartiteState& s) { traj.states.push_back(s); });
  return traj;
}

}  // namespace ktops
