#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "ktops/spin_algebra.hpp"

namespace ktops {

/// Physical parameters of the coupled kicked tops. Requires dim(j1) <= dim(j2).
class TopConfig {
 public:
  TopConfig(Spin j1, Spin j2, double k, double epsilon, double alpha1, double alpha2);

  Spin j1() const { return j1_; }
  Spin j2() const { return j2_; }
  double k() const { return k_; }
  double epsilon() const { return epsilon_; }
  double alpha1() const { return alpha1_; }
  double alpha2() const { return alpha2_; }
  int n_dim() const { return j1_.dim(); }
  int m_dim() const { return j2_.dim(); }
  int total_dim() const { return n_dim() * m_dim(); }

 private:
  Spin j1_;
  Spin j2_;
  double k_;
  double epsilon_;
  double alpha1_;
  double alpha2_;
};

/// Unit-norm pure state on C^N (x) C^M, amplitude of |n>|m> at index n*M + m.
class BipartiteState {
 public:
  /// Requires amplitudes.size() == n*m and unit norm within 1e-10.
  BipartiteState(int n_dim, int m_dim, CVector amplitudes);

  /// Rescales to unit norm first; rejects the zero vector.
  static BipartiteState normalized(int n_dim, int m_dim, CVector amplitudes);

  int n_dim() const { return n_; }
  int m_dim() const { return m_; }
  const CVector& amplitudes() const { return amps_; }

  /// N x M amplitude matrix A with A(n, m) = a_{nm}; a view, no copy.
  Eigen::Map<const CMatrixRowMajor> amplitude_matrix() const {
    return Eigen::Map<const CMatrixRowMajor>(amps_.data(), n_, m_);
  }

 private:
  int n_;
  int m_;
  CVector amps_;
};

/// U_T = (U1 (x) U2) U12 with U_i = U_i^f U_i^k; on a state the coupling acts first.
UnitaryMatrix build_floquet(const TopConfig& cfg);

/// The three factors of one period, in the order they act on a state.
struct FloquetFactors {
  CVector coupling;  // diagonal of U12
  CMatrix top1;      // U1 = U1^f U1^k
  CMatrix top2;      // U2 = U2^f U2^k
};
FloquetFactors floquet_factors(const TopConfig& cfg);

/// Applies one period factor by factor (coupling, then U1 (x) U2) without
/// assembling U_T. O(d (N + M)).
CVector apply_floquet_factors(const FloquetFactors& f, const CVector& psi);

/// Spin coherent state exp(i theta (Jx sin phi - Jy cos phi)) |j, j>.
CVector coherent_state(Spin j, double theta, double phi);

/// a_{nm} = v1[n] v2[m]. Both factors must be unit vectors.
BipartiteState product_state(const CVector& v1, const CVector& v2);

/// sum_m |m>|m> / sqrt(N) over the first N basis states of each top.
BipartiteState maximally_entangled_state(int n_dim, int m_dim);

struct Trajectory {
  std::vector<BipartiteState> states;  // psi_0 .. psi_steps
  int renormalizations = 0;
};

/// psi_t = U^t psi_0, t = 0..steps, by repeated mat-vec.
Trajectory evolve(const UnitaryMatrix& u, const BipartiteState& psi0, int steps);

/// Streaming variant: calls observe(t, psi_t) for t = 0..steps without storing
/// the trajectory. Returns the number of renormalizations applied.
int evolve_observed(const UnitaryMatrix& u, const BipartiteState& psi0, int steps,
                    const std::function<void(int, const BipartiteState&)>& observe);

}  // namespace ktops
