#include <cmath>
#include <numbers>

#include "doctest.h"
#include "ktops/coupled_tops.hpp"
#include "ktops/entanglement.hpp"
#include "ktops/kernels.hpp"

using namespace ktops;

namespace {

double max_abs(const CMatrix& m) { return m.cwiseAbs().maxCoeff(); }

double expectation(const CMatrix& op, const CVector& v) { return (v.adjoint() * op * v)(0, 0).real(); }

}  // namespace

TEST_CASE("TopConfig validates its inputs") {
  CHECK_THROWS_AS(TopConfig(Spin(10), Spin(4), 3.0, 0.1, 0.0, 0.0), InvalidArgument);
  CHECK_THROWS_AS(TopConfig(Spin(2), Spin(4), std::nan(""), 0.1, 0.0, 0.0), InvalidArgument);
  CHECK_NOTHROW(TopConfig(Spin(4), Spin(4), 3.0, 0.1, 0.47, 0.47));
}

TEST_CASE("uncoupled, unkicked tops evolve as U^f (x) U^f") {
  const TopConfig cfg(Spin(3), Spin(5), 0.0, 0.0, 0.0, 0.0);
  const UnitaryMatrix u = build_floquet(cfg);
  const CMatrix expected = kron(free_precession_unitary(build_spin_operators(Spin(3))).matrix(),
                                free_precession_unitary(build_spin_operators(Spin(5))).matrix());
  CHECK(max_abs(u.matrix() - expected) < 1e-13);
}

TEST_CASE("Floquet operator equals the product of its dense factors") {
  const Spin j1(6), j2(9);
  const TopConfig cfg(j1, j2, 3.0, 0.7, 0.47, 0.2);
  const SpinOperators s1 = build_spin_operators(j1), s2 = build_spin_operators(j2);
  const CMatrix u1 = free_precession_unitary(s1).matrix() * kick_unitary(s1, 3.0, 0.47).matrix();
  const CMatrix u2 = free_precession_unitary(s2).matrix() * kick_unitary(s2, 3.0, 0.2).matrix();
  const CMatrix expected = kron(u1, u2) * coupling_unitary(s1, s2, 0.7).matrix();
  const UnitaryMatrix u = build_floquet(cfg);
  CHECK(max_abs(u.matrix() - expected) < 1e-12);
  CHECK(u.unitarity_defect() < 1e-12);
}

TEST_CASE("mat-vec and factor-by-factor evolution agree") {
  const TopConfig cfg(Spin(8), Spin(12), 3.0, 0.1, 0.47, 0.47);
  const UnitaryMatrix u = build_floquet(cfg);
  const FloquetFactors f = floquet_factors(cfg);
  CVector psi = product_state(coherent_state(Spin(8), 1.7, -0.5), coherent_state(Spin(12), 1.7, -0.5)).amplitudes();
  CVector a = psi, b = psi, tmp;
  for (int t = 0; t < 50; ++t) {
    kernels::apply_unitary(u.matrix(), a, tmp, kernels::Exec::serial);
    a.swap(tmp);
    b = apply_floquet_factors(f, b);
  }
  CHECK((a - b).norm() < 1e-10);
}

TEST_CASE("coherent states") {
  const Spin j(20);
  const SpinOperators s = build_spin_operators(j);
  SUBCASE("theta = 0 is |j,j>") {
    const CVector v = coherent_state(j, 0.0, 0.3);
    CHECK(std::abs(std::abs(v(0)) - 1.0) < 1e-14);
  }
  SUBCASE("theta = pi is |j,-j> up to phase") {
    const CVector v = coherent_state(j, std::numbers::pi, 0.3);
    CHECK(std::abs(std::abs(v(j.dim() - 1)) - 1.0) < 1e-12);
  }
  SUBCASE("spin expectation points along (theta, phi)") {
    const double theta = 1.7, phi = -0.5;
    const CVector v = coherent_state(j, theta, phi);
    CHECK(std::abs(v.norm() - 1.0) < 1e-13);
    CHECK(expectation(s.jz, v) == doctest::Approx(j.value() * std::cos(theta)).epsilon(1e-12));
    CHECK(expectation(s.jx, v) == doctest::Approx(j.value() * std::sin(theta) * std::cos(phi)).epsilon(1e-12));
    CHECK(expectation(s.jy, v) == doctest::Approx(j.value() * std::sin(theta) * std::sin(phi)).epsilon(1e-12));
    // minimum-uncertainty: <J^2> - |<J>|^2 = j
    const double jx = expectation(s.jx, v), jy = expectation(s.jy, v), jz = expectation(s.jz, v);
    CHECK(j.value() * (j.value() + 1) - (jx * jx + jy * jy + jz * jz) == doctest::Approx(j.value()));
  }
}

TEST_CASE("product and maximally entangled states") {
  const BipartiteState p = product_state(coherent_state(Spin(4), 1.0, 0.2), coherent_state(Spin(6), 2.0, -1.0));
  CHECK(von_neumann_entropy(schmidt_spectrum(p)) < 1e-12);
  const BipartiteState e = maximally_entangled_state(5, 7);
  CHECK(von_neumann_entropy(schmidt_spectrum(e)) == doctest::Approx(std::log(5.0)).epsilon(1e-13));
  CHECK(linear_entropy(schmidt_spectrum(e)) == doctest::Approx(1.0 - 1.0 / 5.0).epsilon(1e-13));
  CHECK_THROWS_AS(maximally_entangled_state(7, 5), InvalidArgument);
}

TEST_CASE("BipartiteState validation") {
  CHECK_THROWS_AS(BipartiteState(2, 2, CVector::Ones(4)), InvalidArgument);
  CHECK_THROWS_AS(BipartiteState(2, 3, CVector::Ones(4) / 2.0), InvalidArgument);
  CHECK_THROWS_AS(BipartiteState::normalized(2, 2, CVector::Zero(4)), InvalidArgument);
  const BipartiteState s = BipartiteState::normalized(2, 2, CVector::Ones(4));
  CHECK(std::abs(s.amplitudes().norm() - 1.0) < 1e-15);
  CHECK(s.amplitude_matrix().data() == s.amplitudes().data());
}

TEST_CASE("evolution") {
  const TopConfig cfg(Spin(6), Spin(8), 3.0, 0.1, 0.47, 0.47);
  const UnitaryMatrix u = build_floquet(cfg);
  const BipartiteState psi0 = product_state(coherent_state(Spin(6), 1.7, -0.5), coherent_state(Spin(8), 1.7, -0.5));
  SUBCASE("zero steps returns the initial state") {
    const Trajectory t = evolve(u, psi0, 0);
    REQUIRE(t.states.size() == 1);
    CHECK(t.states[0].amplitudes() == psi0.amplitudes());
  }
  SUBCASE("identity leaves the state unchanged") {
    const Trajectory t = evolve(UnitaryMatrix::checked(CMatrix::Identity(63, 63)), psi0, 10);
    CHECK((t.states.back().amplitudes() - psi0.amplitudes()).norm() == 0.0);
  }
  SUBCASE("norm is preserved over many periods") {
    const Trajectory t = evolve(u, psi0, 2000);
    for (const auto& s : t.states) CHECK(std::abs(s.amplitudes().norm() - 1.0) < 1e-10);
  }
  SUBCASE("negative steps are rejected") { CHECK_THROWS_AS(evolve(u, psi0, -1), InvalidArgument); }
  SUBCASE("uncoupled tops never entangle") {
    const UnitaryMatrix free = build_floquet(TopConfig(Spin(6), Spin(8), 3.0, 0.0, 0.47, 0.47));
    double worst = 0.0;
    evolve_observed(free, psi0, 300, [&](int, const BipartiteState& s) {
      worst = std::max(worst, von_neumann_entropy(schmidt_spectrum(s)));
    });
    CHECK(worst < 1e-9);
  }
}
