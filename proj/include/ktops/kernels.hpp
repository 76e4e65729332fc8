#pragma once

#include <cstdint>

#include "ktops/types.hpp"

namespace ktops {
enum class EnsembleKind;
}

/// Data-parallel inner loops. Every kernel has a plain serial reference and an
/// OpenMP variant. The spectra kernels agree bit for bit between the two; the
/// mat-vec agrees to rounding. The benchmark target compares their speed.
namespace ktops::kernels {

enum class Exec { serial, parallel };

/// out = u * in. `out` is resized as needed and must not alias `in`.
void apply_unitary(const CMatrix& u, const CVector& in, CVector& out, Exec exec);

/// Schmidt spectra of every column of `states`, each read as an N x M
/// amplitude matrix (row-major, idx = n*M + m). Column c of the result holds
/// the min(N, M) values of state c, descending.
RMatrix column_schmidt_spectra(const CMatrix& states, int n_dim, int m_dim, Exec exec);

/// Schmidt spectra of `trials` random states; trial t is seeded with
/// derive_seed(seed, t).
RMatrix random_state_spectra(int n_dim, int m_dim, EnsembleKind kind, int trials, std::uint64_t seed, Exec exec);

/// Per-column von Neumann and linear entropies of a spectra matrix as
/// returned above: row 0 is S_V, row 1 is S_R.
RMatrix spectra_entropies(const RMatrix& spectra, Exec exec);

}  // namespace ktops::kernels
