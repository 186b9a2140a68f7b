#pragma once

#include <cstdint>

#include "skewcorr/linalg.hpp"

namespace skewcorr {

class DensityMatrix;
DensityMatrix validate_density(const ComplexMatrix& m);

/// Hermitian, unit-trace, positive-semidefinite matrix. Only
/// validate_density() can construct one, so holding a DensityMatrix means
/// the checks have passed.
class DensityMatrix {
 public:
  const ComplexMatrix& matrix() const noexcept { return matrix_; }
  int dim() const noexcept { return static_cast<int>(matrix_.rows()); }

  double purity() const;

 private:
  explicit DensityMatrix(ComplexMatrix m) : matrix_(std::move(m)) {}
  friend DensityMatrix validate_density(const ComplexMatrix& m);

  ComplexMatrix matrix_;
};

/// A density matrix on C^dA (x) C^dB, subsystem A first.
class BipartiteState {
 public:
  BipartiteState(DensityMatrix state, int dim_a, int dim_b);

  const DensityMatrix& density() const noexcept { return state_; }
  const ComplexMatrix& matrix() const noexcept { return state_.matrix(); }
  int dim_a() const noexcept { return dim_a_; }
  int dim_b() const noexcept { return dim_b_; }

 private:
  DensityMatrix state_;
  int dim_a_;
  int dim_b_;
};

// r_i = Tr[rho (sigma_i (x) I_b)], so rho_a = (I + r.sigma)/2.
struct BlochVector {
  Vec3 r = Vec3::Zero();

  double norm() const { return r.norm(); }
};

/// Checks, in order: square, Hermitian within 1e-10, trace within 1e-10 of
/// one, eigenvalues >= -1e-10. Each failure raises a ValidationError whose
/// check() is "square", "hermitian", "trace" or "positive-semidefinite".
/// The trace is never renormalized.
DensityMatrix validate_density(const ComplexMatrix& m);

// The 4x4 two-qubit state with four-decimal entries used as the worked
// example for amplitude damping.
BipartiteState example_state();

// (|00> + |11>)/sqrt(2).
BipartiteState bell_state();
// |0><0| (x) I/2.
BipartiteState product_mixed_state();
// I/4.
BipartiteState max_mixed_state();

BlochVector bloch_vector_a(const BipartiteState& rho);

/// G G^dagger / Tr(G G^dagger) with G a d x rank matrix of independent complex
/// Gaussians drawn from a generator seeded with `seed`.
DensityMatrix random_density(int dim, int rank, std::uint64_t seed);

BipartiteState random_pure(int dim_a, int dim_b, std::uint64_t seed);

// Haar unitary: QR of a complex Ginibre matrix with the phases of R's
// diagonal moved into Q.
ComplexMatrix random_unitary(int dim, std::uint64_t seed);

BipartiteState product_state(const DensityMatrix& rho_a, const DensityMatrix& rho_b);

// (U (x) V) rho (U (x) V)^dagger.
BipartiteState apply_local_unitary(const BipartiteState& rho, const ComplexMatrix& u,
                                   const ComplexMatrix& v);

/// 1/2 (rho + K rho K) with K = (m.sigma) (x) I for a unit m orthogonal to
/// the Bloch vector. Conjugating by K sends r to -r, so the result has a
/// maximally mixed marginal on A while keeping the correlations that survive
/// the averaging. Requires dA = 2.
BipartiteState zero_marginal_bloch(const BipartiteState& rho);

}  // namespace skewcorr
