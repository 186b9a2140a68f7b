#pragma once

#include <optional>
#include <string_view>

#include "skewcorr/linalg.hpp"
#include "skewcorr/state.hpp"

namespace skewcorr {

// Below this Bloch-vector norm the marginal on A is treated as maximally
// mixed and every direction commutes with it.
inline constexpr double kRZeroThreshold = 1e-8;

/// Hermitian operator on the full bipartite space. When built from a
/// direction it is (n.sigma) (x) I_b with |n| = 1 and the direction is kept.
class Observable {
 public:
  explicit Observable(ComplexMatrix matrix, std::optional<Vec3> direction = std::nullopt);

  // (n.sigma) (x) I_b; n is normalized, zero vectors are rejected.
  static Observable from_direction(const Vec3& n, int dim_b);

  const ComplexMatrix& matrix() const noexcept { return matrix_; }
  const std::optional<Vec3>& direction() const noexcept { return direction_; }

  Observable operator-() const;

 private:
  ComplexMatrix matrix_;
  std::optional<Vec3> direction_;
};

struct WMatrix {
  Mat3 w = Mat3::Zero();

  // Ascending.
  Vec3 eigenvalues() const;
};

enum class Branch { kRZero, kRNonzero, kPureShortcut, kNotApplicable };

std::string_view to_string(Branch b);

struct MeasureValue {
  double value = 0.0;
  Branch branch = Branch::kNotApplicable;
};

/// I(rho, K) = -1/2 Tr([sqrt(rho), K]^2). The commutator is anti-Hermitian,
/// so this is evaluated as 1/2 ||[sqrt(rho), K]||_F^2 and is never negative.
double skew_information(const BipartiteState& rho, const Observable& k);

// Same quantity with sqrt(rho) supplied by the caller.
double skew_information_from_root(const ComplexMatrix& sqrt_rho, const ComplexMatrix& k);

// W_ij = Tr{sqrt(rho) (sigma_i (x) I) sqrt(rho) (sigma_j (x) I)}.
WMatrix w_matrix(const BipartiteState& rho);

/// Local quantum uncertainty, 1 - lambda_max(W): the smallest skew
/// information over local observables on A.
MeasureValue lqu(const BipartiteState& rho);

/// Uncertainty-induced nonlocality: the largest skew information over unit
/// directions n whose observable commutes with rho_a.
///
/// For |r| > kRZeroThreshold the only commuting directions are +-r/|r|,
/// giving 1 - r.W.r / |r|^2. Otherwise every direction commutes and the
/// maximum is 1 - lambda_min(W).
MeasureValue uin(const BipartiteState& rho);

// 2 (1 - Tr rho_a^2) for pure states; PurityError if |Tr rho^2 - 1| > 1e-8.
MeasureValue uin_pure(const BipartiteState& psi);

// 1 - lambda_min(W), the unconstrained maximum over local directions.
MeasureValue muin(const BipartiteState& rho);

/// Hilbert-Schmidt measurement-induced nonlocality, using orthonormal
/// local operator bases {I/sqrt(2), sigma_i/sqrt(2)} on A. With T the
/// correlation block of the Bloch decomposition, the value is
/// Tr(T T^t) - r.T T^t.r / |r|^2, or Tr(T T^t) - lambda_min(T T^t) when
/// r = 0.
MeasureValue min_hs(const BipartiteState& rho);

// T T^t from the decomposition above.
Mat3 correlation_gram(const BipartiteState& rho);

}  // namespace skewcorr
