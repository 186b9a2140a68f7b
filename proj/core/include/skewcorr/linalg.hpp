#pragma once

#include <Eigen/Dense>

#include <complex>

namespace skewcorr {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;
using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;

namespace tol {
inline constexpr double kHermitian = 1e-10;
inline constexpr double kEigenClamp = 1e-10;
inline constexpr double kTrace = 1e-10;
}  // namespace tol

struct HermitianEig {
  RealVector eigenvalues;     // ascending
  ComplexMatrix eigenvectors; // columns, unitary
};

// Largest |H - H^dagger| entry.
double hermiticity_defect(const ComplexMatrix& h);

/// Eigendecomposition of a Hermitian matrix. The input is symmetrized as
/// (H + H^dagger)/2 before decomposition; matrices further than 1e-10
/// (max-abs) from Hermitian are rejected with a ValidationError naming the
/// failed check ("square" or "hermitian"). Eigenvalues come back ascending;
/// no phase convention is imposed on the eigenvectors.
HermitianEig hermitian_eig(const ComplexMatrix& h);

// 16 d eps max|lambda|: eigenvalues at or below this are indistinguishable
// from zero for a backward-stable Hermitian eigensolver.
double eigenvalue_noise_floor(const RealVector& eigenvalues);

/// Principal square root of a positive-semidefinite Hermitian matrix.
/// Eigenvalues in [-1e-10, eigenvalue_noise_floor] are treated as zero;
/// anything below -1e-10 raises NotPositiveSemidefiniteError.
ComplexMatrix matrix_sqrt(const ComplexMatrix& rho);

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

// Reduced matrices of an operator on C^dA (x) C^dB.
ComplexMatrix partial_trace_b(const ComplexMatrix& rho, int dim_a, int dim_b);
ComplexMatrix partial_trace_a(const ComplexMatrix& rho, int dim_a, int dim_b);

/// Squared Hellinger distance 1/2 Tr{(sqrt(rho) - sqrt(tau))^2}.
double hellinger_sq(const ComplexMatrix& rho, const ComplexMatrix& tau);

ComplexMatrix identity(int dim);

// Pauli matrices; index 0..2 -> x, y, z.
const ComplexMatrix& pauli(int i);

// n.sigma for a real 3-vector (not normalized here).
ComplexMatrix pauli_dot(const Vec3& n);

}  // namespace skewcorr
