#include "skewcorr/state.hpp"

#include <random>
#include <string>

#include "detail.hpp"
#include "skewcorr/error.hpp"

namespace skewcorr {

namespace {

ComplexMatrix complex_gaussian(int rows, int cols, std::mt19937_64& gen) {
  std::normal_distribution<double> normal(0.0, 1.0);
  ComplexMatrix g(rows, cols);
  // Column-major fill order, real then imaginary, is part of the
  // reproducibility contract.
  for (int j = 0; j < cols; ++j) {
    for (int i = 0; i < rows; ++i) {
      const double re = normal(gen);
      const double im = normal(gen);
      g(i, j) = Complex(re, im);
    }
  }
  return g;
}

void require_qubit_a(const BipartiteState& rho, const char* op) {
  if (rho.dim_a() != 2) throw UnsupportedDimensionError(rho.dim_a(), op);
}

}  // namespace

double DensityMatrix::purity() const {
  return (matrix_ * matrix_).trace().real();
}

BipartiteState::BipartiteState(DensityMatrix state, int dim_a, int dim_b)
    : state_(std::move(state)), dim_a_(dim_a), dim_b_(dim_b) {
  if (dim_a < 1 || dim_b < 1 || dim_a * dim_b != state_.dim()) {
    throw ValidationError("dimensions",
                          "dA*dB = " + std::to_string(dim_a) + "*" +
                              std::to_string(dim_b) + " does not match state dimension " +
                              std::to_string(state_.dim()));
  }
}

DensityMatrix validate_density(const ComplexMatrix& m) {
  if (m.rows() == 0 || m.rows() != m.cols()) {
    throw ValidationError("square", "density matrix must be square, got " +
                                        std::to_string(m.rows()) + "x" +
                                        std::to_string(m.cols()));
  }
  const double defect = hermiticity_defect(m);
  if (defect > tol::kHermitian) {
    throw ValidationError("hermitian",
                          "max |M - M^dagger| = " + detail::sci(defect));
  }
  const ComplexMatrix sym = (m + m.adjoint()) * 0.5;
  const double trace = sym.trace().real();
  if (std::abs(trace - 1.0) > tol::kTrace) {
    throw ValidationError("trace", "Tr M = " + detail::sci(trace) + ", expected 1");
  }
  const HermitianEig eig = hermitian_eig(sym);
  if (eig.eigenvalues[0] < -tol::kEigenClamp) {
    throw NotPositiveSemidefiniteError(eig.eigenvalues[0]);
  }
  return DensityMatrix(sym);
}

BipartiteState example_state() {
  ComplexMatrix m(4, 4);
  m << 0.4205, 0.0805, 0.3278, 0.0966,
       0.0805, 0.1757, 0.0564, 0.0840,
       0.3278, 0.0564, 0.2808, 0.0615,
       0.0966, 0.0840, 0.0615, 0.1230;
  return BipartiteState(validate_density(m), 2, 2);
}

BipartiteState bell_state() {
  ComplexMatrix m = ComplexMatrix::Zero(4, 4);
  m(0, 0) = m(0, 3) = m(3, 0) = m(3, 3) = 0.5;
  return BipartiteState(validate_density(m), 2, 2);
}

BipartiteState product_mixed_state() {
  ComplexMatrix m = ComplexMatrix::Zero(4, 4);
  m(0, 0) = m(1, 1) = 0.5;
  return BipartiteState(validate_density(m), 2, 2);
}

BipartiteState max_mixed_state() {
  return BipartiteState(validate_density(identity(4) * 0.25), 2, 2);
}

BlochVector bloch_vector_a(const BipartiteState& rho) {
  require_qubit_a(rho, "bloch_vector_a");
  BlochVector out;
  const ComplexMatrix id_b = identity(rho.dim_b());
  for (int i = 0; i < 3; ++i) {
    out.r[i] = (rho.matrix() * kron(pauli(i), id_b)).trace().real();
  }
  return out;
}

DensityMatrix random_density(int dim, int rank, std::uint64_t seed) {
  if (dim < 1 || rank < 1 || rank > dim) {
    throw ValidationError("rank", "need 1 <= rank <= d, got rank=" +
                                      std::to_string(rank) +
                                      ", d=" + std::to_string(dim));
  }
  std::mt19937_64 gen(seed);
  const ComplexMatrix g = complex_gaussian(dim, rank, gen);
  ComplexMatrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  return validate_density(rho);
}

BipartiteState random_pure(int dim_a, int dim_b, std::uint64_t seed) {
  return BipartiteState(random_density(dim_a * dim_b, 1, seed), dim_a, dim_b);
}

ComplexMatrix random_unitary(int dim, std::uint64_t seed) {
  if (dim < 1) throw ValidationError("dimensions", "unitary dimension must be >= 1");
  std::mt19937_64 gen(seed);
  const ComplexMatrix g = complex_gaussian(dim, dim, gen);
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ();
  const ComplexMatrix& r = qr.matrixQR();
  for (int j = 0; j < dim; ++j) {
    const Complex d = r(j, j);
    const double mag = std::abs(d);
    q.col(j) *= mag > 0.0 ? d / mag : Complex(1.0, 0.0);
  }
  return q;
}

BipartiteState product_state(const DensityMatrix& rho_a, const DensityMatrix& rho_b) {
  return BipartiteState(validate_density(kron(rho_a.matrix(), rho_b.matrix())),
                        rho_a.dim(), rho_b.dim());
}

BipartiteState apply_local_unitary(const BipartiteState& rho, const ComplexMatrix& u,
                                   const ComplexMatrix& v) {
  if (u.rows() != rho.dim_a() || v.rows() != rho.dim_b()) {
    throw ValidationError("dimensions", "local unitaries do not match dA, dB");
  }
  const ComplexMatrix uv = kron(u, v);
  return BipartiteState(validate_density(uv * rho.matrix() * uv.adjoint()),
                        rho.dim_a(), rho.dim_b());
}

BipartiteState zero_marginal_bloch(const BipartiteState& rho) {
  require_qubit_a(rho, "zero_marginal_bloch");
  const Vec3 r = bloch_vector_a(rho).r;
  Vec3 m = Vec3::UnitX();
  if (r.norm() > 0.0) {
    // Cross with the coordinate axis least aligned with r.
    Eigen::Index axis = 0;
    r.cwiseAbs().minCoeff(&axis);
    m = r.cross(Vec3::Unit(axis)).normalized();
  }
  const ComplexMatrix k = kron(pauli_dot(m), identity(rho.dim_b()));
  const ComplexMatrix avg = 0.5 * (rho.matrix() + k * rho.matrix() * k);
  return BipartiteState(validate_density(avg), rho.dim_a(), rho.dim_b());
}

}  // namespace skewcorr
