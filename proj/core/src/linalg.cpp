#include "skewcorr/linalg.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <limits>
#include <string>

#include "detail.hpp"
#include "skewcorr/error.hpp"

namespace skewcorr {

namespace {

std::string shape_of(const ComplexMatrix& m) {
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

void require_square(const ComplexMatrix& m, const char* what) {
  if (m.rows() == 0 || m.rows() != m.cols()) {
    throw ValidationError("square", std::string(what) +
                                        " must be a non-empty square matrix, got " +
                                        shape_of(m));
  }
}

void require_bipartite(const ComplexMatrix& rho, int dim_a, int dim_b) {
  if (dim_a < 1 || dim_b < 1 || rho.rows() != Eigen::Index{dim_a} * dim_b ||
      rho.cols() != rho.rows()) {
    throw ValidationError("dimensions", "matrix " + shape_of(rho) +
                                            " does not match dA=" +
                                            std::to_string(dim_a) +
                                            ", dB=" + std::to_string(dim_b));
  }
}

}  // namespace

double hermiticity_defect(const ComplexMatrix& h) {
  if (h.size() == 0) return 0.0;
  return (h - h.adjoint()).cwiseAbs().maxCoeff();
}

HermitianEig hermitian_eig(const ComplexMatrix& h) {
  require_square(h, "hermitian_eig input");
  const double defect = hermiticity_defect(h);
  if (defect > tol::kHermitian) {
    throw ValidationError("hermitian", "max |H - H^dagger| = " +
                                           detail::sci(defect));
  }
  const ComplexMatrix sym = (h + h.adjoint()) * 0.5;
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym);
  if (solver.info() != Eigen::Success) {
    throw Error("hermitian_eig: eigensolver did not converge");
  }
  return {solver.eigenvalues(), solver.eigenvectors()};
}

double eigenvalue_noise_floor(const RealVector& eigenvalues) {
  if (eigenvalues.size() == 0) return 0.0;
  const double scale = eigenvalues.cwiseAbs().maxCoeff();
  return 16.0 * static_cast<double>(eigenvalues.size()) *
         std::numeric_limits<double>::epsilon() * scale;
}

ComplexMatrix matrix_sqrt(const ComplexMatrix& rho) {
  HermitianEig eig = hermitian_eig(rho);
  RealVector roots(eig.eigenvalues.size());
  // Eigenvalues this close to zero are solver rounding on a null space;
  // taking their root would inject O(sqrt(eps)) garbage.
  const double floor = eigenvalue_noise_floor(eig.eigenvalues);
  for (Eigen::Index i = 0; i < roots.size(); ++i) {
    const double lambda = eig.eigenvalues[i];
    if (lambda < -tol::kEigenClamp) throw NotPositiveSemidefiniteError(lambda);
    roots[i] = lambda > floor ? std::sqrt(lambda) : 0.0;
  }
  const ComplexMatrix& u = eig.eigenvectors;
  return u * roots.cast<Complex>().asDiagonal() * u.adjoint();
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  const Eigen::Index rb = b.rows();
  const Eigen::Index cb = b.cols();
  ComplexMatrix out(a.rows() * rb, a.cols() * cb);
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * rb, j * cb, rb, cb) = a(i, j) * b;
    }
  }
  return out;
}

ComplexMatrix partial_trace_b(const ComplexMatrix& rho, int dim_a, int dim_b) {
  require_bipartite(rho, dim_a, dim_b);
  ComplexMatrix out = ComplexMatrix::Zero(dim_a, dim_a);
  for (int i = 0; i < dim_a; ++i) {
    for (int j = 0; j < dim_a; ++j) {
      Complex sum{0.0, 0.0};
      for (int k = 0; k < dim_b; ++k) sum += rho(i * dim_b + k, j * dim_b + k);
      out(i, j) = sum;
    }
  }
  return out;
}

ComplexMatrix partial_trace_a(const ComplexMatrix& rho, int dim_a, int dim_b) {
  require_bipartite(rho, dim_a, dim_b);
  ComplexMatrix out = ComplexMatrix::Zero(dim_b, dim_b);
  for (int k = 0; k < dim_b; ++k) {
    for (int l = 0; l < dim_b; ++l) {
      Complex sum{0.0, 0.0};
      for (int i = 0; i < dim_a; ++i) sum += rho(i * dim_b + k, i * dim_b + l);
      out(k, l) = sum;
    }
  }
  return out;
}

double hellinger_sq(const ComplexMatrix& rho, const ComplexMatrix& tau) {
  if (rho.rows() != tau.rows() || rho.cols() != tau.cols()) {
    throw ValidationError("dimensions", "hellinger_sq arguments differ: " +
                                            shape_of(rho) + " vs " +
                                            shape_of(tau));
  }
  // Tr{(A - B)^2} = ||A - B||_F^2 for Hermitian A, B.
  return 0.5 * (matrix_sqrt(rho) - matrix_sqrt(tau)).squaredNorm();
}

ComplexMatrix identity(int dim) { return ComplexMatrix::Identity(dim, dim); }

const ComplexMatrix& pauli(int i) {
  static const ComplexMatrix kPaulis[3] = {
      (ComplexMatrix(2, 2) << 0.0, 1.0, 1.0, 0.0).finished(),
      (ComplexMatrix(2, 2) << 0.0, Complex(0.0, -1.0), Complex(0.0, 1.0), 0.0)
          .finished(),
      (ComplexMatrix(2, 2) << 1.0, 0.0, 0.0, -1.0).finished(),
  };
  return kPaulis[i];
}

ComplexMatrix pauli_dot(const Vec3& n) {
  return n[0] * pauli(0) + n[1] * pauli(1) + n[2] * pauli(2);
}

}  // namespace skewcorr
