#include "skewcorr/measures.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>

#include "detail.hpp"
#include "skewcorr/error.hpp"

namespace skewcorr {

namespace {

constexpr double kValueWindow = 1e-9;
constexpr double kPurityTolerance = 1e-8;

void require_qubit_a(const BipartiteState& rho, const char* op) {
  if (rho.dim_a() != 2) throw UnsupportedDimensionError(rho.dim_a(), op);
}

// Snap rounding excursions below 0 (and above `upper`, if given) onto the
// boundary; anything further out is a bug upstream.
double clamp_measure(double v, const char* name, double upper = 1.0) {
  if (v < 0.0) {
    if (v < -kValueWindow) {
      throw RangeError(std::string(name) + " = " + detail::sci(v) + " is negative");
    }
    return 0.0;
  }
  if (v > upper) {
    if (v > upper + kValueWindow) {
      throw RangeError(std::string(name) + " = " + detail::sci(v) + " exceeds " +
                       detail::sci(upper));
    }
    return upper;
  }
  return v;
}

Vec3 sym_eigenvalues(const Mat3& m) {
  Eigen::SelfAdjointEigenSolver<Mat3> solver(m, Eigen::EigenvaluesOnly);
  return solver.eigenvalues();
}

}  // namespace

Observable::Observable(ComplexMatrix matrix, std::optional<Vec3> direction)
    : matrix_(std::move(matrix)), direction_(std::move(direction)) {
  if (matrix_.rows() == 0 || matrix_.rows() != matrix_.cols()) {
    throw ValidationError("square", "observable must be a non-empty square matrix");
  }
  const double defect = hermiticity_defect(matrix_);
  if (defect > tol::kHermitian) {
    throw ValidationError("hermitian", "observable max |K - K^dagger| = " +
                                           detail::sci(defect));
  }
  if (direction_ && std::abs(direction_->norm() - 1.0) > 1e-10) {
    throw ValidationError("direction", "observable direction must be a unit vector");
  }
}

Observable Observable::from_direction(const Vec3& n, int dim_b) {
  const double len = n.norm();
  if (!(len > 0.0)) throw ValidationError("direction", "zero direction vector");
  if (dim_b < 1) throw ValidationError("dimensions", "dB must be >= 1");
  const Vec3 unit = n / len;
  return Observable(kron(pauli_dot(unit), identity(dim_b)), unit);
}

Observable Observable::operator-() const {
  std::optional<Vec3> flipped;
  if (direction_) flipped = -*direction_;
  return Observable(-matrix_, flipped);
}

Vec3 WMatrix::eigenvalues() const { return sym_eigenvalues(w); }

std::string_view to_string(Branch b) {
  switch (b) {
    case Branch::kRZero: return "r-zero";
    case Branch::kRNonzero: return "r-nonzero";
    case Branch::kPureShortcut: return "pure-shortcut";
    case Branch::kNotApplicable: return "not-applicable";
  }
  return "unknown";
}

double skew_information_from_root(const ComplexMatrix& sqrt_rho, const ComplexMatrix& k) {
  if (sqrt_rho.rows() != k.rows() || sqrt_rho.cols() != k.cols()) {
    throw ValidationError("dimensions", "observable and state dimensions differ");
  }
  const ComplexMatrix comm = sqrt_rho * k - k * sqrt_rho;
  return 0.5 * comm.squaredNorm();
}

double skew_information(const BipartiteState& rho, const Observable& k) {
  if (k.matrix().rows() != rho.matrix().rows()) {
    throw ValidationError("dimensions", "observable and state dimensions differ");
  }
  return skew_information_from_root(matrix_sqrt(rho.matrix()), k.matrix());
}

WMatrix w_matrix(const BipartiteState& rho) {
  require_qubit_a(rho, "w_matrix");
  const ComplexMatrix root = matrix_sqrt(rho.matrix());
  const ComplexMatrix id_b = identity(rho.dim_b());
  ComplexMatrix sandwiched[3];
  ComplexMatrix local[3];
  for (int i = 0; i < 3; ++i) {
    local[i] = kron(pauli(i), id_b);
    sandwiched[i] = root * local[i] * root;
  }
  WMatrix out;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      out.w(i, j) = (sandwiched[i] * local[j]).trace().real();
    }
  }
  return out;
}

MeasureValue lqu(const BipartiteState& rho) {
  require_qubit_a(rho, "lqu");
  const Vec3 lambda = w_matrix(rho).eigenvalues();
  return {clamp_measure(1.0 - lambda[2], "lqu"), Branch::kNotApplicable};
}

MeasureValue uin(const BipartiteState& rho) {
  require_qubit_a(rho, "uin");
  const WMatrix w = w_matrix(rho);
  const Vec3 r = bloch_vector_a(rho).r;
  const double norm = r.norm();
  if (norm <= kRZeroThreshold) {
    return {clamp_measure(1.0 - w.eigenvalues()[0], "uin"), Branch::kRZero};
  }
  const double quad = r.dot(w.w * r) / (norm * norm);
  return {clamp_measure(1.0 - quad, "uin"), Branch::kRNonzero};
}

MeasureValue uin_pure(const BipartiteState& psi) {
  require_qubit_a(psi, "uin_pure");
  const double purity = psi.density().purity();
  if (std::abs(purity - 1.0) > kPurityTolerance) throw PurityError(purity);
  const ComplexMatrix rho_a = partial_trace_b(psi.matrix(), psi.dim_a(), psi.dim_b());
  const double local_purity = (rho_a * rho_a).trace().real();
  return {clamp_measure(2.0 * (1.0 - local_purity), "uin_pure"), Branch::kPureShortcut};
}

MeasureValue muin(const BipartiteState& rho) {
  require_qubit_a(rho, "muin");
  const Vec3 lambda = w_matrix(rho).eigenvalues();
  return {clamp_measure(1.0 - lambda[0], "muin"), Branch::kNotApplicable};
}

Mat3 correlation_gram(const BipartiteState& rho) {
  require_qubit_a(rho, "correlation_gram");
  const int db = rho.dim_b();
  const ComplexMatrix id_b = identity(db);
  // M_i = Tr_A[rho (sigma_i/sqrt2 (x) I)] is Hermitian on B and
  // t_ij = Tr(M_i Y_j) for an orthonormal traceless Hermitian basis {Y_j}.
  // Completeness of {I/sqrt(dB), Y_j} gives
  //   sum_j t_ij t_kj = Tr(M_i M_k) - Tr(M_i) Tr(M_k) / dB.
  ComplexMatrix m[3];
  for (int i = 0; i < 3; ++i) {
    m[i] = partial_trace_a(rho.matrix() * kron(pauli(i) / std::sqrt(2.0), id_b), 2, db);
  }
  Mat3 gram;
  for (int i = 0; i < 3; ++i) {
    for (int k = 0; k < 3; ++k) {
      gram(i, k) = (m[i] * m[k]).trace().real() -
                   m[i].trace().real() * m[k].trace().real() / db;
    }
  }
  return gram;
}

MeasureValue min_hs(const BipartiteState& rho) {
  require_qubit_a(rho, "min_hs");
  const Mat3 gram = correlation_gram(rho);
  const Vec3 r = bloch_vector_a(rho).r;
  const double norm = r.norm();
  const double total = gram.trace();
  // Squared HS distance between two states is at most 2.
  if (norm <= kRZeroThreshold) {
    return {clamp_measure(total - sym_eigenvalues(gram)[0], "min_hs", 2.0), Branch::kRZero};
  }
  const double quad = r.dot(gram * r) / (norm * norm);
  return {clamp_measure(total - quad, "min_hs", 2.0), Branch::kRNonzero};
}

}  // namespace skewcorr
