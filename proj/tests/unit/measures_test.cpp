#include <gtest/gtest.h>

#include "skewcorr/error.hpp"
#include "skewcorr/measures.hpp"
#include "skewcorr/oracle.hpp"
#include "test_support.hpp"

namespace skewcorr {
namespace {

using testing::random_state;
using testing::random_unit;
using testing::seeds;

BipartiteState plus_zero_state() {
  // |+>|0> = (|00> + |10>)/sqrt(2)
  Eigen::VectorXcd ket = Eigen::VectorXcd::Zero(4);
  ket[0] = ket[2] = 1.0 / std::sqrt(2.0);
  return BipartiteState(validate_density(testing::ket_projector(ket)), 2, 2);
}

BipartiteState ket00_state() {
  ComplexMatrix m = ComplexMatrix::Zero(4, 4);
  m(0, 0) = 1.0;
  return BipartiteState(validate_density(m), 2, 2);
}

TEST(SkewInformation, SimpleCases) {
  const Observable z = Observable::from_direction(Vec3::UnitZ(), 2);
  EXPECT_NEAR(skew_information(ket00_state(), z), 0.0, 1e-15);
  EXPECT_NEAR(skew_information(plus_zero_state(), z), 1.0, 1e-12);
  for (auto seed : seeds(5)) {
    const Observable k = Observable::from_direction(random_unit(seed), 2);
    EXPECT_NEAR(skew_information(max_mixed_state(), k), 0.0, 1e-15);
  }
}

TEST(SkewInformation, DimensionMismatch) {
  const Observable k = Observable::from_direction(Vec3::UnitX(), 3);
  EXPECT_THROW(skew_information(bell_state(), k), ValidationError);
}

TEST(SkewInformation, UnitaryObservableForm) {
  // For K^2 = I the commutator form equals 1 - Tr{sqrt(rho) K sqrt(rho) K}.
  for (auto seed : seeds(20)) {
    const BipartiteState rho = random_state(2 + seed % 2, seed);
    const Observable k = Observable::from_direction(random_unit(seed + 1), rho.dim_b());
    const ComplexMatrix root = matrix_sqrt(rho.matrix());
    const double direct = 1.0 - (root * k.matrix() * root * k.matrix()).trace().real();
    EXPECT_NEAR(skew_information(rho, k), direct, 1e-12);
  }
}

TEST(SkewInformation, SignSymmetryIsExact) {
  for (auto seed : seeds(20)) {
    const BipartiteState rho = random_state(3, seed);
    const Observable k = Observable::from_direction(random_unit(seed), 3);
    EXPECT_EQ(skew_information(rho, k), skew_information(rho, -k));
  }
}

TEST(Observable, RejectsNonHermitianAndBadDirection) {
  ComplexMatrix m = identity(2);
  m(0, 1) = 0.5;
  EXPECT_THROW(Observable{m}, ValidationError);
  EXPECT_THROW(Observable(pauli(2), Vec3(0, 0, 2)), ValidationError);
  EXPECT_THROW(Observable::from_direction(Vec3::Zero(), 2), ValidationError);
}

TEST(WMatrix, AnalyticStates) {
  EXPECT_LT(w_matrix(bell_state()).w.cwiseAbs().maxCoeff(), 1e-15);
  EXPECT_LT((w_matrix(max_mixed_state()).w - Mat3::Identity()).cwiseAbs().maxCoeff(), 1e-15);
}

// Reference values from an independent dense-matrix evaluation (numpy,
// eigh-based square root) of the published example state.
TEST(WMatrix, ExampleStateReference) {
  const WMatrix w = w_matrix(example_state());
  Mat3 expected;
  expected << 0.968061330659047, 0.0, 0.118531975537428,
              0.0, 0.42448718230831, 0.0,
              0.118531975537428, 0.0, 0.446130903610952;
  EXPECT_LT((w.w - expected).cwiseAbs().maxCoeff(), 1e-12);
  const Vec3 lambda = w.eigenvalues();
  EXPECT_NEAR(lambda[0], 0.420473243144704, 1e-12);
  EXPECT_NEAR(lambda[1], 0.42448718230831, 1e-12);
  EXPECT_NEAR(lambda[2], 0.993718991125295, 1e-12);
}

TEST(WMatrix, SymmetricAndBounded) {
  for (auto seed : seeds(40)) {
    for (int db : {2, 3, 4}) {
      const WMatrix w = w_matrix(random_state(db, seed, 1 + seed % (2 * db)));
      EXPECT_LT((w.w - w.w.transpose()).cwiseAbs().maxCoeff(), 1e-10);
      const Vec3 lambda = w.eigenvalues();
      EXPECT_GE(lambda[0], -1e-9);
      EXPECT_LE(lambda[2], 1.0 + 1e-9);
    }
  }
}

TEST(WMatrix, QuadraticFormIsSkewInformation) {
  int checked = 0;
  for (auto seed : seeds(20)) {
    const BipartiteState rho = random_state(2 + seed % 3, seed);
    const WMatrix w = w_matrix(rho);
    for (int k = 0; k < 10; ++k) {
      const Vec3 n = random_unit(seed * 31 + k);
      const double skew = skew_information(rho, Observable::from_direction(n, rho.dim_b()));
      EXPECT_NEAR(1.0 - n.dot(w.w * n), skew, 1e-10);
      ++checked;
    }
  }
  EXPECT_EQ(checked, 200);
}

TEST(Measures, ExampleStateReference) {
  const BipartiteState rho = example_state();
  const MeasureValue u = uin(rho);
  EXPECT_EQ(u.branch, Branch::kRNonzero);
  EXPECT_NEAR(u.value, 0.006433672011750, 1e-12);
  EXPECT_NEAR(muin(rho).value, 0.579526756855296, 1e-12);
  EXPECT_NEAR(lqu(rho).value, 0.006281008874705, 1e-12);
  EXPECT_NEAR(min_hs(rho).value, 0.002053470087149, 1e-12);
  EXPECT_NEAR(u.value, oracle::oracle_uin(rho), 1e-9);
}

TEST(Measures, BellState) {
  const BipartiteState bell = bell_state();
  const MeasureValue u = uin(bell);
  EXPECT_EQ(u.branch, Branch::kRZero);
  EXPECT_NEAR(u.value, 1.0, 1e-12);
  EXPECT_NEAR(muin(bell).value, 1.0, 1e-12);
  EXPECT_NEAR(lqu(bell).value, 1.0, 1e-12);
  const MeasureValue pure = uin_pure(bell);
  EXPECT_EQ(pure.branch, Branch::kPureShortcut);
  EXPECT_NEAR(pure.value, 1.0, 1e-12);
}

TEST(Measures, MaximallyMixed) {
  const BipartiteState rho = max_mixed_state();
  EXPECT_NEAR(uin(rho).value, 0.0, 1e-15);
  EXPECT_NEAR(muin(rho).value, 0.0, 1e-15);
  EXPECT_NEAR(lqu(rho).value, 0.0, 1e-15);
  EXPECT_EQ(uin(rho).branch, Branch::kRZero);
}

TEST(Measures, ProductStatesHaveZeroUin) {
  for (auto seed : seeds(25)) {
    const int db = 2 + seed % 3;
    const BipartiteState p =
        product_state(random_density(2, 2, seed), random_density(db, db, seed + 1));
    EXPECT_LE(uin(p).value, 1e-10);
    EXPECT_LE(min_hs(p).value, 1e-10);
  }
  EXPECT_NEAR(muin(product_mixed_state()).value, 1.0, 1e-12);
}

TEST(Measures, PureStateReduction) {
  for (auto seed : seeds(30)) {
    for (int db : {2, 3}) {
      const BipartiteState psi = random_pure(2, db, seed);
      EXPECT_NEAR(uin(psi).value, uin_pure(psi).value, 1e-8);
    }
  }
  // |0>|phi> is a product pure state.
  Eigen::VectorXcd ket = Eigen::VectorXcd::Zero(6);
  ket[0] = 0.6;
  ket[2] = Complex(0.0, 0.8);
  const BipartiteState prod(validate_density(testing::ket_projector(ket)), 2, 3);
  EXPECT_NEAR(uin_pure(prod).value, 0.0, 1e-12);
}

TEST(Measures, UinPureRejectsMixed) {
  try {
    uin_pure(example_state());
    FAIL() << "expected PurityError";
  } catch (const PurityError& e) {
    EXPECT_LT(e.purity(), 1.0);
  }
}

TEST(Measures, RequireQubitA) {
  const BipartiteState rho(random_density(6, 6, 2), 3, 2);
  EXPECT_THROW(uin(rho), UnsupportedDimensionError);
  EXPECT_THROW(muin(rho), UnsupportedDimensionError);
  EXPECT_THROW(lqu(rho), UnsupportedDimensionError);
  EXPECT_THROW(min_hs(rho), UnsupportedDimensionError);
  EXPECT_THROW(w_matrix(rho), UnsupportedDimensionError);
}

TEST(Measures, OrderingAndRange) {
  for (auto seed : seeds(40)) {
    const BipartiteState rho = random_state(2 + seed % 2, seed, 1 + seed % 4);
    const double u = uin(rho).value;
    const double m = muin(rho).value;
    const double l = lqu(rho).value;
    for (double v : {u, m, l}) {
      EXPECT_GE(v, 0.0);
      EXPECT_LE(v, 1.0);
    }
    EXPECT_LE(l, u + 1e-10);
    EXPECT_LE(u, m + 1e-10);
  }
}

TEST(Measures, MuinEqualsUinOnZeroMarginal) {
  for (auto seed : seeds(20)) {
    const BipartiteState rho = zero_marginal_bloch(random_state(2 + seed % 2, seed));
    const MeasureValue u = uin(rho);
    EXPECT_EQ(u.branch, Branch::kRZero);
    EXPECT_NEAR(u.value, muin(rho).value, 1e-10);
  }
}

TEST(Measures, LocalUnitaryInvariance) {
  for (auto seed : seeds(25)) {
    const int db = 2 + seed % 2;
    const BipartiteState rho = random_state(db, seed);
    const BipartiteState moved =
        apply_local_unitary(rho, random_unitary(2, seed + 5), random_unitary(db, seed + 6));
    EXPECT_NEAR(uin(moved).value, uin(rho).value, 1e-9);
    EXPECT_NEAR(muin(moved).value, muin(rho).value, 1e-9);
    EXPECT_NEAR(lqu(moved).value, lqu(rho).value, 1e-9);
    EXPECT_NEAR(min_hs(moved).value, min_hs(rho).value, 1e-9);
  }
}

TEST(Measures, HellingerIdentity) {
  for (auto seed : seeds(50)) {
    const BipartiteState rho = random_state(2 + seed % 2, seed, 1 + seed % 4);
    const Observable k = Observable::from_direction(random_unit(seed + 9), rho.dim_b());
    const ComplexMatrix flipped = k.matrix() * rho.matrix() * k.matrix();
    EXPECT_NEAR(skew_information(rho, k), hellinger_sq(rho.matrix(), flipped), 1e-10);
  }
}

// Near the r = 0 cutoff the closed form must still track the oracle on
// whichever branch it picks.
TEST(Measures, NearThresholdBranches) {
  const BipartiteState centred = zero_marginal_bloch(random_state(2, 77));
  ComplexMatrix up = ComplexMatrix::Zero(4, 4);
  up(0, 0) = up(1, 1) = 0.5;  // |0><0| (x) I/2, Bloch vector (0, 0, 1)
  for (double eps : {0.0, 5e-9, 2e-8, 1e-6}) {
    const ComplexMatrix mixed = (1.0 - eps) * centred.matrix() + eps * up;
    const BipartiteState rho(validate_density(mixed), 2, 2);
    const MeasureValue u = uin(rho);
    EXPECT_EQ(u.branch, eps > 1e-8 ? Branch::kRNonzero : Branch::kRZero) << eps;
    const double tolerance = u.branch == Branch::kRZero ? 2e-4 : 1e-9;
    EXPECT_NEAR(u.value, oracle::oracle_uin(rho), tolerance) << eps;
  }
}

TEST(MinHs, BellAndOracle) {
  EXPECT_NEAR(min_hs(bell_state()).value, 0.5, 1e-12);
  EXPECT_NEAR(oracle::oracle_min_hs(bell_state()), 0.5, 2e-4);
  for (auto seed : seeds(15)) {
    const BipartiteState rho = random_state(2 + seed % 2, seed);
    EXPECT_NEAR(min_hs(rho).value, oracle::oracle_min_hs(rho), 1e-10);
    const BipartiteState centred = zero_marginal_bloch(rho);
    EXPECT_NEAR(min_hs(centred).value, oracle::oracle_min_hs(centred), 2e-4);
  }
}

TEST(Branch, Labels) {
  EXPECT_EQ(to_string(Branch::kRZero), "r-zero");
  EXPECT_EQ(to_string(Branch::kRNonzero), "r-nonzero");
  EXPECT_EQ(to_string(Branch::kPureShortcut), "pure-shortcut");
  EXPECT_EQ(to_string(Branch::kNotApplicable), "not-applicable");
}

}  // namespace
}  // namespace skewcorr
