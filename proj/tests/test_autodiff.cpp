#include <gtest/gtest.h>

#include "hypercurv/autodiff.hpp"
#include "hypercurv/hypersurface.hpp"
#include "hypercurv/random.hpp"
#include "hypercurv/scalar_field.hpp"
#include "oracles.hpp"

namespace hypercurv {
namespace {

VectorXd v(std::initializer_list<double> xs) {
  VectorXd out(Eigen::Index(xs.size()));
  Eigen::Index k = 0;
  for (double x : xs) out(k++) = x;
  return out;
}

TEST(Gradient, DetAtIdentityIsCofactors) {
  EXPECT_EQ(gradient(determinant_field(2), v({1, 0, 0, 1})), v({1, 0, 0, 1}));
}

TEST(Gradient, Quadric) {
  EXPECT_EQ(gradient(sphere_field(2), v({3, 4})), v({6, 8}));
}

TEST(Gradient, ArityMismatchThrows) {
  EXPECT_THROW(gradient(determinant_field(2), v({1, 0, 0})), ArityMismatch);
  EXPECT_THROW(hessian(sphere_field(3), v({1, 0})), ArityMismatch);
}

TEST(Gradient, DivisionErrorPropagates) {
  const ScalarField f = expression_field("1/x1", 1);
  EXPECT_THROW(gradient(f, v({0.0})), RingDivisionError);
}

TEST(Gradient, DetMatchesJacobiFormula) {
  Rng rng(3);
  for (int k = 0; k < 100; ++k) {
    const MatrixXd a = testing::random_matrix_with_det(rng, 3, 0.1, 10.0);
    const auto [det, inv] = det_inverse(a);
    const VectorXd expected = det * vec(MatrixXd(inv.transpose()));
    const VectorXd got = gradient(determinant_field(3), vec(a));
    EXPECT_LE((got - expected).norm(), 1e-12 * expected.norm());
  }
}

TEST(Gradient, AgreesWithFiniteDifferencesOnBuiltins) {
  Rng rng(17);
  const std::vector<ScalarField> fields = {determinant_field(2), determinant_field(3), determinant_field(4),
                                           sphere_field(3), cylinder_field(3),
                                           quadric_field({1.0, -2.0, 0.5, 3.0})};
  for (const ScalarField& f : fields) {
    for (int k = 0; k < 100; ++k) {
      const VectorXd p = rng.uniform_vector(Eigen::Index(f.arity()), -1.5, 1.5);
      const VectorXd g = gradient(f, p);
      const VectorXd fd = testing::fd_gradient(f, p, 1e-6);
      EXPECT_LE((g - fd).cwiseAbs().maxCoeff(), 1e-6 * (1.0 + g.cwiseAbs().maxCoeff())) << f.description();
    }
  }
}

TEST(Hessian, DetTwoByTwoAtIdentity) {
  // f = ad − bc with coordinates (a, b, c, d)
  MatrixXd expected = MatrixXd::Zero(4, 4);
  expected(0, 3) = expected(3, 0) = 1.0;
  expected(1, 2) = expected(2, 1) = -1.0;
  EXPECT_EQ(hessian(determinant_field(2), v({1, 0, 0, 1})), expected);
}

TEST(Hessian, QuadricIsTwiceIdentity) {
  Rng rng(1);
  const VectorXd p = rng.uniform_vector(2);
  EXPECT_EQ(hessian(sphere_field(2), p), 2.0 * MatrixXd::Identity(2, 2));
}

TEST(Hessian, DetThreeAtIdentityActsAsTraceMinusTranspose) {
  const MatrixXd h = hessian(determinant_field(3), vec(MatrixXd::Identity(3, 3)));
  const MatrixXd fd = fd_hessian_oracle(determinant_field(3), vec(MatrixXd::Identity(3, 3)), 1e-5);
  EXPECT_LE((h - fd).cwiseAbs().maxCoeff(), 1e-5);
  Rng rng(8);
  for (int k = 0; k < 20; ++k) {
    const MatrixXd dir = rng.uniform_matrix(3, 3);
    EXPECT_LE((h * vec(dir) - testing::det_hessian_at_identity_action(dir)).cwiseAbs().maxCoeff(), 1e-14);
  }
}

TEST(Hessian, BitwiseSymmetricAndMatchesFiniteDifferences) {
  Rng rng(99);
  for (int k = 0; k < 100; ++k) {
    const std::size_t n = 2 + std::size_t(k % 3);
    const ScalarField f = determinant_field(n);
    const VectorXd p = rng.uniform_vector(Eigen::Index(n * n));
    const MatrixXd h = hessian(f, p);
    EXPECT_TRUE(h == h.transpose());
    EXPECT_LE((h - fd_hessian_oracle(f, p, 1e-4)).cwiseAbs().maxCoeff(), 1e-5);
  }
}

TEST(Hessian, RationalExpressionMatchesFiniteDifferences) {
  const ScalarField f = expression_field("(x1*x2 - x3^3) / (x1^2 + 1) + x2^4", 3);
  Rng rng(4);
  for (int k = 0; k < 50; ++k) {
    const VectorXd p = rng.uniform_vector(3);
    EXPECT_LE((hessian(f, p) - fd_hessian_oracle(f, p, 1e-4)).cwiseAbs().maxCoeff(), 1e-5);
  }
}

}  // namespace
}  // namespace hypercurv
