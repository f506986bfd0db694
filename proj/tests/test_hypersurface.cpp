#include <gtest/gtest.h>

#include <cmath>

#include "hypercurv/autodiff.hpp"
#include "hypercurv/hypersurface.hpp"
#include "hypercurv/random.hpp"
#include "hypercurv/sl_theorem.hpp"
#include "oracles.hpp"

namespace hypercurv {
namespace {

VectorXd v(std::initializer_list<double> xs) {
  VectorXd out(Eigen::Index(xs.size()));
  Eigen::Index k = 0;
  for (double x : xs) out(k++) = x;
  return out;
}

MatrixXd unit(Eigen::Index n, Eigen::Index i, Eigen::Index j) {
  MatrixXd e = MatrixXd::Zero(n, n);
  e(i, j) = 1.0;
  return e;
}

ImplicitHypersurface sl(std::size_t n) { return {determinant_field(n), 1.0}; }
VectorXd identity(Eigen::Index n) { return vec(MatrixXd::Identity(n, n)); }

double max_abs(const VectorXd& x) { return x.size() ? x.cwiseAbs().maxCoeff() : 0.0; }

TEST(UnitNormal, SlAtIdentity) {
  EXPECT_LE(max_abs(unit_normal(sl(2), identity(2)) - identity(2) / std::sqrt(2.0)), 1e-15);
}

TEST(UnitNormal, SphereOutward) {
  const ImplicitHypersurface sphere(sphere_field(3), 4.0);
  EXPECT_EQ(unit_normal(sphere, v({2, 0, 0})), v({1, 0, 0}));
}

TEST(UnitNormal, UnipotentMatchesGaussMap) {
  const VectorXd p = v({1, 1, 0, 1});
  const VectorXd expected = v({1, 0, -1, 1}) / std::sqrt(3.0);
  EXPECT_LE(max_abs(unit_normal(sl(2), p) - expected), 1e-15);
  EXPECT_LE(max_abs(vec(gauss_map(SLPoint(unvec(p)))) - expected), 1e-15);
}

TEST(UnitNormal, OffSurfaceAndCriticalPointErrors) {
  const ImplicitHypersurface sphere(sphere_field(3), 4.0);
  EXPECT_THROW(unit_normal(sphere, v({1, 1, 1})), OffSurfaceError);
  EXPECT_THROW(unit_normal(sphere, v({2, 0})), ArityMismatch);
  const ImplicitHypersurface cone(expression_field("x1^2 - x2^2", 2), 0.0);
  EXPECT_THROW(unit_normal(cone, v({0, 0})), CriticalPointError);
  EXPECT_THROW(weingarten_matrix(cone, v({0, 0})), CriticalPointError);
}

TEST(UnitNormal, OnSurfaceToleranceScalesWithLevel) {
  const ImplicitHypersurface sphere(sphere_field(3), 4.0);
  EXPECT_DOUBLE_EQ(sphere.on_surface_tol(), 5e-9);
  EXPECT_TRUE(sphere.contains(v({2 + 1e-9, 0, 0})));
  EXPECT_FALSE(sphere.contains(v({2 + 1e-8, 0, 0})));
}

TEST(WeingartenMatrix, SlTwoAtIdentitySpectrum) {
  const auto w = weingarten_matrix(sl(2), identity(2));
  ASSERT_EQ(w.matrix.rows(), 3);
  const auto s = jacobi_eigh(w.matrix, 1e-14);
  const double k = 1.0 / std::sqrt(2.0);
  EXPECT_NEAR(s.values(0), k, 1e-9);
  EXPECT_NEAR(s.values(1), k, 1e-9);
  EXPECT_NEAR(s.values(2), -k, 1e-9);
}

TEST(WeingartenMatrix, Sphere) {
  for (double r : {0.5, 1.0, 2.0, 3.0}) {
    const ImplicitHypersurface sphere(sphere_field(3), r * r);
    const auto w = weingarten_matrix(sphere, v({r, 0, 0}));
    EXPECT_LE((w.matrix + MatrixXd::Identity(2, 2) / r).cwiseAbs().maxCoeff(), 1e-15);
  }
}

TEST(WeingartenMatrix, Cylinder) {
  const ImplicitHypersurface cyl(cylinder_field(3), 1.0);
  const auto w = weingarten_matrix(cyl, v({1, 0, 0}));
  const auto s = jacobi_eigh(w.matrix, 1e-14);
  EXPECT_NEAR(s.values(0), 0.0, 1e-15);
  EXPECT_NEAR(s.values(1), -1.0, 1e-15);
}

TEST(WeingartenMatrix, SymmetricAtRandomPointsOfBuiltins) {
  Rng rng(31);
  for (int k = 0; k < 100; ++k) {
    const std::size_t n = 2 + std::size_t(k % 3);
    const SLPoint a = random_sl(n, std::uint64_t(k));
    const MatrixXd w = weingarten_matrix(sl(n), a.flat()).matrix;
    EXPECT_LE((w - w.transpose()).norm(), 1e-10 * (1.0 + w.norm()));

    VectorXd p = rng.uniform_vector(3);
    p.normalize();
    const MatrixXd ws = weingarten_matrix(ImplicitHypersurface(sphere_field(3), 1.0), p).matrix;
    EXPECT_LE((ws - ws.transpose()).norm(), 1e-10 * (1.0 + ws.norm()));
  }
}

TEST(WeingartenMatrix, SpectrumIndependentOfTangentBasis) {
  Rng rng(41);
  for (int k = 0; k < 20; ++k) {
    const std::size_t n = 2 + std::size_t(k % 2);
    const ImplicitHypersurface s = sl(n);
    const VectorXd p = random_sl(n, std::uint64_t(100 + k)).flat();
    const VectorXd g = gradient(s.field(), p);
    const MatrixXd h = hessian(s.field(), p);
    const MatrixXd t = complement_basis(g);
    const Eigen::Index m = t.cols();
    const MatrixXd q = Eigen::HouseholderQR<MatrixXd>(rng.uniform_matrix(m, m)).householderQ();
    const VectorXd base = jacobi_eigh(project_shape_operator(h, t, g.norm()), 1e-14).values;
    const VectorXd rotated = jacobi_eigh(project_shape_operator(h, t * q, g.norm()), 1e-14).values;
    EXPECT_LE(max_abs(base - rotated), 1e-9);
  }
}

TEST(WeingartenApply, SlTwoBasisDirections) {
  const double r2 = std::sqrt(2.0);
  EXPECT_LE(max_abs(weingarten_apply(sl(2), identity(2), vec(unit(2, 0, 1))) - vec(unit(2, 1, 0)) / r2), 1e-15);
  const VectorXd d = v({1, 0, 0, -1});
  EXPECT_LE(max_abs(weingarten_apply(sl(2), identity(2), d) - d / r2), 1e-15);
}

TEST(WeingartenApply, SkewDirectionIsNegated) {
  const VectorXd h = vec(MatrixXd(unit(3, 0, 1) - unit(3, 1, 0)));
  EXPECT_LE(max_abs(weingarten_apply(sl(3), identity(3), h) + h / std::sqrt(3.0)), 1e-15);
}

TEST(WeingartenApply, MatchesClosedFormOnRandomTraceZero) {
  for (std::size_t n : {2u, 3u}) {
    for (int k = 0; k < 50; ++k) {
      const MatrixXd h = random_trace_zero(n, std::uint64_t(k));
      const VectorXd got = weingarten_apply(sl(n), identity(Eigen::Index(n)), vec(h));
      const VectorXd want = vec(MatrixXd(h.transpose())) / std::sqrt(double(n));
      EXPECT_LE(max_abs(got - want), 1e-9);
    }
  }
}

TEST(WeingartenApply, ResultIsTangent) {
  for (int k = 0; k < 20; ++k) {
    const SLPoint a = random_sl(3, std::uint64_t(k));
    const ImplicitHypersurface s = sl(3);
    const VectorXd normal = unit_normal(s, a.flat());
    const MatrixXd t = complement_basis(normal);
    const VectorXd tangent = t.col(k % t.cols());
    EXPECT_LE(std::abs(weingarten_apply(s, a.flat(), tangent).dot(normal)), 1e-12);
  }
}

TEST(WeingartenApply, NonTangentThrows) {
  EXPECT_THROW(weingarten_apply(sl(2), identity(2), identity(2)), NonTangentError);
  EXPECT_THROW(second_fundamental_form(sl(2), identity(2), identity(2), v({0, 1, 0, 0})), NonTangentError);
}

TEST(CurvatureReport, SlTwo) {
  const auto r = curvature_report(sl(2), identity(2));
  const double k = 1.0 / std::sqrt(2.0);
  ASSERT_EQ(r.curvatures.size(), 2u);
  EXPECT_NEAR(r.curvatures[0].value, k, 1e-12);
  EXPECT_EQ(r.curvatures[0].multiplicity, 2);
  EXPECT_NEAR(r.curvatures[1].value, -k, 1e-12);
  EXPECT_EQ(r.curvatures[1].multiplicity, 1);
  EXPECT_NEAR(r.gauss_kronecker, -0.353553391, 1e-9);
  EXPECT_NEAR(r.mean, 0.235702260, 1e-9);
}

TEST(CurvatureReport, SlThree) {
  const auto r = curvature_report(sl(3), identity(3));
  const double k = 1.0 / std::sqrt(3.0);
  ASSERT_EQ(r.curvatures.size(), 2u);
  EXPECT_NEAR(r.curvatures[0].value, k, 1e-12);
  EXPECT_EQ(r.curvatures[0].multiplicity, 5);
  EXPECT_NEAR(r.curvatures[1].value, -k, 1e-12);
  EXPECT_EQ(r.curvatures[1].multiplicity, 3);
  EXPECT_NEAR(r.gauss_kronecker, -1.0 / 81.0, 1e-14);
  EXPECT_NEAR(r.mean, 0.144337567, 1e-9);
}

TEST(CurvatureReport, Sphere) {
  const auto r = curvature_report(ImplicitHypersurface(sphere_field(3), 4.0), v({2, 0, 0}));
  ASSERT_EQ(r.curvatures.size(), 1u);
  EXPECT_EQ(r.curvatures[0], (Cluster<double>{-0.5, 2}));
  EXPECT_DOUBLE_EQ(r.gauss_kronecker, 0.25);
  EXPECT_DOUBLE_EQ(r.mean, -0.5);
}

TEST(CurvatureReport, InvariantsOnRandomSlPoints) {
  for (int k = 0; k < 30; ++k) {
    const std::size_t n = 2 + std::size_t(k % 3);
    const auto r = curvature_report(sl(n), random_sl(n, std::uint64_t(k)).flat());
    EXPECT_NEAR(r.normal.norm(), 1.0, 1e-12);
    EXPECT_LE(max_abs(r.tangent_basis.transpose() * r.normal), 1e-10);
    int total = 0;
    for (const auto& c : r.curvatures) total += c.multiplicity;
    EXPECT_EQ(total, int(n * n - 1));
    double product = 1.0;
    double sum = 0.0;
    for (const auto& c : r.curvatures) {
      product *= std::pow(c.value, c.multiplicity);
      sum += c.value * c.multiplicity;
    }
    EXPECT_LE(std::abs(product - r.gauss_kronecker), 1e-9 * std::abs(r.gauss_kronecker));
    EXPECT_NEAR(sum / double(n * n - 1), r.mean, 1e-12);
  }
}

TEST(CurvatureReport, IdentitySpectrumForSeveralN) {
  for (std::size_t n : {2u, 3u, 4u}) {
    const auto r = curvature_report(sl(n), identity(Eigen::Index(n)));
    const auto want = principal_curvatures_identity(n);
    ASSERT_EQ(r.curvatures.size(), want.size());
    for (std::size_t i = 0; i < want.size(); ++i) {
      EXPECT_NEAR(r.curvatures[i].value, want[i].value, 1e-9);
      EXPECT_EQ(r.curvatures[i].multiplicity, want[i].multiplicity);
    }
  }
}

TEST(CurvatureReport, SpectrumInvariantUnderRotation) {
  for (std::size_t n : {2u, 3u}) {
    const VectorXd at_identity = curvature_report(sl(n), identity(Eigen::Index(n))).principal;
    for (int k = 0; k < 10; ++k) {
      const SLPoint q = random_special_orthogonal(n, std::uint64_t(k));
      EXPECT_LE(max_abs(curvature_report(sl(n), q.flat()).principal - at_identity), 1e-8);
    }
  }
}

TEST(SecondFundamentalForm, SlExamples) {
  EXPECT_NEAR(second_fundamental_form(sl(2), identity(2), vec(unit(2, 0, 1)), vec(unit(2, 0, 1))), 0.0, 1e-15);
  const VectorXd d = v({1, 0, 0, -1});
  EXPECT_NEAR(second_fundamental_form(sl(2), identity(2), d, d), std::sqrt(2.0), 1e-15);
  const VectorXd skew = vec(MatrixXd(unit(3, 0, 1) - unit(3, 1, 0)));
  EXPECT_NEAR(second_fundamental_form(sl(3), identity(3), skew, skew), -2.0 / std::sqrt(3.0), 1e-15);
}

TEST(SecondFundamentalForm, SymmetricAndMatchesTraceFormula) {
  for (std::size_t n : {2u, 3u}) {
    for (int k = 0; k < 50; ++k) {
      const MatrixXd h = random_trace_zero(n, std::uint64_t(k));
      const MatrixXd g = random_trace_zero(n, std::uint64_t(1000 + k));
      const VectorXd id = identity(Eigen::Index(n));
      EXPECT_NEAR(second_fundamental_form(sl(n), id, vec(h), vec(h)), (h * h).trace() / std::sqrt(double(n)), 1e-9);
      EXPECT_EQ(second_fundamental_form(sl(n), id, vec(h), vec(g)),
                second_fundamental_form(sl(n), id, vec(g), vec(h)));
    }
  }
}

TEST(FdHessianOracle, Examples) {
  const ScalarField det2 = determinant_field(2);
  EXPECT_LE((fd_hessian_oracle(det2, identity(2), 1e-4) - hessian(det2, identity(2))).cwiseAbs().maxCoeff(), 1e-6);
  Rng rng(2);
  const VectorXd p = rng.uniform_vector(4, -5, 5);
  EXPECT_LE((fd_hessian_oracle(sphere_field(4), p, 1e-2) - 2.0 * MatrixXd::Identity(4, 4)).cwiseAbs().maxCoeff(), 1e-8);
  const MatrixXd fd3 = fd_hessian_oracle(determinant_field(3), identity(3), 1e-4);
  for (int k = 0; k < 20; ++k) {
    const MatrixXd dir = rng.uniform_matrix(3, 3);
    EXPECT_LE(max_abs(fd3 * vec(dir) - testing::det_hessian_at_identity_action(dir)), 1e-5);
  }
  EXPECT_THROW(fd_hessian_oracle(det2, identity(2), 0.0), InvalidArgument);
}

}  // namespace
}  // namespace hypercurv
