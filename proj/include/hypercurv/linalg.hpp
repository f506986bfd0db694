#pragma once

// Small dense real linear algebra on Eigen types.
//
// Matrix-shaped points are flattened row-major: entry (i, j) of an n×n
// matrix is coordinate k = i·n + j. `vec` and `unvec` are the only places
// that convert between the two shapes.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "hypercurv/errors.hpp"

namespace hypercurv {

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using MatrixXd = Matrix<double>;
using VectorXd = Vector<double>;

template <typename Derived>
Vector<typename Derived::Scalar> vec(const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  Vector<Scalar> out(a.size());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) out(i * a.cols() + j) = a(i, j);
  return out;
}

/// Inverse of `vec` for a square matrix. Throws if v.size() is not a square.
template <typename Derived>
Matrix<typename Derived::Scalar> unvec(const Eigen::MatrixBase<Derived>& v) {
  const auto n = static_cast<Eigen::Index>(std::llround(std::sqrt(double(v.size()))));
  if (n * n != v.size())
    throw InvalidArgument("vector of length " + std::to_string(v.size()) +
                          " is not a flattened square matrix");
  Matrix<typename Derived::Scalar> out(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) out(i, j) = v(i * n + j);
  return out;
}

template <typename Derived>
typename Derived::Scalar frobenius_norm(const Eigen::MatrixBase<Derived>& a) {
  return a.norm();
}

template <typename Scalar>
struct DetInverse {
  Scalar det;
  Matrix<Scalar> inv;
};

/// Determinant and inverse from an LU factorization with partial pivoting.
/// A pivot of magnitude below 1e-300 is reported as singular.
template <typename Derived>
DetInverse<typename Derived::Scalar> det_inverse(const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  if (a.rows() != a.cols() || a.rows() < 1)
    throw InvalidArgument("det_inverse needs a non-empty square matrix");
  const Eigen::PartialPivLU<Matrix<Scalar>> lu(a.eval());
  const Scalar smallest_pivot = lu.matrixLU().diagonal().cwiseAbs().minCoeff();
  if (!(smallest_pivot >= Scalar(1e-300)))
    throw SingularMatrixError("matrix is singular (pivot " + std::to_string(double(smallest_pivot)) + ")");
  return {lu.determinant(), lu.inverse()};
}

/// Orthonormal basis of the hyperplane g^⊥ as the columns of an N×(N−1)
/// matrix. The Householder reflector taking g/‖g‖ to the first coordinate
/// axis is built explicitly; its remaining columns span the complement.
template <typename Derived>
Matrix<typename Derived::Scalar> complement_basis(const Eigen::MatrixBase<Derived>& g) {
  using Scalar = typename Derived::Scalar;
  const Scalar norm = g.norm();
  if (!(norm > Scalar(1e-12))) throw ZeroVectorError("complement_basis of a (near) zero vector");
  const Vector<Scalar> u = g / norm;
  const Eigen::Index n = u.size();

  Vector<Scalar> essential(n > 1 ? n - 1 : 0);
  Scalar tau;
  Scalar beta;
  u.makeHouseholder(essential, tau, beta);

  Vector<Scalar> v(n);
  v(0) = Scalar(1);
  v.tail(n - 1) = essential;
  const Matrix<Scalar> reflector = Matrix<Scalar>::Identity(n, n) - tau * v * v.transpose();
  return reflector.rightCols(n - 1);
}

template <typename Scalar>
struct EigenSpectrum {
  Vector<Scalar> values;   // descending
  Matrix<Scalar> vectors;  // column k pairs with values(k)
};

/// Cyclic Jacobi eigensolver for symmetric matrices. Sweeps over the upper
/// triangle in row order until the off-diagonal Frobenius mass is at most
/// tol·‖A‖_F.
template <typename Derived>
EigenSpectrum<typename Derived::Scalar> jacobi_eigh(const Eigen::MatrixBase<Derived>& a,
                                                    typename Derived::Scalar tol) {
  using Scalar = typename Derived::Scalar;
  constexpr int kMaxSweeps = 100;
  if (a.rows() != a.cols()) throw InvalidArgument("jacobi_eigh needs a square matrix");

  const Scalar norm = a.norm();
  const Scalar asym = (a - a.transpose()).norm();
  if (!(asym <= Scalar(1e-8) * (Scalar(1) + norm)))
    throw NotSymmetricError("jacobi_eigh: input is not symmetric (‖A−Aᵀ‖ = " +
                            std::to_string(double(asym)) + ")");

  const Eigen::Index n = a.rows();
  Matrix<Scalar> m = (a + a.transpose()) / Scalar(2);
  Matrix<Scalar> v = Matrix<Scalar>::Identity(n, n);

  auto off_diagonal = [&] {
    Scalar s(0);
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = 0; j < n; ++j)
        if (i != j) s += m(i, j) * m(i, j);
    return std::sqrt(s);
  };

  bool converged = false;
  for (int sweep = 0; sweep <= kMaxSweeps; ++sweep) {
    if (off_diagonal() <= tol * norm) {
      converged = true;
      break;
    }
    if (sweep == kMaxSweeps) break;
    for (Eigen::Index p = 0; p < n - 1; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        const Scalar apq = m(p, q);
        if (apq == Scalar(0)) continue;
        const Scalar theta = (m(q, q) - m(p, p)) / (Scalar(2) * apq);
        const Scalar t = (theta >= 0 ? Scalar(1) : Scalar(-1)) /
                         (std::abs(theta) + std::hypot(theta, Scalar(1)));
        const Scalar c = Scalar(1) / std::sqrt(t * t + Scalar(1));
        const Scalar s = t * c;

        for (Eigen::Index k = 0; k < n; ++k) {
          const Scalar mkp = m(k, p);
          const Scalar mkq = m(k, q);
          m(k, p) = c * mkp - s * mkq;
          m(k, q) = s * mkp + c * mkq;
        }
        for (Eigen::Index k = 0; k < n; ++k) {
          const Scalar mpk = m(p, k);
          const Scalar mqk = m(q, k);
          m(p, k) = c * mpk - s * mqk;
          m(q, k) = s * mpk + c * mqk;
        }
        m(p, q) = Scalar(0);
        m(q, p) = Scalar(0);
        for (Eigen::Index k = 0; k < n; ++k) {
          const Scalar vkp = v(k, p);
          const Scalar vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
    }
  }
  if (!converged)
    throw ConvergenceError("jacobi_eigh did not converge in " + std::to_string(kMaxSweeps) + " sweeps");

  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Eigen::Index i, Eigen::Index j) { return m(i, i) > m(j, j); });

  EigenSpectrum<Scalar> out{Vector<Scalar>(n), Matrix<Scalar>(n, n)};
  for (Eigen::Index k = 0; k < n; ++k) {
    out.values(k) = m(order[k], order[k]);
    out.vectors.col(k) = v.col(order[k]);
  }
  return out;
}

template <typename Scalar>
struct Cluster {
  Scalar value;
  int multiplicity;

  bool operator==(const Cluster&) const = default;
};

/// Greedy left-to-right grouping of descending values. A value joins the
/// open cluster iff it lies within cluster_tol of that cluster's first
/// element; each cluster reports its mean.
template <typename Scalar>
std::vector<Cluster<Scalar>> cluster_multiplicities(std::span<const Scalar> values,
                                                    Scalar cluster_tol) {
  std::vector<Cluster<Scalar>> out;
  std::size_t start = 0;
  while (start < values.size()) {
    std::size_t end = start + 1;
    while (end < values.size() && std::abs(values[end] - values[start]) <= cluster_tol) ++end;
    Scalar sum(0);
    for (std::size_t k = start; k < end; ++k) sum += values[k];
    const auto count = static_cast<int>(end - start);
    out.push_back({sum / Scalar(count), count});
    start = end;
  }
  return out;
}

template <typename Scalar>
std::vector<Cluster<Scalar>> cluster_multiplicities(const Vector<Scalar>& values, Scalar cluster_tol) {
  return cluster_multiplicities(std::span<const Scalar>(values.data(), std::size_t(values.size())),
                                cluster_tol);
}

}  // namespace hypercurv
